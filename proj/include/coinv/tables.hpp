#pragma once

#include "coinv/characters.hpp"
#include "coinv/errors.hpp"
#include "coinv/graded.hpp"
#include "coinv/kronecker.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace coinv {

inline constexpr int kDefaultSpringerCap = 10;

/// Size caps for the expensive tables. `unlimited()` backs the CLI's
/// --max-n-override.
struct Limits {
    int character_cap = kDefaultCharacterCap;
    int kronecker_cap = kDefaultKroneckerCap;
    int springer_cap = kDefaultSpringerCap;

    static Limits unlimited() { return {64, 64, 64}; }
};

/// Supplies validated tables by n. Implementations may build, memoize, or
/// load from disk; callers only see immutable shared tables.
class TableSource {
public:
    virtual ~TableSource() = default;

    virtual std::shared_ptr<const CharacterTable> characters(int n) = 0;
    virtual std::shared_ptr<const KroneckerTable> kronecker(int n) = 0;
    virtual std::shared_ptr<const GradedMultiplicityTable> graded(int n) = 0;

    virtual const Limits& limits() const = 0;
};

/// Builds on first request and keeps every table in memory.
class MemoryTables : public TableSource {
public:
    explicit MemoryTables(Limits limits = {}) : limits_(limits) {}

    std::shared_ptr<const CharacterTable> characters(int n) override;
    std::shared_ptr<const KroneckerTable> kronecker(int n) override;
    std::shared_ptr<const GradedMultiplicityTable> graded(int n) override;
    const Limits& limits() const override { return limits_; }

private:
    Limits limits_;
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const CharacterTable>> characters_;
    std::map<int, std::shared_ptr<const KroneckerTable>> kronecker_;
    std::map<int, std::shared_ptr<const GradedMultiplicityTable>> graded_;
};

} // namespace coinv
