#pragma once

#include "coinv/serialize.hpp"
#include "coinv/tables.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coinv {

/// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

struct CacheEntry {
    std::string kind; ///< "char", "kron" or "graded"
    int n = 0;
    std::string file;
    std::string digest;

    friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

/// manifest.json: one entry per (kind, n), kept sorted by (kind, n).
struct CacheManifest {
    int schema_version = kSchemaVersion;
    std::vector<CacheEntry> entries;

    const CacheEntry* find(std::string_view kind, int n) const;
    void upsert(CacheEntry entry);

    Json to_json() const;
    static CacheManifest from_json(const Json& j);
};

/// TableSource backed by a directory of JSON table files. A table is
/// loaded only if its file digest matches the manifest and it passes the
/// same validation a fresh build does; anything else is rebuilt (with a
/// warning) and rewritten. Files and the manifest are replaced atomically
/// by write-then-rename.
class DiskTableCache : public TableSource {
public:
    struct Stats {
        int built = 0;
        int loaded = 0;
        int rejected = 0; ///< digest, schema or validation failures that forced a rebuild
    };

    explicit DiskTableCache(std::filesystem::path dir, Limits limits = {}, std::ostream* warnings = nullptr);

    std::shared_ptr<const CharacterTable> characters(int n) override;
    std::shared_ptr<const KroneckerTable> kronecker(int n) override;
    std::shared_ptr<const GradedMultiplicityTable> graded(int n) override;
    const Limits& limits() const override { return limits_; }

    const std::filesystem::path& directory() const noexcept { return dir_; }
    Stats stats() const;

    /// Entries for every table handed out so far, sorted by (kind, n).
    std::vector<CacheEntry> used_entries() const;

    CacheManifest read_manifest() const;

    static std::string file_name(std::string_view kind, int n);

private:
    template <class Table>
    std::shared_ptr<const Table> get_or_build(std::string_view kind, int n,
                                              std::map<int, std::shared_ptr<const Table>>& memo,
                                              const std::function<Table()>& build,
                                              const std::function<Table(const Json&)>& parse,
                                              const std::function<bool(const Table&)>& validate);

    std::mutex& key_mutex(std::string_view kind, int n);
    void warn(const std::string& message);
    void write_atomically(const std::filesystem::path& target, std::string_view bytes) const;
    void record(CacheEntry entry);

    std::filesystem::path dir_;
    Limits limits_;
    std::ostream* warnings_;

    mutable std::mutex state_mutex_;
    std::map<std::pair<std::string, int>, std::unique_ptr<std::mutex>> key_mutexes_;
    std::map<int, std::shared_ptr<const CharacterTable>> characters_;
    std::map<int, std::shared_ptr<const KroneckerTable>> kronecker_;
    std::map<int, std::shared_ptr<const GradedMultiplicityTable>> graded_;
    std::map<std::pair<std::string, int>, CacheEntry> used_;
    Stats stats_;

    mutable std::mutex manifest_mutex_;
};

} // namespace coinv
