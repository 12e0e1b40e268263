#pragma once

#include "coinv/characters.hpp"
#include "coinv/integer.hpp"
#include "coinv/partition.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace coinv {

inline constexpr int kDefaultKroneckerCap = 12;

/// Kronecker coefficients g[lambda][mu][nu] for fixed n. Only triples with
/// indices a <= b <= c (canonical order) are stored; lookups sort their
/// arguments, so the table is symmetric by construction.
class KroneckerTable {
public:
    KroneckerTable() = default;
    explicit KroneckerTable(int n);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return partitions_.size(); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const PartitionIndex& index() const noexcept { return index_; }
    const Integer& dimension(std::size_t p) const { return dimensions_[p]; }

    const Integer& at(std::size_t a, std::size_t b, std::size_t c) const { return stored_[slot(a, b, c)]; }
    void set(std::size_t a, std::size_t b, std::size_t c, Integer value) { stored_[slot(a, b, c)] = std::move(value); }

    const Integer& coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) const
    {
        return at(index_.at(lambda), index_.at(mu), index_.at(nu));
    }

    /// Number of stored (symmetry-reduced) triples.
    std::size_t stored_count() const noexcept { return stored_.size(); }

    friend bool operator==(const KroneckerTable& a, const KroneckerTable& b)
    {
        return a.n_ == b.n_ && a.stored_ == b.stored_;
    }

private:
    std::size_t slot(std::size_t a, std::size_t b, std::size_t c) const;

    int n_ = 0;
    std::vector<Partition> partitions_;
    PartitionIndex index_;
    std::vector<Integer> dimensions_;
    std::vector<std::size_t> offsets_; ///< offsets_[a*P+b]: first slot of (a, b, b)
    std::vector<Integer> stored_;
};

/// sum_rho chi_lambda chi_mu chi_nu / z_rho, computed as an integer class
/// sum divided once by n!. Throws NonIntegral if that division is inexact.
Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                              const CharacterTable& characters);
Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Throws LimitExceeded above max_n and InvariantViolation if the result
/// fails verify_kronecker_identities.
KroneckerTable build_kronecker_table(const CharacterTable& characters, int max_n = kDefaultKroneckerCap);

/// Symmetry, g[lambda][mu][(n)] = delta, conjugation twist, and the
/// dimension identity sum_nu dim(nu) g = dim(lambda) dim(mu).
bool verify_kronecker_identities(const KroneckerTable& table);

} // namespace coinv
