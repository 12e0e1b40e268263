#pragma once

#include "coinv/integer.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace coinv {

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of 0.
///
/// Ordering is lexicographic on the parts, so the canonical table order
/// (descending lexicographic, starting from (n)) is the reverse of
/// operator<.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses the comma-separated text form ("4,1,1,1"). The empty string
    /// parses to the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); 0 past the last part.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in canonical order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& lambda);

/// One hook length per cell, in row-major cell order.
std::vector<int> hook_lengths(const Partition& lambda);

/// z_rho = prod_i i^{m_i} m_i!, where m_i counts parts equal to i.
Integer centralizer_size(const Partition& rho);

/// n!/z_rho.
Integer class_size(const Partition& rho);

/// Sum over rows (0-based r) of r * lambda_r.
int n_stat(const Partition& lambda);

/// Number of standard tableaux, n!/prod(hooks).
Integer syt_count(const Partition& lambda);

/// (-1)^{n - length(rho)}: the sign of any permutation of cycle type rho.
int class_sign(const Partition& rho);

/// Dominance order: every prefix sum of lambda is at least that of mu.
bool dominates(const Partition& lambda, const Partition& mu);

/// Position lookup into a canonical partition list.
class PartitionIndex {
public:
    PartitionIndex() = default;
    explicit PartitionIndex(const std::vector<Partition>& order);

    /// Throws std::out_of_range for partitions not in the list.
    std::size_t at(const Partition& p) const;
    bool contains(const Partition& p) const { return index_.contains(p); }

private:
    std::map<Partition, std::size_t> index_;
};

} // namespace coinv
