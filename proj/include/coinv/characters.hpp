#pragma once

#include "coinv/integer.hpp"
#include "coinv/partition.hpp"

#include <cstddef>
#include <vector>

namespace coinv {

inline constexpr int kDefaultCharacterCap = 14;

/// Irreducible characters of S_n. Rows are irreducibles, columns are
/// conjugacy classes; both use the canonical partition order.
class CharacterTable {
public:
    CharacterTable() = default;
    CharacterTable(int n, std::vector<Integer> values);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return partitions_.size(); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const PartitionIndex& index() const noexcept { return index_; }
    const std::vector<Integer>& class_sizes() const noexcept { return class_sizes_; }
    const std::vector<Integer>& values() const noexcept { return values_; }

    const Integer& value(std::size_t irreducible, std::size_t cls) const
    {
        return values_[irreducible * partitions_.size() + cls];
    }
    Integer& value(std::size_t irreducible, std::size_t cls)
    {
        return values_[irreducible * partitions_.size() + cls];
    }
    const Integer& value(const Partition& lambda, const Partition& rho) const
    {
        return value(index_.at(lambda), index_.at(rho));
    }

    /// Column of the identity class (1^n).
    const Integer& dimension(std::size_t irreducible) const { return value(irreducible, size() - 1); }

private:
    int n_ = 0;
    std::vector<Partition> partitions_;
    PartitionIndex index_;
    std::vector<Integer> class_sizes_;
    std::vector<Integer> values_;
};

/// chi_lambda(rho) by the Murnaghan-Nakayama rule, removing rim hooks for
/// the parts of rho largest first. Throws std::invalid_argument if
/// |lambda| != |rho|.
Integer character_value(const Partition& lambda, const Partition& rho);

/// Throws LimitExceeded if n > max_n, InvariantViolation if the finished
/// table fails orthogonality.
CharacterTable build_character_table(int n, int max_n = kDefaultCharacterCap);

/// Row and column orthogonality, checked exactly.
bool verify_orthogonality(const CharacterTable& table);

} // namespace coinv
