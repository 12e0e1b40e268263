#pragma once

#include "coinv/characters.hpp"
#include "coinv/integer.hpp"
#include "coinv/partition.hpp"
#include "coinv/polynomial.hpp"

#include <optional>
#include <vector>

namespace coinv {

/// Multiplicities of each irreducible V(lambda) in each graded piece of a
/// graded S_n-representation concentrated in degrees [0, top_degree].
/// Degrees use the q^i normalization (H^{2i} is degree i).
class GradedMultiplicityTable {
public:
    GradedMultiplicityTable() = default;
    GradedMultiplicityTable(int n, int top_degree);

    int n() const noexcept { return n_; }
    int top_degree() const noexcept { return top_degree_; }
    std::size_t size() const noexcept { return partitions_.size(); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const PartitionIndex& index() const noexcept { return index_; }

    /// Zero for degrees outside [0, top_degree].
    Integer at(std::size_t lambda, int degree) const;
    const std::vector<Integer>& row(std::size_t lambda) const { return rows_[lambda]; }
    void set(std::size_t lambda, int degree, Integer value);

    /// Polynomial sum_i b[lambda][i] q^i.
    IntPolynomial row_polynomial(std::size_t lambda) const;

    friend bool operator==(const GradedMultiplicityTable& a, const GradedMultiplicityTable& b)
    {
        return a.n_ == b.n_ && a.top_degree_ == b.top_degree_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    int top_degree_ = 0;
    std::vector<Partition> partitions_;
    PartitionIndex index_;
    std::vector<std::vector<Integer>> rows_;
};

/// n(n-1)/2, the complex dimension of the flag variety.
inline int top_degree_of(int n) { return n * (n - 1) / 2; }

/// prod_{i<=n}(1-q^i) / prod_j (1-q^{rho_j}).
IntPolynomial graded_character_poly(int n, const Partition& rho);

/// prod_{k=0}^{n-1} (1 + q + ... + q^k).
IntPolynomial poincare_polynomial(int n);

/// sum over standard tableaux T of shape lambda of q^{maj(T)}.
IntPolynomial fake_degree_syt(const Partition& lambda);

/// q^{n(lambda)} [n]_q! / prod [h]_q.
IntPolynomial fake_degree_hook(const Partition& lambda);

/// (1/n!) sum_rho (n!/z_rho) chi_lambda(rho) chi(rho, q), using the given
/// table for S_n. Throws NonExactDivision if the 1/n! does not clear.
IntPolynomial fake_degree_projection(const Partition& lambda, const CharacterTable& characters);

/// Coinvariant multiplicities b[lambda][i] from the hook route; throws
/// InvariantViolation if the result fails verify_graded_identities.
GradedMultiplicityTable build_graded_table(int n);

/// Row sums equal dimensions, dimension-weighted column sums equal the
/// Poincare coefficients, and b[lambda][c-i] = b[lambda'][i].
bool verify_graded_identities(const GradedMultiplicityTable& table);

/// The polynomial identity q^c chi(rho, 1/q) = sign(rho) chi(rho, q) for
/// every class, and the multiplicity form b[lambda][c-i] = b[lambda'][i].
bool check_duality(int n);
bool check_duality(const GradedMultiplicityTable& table);

/// (n - |core|, core), or nullopt if that is not a partition.
std::optional<Partition> pad_partition(const Partition& core, int n);

struct StabilizationRow {
    Partition core;
    std::vector<Integer> values; ///< one per n in [first_n, last_n]
    bool constant = true;
};

struct StabilizationReport {
    int degree = 0;
    int first_n = 0;
    int last_n = 0;
    std::vector<StabilizationRow> rows;
    /// Partitions (with their n) carrying degree-i multiplicity whose core
    /// is larger than the degree; stability also requires this to be empty.
    std::vector<Partition> uncovered;
    bool stable = true;
};

/// For every core with |core| <= degree, the degree-`degree` multiplicity
/// of the padded partition for n from 2*degree to n_max.
StabilizationReport stabilization_check(int degree, int n_max, int max_n = kDefaultCharacterCap);

std::vector<Partition> find_nonunimodal_fake_degrees(int n);

} // namespace coinv
