#pragma once

#include "coinv/graded.hpp"
#include "coinv/integer.hpp"
#include "coinv/kronecker.hpp"
#include "coinv/partition.hpp"
#include "coinv/tables.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coinv {

/// Multiplicity of every V(nu) (canonical order) in P_i (x) P_j, where P_k
/// is the degree-k piece of `pieces`:
///   sum_{lambda,mu} b[lambda][i] b[mu][j] g[lambda][mu][nu].
/// Degrees outside [0, top] are the zero representation.
std::vector<Integer> tensor_pair_multiplicities(const GradedMultiplicityTable& pieces,
                                                const KroneckerTable& kronecker, int i, int j);

Integer tensor_pair_multiplicity(TableSource& tables, int n, int i, int j, const Partition& nu);

/// d[nu] = t(i, i) - t(i-1, i+1) for every nu, canonical order.
std::vector<Integer> d_values(const GradedMultiplicityTable& pieces, const KroneckerTable& kronecker, int i);

/// The sequence d_{nu,i} for i = 1 .. c-1 (empty when c < 2).
std::vector<Integer> d_vector(TableSource& tables, int n, const Partition& nu);

/// Which interior degrees a scan covers: every degree, an explicit list,
/// or "low:m" (degrees 1..m and co-degrees c-1..c-m).
class DegreeFilter {
public:
    static DegreeFilter all() { return DegreeFilter{}; }
    static DegreeFilter low(int m);
    static DegreeFilter explicit_degrees(std::vector<int> degrees);

    /// Accepts "all", "low:M" and "i1,i2,...". Throws std::invalid_argument.
    static DegreeFilter parse(std::string_view text);

    /// Sorted, deduplicated degrees in [1, top - 1].
    std::vector<int> degrees(int top) const;
    std::string to_string() const;

private:
    enum class Mode { All, Low, Explicit };
    Mode mode_ = Mode::All;
    int low_ = 0;
    std::vector<int> explicit_;
};

struct DEntry {
    Partition nu;
    int degree = 0;
    Integer d;

    friend bool operator==(const DEntry&, const DEntry&) = default;
};

/// Equivariant log-concavity scan of one graded representation. Entries run
/// over degrees (ascending) then nu (canonical order).
struct LogConcavityReport {
    int n = 0;
    int top_degree = 0;
    std::vector<int> degrees;
    std::vector<DEntry> entries;
    std::optional<Integer> min_d;
    std::vector<DEntry> violations; ///< exactly the entries with d < 0

    bool pass() const { return violations.empty(); }
};

/// Runs the d scan on any graded table; shared by the flag-variety and
/// Springer engines.
LogConcavityReport log_concavity_scan(const GradedMultiplicityTable& pieces, const KroneckerTable& kronecker,
                                      std::span<const int> degrees);

LogConcavityReport verify_flag_log_concavity(TableSource& tables, int n,
                                             const DegreeFilter& filter = DegreeFilter::all());

struct LowDegreeEntry {
    int n = 0;
    int m = 0;
    bool codegree = false; ///< degree is c - m rather than m
    Partition nu;
    int degree = 0;
    Integer d;
};

struct LowDegreeReport {
    int n_max = 0;
    std::vector<LowDegreeEntry> entries;
    std::vector<LowDegreeEntry> violations;
    /// (n, m, nu) where the co-degree value differs from the degree value.
    std::vector<LowDegreeEntry> duality_mismatches;

    bool pass() const { return violations.empty() && duality_mismatches.empty(); }
};

/// d_{nu,m} >= 0 for m in {1, 2, 3}, every nu, every n <= n_max, on both the
/// degree side and the co-degree side. The sufficiency bound n <= 4m is
/// covered whenever n_max >= 12.
LowDegreeReport low_degree_harness(TableSource& tables, int n_max);

/// Largest m checked by low_degree_harness.
inline constexpr int kLowDegreeMax = 3;

struct DSequence {
    Partition nu;
    std::vector<Integer> values; ///< d_{nu,i} for i = 1 .. c-1
    bool symmetric = false;
    bool unimodal = false;
};

struct UnimodalityReport {
    int n = 0;
    int top_degree = 0;
    std::vector<DSequence> sequences;
    std::vector<Partition> failures;           ///< not unimodal
    std::vector<Partition> symmetry_failures;  ///< not symmetric (a theorem; must stay empty)

    bool pass() const { return failures.empty() && symmetry_failures.empty(); }
};

UnimodalityReport verify_d_unimodality(TableSource& tables, int n);

/// Log-concavity of the Poincare coefficients, plus the identity
/// sum_nu dim(nu) d_{nu,i} = b_i^2 - b_{i-1} b_{i+1} for each interior i.
bool betti_log_concavity(TableSource& tables, int n);

} // namespace coinv
