#pragma once

#include "coinv/graded.hpp"
#include "coinv/integer.hpp"
#include "coinv/partition.hpp"
#include "coinv/polynomial.hpp"
#include "coinv/tables.hpp"
#include "coinv/verify.hpp"

#include <vector>

namespace coinv {

/// Description of the grading convention, recorded in report provenance.
inline constexpr const char* kSpringerGrading =
    "degree i multiplicity of V(lambda) = [q^i] q^{n(mu)} K_{lambda,mu}(1/q); "
    "K_{lambda,mu}(q) = sum over SSYT(lambda, mu) of q^charge(reading word)";
inline constexpr const char* kChargeReading =
    "reading word: rows left to right, bottom row first; standard subwords extracted right to left cyclically";

/// sum over T in SSYT(lambda, mu) of q^{charge(reading word of T)}; zero
/// unless lambda dominates mu. Throws std::invalid_argument on size mismatch.
IntPolynomial kostka_foulkes_poly(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape lambda and content mu, by count.
Integer kostka_number(const Partition& lambda, const Partition& mu);

/// Graded Springer representation of Jordan type mu. Top degree is n(mu).
struct SpringerGradedTable {
    Partition mu;
    GradedMultiplicityTable pieces;
};

/// Multiplicities from the modified polynomial q^{n(mu)} K_{lambda,mu}(1/q).
SpringerGradedTable springer_graded_table(const Partition& mu);

/// Checks the calibration constraints of the grading: mu = (1^n) matches
/// the coinvariant table and mu = (n) is trivial in degree 0. Throws
/// InvariantViolation if either fails.
void verify_springer_calibration(int n);

/// d scan over degrees 1 .. n(mu)-1; vacuous pass when n(mu) < 2.
LogConcavityReport verify_springer_log_concavity(TableSource& tables, const Partition& mu);

struct SpringerCounterexample {
    Partition mu;
    std::vector<DEntry> witnesses;
};

/// All mu with |mu| <= n_max whose Springer representation fails
/// equivariant log-concavity, grouped by n and in canonical order within n.
/// Throws LimitExceeded above tables.limits().springer_cap.
std::vector<SpringerCounterexample> springer_counterexample_search(TableSource& tables, int n_max);

} // namespace coinv
