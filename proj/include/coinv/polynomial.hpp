#pragma once

#include "coinv/integer.hpp"
#include "coinv/partition.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coinv {

/// Dense univariate polynomial in q with exact integer coefficients,
/// indexed from degree 0 upward. The zero polynomial has no stored
/// coefficients; otherwise the highest stored coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(const Integer& c);
    /// c * q^k.
    static IntPolynomial monomial(const Integer& c, int k);

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Throws std::domain_error for the zero polynomial.
    int degree() const;

    /// Coefficient of q^k; zero outside the stored range.
    Integer coefficient(int k) const;

    Integer evaluate(const Integer& q) const;

    /// Multiply by q^k (k >= 0).
    IntPolynomial shifted(int k) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const Integer& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
    friend IntPolynomial operator-(const IntPolynomial& a);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// "1 + 2*q + 2*q^2 + q^3": ascending degree, zero terms omitted, unit
    /// coefficients omitted, "0" for the zero polynomial.
    std::string to_string() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Exact quotient; throws NonExactDivision if the remainder is nonzero and
/// std::domain_error on a zero divisor.
IntPolynomial divide_exact(const IntPolynomial& numerator, const IntPolynomial& denominator);

/// Divides every coefficient by d, throwing NonExactDivision if any
/// coefficient is not a multiple.
IntPolynomial divide_coefficients_exact(const IntPolynomial& p, const Integer& d);

/// q^c p(1/q): coefficient k of the result is coefficient c-k of p.
/// Throws std::invalid_argument if degree(p) > c.
IntPolynomial mirror(const IntPolynomial& p, int c);

/// [k]_q = 1 + q + ... + q^{k-1}.
IntPolynomial q_integer(int k);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
IntPolynomial q_factorial(int n);

/// 1 - q^k.
IntPolynomial one_minus_q_power(int k);

/// [n]_q! / prod over cells of [hook]_q.
IntPolynomial q_integer_factorial_hooks(const Partition& lambda);

bool is_symmetric_about(std::span<const Integer> seq, int center);

/// Some peak index exists with the sequence weakly increasing up to it and
/// weakly decreasing after it. The empty sequence is unimodal.
bool is_unimodal(std::span<const Integer> seq);

/// a_k^2 >= a_{k-1} a_{k+1} for every interior k, applied literally even
/// when entries are zero or negative.
bool is_log_concave(std::span<const Integer> seq);

struct SequenceProperties {
    bool symmetric = false;
    bool unimodal = false;
    bool log_concave = false;
};

SequenceProperties sequence_predicates(std::span<const Integer> seq, int center);

} // namespace coinv
