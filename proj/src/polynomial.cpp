#include "coinv/polynomial.hpp"

#include "coinv/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
{
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c)
{
    return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, int k)
{
    if (k < 0)
        throw std::invalid_argument("monomial: negative exponent");
    std::vector<Integer> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs[k] = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

int IntPolynomial::degree() const
{
    if (coeffs_.empty())
        throw std::domain_error("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

Integer IntPolynomial::coefficient(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[k];
}

Integer IntPolynomial::evaluate(const Integer& q) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + *it;
    return acc;
}

IntPolynomial IntPolynomial::shifted(int k) const
{
    if (k < 0)
        throw std::invalid_argument("shifted: negative shift");
    if (is_zero())
        return {};
    std::vector<Integer> out(static_cast<std::size_t>(k));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a)
{
    IntPolynomial out = a;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

std::string IntPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Integer magnitude = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out += magnitude.get_str() + "*";
        out += "q";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

IntPolynomial divide_exact(const IntPolynomial& numerator, const IntPolynomial& denominator)
{
    if (denominator.is_zero())
        throw std::domain_error("divide_exact: division by the zero polynomial");
    if (numerator.is_zero())
        return {};

    std::vector<Integer> rem = numerator.coefficients();
    const auto& den = denominator.coefficients();
    const int dd = denominator.degree();
    const Integer& lead = den.back();
    const int nd = numerator.degree();
    if (nd < dd)
        throw NonExactDivision("divide_exact: " + numerator.to_string() + " is not divisible by " +
                               denominator.to_string());

    std::vector<Integer> quotient(static_cast<std::size_t>(nd - dd) + 1);
    for (int k = nd - dd; k >= 0; --k) {
        const Integer& top = rem[k + dd];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw NonExactDivision("divide_exact: " + numerator.to_string() +
                                   " is not divisible by " + denominator.to_string());
        Integer factor = top / lead;
        for (int j = 0; j <= dd; ++j)
            rem[k + j] -= factor * den[j];
        quotient[k] = std::move(factor);
    }
    for (const auto& r : rem)
        if (r != 0)
            throw NonExactDivision("divide_exact: " + numerator.to_string() +
                                   " is not divisible by " + denominator.to_string());
    return IntPolynomial(std::move(quotient));
}

IntPolynomial divide_coefficients_exact(const IntPolynomial& p, const Integer& d)
{
    if (d == 0)
        throw std::domain_error("divide_coefficients_exact: zero divisor");
    std::vector<Integer> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw NonExactDivision("coefficient " + c.get_str() + " not divisible by " + d.get_str());
        out.push_back(c / d);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial mirror(const IntPolynomial& p, int c)
{
    if (c < 0)
        throw std::invalid_argument("mirror: negative center");
    if (p.is_zero())
        return {};
    if (p.degree() > c)
        throw std::invalid_argument("mirror: degree " + std::to_string(p.degree()) +
                                    " exceeds " + std::to_string(c));
    std::vector<Integer> out(static_cast<std::size_t>(c) + 1);
    for (int k = 0; k <= p.degree(); ++k)
        out[c - k] = p.coefficients()[k];
    return IntPolynomial(std::move(out));
}

IntPolynomial q_integer(int k)
{
    if (k < 0)
        throw std::invalid_argument("q_integer: negative argument");
    return IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)));
}

IntPolynomial q_factorial(int n)
{
    IntPolynomial out = IntPolynomial::constant(1);
    for (int k = 2; k <= n; ++k)
        out = out * q_integer(k);
    return out;
}

IntPolynomial one_minus_q_power(int k)
{
    if (k < 1)
        throw std::invalid_argument("one_minus_q_power: exponent must be positive");
    std::vector<Integer> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs[0] = 1;
    coeffs[k] = -1;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial q_integer_factorial_hooks(const Partition& lambda)
{
    IntPolynomial denominator = IntPolynomial::constant(1);
    for (int h : hook_lengths(lambda))
        if (h > 1)
            denominator = denominator * q_integer(h);
    return divide_exact(q_factorial(lambda.size()), denominator);
}

bool is_symmetric_about(std::span<const Integer> seq, int center)
{
    const auto at = [&](int k) -> Integer {
        return k >= 0 && k < static_cast<int>(seq.size()) ? seq[k] : Integer(0);
    };
    const int span = std::max(static_cast<int>(seq.size()) - 1, center);
    for (int k = 0; k <= span; ++k)
        if (at(k) != at(center - k))
            return false;
    return true;
}

bool is_unimodal(std::span<const Integer> seq)
{
    std::size_t i = 1;
    while (i < seq.size() && seq[i] >= seq[i - 1])
        ++i;
    while (i < seq.size() && seq[i] <= seq[i - 1])
        ++i;
    return i >= seq.size();
}

bool is_log_concave(std::span<const Integer> seq)
{
    for (std::size_t k = 1; k + 1 < seq.size(); ++k)
        if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1])
            return false;
    return true;
}

SequenceProperties sequence_predicates(std::span<const Integer> seq, int center)
{
    return {is_symmetric_about(seq, center), is_unimodal(seq), is_log_concave(seq)};
}

} // namespace coinv
