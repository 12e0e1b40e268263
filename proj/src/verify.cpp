#include "coinv/verify.hpp"

#include "coinv/parallel.hpp"
#include "coinv/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace coinv {

std::vector<Integer> tensor_pair_multiplicities(const GradedMultiplicityTable& pieces,
                                                const KroneckerTable& kronecker, int i, int j)
{
    if (pieces.n() != kronecker.n())
        throw std::invalid_argument("tensor_pair_multiplicities: tables for different n");
    const std::size_t p = pieces.size();
    std::vector<Integer> out(p);

    std::vector<std::pair<std::size_t, Integer>> left;
    std::vector<std::pair<std::size_t, Integer>> right;
    for (std::size_t a = 0; a < p; ++a) {
        if (Integer b = pieces.at(a, i); b != 0)
            left.emplace_back(a, std::move(b));
        if (Integer b = pieces.at(a, j); b != 0)
            right.emplace_back(a, std::move(b));
    }
    Integer weight;
    for (const auto& [a, x] : left)
        for (const auto& [b, y] : right) {
            weight = x * y;
            for (std::size_t c = 0; c < p; ++c) {
                const Integer& g = kronecker.at(a, b, c);
                if (g != 0)
                    out[c] += weight * g;
            }
        }
    return out;
}

Integer tensor_pair_multiplicity(TableSource& tables, int n, int i, int j, const Partition& nu)
{
    if (nu.size() != n)
        throw std::invalid_argument("tensor_pair_multiplicity: nu must be a partition of n");
    const auto graded = tables.graded(n);
    const auto kron = tables.kronecker(n);
    return tensor_pair_multiplicities(*graded, *kron, i, j)[graded->index().at(nu)];
}

std::vector<Integer> d_values(const GradedMultiplicityTable& pieces, const KroneckerTable& kronecker, int i)
{
    std::vector<Integer> square = tensor_pair_multiplicities(pieces, kronecker, i, i);
    const std::vector<Integer> outer = tensor_pair_multiplicities(pieces, kronecker, i - 1, i + 1);
    for (std::size_t c = 0; c < square.size(); ++c)
        square[c] -= outer[c];
    return square;
}

std::vector<Integer> d_vector(TableSource& tables, int n, const Partition& nu)
{
    if (n < 2)
        throw std::invalid_argument("d_vector: n must be at least 2");
    if (nu.size() != n)
        throw std::invalid_argument("d_vector: nu must be a partition of n");
    const auto graded = tables.graded(n);
    const auto kron = tables.kronecker(n);
    const std::size_t row = graded->index().at(nu);
    const int c = graded->top_degree();
    std::vector<Integer> out;
    for (int i = 1; i <= c - 1; ++i)
        out.push_back(d_values(*graded, *kron, i)[row]);
    return out;
}

DegreeFilter DegreeFilter::low(int m)
{
    if (m < 1)
        throw std::invalid_argument("DegreeFilter::low: m must be positive");
    DegreeFilter f;
    f.mode_ = Mode::Low;
    f.low_ = m;
    return f;
}

DegreeFilter DegreeFilter::explicit_degrees(std::vector<int> degrees)
{
    DegreeFilter f;
    f.mode_ = Mode::Explicit;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    f.explicit_ = std::move(degrees);
    return f;
}

namespace {

int parse_int(std::string_view field, std::string_view whole)
{
    int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
        throw std::invalid_argument("malformed degree filter: '" + std::string(whole) + "'");
    return value;
}

} // namespace

DegreeFilter DegreeFilter::parse(std::string_view text)
{
    if (text == "all")
        return all();
    if (text.starts_with("low:"))
        return low(parse_int(text.substr(4), text));
    std::vector<int> degrees;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        degrees.push_back(parse_int(
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), text));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return explicit_degrees(std::move(degrees));
}

std::vector<int> DegreeFilter::degrees(int top) const
{
    std::set<int> out;
    const auto keep = [&](int i) {
        if (i >= 1 && i <= top - 1)
            out.insert(i);
    };
    switch (mode_) {
    case Mode::All:
        for (int i = 1; i <= top - 1; ++i)
            keep(i);
        break;
    case Mode::Low:
        for (int m = 1; m <= low_; ++m) {
            keep(m);
            keep(top - m);
        }
        break;
    case Mode::Explicit:
        for (int i : explicit_)
            keep(i);
        break;
    }
    return {out.begin(), out.end()};
}

std::string DegreeFilter::to_string() const
{
    switch (mode_) {
    case Mode::All:
        return "all";
    case Mode::Low:
        return "low:" + std::to_string(low_);
    case Mode::Explicit:
        break;
    }
    std::string out;
    for (std::size_t k = 0; k < explicit_.size(); ++k)
        out += (k ? "," : "") + std::to_string(explicit_[k]);
    return out;
}

LogConcavityReport log_concavity_scan(const GradedMultiplicityTable& pieces, const KroneckerTable& kronecker,
                                      std::span<const int> degrees)
{
    LogConcavityReport report;
    report.n = pieces.n();
    report.top_degree = pieces.top_degree();
    report.degrees.assign(degrees.begin(), degrees.end());

    std::vector<std::vector<Integer>> per_degree(degrees.size());
    parallel::for_each_index(degrees.size(), [&](std::size_t k) {
        per_degree[k] = d_values(pieces, kronecker, degrees[k]);
    });

    for (std::size_t k = 0; k < degrees.size(); ++k)
        for (std::size_t nu = 0; nu < pieces.size(); ++nu) {
            DEntry entry{pieces.partitions()[nu], degrees[k], per_degree[k][nu]};
            if (!report.min_d || entry.d < *report.min_d)
                report.min_d = entry.d;
            if (entry.d < 0)
                report.violations.push_back(entry);
            report.entries.push_back(std::move(entry));
        }
    return report;
}

LogConcavityReport verify_flag_log_concavity(TableSource& tables, int n, const DegreeFilter& filter)
{
    if (n < 2)
        throw std::invalid_argument("verify_flag_log_concavity: n must be at least 2");
    const auto graded = tables.graded(n);
    const auto kron = tables.kronecker(n);
    const std::vector<int> degrees = filter.degrees(graded->top_degree());
    return log_concavity_scan(*graded, *kron, degrees);
}

LowDegreeReport low_degree_harness(TableSource& tables, int n_max)
{
    if (n_max < 4)
        throw std::invalid_argument("low_degree_harness: n_max must be at least 4");
    LowDegreeReport report;
    report.n_max = n_max;

    for (int n = 2; n <= n_max; ++n) {
        const auto graded = tables.graded(n);
        const auto kron = tables.kronecker(n);
        const int c = graded->top_degree();

        struct Job {
            int m;
            bool codegree;
            int degree;
        };
        std::vector<Job> jobs;
        for (int m = 1; m <= kLowDegreeMax && m <= c - 1; ++m) {
            jobs.push_back({m, false, m});
            jobs.push_back({m, true, c - m});
        }
        std::vector<std::vector<Integer>> results(jobs.size());
        parallel::for_each_index(jobs.size(), [&](std::size_t k) {
            results[k] = d_values(*graded, *kron, jobs[k].degree);
        });

        for (std::size_t k = 0; k < jobs.size(); ++k)
            for (std::size_t nu = 0; nu < graded->size(); ++nu) {
                LowDegreeEntry entry{n, jobs[k].m, jobs[k].codegree, graded->partitions()[nu],
                                     jobs[k].degree, results[k][nu]};
                if (entry.d < 0)
                    report.violations.push_back(entry);
                // Jobs come in (degree, co-degree) pairs for each m.
                if (entry.codegree && entry.d != results[k - 1][nu])
                    report.duality_mismatches.push_back(entry);
                report.entries.push_back(std::move(entry));
            }
    }
    return report;
}

UnimodalityReport verify_d_unimodality(TableSource& tables, int n)
{
    if (n < 3)
        throw std::invalid_argument("verify_d_unimodality: n must be at least 3");
    const auto graded = tables.graded(n);
    const auto kron = tables.kronecker(n);
    const int c = graded->top_degree();

    std::vector<int> degrees;
    for (int i = 1; i <= c - 1; ++i)
        degrees.push_back(i);
    std::vector<std::vector<Integer>> per_degree(degrees.size());
    parallel::for_each_index(degrees.size(), [&](std::size_t k) {
        per_degree[k] = d_values(*graded, *kron, degrees[k]);
    });

    UnimodalityReport report;
    report.n = n;
    report.top_degree = c;
    for (std::size_t nu = 0; nu < graded->size(); ++nu) {
        DSequence seq;
        seq.nu = graded->partitions()[nu];
        for (std::size_t k = 0; k < degrees.size(); ++k)
            seq.values.push_back(per_degree[k][nu]);
        // values[k] is degree k+1, so d_i = d_{c-i} is symmetry about c-2.
        seq.symmetric = is_symmetric_about(seq.values, c - 2);
        seq.unimodal = is_unimodal(seq.values);
        if (!seq.symmetric)
            report.symmetry_failures.push_back(seq.nu);
        if (!seq.unimodal)
            report.failures.push_back(seq.nu);
        report.sequences.push_back(std::move(seq));
    }
    return report;
}

bool betti_log_concavity(TableSource& tables, int n)
{
    if (n < 1)
        throw std::invalid_argument("betti_log_concavity: n must be positive");
    const IntPolynomial betti = poincare_polynomial(n);
    if (!is_log_concave(betti.coefficients()))
        return false;
    const int c = top_degree_of(n);
    if (c < 2)
        return true;
    const auto graded = tables.graded(n);
    const auto kron = tables.kronecker(n);
    for (int i = 1; i <= c - 1; ++i) {
        const std::vector<Integer> d = d_values(*graded, *kron, i);
        Integer weighted = 0;
        for (std::size_t nu = 0; nu < d.size(); ++nu)
            weighted += kron->dimension(nu) * d[nu];
        const Integer numeric = betti.coefficient(i) * betti.coefficient(i) -
                                betti.coefficient(i - 1) * betti.coefficient(i + 1);
        if (weighted != numeric || numeric < 0)
            return false;
    }
    return true;
}

} // namespace coinv
