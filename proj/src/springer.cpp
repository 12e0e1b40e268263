#include "coinv/springer.hpp"

#include "coinv/errors.hpp"
#include "coinv/parallel.hpp"
#include "coinv/tableau.hpp"

#include <stdexcept>

namespace coinv {

IntPolynomial kostka_foulkes_poly(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("kostka_foulkes_poly: |" + lambda.to_string() + "| != |" +
                                    mu.to_string() + "|");
    if (!dominates(lambda, mu))
        return {};
    std::vector<Integer> counts;
    for_each_ssyt(lambda, mu, [&](const Tableau& t) {
        const std::vector<int> word = t.reading_word();
        const int ch = charge(word);
        if (static_cast<int>(counts.size()) <= ch)
            counts.resize(static_cast<std::size_t>(ch) + 1);
        ++counts[ch];
    });
    return IntPolynomial(std::move(counts));
}

Integer kostka_number(const Partition& lambda, const Partition& mu)
{
    Integer count = 0;
    for_each_ssyt(lambda, mu, [&](const Tableau&) { ++count; });
    return count;
}

SpringerGradedTable springer_graded_table(const Partition& mu)
{
    const int top = n_stat(mu);
    SpringerGradedTable out{mu, GradedMultiplicityTable(mu.size(), top)};
    const auto& order = out.pieces.partitions();
    parallel::for_each_index(order.size(), [&](std::size_t row) {
        const IntPolynomial k = kostka_foulkes_poly(order[row], mu);
        if (k.is_zero())
            return;
        const IntPolynomial modified = mirror(k, top);
        for (int i = 0; i <= modified.degree(); ++i)
            out.pieces.set(row, i, modified.coefficient(i));
    });
    return out;
}

void verify_springer_calibration(int n)
{
    if (n < 1)
        throw std::invalid_argument("verify_springer_calibration: n must be positive");
    const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
    if (springer_graded_table(column).pieces != build_graded_table(n))
        throw InvariantViolation("Springer table for (1^" + std::to_string(n) +
                                 ") differs from the coinvariant table");
    const SpringerGradedTable row = springer_graded_table(Partition{n});
    for (std::size_t r = 0; r < row.pieces.size(); ++r)
        if (row.pieces.row(r) != std::vector<Integer>{Integer(r == 0 ? 1 : 0)})
            throw InvariantViolation("Springer table for (" + std::to_string(n) +
                                     ") is not the trivial representation in degree 0");
}

LogConcavityReport verify_springer_log_concavity(TableSource& tables, const Partition& mu)
{
    const SpringerGradedTable table = springer_graded_table(mu);
    std::vector<int> degrees;
    for (int i = 1; i <= table.pieces.top_degree() - 1; ++i)
        degrees.push_back(i);
    if (degrees.empty()) {
        LogConcavityReport report;
        report.n = mu.size();
        report.top_degree = table.pieces.top_degree();
        return report;
    }
    const auto kron = tables.kronecker(mu.size());
    return log_concavity_scan(table.pieces, *kron, degrees);
}

std::vector<SpringerCounterexample> springer_counterexample_search(TableSource& tables, int n_max)
{
    if (n_max > tables.limits().springer_cap)
        throw LimitExceeded("springer_counterexample_search: n_max " + std::to_string(n_max) +
                            " exceeds cap " + std::to_string(tables.limits().springer_cap));
    std::vector<SpringerCounterexample> out;
    for (int n = 1; n <= n_max; ++n) {
        verify_springer_calibration(n);
        const std::vector<Partition> shapes = partitions_of(n);
        std::vector<LogConcavityReport> reports(shapes.size());
        parallel::for_each_index(shapes.size(), [&](std::size_t k) {
            reports[k] = verify_springer_log_concavity(tables, shapes[k]);
        });
        for (std::size_t k = 0; k < shapes.size(); ++k)
            if (!reports[k].pass())
                out.push_back({shapes[k], reports[k].violations});
    }
    return out;
}

} // namespace coinv
