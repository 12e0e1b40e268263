#include "coinv/graded.hpp"

#include "coinv/errors.hpp"
#include "coinv/parallel.hpp"
#include "coinv/tableau.hpp"

#include <stdexcept>

namespace coinv {

GradedMultiplicityTable::GradedMultiplicityTable(int n, int top_degree)
    : n_(n), top_degree_(top_degree), partitions_(partitions_of(n)), index_(partitions_),
      rows_(partitions_.size(), std::vector<Integer>(static_cast<std::size_t>(top_degree) + 1))
{
    if (top_degree < 0)
        throw std::invalid_argument("GradedMultiplicityTable: negative top degree");
}

Integer GradedMultiplicityTable::at(std::size_t lambda, int degree) const
{
    if (degree < 0 || degree > top_degree_)
        return 0;
    return rows_[lambda][degree];
}

void GradedMultiplicityTable::set(std::size_t lambda, int degree, Integer value)
{
    if (degree < 0 || degree > top_degree_)
        throw std::out_of_range("GradedMultiplicityTable::set: degree out of range");
    rows_[lambda][degree] = std::move(value);
}

IntPolynomial GradedMultiplicityTable::row_polynomial(std::size_t lambda) const
{
    return IntPolynomial(rows_[lambda]);
}

IntPolynomial graded_character_poly(int n, const Partition& rho)
{
    if (rho.size() != n)
        throw std::invalid_argument("graded_character_poly: rho must be a partition of n");
    IntPolynomial numerator = IntPolynomial::constant(1);
    for (int k = 1; k <= n; ++k)
        numerator = numerator * one_minus_q_power(k);
    IntPolynomial denominator = IntPolynomial::constant(1);
    for (int part : rho.parts())
        denominator = denominator * one_minus_q_power(part);
    return divide_exact(numerator, denominator);
}

IntPolynomial poincare_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("poincare_polynomial: n must be positive");
    IntPolynomial out = IntPolynomial::constant(1);
    for (int k = 0; k < n; ++k)
        out = out * q_integer(k + 1);
    return out;
}

IntPolynomial fake_degree_syt(const Partition& lambda)
{
    std::vector<Integer> counts;
    for_each_syt(lambda, [&](const Tableau& t) {
        const int maj = major_index(t);
        if (static_cast<int>(counts.size()) <= maj)
            counts.resize(static_cast<std::size_t>(maj) + 1);
        ++counts[maj];
    });
    return IntPolynomial(std::move(counts));
}

IntPolynomial fake_degree_hook(const Partition& lambda)
{
    return q_integer_factorial_hooks(lambda).shifted(n_stat(lambda));
}

IntPolynomial fake_degree_projection(const Partition& lambda, const CharacterTable& characters)
{
    const int n = characters.n();
    if (lambda.size() != n)
        throw std::invalid_argument("fake_degree_projection: lambda must be a partition of n");
    const std::size_t row = characters.index().at(lambda);
    IntPolynomial sum;
    for (std::size_t cls = 0; cls < characters.size(); ++cls) {
        const Integer weight = characters.class_sizes()[cls] * characters.value(row, cls);
        if (weight != 0)
            sum += graded_character_poly(n, characters.partitions()[cls]) * weight;
    }
    return divide_coefficients_exact(sum, factorial(static_cast<unsigned>(n)));
}

GradedMultiplicityTable build_graded_table(int n)
{
    if (n < 1)
        throw std::invalid_argument("build_graded_table: n must be positive");
    GradedMultiplicityTable table(n, top_degree_of(n));
    const auto& order = table.partitions();
    parallel::for_each_index(order.size(), [&](std::size_t row) {
        const IntPolynomial fake = fake_degree_hook(order[row]);
        for (int i = 0; i <= fake.degree(); ++i)
            table.set(row, i, fake.coefficient(i));
    });
    if (!verify_graded_identities(table))
        throw InvariantViolation("graded table for n=" + std::to_string(n) +
                                 " fails its structural identities");
    return table;
}

bool verify_graded_identities(const GradedMultiplicityTable& table)
{
    const int c = table.top_degree();
    if (c != top_degree_of(table.n()))
        return false;
    const IntPolynomial betti = poincare_polynomial(table.n());
    std::vector<Integer> weighted(static_cast<std::size_t>(c) + 1);
    for (std::size_t row = 0; row < table.size(); ++row) {
        const Partition& lambda = table.partitions()[row];
        const Integer dim = syt_count(lambda);
        const std::size_t twin = table.index().at(conjugate(lambda));
        Integer total = 0;
        for (int i = 0; i <= c; ++i) {
            const Integer b = table.at(row, i);
            if (b < 0 || b != table.at(twin, c - i))
                return false;
            total += b;
            weighted[i] += dim * b;
        }
        if (total != dim)
            return false;
    }
    for (int i = 0; i <= c; ++i)
        if (weighted[i] != betti.coefficient(i))
            return false;
    return true;
}

bool check_duality(const GradedMultiplicityTable& table)
{
    const int n = table.n();
    const int c = table.top_degree();
    for (const auto& rho : table.partitions()) {
        const IntPolynomial chi = graded_character_poly(n, rho);
        if (mirror(chi, c) != chi * Integer(class_sign(rho)))
            return false;
    }
    for (std::size_t row = 0; row < table.size(); ++row) {
        const std::size_t twin = table.index().at(conjugate(table.partitions()[row]));
        for (int i = 0; i <= c; ++i)
            if (table.at(row, c - i) != table.at(twin, i))
                return false;
    }
    return true;
}

bool check_duality(int n)
{
    return check_duality(build_graded_table(n));
}

std::optional<Partition> pad_partition(const Partition& core, int n)
{
    const int first = n - core.size();
    if (first < 1 || first < core.part(0))
        return std::nullopt;
    std::vector<int> parts{first};
    parts.insert(parts.end(), core.parts().begin(), core.parts().end());
    return Partition(std::move(parts));
}

StabilizationReport stabilization_check(int degree, int n_max, int max_n)
{
    if (degree < 1 || degree > 4)
        throw std::invalid_argument("stabilization_check: degree must lie in [1, 4]");
    if (n_max > max_n)
        throw LimitExceeded("stabilization_check: n_max " + std::to_string(n_max) +
                            " exceeds cap " + std::to_string(max_n));
    StabilizationReport report;
    report.degree = degree;
    report.first_n = 2 * degree;
    report.last_n = n_max;
    if (n_max < report.first_n)
        return report;

    std::vector<GradedMultiplicityTable> tables(static_cast<std::size_t>(n_max - report.first_n) + 1);
    parallel::for_each_index(tables.size(), [&](std::size_t k) {
        tables[k] = build_graded_table(report.first_n + static_cast<int>(k));
    });

    for (int size = 0; size <= degree; ++size)
        for (const auto& core : partitions_of(size)) {
            StabilizationRow row{core, {}, true};
            for (const auto& table : tables) {
                const auto padded = pad_partition(core, table.n());
                // n >= 2*degree >= |core| + core_1 keeps every padding valid.
                if (!padded)
                    throw std::logic_error("stabilization_check: padding failed");
                row.values.push_back(table.at(table.index().at(*padded), degree));
            }
            for (const auto& v : row.values)
                if (v != row.values.front())
                    row.constant = false;
            report.stable = report.stable && row.constant;
            report.rows.push_back(std::move(row));
        }

    for (const auto& table : tables)
        for (std::size_t r = 0; r < table.size(); ++r) {
            const Partition& lambda = table.partitions()[r];
            if (lambda.size() - lambda.part(0) > degree && table.at(r, degree) != 0) {
                report.uncovered.push_back(lambda);
                report.stable = false;
            }
        }
    return report;
}

std::vector<Partition> find_nonunimodal_fake_degrees(int n)
{
    std::vector<Partition> out;
    for (const auto& lambda : partitions_of(n)) {
        const IntPolynomial fake = fake_degree_hook(lambda);
        if (!is_unimodal(fake.coefficients()))
            out.push_back(lambda);
    }
    return out;
}

} // namespace coinv
