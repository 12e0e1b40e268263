#include "coinv/kronecker.hpp"

#include "coinv/errors.hpp"
#include "coinv/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

KroneckerTable::KroneckerTable(int n)
    : n_(n), partitions_(partitions_of(n)), index_(partitions_)
{
    const std::size_t p = partitions_.size();
    dimensions_.reserve(p);
    for (const auto& lambda : partitions_)
        dimensions_.push_back(syt_count(lambda));
    offsets_.assign(p * p, 0);
    std::size_t next = 0;
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b) {
            offsets_[a * p + b] = next;
            next += p - b;
        }
    stored_.assign(next, Integer(0));
}

std::size_t KroneckerTable::slot(std::size_t a, std::size_t b, std::size_t c) const
{
    std::array<std::size_t, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    if (key[2] >= partitions_.size())
        throw std::out_of_range("KroneckerTable: index out of range");
    return offsets_[key[0] * partitions_.size() + key[1]] + (key[2] - key[1]);
}

namespace {

Integer divide_class_sum(const Integer& sum, const Integer& order, const std::string& what)
{
    if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
        throw NonIntegral("Kronecker class sum for " + what + " is not divisible by n!");
    return sum / order;
}

} // namespace

Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                              const CharacterTable& characters)
{
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("kronecker_coefficient: partitions of different sizes");
    if (lambda.size() != characters.n())
        throw std::invalid_argument("kronecker_coefficient: character table has the wrong n");
    const std::size_t a = characters.index().at(lambda);
    const std::size_t b = characters.index().at(mu);
    const std::size_t c = characters.index().at(nu);
    Integer sum = 0;
    for (std::size_t k = 0; k < characters.size(); ++k)
        sum += characters.class_sizes()[k] * characters.value(a, k) * characters.value(b, k) *
               characters.value(c, k);
    return divide_class_sum(sum, factorial(static_cast<unsigned>(characters.n())),
                            lambda.to_string() + " x " + mu.to_string() + " -> " + nu.to_string());
}

Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    return kronecker_coefficient(lambda, mu, nu, build_character_table(lambda.size()));
}

KroneckerTable build_kronecker_table(const CharacterTable& characters, int max_n)
{
    const int n = characters.n();
    if (n > max_n)
        throw LimitExceeded("Kronecker table for n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_n));
    KroneckerTable table(n);
    const std::size_t p = characters.size();
    const Integer order = factorial(static_cast<unsigned>(n));

    parallel::for_each_index(p, [&](std::size_t a) {
        std::vector<Integer> weight(p);
        for (std::size_t b = a; b < p; ++b) {
            for (std::size_t k = 0; k < p; ++k)
                weight[k] = characters.class_sizes()[k] * characters.value(a, k) * characters.value(b, k);
            for (std::size_t c = b; c < p; ++c) {
                Integer sum = 0;
                for (std::size_t k = 0; k < p; ++k)
                    sum += weight[k] * characters.value(c, k);
                Integer g = divide_class_sum(sum, order,
                                             table.partitions()[a].to_string() + " x " +
                                                 table.partitions()[b].to_string() + " -> " +
                                                 table.partitions()[c].to_string());
                if (g < 0)
                    throw InvariantViolation("negative Kronecker coefficient");
                table.set(a, b, c, std::move(g));
            }
        }
    });

    if (!verify_kronecker_identities(table))
        throw InvariantViolation("Kronecker table for n=" + std::to_string(n) +
                                 " fails its identities");
    return table;
}

bool verify_kronecker_identities(const KroneckerTable& table)
{
    const std::size_t p = table.size();
    if (p == 0)
        return false;
    std::vector<std::size_t> twin(p);
    for (std::size_t a = 0; a < p; ++a)
        twin[a] = table.index().at(conjugate(table.partitions()[a]));

    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            // (n) is first in canonical order.
            if (table.at(a, b, 0) != (a == b ? 1 : 0))
                return false;
            Integer weighted = 0;
            for (std::size_t c = 0; c < p; ++c) {
                const Integer& g = table.at(a, b, c);
                if (g < 0)
                    return false;
                if (g != table.at(b, a, c) || g != table.at(c, b, a) || g != table.at(a, c, b))
                    return false;
                if (g != table.at(twin[a], twin[b], c))
                    return false;
                weighted += table.dimension(c) * g;
            }
            if (weighted != table.dimension(a) * table.dimension(b))
                return false;
        }
    return true;
}

} // namespace coinv
