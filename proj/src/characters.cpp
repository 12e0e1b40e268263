#include "coinv/characters.hpp"

#include "coinv/errors.hpp"
#include "coinv/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace coinv {

CharacterTable::CharacterTable(int n, std::vector<Integer> values)
    : n_(n), partitions_(partitions_of(n)), index_(partitions_), values_(std::move(values))
{
    if (values_.size() != partitions_.size() * partitions_.size())
        throw std::invalid_argument("CharacterTable: value matrix has wrong size");
    class_sizes_.reserve(partitions_.size());
    for (const auto& rho : partitions_)
        class_sizes_.push_back(class_size(rho));
}

namespace {

// Beta-set (first-column hook lengths) of a partition with exactly
// `length` beads, descending.
std::vector<int> beta_set(const std::vector<int>& parts)
{
    const int length = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < length; ++i)
        beta[i] = parts[i] + (length - 1 - i);
    return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta)
{
    std::sort(beta.rbegin(), beta.rend());
    const int length = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < length; ++i) {
        const int part = beta[i] - (length - 1 - i);
        if (part > 0)
            parts.push_back(part);
    }
    return parts;
}

// Memo for one class rho: key is (number of parts of rho consumed, lambda).
class RimHookEvaluator {
public:
    explicit RimHookEvaluator(const Partition& rho) : rho_(rho.parts()) {}

    Integer evaluate(const std::vector<int>& lambda, std::size_t consumed)
    {
        if (consumed == rho_.size())
            return lambda.empty() ? 1 : 0;
        auto key = std::make_pair(consumed, lambda);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        const int hook = rho_[consumed];
        const std::vector<int> beta = beta_set(lambda);
        Integer total = 0;
        for (std::size_t b = 0; b < beta.size(); ++b) {
            const int target = beta[b] - hook;
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
                continue;
            int between = 0;
            for (int other : beta)
                if (other > target && other < beta[b])
                    ++between;
            std::vector<int> moved = beta;
            moved[b] = target;
            const Integer sub = evaluate(from_beta_set(std::move(moved)), consumed + 1);
            if (between % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::vector<int> rho_;
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

} // namespace

Integer character_value(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw std::invalid_argument("character_value: |" + lambda.to_string() + "| != |" +
                                    rho.to_string() + "|");
    RimHookEvaluator evaluator(rho);
    return evaluator.evaluate(lambda.parts(), 0);
}

CharacterTable build_character_table(int n, int max_n)
{
    if (n < 1)
        throw std::invalid_argument("build_character_table: n must be positive");
    if (n > max_n)
        throw LimitExceeded("character table for n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_n));
    const std::vector<Partition> order = partitions_of(n);
    const std::size_t size = order.size();
    std::vector<Integer> values(size * size);
    // One evaluator per class; its memo is shared by every row of that column.
    parallel::for_each_index(size, [&](std::size_t cls) {
        RimHookEvaluator evaluator(order[cls]);
        for (std::size_t row = 0; row < size; ++row)
            values[row * size + cls] = evaluator.evaluate(order[row].parts(), 0);
    });
    CharacterTable table(n, std::move(values));
    if (!verify_orthogonality(table))
        throw InvariantViolation("character table for n=" + std::to_string(n) +
                                 " fails orthogonality");
    return table;
}

bool verify_orthogonality(const CharacterTable& table)
{
    const std::size_t size = table.size();
    const Integer order = factorial(static_cast<unsigned>(table.n()));
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a; b < size; ++b) {
            Integer rows = 0;
            Integer cols = 0;
            for (std::size_t k = 0; k < size; ++k) {
                rows += table.class_sizes()[k] * table.value(a, k) * table.value(b, k);
                cols += table.value(k, a) * table.value(k, b);
            }
            if (rows != (a == b ? order : Integer(0)))
                return false;
            // Column relation: sum_lambda chi(rho) chi(sigma) = z_rho delta.
            if (cols != (a == b ? Integer(order / table.class_sizes()[a]) : Integer(0)))
                return false;
        }
    return true;
}

} // namespace coinv
