#include "coinv/tables.hpp"

namespace coinv {

namespace {

// Builds outside the lock; a concurrent duplicate build produces an equal
// table and the first insert wins.
template <class Table, class Build>
std::shared_ptr<const Table> memoized(std::mutex& mutex, std::map<int, std::shared_ptr<const Table>>& cache,
                                      int n, Build&& build)
{
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    auto table = std::make_shared<const Table>(build());
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(table)).first->second;
}

} // namespace

std::shared_ptr<const CharacterTable> MemoryTables::characters(int n)
{
    return memoized(mutex_, characters_, n, [&] { return build_character_table(n, limits_.character_cap); });
}

std::shared_ptr<const KroneckerTable> MemoryTables::kronecker(int n)
{
    if (n > limits_.kronecker_cap)
        throw LimitExceeded("Kronecker table for n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(limits_.kronecker_cap));
    auto chars = characters(n);
    return memoized(mutex_, kronecker_, n, [&] { return build_kronecker_table(*chars, limits_.kronecker_cap); });
}

std::shared_ptr<const GradedMultiplicityTable> MemoryTables::graded(int n)
{
    return memoized(mutex_, graded_, n, [&] { return build_graded_table(n); });
}

} // namespace coinv
