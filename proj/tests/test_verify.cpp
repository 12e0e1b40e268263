#include "coinv/verify.hpp"

#include "doctest.h"

using namespace coinv;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

Integer graded_character_value(int n, const Partition& rho, int degree)
{
    return graded_character_poly(n, rho).coefficient(degree);
}

} // namespace

TEST_CASE("tensor pair multiplicities")
{
    MemoryTables tables;
    CHECK(tensor_pair_multiplicity(tables, 3, 1, 1, Partition{3}) == 1);
    CHECK(tensor_pair_multiplicity(tables, 3, 0, 3, Partition{1, 1, 1}) == 1);
    CHECK(tensor_pair_multiplicity(tables, 3, 0, 5, Partition{3}) == 0);
    CHECK(tensor_pair_multiplicity(tables, 3, -1, 1, Partition{2, 1}) == 0);
    for (int n = 2; n <= 6; ++n) {
        const auto graded = tables.graded(n);
        for (int k = 0; k <= graded->top_degree(); ++k)
            for (const auto& nu : graded->partitions())
                CHECK(tensor_pair_multiplicity(tables, n, 0, k, nu) == graded->at(graded->index().at(nu), k));
    }
    CHECK_THROWS_AS(tensor_pair_multiplicity(tables, 3, 1, 1, Partition{2}), std::invalid_argument);
}

TEST_CASE("tensor products commute")
{
    MemoryTables tables;
    for (int n = 2; n <= 8; ++n) {
        const auto graded = tables.graded(n);
        const auto kron = tables.kronecker(n);
        const int c = graded->top_degree();
        for (int i = 0; i <= c; i += 3)
            for (int j = 0; j <= c; j += 2)
                CHECK(tensor_pair_multiplicities(*graded, *kron, i, j) ==
                      tensor_pair_multiplicities(*graded, *kron, j, i));
    }
}

TEST_CASE("d vectors")
{
    MemoryTables tables;
    CHECK(d_vector(tables, 3, Partition{3}) == ints({1, 1}));
    CHECK(d_vector(tables, 3, Partition{2, 1}) == ints({0, 0}));
    CHECK(d_vector(tables, 2, Partition{2}).empty());
    CHECK_THROWS_AS(d_vector(tables, 1, Partition{1}), std::invalid_argument);
}

TEST_CASE("brute-force graded character oracle for n <= 5")
{
    MemoryTables tables;
    for (int n = 2; n <= 5; ++n) {
        const auto chars = tables.characters(n);
        const auto graded = tables.graded(n);
        const auto kron = tables.kronecker(n);
        const int c = graded->top_degree();
        for (int i = 0; i <= c; ++i)
            for (int j = 0; j <= c; ++j) {
                const std::vector<Integer> fast = tensor_pair_multiplicities(*graded, *kron, i, j);
                for (std::size_t nu = 0; nu < chars->size(); ++nu) {
                    Integer sum = 0;
                    for (std::size_t k = 0; k < chars->size(); ++k) {
                        const Partition& rho = chars->partitions()[k];
                        sum += chars->class_sizes()[k] * graded_character_value(n, rho, i) *
                               graded_character_value(n, rho, j) * chars->value(nu, k);
                    }
                    CHECK(sum % factorial(n) == 0);
                    CHECK(fast[nu] == sum / factorial(n));
                }
            }
    }
}

TEST_CASE("d symmetry and the dimension identity for n <= 8")
{
    MemoryTables tables;
    for (int n = 3; n <= 8; ++n) {
        const auto graded = tables.graded(n);
        const auto kron = tables.kronecker(n);
        const int c = graded->top_degree();
        const IntPolynomial betti = poincare_polynomial(n);
        for (int i = 1; i <= c - 1; ++i) {
            const auto d = d_values(*graded, *kron, i);
            CHECK(d == d_values(*graded, *kron, c - i));
            Integer weighted = 0;
            for (std::size_t nu = 0; nu < d.size(); ++nu)
                weighted += kron->dimension(nu) * d[nu];
            CHECK(weighted == betti.coefficient(i) * betti.coefficient(i) -
                                  betti.coefficient(i - 1) * betti.coefficient(i + 1));
        }
    }
}

TEST_CASE("degree one is log-concave for n <= 12")
{
    MemoryTables tables;
    for (int n = 3; n <= 12; ++n)
        for (const auto& d : d_values(*tables.graded(n), *tables.kronecker(n), 1))
            CHECK(d >= 0);
}

TEST_CASE("degree filters")
{
    CHECK(DegreeFilter::all().degrees(6) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(DegreeFilter::parse("low:2").degrees(10) == std::vector<int>{1, 2, 8, 9});
    CHECK(DegreeFilter::parse("low:3").degrees(3) == std::vector<int>{1, 2});
    CHECK(DegreeFilter::parse("5,2,2,99,0").degrees(10) == std::vector<int>{2, 5});
    CHECK(DegreeFilter::parse("all").to_string() == "all");
    CHECK(DegreeFilter::parse("low:3").to_string() == "low:3");
    CHECK(DegreeFilter::parse("3,1").to_string() == "1,3");
    CHECK_THROWS_AS(DegreeFilter::parse("low:"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeFilter::parse("low:0"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeFilter::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeFilter::parse("some"), std::invalid_argument);
}

TEST_CASE("flag log-concavity reports")
{
    MemoryTables tables;
    const LogConcavityReport three = verify_flag_log_concavity(tables, 3);
    CHECK(three.pass());
    REQUIRE(three.min_d);
    CHECK(*three.min_d == 0);
    CHECK(three.entries.size() == 2 * 3);
    CHECK(three.degrees == std::vector<int>{1, 2});

    CHECK(verify_flag_log_concavity(tables, 4).pass());

    for (int n = 4; n <= 12; ++n) {
        const LogConcavityReport low = verify_flag_log_concavity(tables, n, DegreeFilter::low(3));
        CHECK(low.pass());
        for (const auto& e : low.entries)
            CHECK((e.degree <= 3 || e.degree >= low.top_degree - 3));
    }

    const LogConcavityReport two = verify_flag_log_concavity(tables, 2);
    CHECK(two.entries.empty());
    CHECK_FALSE(two.min_d.has_value());
    CHECK(two.pass());
}

TEST_CASE("low-degree harness")
{
    MemoryTables tables;
    const LowDegreeReport small = low_degree_harness(tables, 4);
    CHECK(small.pass());
    bool saw_m1 = false;
    for (const auto& e : small.entries) {
        if (e.m == 1 && e.n == 4)
            saw_m1 = true;
        CHECK(e.degree == (e.codegree ? top_degree_of(e.n) - e.m : e.m));
    }
    CHECK(saw_m1);
    CHECK_THROWS_AS(low_degree_harness(tables, 3), std::invalid_argument);

    const LowDegreeReport full = low_degree_harness(tables, 9);
    CHECK(full.pass());
    CHECK(full.duality_mismatches.empty());
}

TEST_CASE("d-sequence symmetry and unimodality")
{
    MemoryTables tables;
    const UnimodalityReport three = verify_d_unimodality(tables, 3);
    REQUIRE(three.sequences.size() == 3);
    CHECK(three.sequences[0].values == ints({1, 1}));
    CHECK(three.sequences[0].symmetric);
    CHECK(three.sequences[0].unimodal);
    CHECK(three.sequences[1].values == ints({0, 0}));
    CHECK(three.sequences[1].symmetric);
    CHECK(three.sequences[1].unimodal);
    for (int n = 3; n <= 8; ++n) {
        const UnimodalityReport report = verify_d_unimodality(tables, n);
        CHECK(report.symmetry_failures.empty());
        CHECK(report.failures.empty());
    }
    CHECK_THROWS_AS(verify_d_unimodality(tables, 2), std::invalid_argument);
}

TEST_CASE("numeric Betti log-concavity")
{
    MemoryTables tables;
    CHECK(betti_log_concavity(tables, 1));
    CHECK(betti_log_concavity(tables, 3));
    CHECK(betti_log_concavity(tables, 4));
    for (int n = 5; n <= 9; ++n)
        CHECK(betti_log_concavity(tables, n));
}
