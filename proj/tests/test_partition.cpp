#include <doctest.h>

#include <stdexcept>

#include "skewrec/partition.hpp"

using namespace skewrec;

namespace {

std::vector<Partition> all_up_to(int weight)
{
    std::vector<Partition> out;
    for (int m = 0; m <= weight; ++m)
        for (auto& p : partitions_of(m, static_cast<std::size_t>(m)))
            out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("partition canonical form")
{
    Partition p{3, 1, 0, 0};
    CHECK(p.length() == 2);
    CHECK(p[5] == 0);
    CHECK(p.size() == 4);
    CHECK(Partition{} == Partition{0});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("contains")
{
    CHECK(contains({3, 2}, {2, 2}));
    CHECK(contains({}, {}));
    CHECK(contains({5, 4, 3, 1}, {3, 2, 2}));
    CHECK_FALSE(contains({2, 2}, {3}));
    CHECK_FALSE(contains({2}, {1, 1}));
}

TEST_CASE("dominates")
{
    CHECK(dominates({2, 1, 1}, {1, 1, 1, 1}));
    CHECK_FALSE(dominates({2, 2}, {3, 1}));
    CHECK_FALSE(dominates({1, 1, 1}, {2, 1}));
    CHECK_FALSE(dominates({3}, {1, 1}));
    CHECK_THROWS_AS(dominates({1, 2}, {3}), std::invalid_argument);
}

TEST_CASE("sort_decreasing")
{
    CHECK(sort_decreasing({1, 3, 2}) == IntVector{3, 2, 1});
    CHECK(sort_decreasing({0, 0}) == IntVector{0, 0});
    CHECK(sort_decreasing({3, 1, 2}) == IntVector{3, 2, 1});
    CHECK_THROWS_AS(sort_decreasing({1, -1}), std::invalid_argument);
}

TEST_CASE("elementwise arithmetic")
{
    CHECK(add(Partition{2, 1}, Partition{1, 1}) == Partition{3, 2});
    CHECK(scale(3, Partition{2, 1}) == Partition{6, 3});
    CHECK(subtract(Partition{2, 1}, Partition{1, 2 - 1}) == IntVector{1, 0});
    CHECK(subtract(Partition{2, 1}, Partition{1, 1, 1}) == IntVector{1, 0, -1});
}

TEST_CASE("stretch_condition")
{
    auto a = stretch_condition({}, {}, {1}, {});
    REQUIRE(a);
    CHECK(*a.k == 1);
    auto b = stretch_condition({}, {3}, {1}, {});
    REQUIRE(b);
    CHECK(*b.k == 3);
    auto c = stretch_condition({}, {1}, {1, 1}, {1, 1});
    CHECK_FALSE(c);
    REQUIRE(c.violating_row);
    CHECK(*c.violating_row == 0);
    // Brute force over k for small inputs.
    for (const auto& kappa : all_up_to(3))
        for (const auto& lambda : all_up_to(3))
            for (const auto& mu : all_up_to(3))
                for (const auto& nu : subpartitions(mu)) {
                    auto got = stretch_condition(kappa, lambda, mu, nu);
                    std::optional<int> expect;
                    for (int k = 1; k <= 10 && !expect; ++k) {
                        bool ok = true;
                        for (std::size_t i = 0; i < 4; ++i)
                            ok = ok && k * (mu[i] - nu[i]) >= lambda[i] - kappa[i];
                        if (ok)
                            expect = k;
                    }
                    CHECK(got.k == expect);
                }
}

TEST_CASE("text form round trip")
{
    CHECK(to_string(Partition{5, 4, 3, 1}) == "[5,4,3,1]");
    CHECK(to_string(Partition{}) == "[]");
    CHECK(parse_partition("[5,4,3,1]") == Partition{5, 4, 3, 1});
    CHECK(parse_partition("2,1,0") == Partition{2, 1});
    CHECK(parse_partition("[]").empty());
    CHECK(parse_int_vector("[1,-1]") == IntVector{1, -1});
    CHECK_THROWS_AS(parse_partition("[1,x]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[1,2]"), std::invalid_argument);
}

TEST_CASE("enumeration counts")
{
    // p(0..8)
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int m = 0; m <= 8; ++m)
        CHECK(partitions_of(m, static_cast<std::size_t>(m)).size() == static_cast<std::size_t>(counts[m]));
    CHECK(partitions_of(4, 2).size() == 3);
    CHECK(subpartitions({2, 1}).size() == 5);
    CHECK(partitions_in_box(2, 2).size() == 6);
}

TEST_CASE("contains is a partial order")
{
    auto ps = all_up_to(6);
    for (const auto& a : ps) {
        CHECK(contains(a, a));
        for (const auto& b : ps) {
            if (contains(a, b) && contains(b, a))
                CHECK(a == b);
            if (!contains(a, b))
                continue;
            for (const auto& c : ps)
                if (contains(b, c))
                    CHECK(contains(a, c));
        }
    }
}

TEST_CASE("dominance is a partial order on equal weights")
{
    for (int m = 0; m <= 6; ++m) {
        auto ps = partitions_of(m, static_cast<std::size_t>(m));
        auto vec = [m](const Partition& p) { return IntVector::from_partition(p, static_cast<std::size_t>(std::max(m, 1))); };
        for (const auto& a : ps) {
            CHECK(dominates(vec(a), vec(a)));
            for (const auto& b : ps) {
                if (dominates(vec(a), vec(b)) && dominates(vec(b), vec(a)))
                    CHECK(a == b);
                if (!dominates(vec(a), vec(b)))
                    continue;
                for (const auto& c : ps)
                    if (dominates(vec(b), vec(c)))
                        CHECK(dominates(vec(a), vec(c)));
            }
        }
    }
}

TEST_CASE("add and scale laws")
{
    auto ps = all_up_to(4);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            CHECK(add(a, b) == add(b, a));
            auto diff = subtract(add(a, b), b);
            std::vector<int> expect = a.padded(diff.size());
            CHECK(diff.entries() == expect);
            for (const auto& c : ps)
                CHECK(add(add(a, b), c) == add(a, add(b, c)));
        }
    for (const auto& a : ps) {
        Partition sum;
        for (int k = 1; k <= 4; ++k) {
            sum = add(sum, a);
            CHECK(scale(k, a) == sum);
        }
    }
}
