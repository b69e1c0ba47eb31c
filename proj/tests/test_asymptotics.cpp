#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "skewrec/asymptotics.hpp"

using namespace skewrec;

namespace {

bool conjugate_closed(std::vector<Complex> roots, double tol)
{
    std::vector<char> used(roots.size(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < roots.size() && !found; ++j)
            if (!used[j] && std::abs(roots[j] - std::conj(roots[i])) < tol) {
                used[j] = 1;
                found = true;
            }
        if (!found)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("find_roots on small polynomials")
{
    auto cube = find_roots(ComplexPoly{{1.0, 1.0, 1.0}});
    REQUIRE(cube.roots.size() == 2);
    CHECK(cube.converged);
    for (const auto& z : cube.roots) {
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-8);
        CHECK(std::abs(z * z * z - 1.0) < 1e-8);
    }
    CHECK(std::abs(cube.roots[0] - std::conj(cube.roots[1])) < 1e-12);

    auto triple_zero = find_roots(ComplexPoly{{0.0, 0.0, 0.0, 1.0}});
    REQUIRE(triple_zero.roots.size() == 3);
    for (const auto& z : triple_zero.roots)
        CHECK(z == Complex(0.0));

    CHECK_THROWS_AS(find_roots(ComplexPoly{{3.0}}), std::invalid_argument);
    CHECK_THROWS_AS(find_roots(ComplexPoly{{3.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("find_roots recovers repeated and mixed roots")
{
    // (z^2+z+1)^2
    auto doubled = find_roots(ComplexPoly{{1.0, 2.0, 3.0, 2.0, 1.0}});
    REQUIRE(doubled.roots.size() == 4);
    for (const auto& z : doubled.roots)
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-14);

    // (z-2)(z+3)(z-i)(z+i) = z^4 + z^3 - 5z^2 + z - 6
    auto mixed = find_roots(ComplexPoly{{-6.0, 1.0, -5.0, 1.0, 1.0}});
    std::vector<Complex> expected{2.0, -3.0, Complex(0, 1), Complex(0, -1)};
    for (const auto& e : expected)
        CHECK(std::any_of(mixed.roots.begin(), mixed.roots.end(),
                          [&](Complex z) { return std::abs(z - e) < 1e-12; }));

    // z^2 (z - 1): zero roots split off exactly
    auto split = find_roots(ComplexPoly{{0.0, 0.0, -1.0, 1.0}});
    CHECK(std::count(split.roots.begin(), split.roots.end(), Complex(0.0)) == 2);
}

TEST_CASE("find_roots is deterministic and residuals are small")
{
    ComplexPoly p{{Complex(1, 2), Complex(-3, 0.5), 4.0, Complex(0, -1), 2.0, 1.0, Complex(0.25, 0.25)}};
    auto a = find_roots(p);
    auto b = find_roots(p);
    CHECK(a.roots == b.roots);
    CHECK(a.converged);
    for (double r : a.residuals)
        CHECK(r < 1e-8);
}

TEST_CASE("specialize examples")
{
    auto h = build_sequence({}, {}, {1}, {}, 2);
    for (int k = 0; k <= 6; ++k) {
        auto p = specialize(h, k, {1.0});
        REQUIRE(p.degree() == k);
        for (const auto& c : p.coeffs)
            CHECK(c == Complex(1.0));
    }

    auto square = build_sequence({}, {}, {1, 1}, {}, 2);
    for (int k = 1; k <= 5; ++k) {
        auto p = specialize(square, k, {1.0});
        REQUIRE(p.degree() == k);
        CHECK(p.coeffs.back() == Complex(1.0));
        for (int j = 0; j < k; ++j)
            CHECK(p.coeffs[j] == Complex(0.0));
    }

    auto stair = build_sequence({}, {}, {2, 1}, {}, 3);
    for (int k = 1; k <= 5; ++k)
        CHECK(specialize(stair, k, {1.0, 1.0}).degree() == 2 * k);

    CHECK_THROWS_AS(specialize(stair, 1, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(specialize(stair, 1, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("specialize keeps the exact x1-degree")
{
    auto seq = build_sequence({1}, {}, {2, 1}, {1}, 3);
    const double theta = 2.0 * std::numbers::pi / 7.0;
    for (int k = 1; k <= 4; ++k) {
        CHECK(specialize(seq, k, {1.0, Complex(0.0, 1.0)}).degree() == seq.term(k).degree_in(0));
        CHECK(specialize(seq, k, {std::polar(2.0, theta), 2.0}).degree() == seq.term(k).degree_in(0));
    }
}

TEST_CASE("staircase roots lie on the unit circle")
{
    auto stair = build_sequence({}, {}, {2, 1}, {}, 3);
    auto clouds = limit_experiment(stair, {1.0, 1.0}, 8);
    REQUIRE(clouds.size() == 8);
    for (const auto& cloud : clouds) {
        CHECK(cloud.roots.size() == static_cast<std::size_t>(2 * cloud.k));
        CHECK(cloud.deviation < 1e-6);
        CHECK(cloud.max_residual < 1e-8);
        CHECK(conjugate_closed(cloud.roots, 1e-9));
    }
}

TEST_CASE("limit_experiment bookkeeping")
{
    auto h = build_sequence({}, {}, {1}, {}, 2);
    auto clouds = limit_experiment(h, {1.0}, 12);
    REQUIRE(clouds.size() == 12);
    for (std::size_t i = 0; i < clouds.size(); ++i) {
        CHECK(clouds[i].k == static_cast<int>(i) + 1);
        CHECK(clouds[i].deviation < 1e-14);
    }

    auto family = build_sequence({}, {}, {2, 1}, {1}, 2);
    for (const auto& cloud : limit_experiment(family, {1.0}, 10)) {
        CHECK(cloud.roots.size() == static_cast<std::size_t>(family.term(cloud.k).degree_in(0)));
        CHECK(cloud.max_residual < 1e-8);
        CHECK(conjugate_closed(cloud.roots, 1e-9));
    }

    auto radius2 = build_sequence({}, {}, {2}, {1}, 2);
    for (const auto& cloud : limit_experiment(radius2, {2.0}, 6))
        CHECK(cloud.radius == 2.0);

    CHECK_THROWS_AS(limit_experiment(build_sequence({}, {}, {1}, {1}, 2), {1.0}, 3), std::invalid_argument);
}

TEST_CASE("deviation ignores roots near the origin")
{
    CHECK(circle_deviation({0.0, 0.01, Complex(0, 1.5)}, 1.0) == doctest::Approx(0.5));
    CHECK(circle_deviation({0.04}, 1.0) == 0.0);
}

TEST_CASE("csv output")
{
    RootCloud cloud;
    cloud.k = 3;
    cloud.radius = 1.0;
    cloud.roots = {Complex(0.5, -0.25)};
    cloud.deviation = 0.125;
    std::ostringstream out;
    write_csv(out, {cloud});
    std::string first;
    std::istringstream in(out.str());
    std::getline(in, first);
    CHECK(first == "k,root_index,re,im,modulus,deviation");
    std::string row;
    std::getline(in, row);
    CHECK(row.rfind("3,0,0.5,-0.25,", 0) == 0);
    CHECK(row.size() > std::string("3,0,0.5,-0.25,").size());
}
