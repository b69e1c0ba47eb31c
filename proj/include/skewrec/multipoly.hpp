#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewrec/partition.hpp"

namespace skewrec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of up to kMaxVars variables, each exponent below 2^16.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const IntVector& exps);

    int operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, int e);
    int degree() const noexcept;
    IntVector to_vector(std::size_t nvars) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& other) const noexcept;
    /// a / b; requires b to divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Plain lexicographic order on the exponent array.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::array<std::uint16_t, kMaxVars> exps_{};
};

/// Graded lexicographic order: total degree first, then lex with x1 > x2 > ...
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

struct Term {
    Monomial mono;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the integers. Terms are kept in
/// strictly decreasing graded lexicographic order with no zero coefficients.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars = 1);

    static MultiPoly constant(std::size_t nvars, const Integer& c);
    static MultiPoly monomial(const IntVector& exps, const Integer& c = 1);
    static MultiPoly monomial(std::size_t nvars, const Monomial& m, const Integer& c = 1);
    static MultiPoly variable(std::size_t nvars, std::size_t i);
    /// Builds a polynomial from terms in any order, combining repeats.
    static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const Monomial& m) const;
    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    int degree_in(std::size_t var) const noexcept;
    bool is_homogeneous() const noexcept;
    /// Sum of absolute values of the coefficients.
    Integer l1_norm() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Integer& c);

    MultiPoly operator-() const;
    MultiPoly times(const Monomial& m, const Integer& c = 1) const;
    /// Exact division by a monomial that divides every term.
    MultiPoly divided_by(const Monomial& m) const;

    /// Applies x_i -> x_{perm[i]}.
    MultiPoly permuted(std::span<const std::size_t> perm) const;
    MultiPoly swapped(std::size_t i, std::size_t j) const;
    /// Substitutes x_i -> x_i^k for every variable.
    MultiPoly power_substituted(int k) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void require_same_ring(const MultiPoly& other) const;

    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// sum_i a[i] * b[i], accumulated without materialising the products.
MultiPoly dot(std::span<const MultiPoly> a, std::span<const MultiPoly> b);

MultiPoly pow(const MultiPoly& p, int e);

Integer eval(const MultiPoly& p, std::span<const Integer> point);
Rational eval(const MultiPoly& p, std::span<const Rational> point);
std::complex<double> eval(const MultiPoly& p, std::span<const std::complex<double>> point);
/// Evaluation modulo a prime p < 2^63.
std::uint64_t eval_mod(const MultiPoly& poly, std::span<const std::uint64_t> point, std::uint64_t p);

/// Human-readable form, e.g. "x1^2*x2+2*x1*x2*x3". Variables are named
/// prefix + index (1-based).
std::string to_string(const MultiPoly& p, const std::string& prefix = "x");

}  // namespace skewrec
