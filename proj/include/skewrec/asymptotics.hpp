#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "skewrec/recurrence.hpp"

namespace skewrec {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients, coeffs[j] for z^j.
struct ComplexPoly {
    std::vector<Complex> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    Complex operator()(Complex z) const;
    /// sum_j |c_j| |z|^j, the scale used for relative residuals.
    double magnitude_at(double r) const;
};

/// term(k) as a polynomial in x1 with x2..xn set to xi. Powers of x1 are
/// collected exactly first; each coefficient is rounded once. Throws
/// std::invalid_argument unless the xi share one modulus (within 1e-12),
/// std::domain_error when the specialization vanishes identically.
ComplexPoly specialize(const SchurSequence& seq, int k, const std::vector<Complex>& xi);

struct RootResult {
    std::vector<Complex> roots;      ///< with multiplicity
    std::vector<double> residuals;   ///< |p(z)| / magnitude_at(|z|)
    int iterations = 0;
    bool converged = true;
};

/// Aberth-Ehrlich simultaneous iteration started from equally spaced points
/// on the Cauchy-bound circle. Zero low coefficients are split off as exact
/// roots at the origin. A cluster of m approximations is refined by Newton on
/// the (m-1)-th derivative and kept when p and its lower derivatives vanish.
RootResult find_roots(const ComplexPoly& p, int max_iterations = 10000);

struct RootCloud {
    int k = 0;
    std::vector<Complex> roots;
    double radius = 0.0;
    double deviation = 0.0;     ///< max | |z| - R | over roots with |z| >= 0.05 R
    double max_residual = 0.0;
    bool converged = true;
};

double circle_deviation(const std::vector<Complex>& roots, double radius);

/// Root clouds of term(k) specialized at xi for k = max(1, shift) .. kmax.
/// Requires mu != nu.
std::vector<RootCloud> limit_experiment(const SchurSequence& seq, const std::vector<Complex>& xi, int kmax);

/// CSV rows "k,root_index,re,im,modulus,deviation" with a header line.
void write_csv(std::ostream& out, const std::vector<RootCloud>& clouds);

}  // namespace skewrec
