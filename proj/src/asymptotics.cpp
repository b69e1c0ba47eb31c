#include "skewrec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace skewrec {

Complex ComplexPoly::operator()(Complex z) const
{
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

double ComplexPoly::magnitude_at(double r) const
{
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * r + std::abs(*it);
    return acc;
}

namespace {

constexpr int kMaxCoefficients = 5000;

struct Gaussian {
    Integer re = 0;
    Integer im = 0;
};

Gaussian operator*(const Gaussian& a, const Gaussian& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool is_gaussian_integer(Complex z)
{
    return z.real() == std::round(z.real()) && z.imag() == std::round(z.imag()) && std::abs(z.real()) < 1e15 &&
           std::abs(z.imag()) < 1e15;
}

double to_double(const Integer& v)
{
    return v.convert_to<double>();
}

}  // namespace

ComplexPoly specialize(const SchurSequence& seq, int k, const std::vector<Complex>& xi)
{
    const int n = seq.n();
    if (static_cast<int>(xi.size()) != n - 1)
        throw std::invalid_argument("specialize: need " + std::to_string(n - 1) + " values for x2..x" +
                                    std::to_string(n) + ", got " + std::to_string(xi.size()));
    for (const auto& z : xi)
        if (std::abs(std::abs(z) - std::abs(xi.front())) > 1e-12)
            throw std::invalid_argument("specialize: the fixed values must share one modulus");

    const MultiPoly& p = seq.term(k);
    const int degree = p.degree_in(0);
    if (degree < 0)
        throw std::domain_error("specialize: term " + std::to_string(k) + " is identically zero");
    if (degree + 1 > kMaxCoefficients)
        throw std::domain_error("specialize: degree " + std::to_string(degree) + " exceeds the " +
                                std::to_string(kMaxCoefficients) + "-coefficient cap");

    ComplexPoly out;
    out.coeffs.assign(degree + 1, 0.0);
    const bool exact = std::all_of(xi.begin(), xi.end(), is_gaussian_integer);
    if (exact) {
        // Powers of each fixed value, then exact sums per power of x1.
        std::vector<std::vector<Gaussian>> powers(xi.size());
        for (std::size_t i = 0; i < xi.size(); ++i) {
            powers[i].push_back({1, 0});
            Gaussian base{static_cast<long long>(xi[i].real()), static_cast<long long>(xi[i].imag())};
            for (int e = 1; e <= p.degree_in(i + 1); ++e)
                powers[i].push_back(powers[i].back() * base);
        }
        std::vector<Gaussian> sums(degree + 1);
        for (const auto& t : p.terms()) {
            Gaussian v{t.coeff, 0};
            for (std::size_t i = 0; i < xi.size(); ++i)
                v = v * powers[i][t.mono[i + 1]];
            auto& s = sums[t.mono[0]];
            s.re += v.re;
            s.im += v.im;
        }
        for (int e = 0; e <= degree; ++e)
            out.coeffs[e] = Complex(to_double(sums[e].re), to_double(sums[e].im));
    } else {
        for (const auto& t : p.terms()) {
            Complex v = to_double(t.coeff);
            for (std::size_t i = 0; i < xi.size(); ++i)
                v *= std::pow(xi[i], t.mono[i + 1]);
            out.coeffs[t.mono[0]] += v;
        }
    }
    double scale = 0.0;
    for (const auto& c : out.coeffs)
        scale = std::max(scale, std::abs(c));
    if (scale == 0.0)
        throw std::domain_error("specialize: term " + std::to_string(k) + " vanishes at the chosen point");
    while (out.coeffs.size() > 1 && std::abs(out.coeffs.back()) < 1e-14 * scale)
        out.coeffs.pop_back();
    return out;
}

namespace {

// p(z) and p'(z) by Horner.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, Complex z)
{
    Complex p = c.back();
    Complex dp = 0.0;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[j];
    }
    return {p, dp};
}

std::vector<Complex> derivative(const std::vector<Complex>& c)
{
    std::vector<Complex> d;
    for (std::size_t j = 1; j < c.size(); ++j)
        d.push_back(c[j] * static_cast<double>(j));
    return d;
}

double relative_residual(const ComplexPoly& p, Complex z)
{
    double scale = p.magnitude_at(std::abs(z));
    return scale == 0.0 ? 0.0 : std::abs(p(z)) / scale;
}

// A tight group of m approximations to one m-fold root stalls around it at
// distance ~eps^(1/m). The (m-1)-th derivative has a simple root there, so
// Newton on it from the group mean recovers the root; the result is kept
// only if p and its first m-1 derivatives all vanish at it.
void polish_clusters(const ComplexPoly& p, std::vector<Complex>& roots)
{
    const std::size_t N = roots.size();
    std::vector<std::size_t> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-3 * std::max(1.0, std::abs(roots[i])))
                parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < N; ++i)
        clusters[find(i)].push_back(i);
    for (const auto& [root, members] : clusters) {
        const std::size_t m = members.size();
        if (m < 2 || static_cast<int>(m) > p.degree())
            continue;
        Complex z = 0.0;
        for (auto i : members)
            z += roots[i];
        z /= static_cast<double>(m);

        std::vector<ComplexPoly> derivs{p};
        for (std::size_t order = 1; order < m; ++order)
            derivs.push_back(ComplexPoly{derivative(derivs.back().coeffs)});
        const auto& target = derivs.back().coeffs;
        for (int it = 0; it < 50; ++it) {
            auto [v, dv] = eval_with_derivative(target, z);
            if (dv == 0.0)
                break;
            Complex step = v / dv;
            z -= step;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z)))
                break;
        }
        bool multiple = std::isfinite(z.real()) && std::isfinite(z.imag());
        for (std::size_t order = 0; order < m && multiple; ++order)
            multiple = relative_residual(derivs[order], z) < 1e-8;
        if (multiple)
            for (auto i : members)
                roots[i] = z;
    }
}

}  // namespace

RootResult find_roots(const ComplexPoly& p, int max_iterations)
{
    std::vector<Complex> c = p.coeffs;
    while (!c.empty() && c.back() == 0.0)
        c.pop_back();
    if (c.size() < 2)
        throw std::invalid_argument("find_roots: polynomial has no roots (degree < 1)");

    RootResult out;
    std::size_t zeros = 0;
    while (c[zeros] == 0.0)
        ++zeros;
    out.roots.assign(zeros, 0.0);
    std::vector<Complex> q(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    const Complex lead = q.back();
    for (auto& x : q)
        x /= lead;
    const int N = static_cast<int>(q.size()) - 1;

    std::vector<Complex> z(N);
    if (N == 1) {
        z[0] = -q[0];
    } else if (N > 1) {
        double bound = 0.0;
        for (int j = 0; j < N; ++j)
            bound = std::max(bound, std::abs(q[j]));
        bound += 1.0;
        for (int j = 0; j < N; ++j)
            z[j] = std::polar(bound, (2.0 * j + 1.0) * M_PI / N);

        const double eps = std::numeric_limits<double>::epsilon();
        std::vector<char> done(N, 0);
        int it = 0;
        for (; it < max_iterations; ++it) {
            bool all_done = true;
            for (int j = 0; j < N; ++j) {
                if (done[j])
                    continue;
                auto [pv, dpv] = eval_with_derivative(q, z[j]);
                double scale = 0.0;
                for (auto ci = q.rbegin(); ci != q.rend(); ++ci)
                    scale = scale * std::abs(z[j]) + std::abs(*ci);
                if (std::abs(pv) <= 4.0 * eps * scale) {
                    done[j] = 1;
                    continue;
                }
                Complex ratio = pv / dpv;
                Complex repel = 0.0;
                for (int m = 0; m < N; ++m)
                    if (m != j)
                        repel += 1.0 / (z[j] - z[m]);
                Complex step = ratio / (1.0 - ratio * repel);
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                    step = ratio;
                z[j] -= step;
                if (std::abs(step) <= 2.0 * eps * std::abs(z[j]))
                    done[j] = 1;
                else
                    all_done = false;
            }
            if (all_done)
                break;
        }
        out.iterations = it;
        out.converged = it < max_iterations;
    }
    out.roots.insert(out.roots.end(), z.begin(), z.end());
    ComplexPoly trimmed{c};
    polish_clusters(trimmed, out.roots);
    for (const auto& r : out.roots) {
        double res = relative_residual(trimmed, r);
        out.residuals.push_back(res);
        out.converged = out.converged && res < 1e-8;
    }
    return out;
}

double circle_deviation(const std::vector<Complex>& roots, double radius)
{
    double dev = 0.0;
    for (const auto& z : roots)
        if (std::abs(z) >= 0.05 * radius)
            dev = std::max(dev, std::abs(std::abs(z) - radius));
    return dev;
}

std::vector<RootCloud> limit_experiment(const SchurSequence& seq, const std::vector<Complex>& xi, int kmax)
{
    if (seq.family().mu == seq.family().nu)
        throw std::invalid_argument("limit_experiment: mu and nu must differ");
    if (xi.empty())
        throw std::invalid_argument("limit_experiment: needs at least two variables");
    const double radius = std::abs(xi.front());
    const int first = std::max(1, seq.shift());
    if (kmax < first)
        return {};
    seq.prefetch(first, kmax);
    std::vector<RootCloud> clouds(kmax - first + 1);
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = kmax; k >= first; --k) {
        RootCloud& cloud = clouds[k - first];
        cloud.k = k;
        cloud.radius = radius;
        auto poly = specialize(seq, k, xi);
        if (poly.degree() < 1)
            continue;
        auto found = find_roots(poly);
        cloud.roots = std::move(found.roots);
        cloud.converged = found.converged;
        for (double r : found.residuals)
            cloud.max_residual = std::max(cloud.max_residual, r);
        cloud.deviation = circle_deviation(cloud.roots, radius);
    }
    return clouds;
}

void write_csv(std::ostream& out, const std::vector<RootCloud>& clouds)
{
    out << "k,root_index,re,im,modulus,deviation\n";
    char buf[256];
    for (const auto& cloud : clouds)
        for (std::size_t i = 0; i < cloud.roots.size(); ++i) {
            const auto& z = cloud.roots[i];
            // + 0.0 folds -0 into 0
            std::snprintf(buf, sizeof buf, "%d,%zu,%.17g,%.17g,%.17g,%.17g\n", cloud.k, i, z.real() + 0.0,
                          z.imag() + 0.0, std::abs(z), cloud.deviation);
            out << buf;
        }
}

}  // namespace skewrec
