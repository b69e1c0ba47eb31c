#include "skewrec/recurrence.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <random>
#include <stdexcept>

#include "skewrec/kostka.hpp"
#include "skewrec/schur.hpp"

namespace skewrec {

// ---------------------------------------------------------------- CharPoly

CharPoly::CharPoly(std::size_t nvars) : nvars_(nvars), coeffs_{MultiPoly::constant(nvars, 1)} {}

CharPoly CharPoly::from_coeffs(std::vector<MultiPoly> coeffs)
{
    if (coeffs.empty() || coeffs.back() != MultiPoly::constant(coeffs.back().nvars(), 1))
        throw std::invalid_argument("CharPoly: leading coefficient must be 1");
    CharPoly out(coeffs.back().nvars());
    for (const auto& c : coeffs)
        if (c.nvars() != out.nvars_)
            throw std::invalid_argument("CharPoly: coefficients live in different rings");
    out.coeffs_ = std::move(coeffs);
    return out;
}

CharPoly CharPoly::from_roots(std::size_t nvars, const std::vector<Monomial>& roots)
{
    CharPoly out(nvars);
    auto& c = out.coeffs_;
    for (const auto& m : roots) {
        // (t - m) c: new[j] = c[j-1] - m c[j], walking down so c[j-1] is still old.
        c.push_back(c.back());
        for (std::size_t j = c.size() - 2; j > 0; --j)
            c[j] = c[j - 1] - c[j].times(m);
        c[0] = c[0].times(m, -1);
    }
    return out;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("CharPoly product: different rings");
    std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly(a.nvars_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return CharPoly::from_coeffs(std::move(c));
}

PolyDivision divide(const CharPoly& dividend, const CharPoly& divisor)
{
    if (dividend.nvars() != divisor.nvars())
        throw std::invalid_argument("divide: different rings");
    const int da = dividend.degree();
    const int db = divisor.degree();
    PolyDivision out;
    std::vector<MultiPoly> rem = dividend.coeffs();
    if (da >= db) {
        out.quotient.assign(da - db + 1, MultiPoly(dividend.nvars()));
        for (int i = da - db; i >= 0; --i) {
            MultiPoly q = rem[i + db];
            if (q.is_zero())
                continue;
            for (int j = 0; j <= db; ++j)
                rem[i + j] -= q * divisor[j];
            out.quotient[i] = std::move(q);
        }
        rem.resize(db);
    }
    while (!rem.empty() && rem.back().is_zero())
        rem.pop_back();
    out.remainder = std::move(rem);
    return out;
}

bool divides(const CharPoly& divisor, const CharPoly& dividend)
{
    return divisor.degree() <= dividend.degree() && divide(dividend, divisor).remainder.empty();
}

std::string to_string(const CharPoly& chi)
{
    std::string out;
    const MultiPoly one = MultiPoly::constant(chi.nvars(), 1);
    for (int j = chi.degree(); j >= 0; --j) {
        const MultiPoly& c = chi[j];
        if (c.is_zero())
            continue;
        std::string power = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
        std::string piece;
        if (j > 0 && c == one) {
            piece = power;
        } else if (j > 0 && c == -one) {
            piece = "-" + power;
        } else {
            const bool negative = std::all_of(c.terms().begin(), c.terms().end(),
                                              [](const Term& t) { return t.coeff < 0; });
            std::string cs = to_string(c);
            if (j == 0)
                piece = cs;
            else if (c.size() == 1)
                piece = cs + "*" + power;
            else if (negative)
                piece = "-(" + to_string(-c) + ")*" + power;
            else
                piece = "(" + cs + ")*" + power;
        }
        if (!out.empty() && piece.front() != '-')
            out += "+";
        out += piece;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- sequence

SchurSequence::SchurSequence(Family family) : family_(std::move(family))
{
    if (family_.n < 1 || static_cast<std::size_t>(family_.n) > kMaxVars)
        throw std::invalid_argument("number of variables must be in 1.." + std::to_string(kMaxVars));
    shift_ = first_valid_stretch(family_.kappa, family_.lambda, family_.mu, family_.nu);
    kappa0_ = add(family_.kappa, scale(shift_, family_.mu));
    lambda0_ = add(family_.lambda, scale(shift_, family_.nu));
    start_ = stabilization_index(family_.kappa, family_.lambda, family_.mu, family_.nu);
    // With no tableau of shape mu/nu the recurrence says the term itself
    // vanishes, which needs mu/nu inside the shape at that same index.
    if (count_tableaux(SkewShape(family_.mu, family_.nu), family_.n) == 0)
        ++start_;
}

SkewShape SchurSequence::shape(int k) const
{
    if (k < shift_)
        throw std::invalid_argument("index " + std::to_string(k) + " is before the first valid shape (k = " +
                                    std::to_string(shift_) + ")");
    return stretched_shape(family_.kappa, family_.lambda, family_.mu, family_.nu, k);
}

const MultiPoly& SchurSequence::term(int k) const
{
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(k);
        if (it != cache_.end())
            return it->second;
    }
    MultiPoly p = skew_schur(shape(k), family_.n);
    std::lock_guard lock(mutex_);
    return cache_.emplace(k, std::move(p)).first->second;
}

void SchurSequence::prefetch(int from, int to, Execution exec) const
{
    std::vector<int> missing;
    {
        std::lock_guard lock(mutex_);
        for (int k = to; k >= from; --k)
            if (!cache_.count(k))
                missing.push_back(k);
    }
    for (int k : missing)
        shape(k);  // validates before entering the parallel region
    std::vector<MultiPoly> computed(missing.size());
    const long long count = static_cast<long long>(missing.size());
    // Largest shapes first; each term is built serially so k is the unit of work.
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
    for (long long i = 0; i < count; ++i)
        computed[i] = skew_schur(shape(missing[i]), family_.n, Execution::serial);
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < missing.size(); ++i)
        cache_.emplace(missing[i], std::move(computed[i]));
}

SchurSequence build_sequence(const Partition& kappa, const Partition& lambda, const Partition& mu,
                             const Partition& nu, int n)
{
    return SchurSequence(Family{kappa, lambda, mu, nu, n});
}

std::vector<Monomial> tableau_roots(const Partition& mu, const Partition& nu, int n)
{
    std::vector<Monomial> roots;
    for (const auto& t : enumerate(SkewShape(mu, nu), n))
        roots.emplace_back(weight(t));
    return roots;
}

CharPoly char_poly(const Partition& mu, const Partition& nu, int n)
{
    return CharPoly::from_roots(static_cast<std::size_t>(n), tableau_roots(mu, nu, n));
}

VerifyResult verify_recurrence(const SchurSequence& seq, const CharPoly& chi, int from, int count,
                               Execution exec)
{
    if (count < 1)
        throw std::invalid_argument("verify_recurrence: count must be positive");
    if (chi.nvars() != static_cast<std::size_t>(seq.n()))
        throw std::invalid_argument("verify_recurrence: polynomial and sequence use different variable counts");
    const int d = chi.degree();
    seq.prefetch(from, from + count - 1 + d, exec);

    VerifyResult out;
    out.first_index = from;
    out.count = count;
    out.residual = MultiPoly(chi.nvars());
    std::atomic<int> first_bad{INT_MAX};
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
    for (int i = 0; i < count; ++i) {
        const int k = from + i;
        if (k > first_bad.load())
            continue;
        std::vector<MultiPoly> window;
        window.reserve(d + 1);
        for (int j = 0; j <= d; ++j)
            window.push_back(seq.term(k + j));
        if (!dot(chi.coeffs(), window).is_zero()) {
            int cur = first_bad.load();
            while (k < cur && !first_bad.compare_exchange_weak(cur, k)) {
            }
        }
    }
    if (first_bad.load() != INT_MAX) {
        const int k = first_bad.load();
        std::vector<MultiPoly> window;
        for (int j = 0; j <= d; ++j)
            window.push_back(seq.term(k + j));
        out.ok = false;
        out.failing_index = k;
        out.residual = dot(chi.coeffs(), window);
    }
    return out;
}

// ------------------------------------------------------ Berlekamp-Massey

std::vector<Rational> berlekamp_massey(const std::vector<Rational>& s)
{
    // Connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L.
    std::vector<Rational> c{1};
    std::vector<Rational> b{1};
    int length = 0;
    int shift = 1;
    Rational last_discrepancy = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Rational d = s[i];
        for (int j = 1; j <= length; ++j)
            d += c[j] * s[i - j];
        if (d == 0) {
            ++shift;
            continue;
        }
        Rational factor = d / last_discrepancy;
        std::vector<Rational> t = c;
        if (c.size() < b.size() + shift)
            c.resize(b.size() + shift, 0);
        for (std::size_t j = 0; j < b.size(); ++j)
            c[j + shift] -= factor * b[j];
        if (2 * length <= static_cast<int>(i)) {
            length = static_cast<int>(i) + 1 - length;
            b = std::move(t);
            last_discrepancy = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    c.resize(length + 1, 0);
    // t^L + c_1 t^(L-1) + ... + c_L, ascending.
    return std::vector<Rational>(c.rbegin(), c.rend());
}

// ------------------------------------------------------- minimal polynomial

bool permutation_invariant(const std::vector<Monomial>& roots, std::size_t nvars)
{
    std::vector<Monomial> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < nvars; ++i) {
        std::vector<Monomial> moved;
        moved.reserve(roots.size());
        for (const auto& m : roots) {
            Monomial s = m;
            s.set(i, m[i + 1]);
            s.set(i + 1, m[i]);
            moved.push_back(s);
        }
        std::sort(moved.begin(), moved.end());
        if (moved != sorted)
            return false;
    }
    return true;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t monomial_mod(const Monomial& m, const std::vector<std::uint64_t>& point)
{
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < point.size(); ++i)
        for (int e = 0; e < m[i]; ++e)
            v = mul_mod(v, point[i]);
    return v;
}

// Sequence values and root values at one point modulo kPrime.
struct ModularImage {
    std::vector<std::uint64_t> terms;  ///< terms[i] = s_{start + i}
    std::map<Monomial, std::uint64_t> roots;
};

// A nonzero value certifies that the candidate product does not annihilate.
bool modular_rejects(const ModularImage& img, const std::map<Monomial, int>& mult, int checks)
{
    std::vector<std::uint64_t> c{1};
    for (const auto& [m, e] : mult) {
        const std::uint64_t v = img.roots.at(m);
        for (int rep = 0; rep < e; ++rep) {
            c.push_back(c.back());
            for (std::size_t j = c.size() - 2; j > 0; --j)
                c[j] = (c[j - 1] + kPrime - mul_mod(v, c[j])) % kPrime;
            c[0] = (kPrime - mul_mod(v, c[0])) % kPrime;
        }
    }
    for (int k = 0; k < checks; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            acc = (acc + mul_mod(c[j], img.terms[k + j])) % kPrime;
        if (acc != 0)
            return true;
    }
    return false;
}

std::vector<Monomial> expand(const std::map<Monomial, int>& mult)
{
    std::vector<Monomial> out;
    for (const auto& [m, e] : mult)
        out.insert(out.end(), e, m);
    // canonical order: decreasing grlex
    std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
    return out;
}

}  // namespace

MinimalReport minimal_char_poly(const SchurSequence& seq, const std::vector<Monomial>& chi_roots,
                                std::uint64_t seed, int specializations)
{
    const std::size_t n = static_cast<std::size_t>(seq.n());
    const int D = static_cast<int>(chi_roots.size());
    const int r = seq.start();
    MinimalReport rep;
    rep.seed = seed;
    rep.poly = CharPoly(n);

    std::map<Monomial, int> full;
    for (const auto& m : chi_roots)
        ++full[m];
    // Greedy order: canonical (decreasing grlex) over the distinct roots.
    std::vector<Monomial> order;
    for (const auto& [m, e] : full)
        order.push_back(m);
    std::sort(order.begin(), order.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });

    if (D > 0)
        seq.prefetch(r, r + 2 * D - 1);

    std::mt19937_64 rng(seed);
    auto draw_images = [&](int count) {
        std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
        std::vector<ModularImage> images(count);
        for (auto& img : images) {
            std::vector<std::uint64_t> point(n);
            for (auto& v : point)
                v = dist(rng);
            for (int i = 0; i < 2 * D; ++i)
                img.terms.push_back(eval_mod(seq.term(r + i), point, kPrime));
            for (const auto& m : order)
                img.roots[m] = monomial_mod(m, point);
        }
        return images;
    };
    auto exact_annihilates = [&](const std::map<Monomial, int>& mult) {
        return verify_recurrence(seq, CharPoly::from_roots(n, expand(mult)), r, std::max(D, 1)).ok;
    };

    std::map<Monomial, int> current = full;
    bool certified = D == 0;
    for (int attempt = 1; attempt <= 4 && !certified; ++attempt) {
        rep.certification_attempts = attempt;
        current = full;
        const bool exact_only = attempt == 4;
        auto images = exact_only ? std::vector<ModularImage>{} : draw_images(2);
        auto annihilates = [&](const std::map<Monomial, int>& mult) {
            if (exact_only)
                return exact_annihilates(mult);
            for (const auto& img : images)
                if (modular_rejects(img, mult, D))
                    return false;
            return true;
        };
        for (const auto& m : order) {
            while (current[m] > 0) {
                auto candidate = current;
                if (--candidate[m] == 0)
                    candidate.erase(m);
                if (!annihilates(candidate))
                    break;
                current = std::move(candidate);
            }
        }
        for (auto it = current.begin(); it != current.end();)
            it = it->second == 0 ? current.erase(it) : std::next(it);
        certified = exact_only || exact_annihilates(current);
    }
    rep.exact_verified = certified;
    rep.roots = expand(current);
    rep.poly = CharPoly::from_roots(n, rep.roots);
    rep.permutation_invariant = permutation_invariant(rep.roots, n);

    // Scalar cross-check on integer points where distinct roots stay distinct.
    const int target = static_cast<int>(rep.roots.size());
    rep.scalar_agrees = true;
    for (int s = 0; s < specializations; ++s) {
        int got = -1;
        std::vector<Integer> point;
        for (int retry = 0; retry < 3 && got != target; ++retry) {
            for (int draw = 0;; ++draw) {
                std::uniform_int_distribution<int> dist(1, 7 + 4 * draw);
                point.assign(n, 0);
                for (auto& v : point)
                    v = dist(rng);
                std::vector<Integer> values;
                for (const auto& m : order) {
                    Integer v = 1;
                    for (std::size_t i = 0; i < n; ++i)
                        v *= boost::multiprecision::pow(point[i], m[i]);
                    values.push_back(v);
                }
                std::sort(values.begin(), values.end());
                if (std::adjacent_find(values.begin(), values.end()) == values.end())
                    break;
            }
            std::vector<Rational> scalars;
            for (int i = 0; i < 2 * D; ++i)
                scalars.emplace_back(eval(seq.term(r + i), std::span<const Integer>(point)));
            got = static_cast<int>(berlekamp_massey(scalars).size()) - 1;
        }
        rep.specializations.push_back(point);
        rep.scalar_degrees.push_back(got);
        rep.scalar_agrees = rep.scalar_agrees && got == target;
    }
    return rep;
}

// ------------------------------------------------------------- conjecture

std::vector<IntVector> conjectured_W(const Partition& mu, const Partition& nu, int n)
{
    if (!contains(mu, nu))
        throw std::invalid_argument("conjectured_W: mu does not contain nu");
    SkewShape shape(mu, nu);
    const IntVector target = sort_decreasing(subtract(mu, nu));
    std::vector<IntVector> out;
    std::vector<int> w(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            w[i] = left;
            IntVector v(w);
            if (kostka(shape, v) > 0 && dominates(sort_decreasing(v), target))
                out.push_back(v);
            return;
        }
        for (int x = left; x >= 0; --x) {
            w[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, shape.boxes());
    return out;
}

std::string verdict_text(const ConjectureReport& report)
{
    switch (report.verdict) {
    case Verdict::supported:
        return "SUPPORTED";
    case Verdict::refuted:
        return "REFUTED-AT(" + std::to_string(report.refuted_at.value_or(report.start)) + ")";
    case Verdict::inconclusive:
        break;
    }
    return "INCONCLUSIVE";
}

ConjectureReport conjecture_check(const Partition& kappa, const Partition& lambda, const Partition& mu,
                                  const Partition& nu, int n, int count, std::uint64_t seed)
{
    SchurSequence seq = build_sequence(kappa, lambda, mu, nu, n);
    ConjectureReport rep;
    rep.family = seq.family();
    rep.start = seq.start();
    rep.seed = seed;
    rep.W = conjectured_W(mu, nu, n);
    rep.residual = MultiPoly(n);

    auto roots = tableau_roots(mu, nu, n);
    rep.degree = static_cast<int>(roots.size());

    std::vector<Monomial> w_roots;
    for (const auto& w : rep.W)
        w_roots.emplace_back(w);
    CharPoly w_poly = CharPoly::from_roots(n, w_roots);
    auto check = verify_recurrence(seq, w_poly, rep.start, count);
    rep.verified_upto = rep.start + count - 1;
    rep.product_annihilates = check.ok;

    rep.minimal = minimal_char_poly(seq, roots, seed);
    rep.minimal_degree = rep.minimal.poly.degree();
    std::vector<Monomial> sorted_w = w_roots;
    std::vector<Monomial> sorted_min = rep.minimal.roots;
    std::sort(sorted_w.begin(), sorted_w.end());
    std::sort(sorted_min.begin(), sorted_min.end());
    rep.multiset_matches = sorted_w == sorted_min;

    if (!check.ok) {
        rep.verdict = Verdict::refuted;
        rep.refuted_at = check.failing_index;
        rep.reason = "does-not-annihilate";
        rep.residual = check.residual;
    } else if (!rep.minimal.exact_verified || !rep.minimal.scalar_agrees) {
        rep.verdict = Verdict::inconclusive;
        rep.reason = "minimal-polynomial-not-certified";
    } else if (!rep.multiset_matches) {
        rep.verdict = Verdict::refuted;
        rep.refuted_at = rep.start;
        rep.reason = "not-minimal";
    } else {
        rep.verdict = Verdict::supported;
    }
    return rep;
}

// ----------------------------------------------------------- polynomiality

PolynomialityReport polynomiality_check(const Partition& mu, const Partition& nu, int n, int kmax)
{
    if (!contains(mu, nu))
        throw std::invalid_argument("polynomiality_check: mu does not contain nu");
    if (kmax < 1)
        throw std::invalid_argument("polynomiality_check: kmax must be positive");
    PolynomialityReport rep;
    rep.counts.resize(kmax + 1);
    const std::vector<Integer> ones(n, 1);
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = kmax; k >= 0; --k)
        rep.counts[k] = eval(skew_schur(SkewShape(scale(k, mu), scale(k, nu)), n, Execution::serial),
                             std::span<const Integer>(ones));

    rep.differences.push_back(rep.counts);
    while (rep.differences.back().size() > 1) {
        const auto& prev = rep.differences.back();
        if (std::all_of(prev.begin(), prev.end(), [](const Integer& v) { return v == 0; }))
            break;
        std::vector<Integer> next;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i)
            next.push_back(prev[i + 1] - prev[i]);
        rep.differences.push_back(std::move(next));
    }
    // degree D: the (D+1)-th differences vanish; at least two zeros are needed.
    for (std::size_t order = 0; order < rep.differences.size(); ++order) {
        const auto& row = rep.differences[order];
        if (row.size() >= 2 && std::all_of(row.begin(), row.end(), [](const Integer& v) { return v == 0; })) {
            rep.degree = static_cast<int>(order) - 1;
            break;
        }
    }
    if (!rep.degree)
        return rep;
    rep.conclusive = true;
    // Newton form sum_j Delta^j c_0 * binom(k, j), expanded into powers of k.
    const int degree = std::max(*rep.degree, 0);
    rep.polynomial.assign(degree + 1, 0);
    std::vector<Rational> basis{1};  // coefficients of binom(k, j)
    for (int j = 0; j <= degree && *rep.degree >= 0; ++j) {
        if (j > 0) {
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i] / j;
                next[i] -= basis[i] * (j - 1) / j;
            }
            basis = std::move(next);
        }
        const Integer& delta = rep.differences[j][0];
        for (std::size_t i = 0; i < basis.size(); ++i)
            rep.polynomial[i] += basis[i] * Rational(delta);
    }
    if (*rep.degree < 0)
        rep.polynomial.clear();
    return rep;
}

}  // namespace skewrec
