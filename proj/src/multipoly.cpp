#include "skewrec/multipoly.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewrec {

namespace {

constexpr int kMaxExponent = std::numeric_limits<std::uint16_t>::max();

bool grlex_greater(const Term& a, const Term& b) noexcept
{
    return grlex_less(b.mono, a.mono);
}

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_less(b[j].mono, a[i].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_less(a[i].mono, b[j].mono)) {
            out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
            ++j;
        } else {
            Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
            if (!c.is_zero())
                out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<Term> merge_runs(std::vector<std::vector<Term>> runs)
{
    if (runs.empty())
        return {};
    while (runs.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((runs.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < runs.size(); i += 2)
            next.push_back(merge_add(runs[i], runs[i + 1], false));
        if (runs.size() % 2)
            next.push_back(std::move(runs.back()));
        runs = std::move(next);
    }
    return std::move(runs.front());
}

Integer from_i128(__int128 v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Integer(static_cast<long long>(v));
    bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer out = Integer(static_cast<unsigned long long>(mag >> 64));
    out <<= 64;
    out += Integer(static_cast<unsigned long long>(mag & ~0ULL));
    return neg ? Integer(-out) : out;
}

bool fits_i64(const Integer& c)
{
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    return c >= lo && c <= hi;
}

struct Extent {
    std::array<int, kMaxVars> lo{};
    std::array<int, kMaxVars> hi{};
    bool homogeneous = true;
    int degree = -1;
    double l1 = 0.0;
    bool small = true;
};

Extent extent_of(const MultiPoly& p)
{
    Extent e;
    e.lo.fill(INT_MAX);
    e.hi.fill(-1);
    for (const auto& t : p.terms()) {
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            e.lo[v] = std::min(e.lo[v], t.mono[v]);
            e.hi[v] = std::max(e.hi[v], t.mono[v]);
        }
        int d = t.mono.degree();
        if (e.degree < 0)
            e.degree = d;
        else if (d != e.degree)
            e.homogeneous = false;
        if (e.small && !fits_i64(t.coeff))
            e.small = false;
        e.l1 += std::fabs(t.coeff.convert_to<double>());
    }
    return e;
}

struct ProductPlan {
    std::size_t nvars = 0;
    std::size_t index_vars = 0;
    std::array<int, kMaxVars> lo{};
    std::array<long long, kMaxVars> stride{};
    std::array<long long, kMaxVars> box{};
    long long cells = 1;
    bool homogeneous = true;
    int degree = -1;
    bool small = true;
    double work = 0.0;
};

MultiPoly sparse_product(const MultiPoly& a, const MultiPoly& b)
{
    const MultiPoly& s = a.size() <= b.size() ? a : b;
    const MultiPoly& l = a.size() <= b.size() ? b : a;
    std::vector<std::vector<Term>> runs;
    runs.reserve(s.size());
    for (const auto& t : s.terms())
        runs.push_back(l.times(t.mono, t.coeff).terms());
    return MultiPoly::from_terms(a.nvars(), merge_runs(std::move(runs)));
}

long long linear_index(const Monomial& m, const ProductPlan& plan)
{
    long long idx = 0;
    for (std::size_t v = 0; v < plan.index_vars; ++v)
        idx += static_cast<long long>(m[v]) * plan.stride[v];
    return idx;
}

template <class Acc>
std::vector<Term> extract(const std::vector<Acc>& acc, const ProductPlan& plan, long long base)
{
    std::vector<Term> out;
    auto decode = [&](long long idx) {
        Monomial m;
        int partial = 0;
        long long rest = idx;
        for (std::size_t v = 0; v < plan.index_vars; ++v) {
            int e = static_cast<int>(rest / plan.stride[v]) + plan.lo[v];
            rest %= plan.stride[v];
            m.set(v, e);
            partial += e;
        }
        if (plan.homogeneous && plan.nvars > 0)
            m.set(plan.nvars - 1, plan.degree - partial);
        return m;
    };
    for (long long cell = plan.cells - 1; cell >= 0; --cell) {
        if (acc[cell] == 0)
            continue;
        Monomial m = decode(cell);
        (void)base;
        if constexpr (std::is_same_v<Acc, __int128>)
            out.push_back({m, from_i128(acc[cell])});
        else
            out.push_back({m, acc[cell]});
    }
    if (!plan.homogeneous)
        std::sort(out.begin(), out.end(), grlex_greater);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const IntVector& exps)
{
    if (exps.size() > kMaxVars)
        throw std::invalid_argument("monomial has more than " + std::to_string(kMaxVars) + " variables");
    for (std::size_t i = 0; i < exps.size(); ++i)
        set(i, exps[i]);
}

void Monomial::set(std::size_t i, int e)
{
    if (e < 0 || e > kMaxExponent)
        throw std::overflow_error("exponent " + std::to_string(e) + " out of range");
    exps_[i] = static_cast<std::uint16_t>(e);
}

int Monomial::degree() const noexcept
{
    int d = 0;
    for (auto e : exps_)
        d += e;
    return d;
}

IntVector Monomial::to_vector(std::size_t nvars) const
{
    std::vector<int> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        v[i] = exps_[i];
    return IntVector(std::move(v));
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        int e = a.exps_[i] + b.exps_[i];
        if (e > kMaxExponent)
            throw std::overflow_error("monomial exponent overflow");
        out.exps_[i] = static_cast<std::uint16_t>(e);
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const noexcept
{
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    if (!b.divides(a))
        throw std::invalid_argument("monomial division is not exact");
    Monomial out;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        out.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept
{
    int da = a.degree();
    int db = b.degree();
    if (da != db)
        return da < db;
    return a < b;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars)
{
    if (nvars == 0 || nvars > kMaxVars)
        throw std::invalid_argument("polynomials support 1.." + std::to_string(kMaxVars) + " variables, got " +
                                    std::to_string(nvars));
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Integer& c)
{
    MultiPoly p(nvars);
    if (!c.is_zero())
        p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::monomial(const IntVector& exps, const Integer& c)
{
    return monomial(exps.size(), Monomial(exps), c);
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const Monomial& m, const Integer& c)
{
    MultiPoly p(nvars);
    for (std::size_t i = nvars; i < kMaxVars; ++i)
        if (m[i] != 0)
            throw std::invalid_argument("monomial uses a variable beyond nvars");
    if (!c.is_zero())
        p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i)
{
    if (i >= nvars)
        throw std::out_of_range("variable index out of range");
    Monomial m;
    m.set(i, 1);
    return monomial(nvars, m);
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms)
{
    MultiPoly p(nvars);
    std::sort(terms.begin(), terms.end(), grlex_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coeff.is_zero())
            p.terms_.pop_back();
    }
    return p;
}

Integer MultiPoly::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_less(key, t.mono); });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return 0;
}

int MultiPoly::total_degree() const noexcept
{
    return terms_.empty() ? -1 : terms_.front().mono.degree();
}

int MultiPoly::degree_in(std::size_t var) const noexcept
{
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.mono[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const noexcept
{
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Integer MultiPoly::l1_norm() const
{
    Integer s = 0;
    for (const auto& t : terms_)
        s += abs(t.coeff);
    return s;
}

void MultiPoly::require_same_ring(const MultiPoly& other) const
{
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomial variable counts differ (" + std::to_string(nvars_) + " vs " +
                                    std::to_string(other.nvars_) + ")");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    require_same_ring(rhs);
    terms_ = merge_add(terms_, rhs.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    require_same_ring(rhs);
    terms_ = merge_add(terms_, rhs.terms_, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

MultiPoly MultiPoly::times(const Monomial& m, const Integer& c) const
{
    MultiPoly out(nvars_);
    if (c.is_zero())
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
}

MultiPoly MultiPoly::divided_by(const Monomial& m) const
{
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono / m, t.coeff});
    return out;
}

MultiPoly MultiPoly::permuted(std::span<const std::size_t> perm) const
{
    if (perm.size() != nvars_)
        throw std::invalid_argument("permutation length differs from variable count");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < nvars_; ++i)
            m.set(perm[i], t.mono[i]);
        out.push_back({m, t.coeff});
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::swapped(std::size_t i, std::size_t j) const
{
    std::vector<std::size_t> perm(nvars_);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm.at(i), perm.at(j));
    return permuted(perm);
}

MultiPoly MultiPoly::power_substituted(int k) const
{
    if (k < 1)
        throw std::invalid_argument("power substitution needs k >= 1");
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < nvars_; ++i)
            m.set(i, t.mono[i] * k);
        out.terms_.push_back({m, t.coeff});
    }
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    std::array<MultiPoly, 1> lhs{a};
    std::array<MultiPoly, 1> rhs{b};
    return dot(lhs, rhs);
}

MultiPoly dot(std::span<const MultiPoly> a, std::span<const MultiPoly> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: operand lists differ in length");
    if (a.empty())
        throw std::invalid_argument("dot: empty operand lists");
    const std::size_t nvars = a.front().nvars();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].nvars() != nvars || b[i].nvars() != nvars)
            throw std::invalid_argument("dot: polynomial variable counts differ");
    }

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            live.push_back(i);
    if (live.empty())
        return MultiPoly(nvars);

    // Single monomial factors keep the term order; no accumulator needed.
    if (live.size() == 1) {
        const auto& x = a[live[0]];
        const auto& y = b[live[0]];
        if (x.size() == 1)
            return y.times(x.terms()[0].mono, x.terms()[0].coeff);
        if (y.size() == 1)
            return x.times(y.terms()[0].mono, y.terms()[0].coeff);
    }

    ProductPlan plan;
    plan.nvars = nvars;
    std::array<int, kMaxVars> lo;
    std::array<int, kMaxVars> hi;
    lo.fill(INT_MAX);
    hi.fill(-1);
    double bound = 0.0;
    std::vector<std::pair<Extent, Extent>> extents;
    extents.reserve(live.size());
    for (std::size_t i : live) {
        Extent ea = extent_of(a[i]);
        Extent eb = extent_of(b[i]);
        for (std::size_t v = 0; v < nvars; ++v) {
            lo[v] = std::min(lo[v], ea.lo[v] + eb.lo[v]);
            hi[v] = std::max(hi[v], ea.hi[v] + eb.hi[v]);
        }
        int d = ea.degree + eb.degree;
        if (!ea.homogeneous || !eb.homogeneous || (plan.degree >= 0 && d != plan.degree))
            plan.homogeneous = false;
        plan.degree = d;
        plan.small = plan.small && ea.small && eb.small;
        bound += ea.l1 * eb.l1;
        plan.work += static_cast<double>(a[i].size()) * static_cast<double>(b[i].size());
        extents.emplace_back(ea, eb);
    }
    // Products of int64 coefficients summed in int128: safe below 2^120.
    plan.small = plan.small && bound < std::ldexp(1.0, 120);
    plan.index_vars = plan.homogeneous ? nvars - 1 : nvars;
    plan.lo = lo;
    double cells = 1.0;
    for (std::size_t v = 0; v < plan.index_vars; ++v) {
        plan.box[v] = hi[v] - lo[v] + 1;
        cells *= static_cast<double>(plan.box[v]);
    }
    const double dense_limit = plan.small ? double(1 << 23) : double(1 << 20);
    const bool dense = cells <= dense_limit && cells <= 32.0 * plan.work + 4096.0;

    if (!dense) {
        MultiPoly out(nvars);
        for (std::size_t i : live)
            out += sparse_product(a[i], b[i]);
        return out;
    }

    plan.cells = static_cast<long long>(cells);
    long long s = 1;
    for (std::size_t v = plan.index_vars; v-- > 0;) {
        plan.stride[v] = s;
        s *= plan.box[v];
    }
    long long base = 0;
    for (std::size_t v = 0; v < plan.index_vars; ++v)
        base += static_cast<long long>(lo[v]) * plan.stride[v];

    MultiPoly out(nvars);
    if (plan.small) {
        std::vector<__int128> acc(static_cast<std::size_t>(plan.cells), 0);
        std::vector<long long> ib;
        std::vector<long long> cb;
        for (std::size_t i : live) {
            const auto& x = a[i].terms();
            const auto& y = b[i].terms();
            ib.resize(y.size());
            cb.resize(y.size());
            for (std::size_t q = 0; q < y.size(); ++q) {
                ib[q] = linear_index(y[q].mono, plan) - base;
                cb[q] = y[q].coeff.convert_to<long long>();
            }
            for (const auto& tx : x) {
                const long long ia = linear_index(tx.mono, plan);
                const __int128 cx = tx.coeff.convert_to<long long>();
                __int128* row = acc.data() + ia;
                for (std::size_t q = 0; q < y.size(); ++q)
                    row[ib[q]] += cx * cb[q];
            }
        }
        out = MultiPoly::from_terms(nvars, {});
        auto terms = extract(acc, plan, base);
        return MultiPoly::from_terms(nvars, std::move(terms));
    }

    std::vector<Integer> acc(static_cast<std::size_t>(plan.cells));
    for (std::size_t i : live) {
        for (const auto& tx : a[i].terms()) {
            const long long ia = linear_index(tx.mono, plan) - base;
            for (const auto& ty : b[i].terms())
                acc[ia + linear_index(ty.mono, plan)] += tx.coeff * ty.coeff;
        }
    }
    return MultiPoly::from_terms(nvars, extract(acc, plan, base));
}

MultiPoly pow(const MultiPoly& p, int e)
{
    if (e < 0)
        throw std::invalid_argument("negative polynomial power");
    MultiPoly result = MultiPoly::constant(p.nvars(), 1);
    MultiPoly square = p;
    while (e > 0) {
        if (e & 1)
            result *= square;
        e >>= 1;
        if (e)
            square *= square;
    }
    return result;
}

namespace {

template <class S>
S eval_generic(const MultiPoly& p, std::span<const S> point, const S& one)
{
    if (point.size() != p.nvars())
        throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                    std::to_string(p.nvars()));
    std::vector<std::vector<S>> powers(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        int d = std::max(0, p.degree_in(v));
        powers[v].reserve(d + 1);
        powers[v].push_back(one);
        for (int e = 1; e <= d; ++e)
            powers[v].push_back(powers[v].back() * point[v]);
    }
    S sum = one - one;
    for (const auto& t : p.terms()) {
        S term = one;
        for (std::size_t v = 0; v < p.nvars(); ++v)
            if (t.mono[v])
                term *= powers[v][t.mono[v]];
        if constexpr (std::is_same_v<S, std::complex<double>>)
            sum += t.coeff.convert_to<double>() * term;
        else
            sum += S(t.coeff) * term;
    }
    return sum;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

Integer eval(const MultiPoly& p, std::span<const Integer> point)
{
    return eval_generic<Integer>(p, point, Integer(1));
}

Rational eval(const MultiPoly& p, std::span<const Rational> point)
{
    return eval_generic<Rational>(p, point, Rational(1));
}

std::complex<double> eval(const MultiPoly& p, std::span<const std::complex<double>> point)
{
    return eval_generic<std::complex<double>>(p, point, std::complex<double>(1.0, 0.0));
}

std::uint64_t eval_mod(const MultiPoly& poly, std::span<const std::uint64_t> point, std::uint64_t p)
{
    if (point.size() != poly.nvars())
        throw std::invalid_argument("evaluation point has the wrong number of coordinates");
    std::vector<std::vector<std::uint64_t>> powers(poly.nvars());
    for (std::size_t v = 0; v < poly.nvars(); ++v) {
        int d = std::max(0, poly.degree_in(v));
        powers[v].push_back(1 % p);
        for (int e = 1; e <= d; ++e)
            powers[v].push_back(mulmod(powers[v].back(), point[v] % p, p));
    }
    const Integer modulus = p;
    std::uint64_t sum = 0;
    for (const auto& t : poly.terms()) {
        Integer r = t.coeff % modulus;
        if (r < 0)
            r += modulus;
        std::uint64_t term = r.convert_to<std::uint64_t>();
        for (std::size_t v = 0; v < poly.nvars(); ++v)
            if (t.mono[v])
                term = mulmod(term, powers[v][t.mono[v]], p);
        sum = (sum + term) % p;
    }
    return sum;
}

std::string to_string(const MultiPoly& p, const std::string& prefix)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Integer c = t.coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (negative)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool constant = t.mono.degree() == 0;
        bool wrote = false;
        if (c != 1 || constant) {
            os << c;
            wrote = true;
        }
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            int e = t.mono[v];
            if (!e)
                continue;
            if (wrote)
                os << '*';
            os << prefix << (v + 1);
            if (e > 1)
                os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace skewrec
