#include "skewrec/schur.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <memory>
#include <map>
#include <numeric>
#include <stdexcept>

namespace skewrec {

MultiPoly phi(const Tableau& t)
{
    return MultiPoly::monomial(weight(t));
}

namespace {

// Looks up intermediate shapes by their parts. Dense mixed-radix table over
// inner_j <= parts_j <= outer_j when that box is small, ordered map otherwise.
class StateIndex {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    StateIndex(const std::vector<int>& lo, const std::vector<int>& hi) : lo_(lo)
    {
        double cells = 1.0;
        radix_.resize(lo.size());
        for (std::size_t j = lo.size(); j-- > 0;) {
            radix_[j] = static_cast<std::size_t>(cells);
            cells *= static_cast<double>(hi[j] - lo[j] + 1);
        }
        if (cells <= double(1 << 22))
            table_.assign(static_cast<std::size_t>(cells), npos);
        else
            dense_ = false;
    }

    void insert(const std::vector<int>& key, std::size_t id)
    {
        if (dense_)
            table_[offset(key)] = id;
        else
            map_[key] = id;
    }

    std::size_t find(const std::vector<int>& key) const
    {
        if (dense_)
            return table_[offset(key)];
        auto it = map_.find(key);
        return it == map_.end() ? npos : it->second;
    }

private:
    std::size_t offset(const std::vector<int>& key) const
    {
        std::size_t o = 0;
        for (std::size_t j = 0; j < key.size(); ++j)
            o += static_cast<std::size_t>(key[j] - lo_[j]) * radix_[j];
        return o;
    }

    std::vector<int> lo_;
    std::vector<std::size_t> radix_;
    bool dense_ = true;
    std::vector<std::size_t> table_;
    std::map<std::vector<int>, std::size_t> map_;
};

template <class Count>
struct StripState {
    std::vector<int> parts;
    int size = 0;
    std::vector<Monomial> monos;
    std::vector<Count> counts;
};

inline bool accumulate(long long& a, long long b)
{
    return !__builtin_add_overflow(a, b, &a);
}

inline bool accumulate(Integer& a, const Integer& b)
{
    a += b;
    return true;
}

// Gathers the terms of one target shape. After `letter` letters a term is
// determined by its first letter-1 exponents, so those index a dense buffer.
template <class Count>
class StripAccumulator {
public:
    StripAccumulator(int letter, int radix) : letter_(letter), radix_(radix)
    {
        double cells = 1.0;
        for (int v = 0; v + 1 < letter; ++v)
            cells *= radix;
        dense_ = cells <= double(1 << 22);
        if (dense_) {
            counts_.assign(static_cast<std::size_t>(cells), Count(0));
            monos_.resize(static_cast<std::size_t>(cells));
        }
    }

    bool add(const Monomial& m, const Count& c)
    {
        if (!dense_) {
            sparse_.emplace_back(m, c);
            return true;
        }
        std::size_t idx = 0;
        std::size_t scale = 1;
        for (int v = 0; v + 1 < letter_; ++v) {
            idx += static_cast<std::size_t>(m[v]) * scale;
            scale *= static_cast<std::size_t>(radix_);
        }
        if (counts_[idx] == 0) {
            touched_.push_back(idx);
            monos_[idx] = m;
        }
        return accumulate(counts_[idx], c);
    }

    bool take(StripState<Count>& out)
    {
        if (dense_) {
            out.monos.reserve(touched_.size());
            out.counts.reserve(touched_.size());
            for (std::size_t idx : touched_) {
                out.monos.push_back(monos_[idx]);
                out.counts.push_back(counts_[idx]);
                counts_[idx] = 0;
            }
            touched_.clear();
            return true;
        }
        std::sort(sparse_.begin(), sparse_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [m, c] : sparse_) {
            if (!out.monos.empty() && out.monos.back() == m) {
                if (!accumulate(out.counts.back(), c))
                    return false;
            } else {
                out.monos.push_back(m);
                out.counts.push_back(c);
            }
        }
        sparse_.clear();
        return true;
    }

private:
    int letter_;
    int radix_;
    bool dense_ = true;
    std::vector<Count> counts_;
    std::vector<Monomial> monos_;
    std::vector<std::size_t> touched_;
    std::vector<std::pair<Monomial, Count>> sparse_;
};

struct CountOverflow {};

template <class F>
void for_each_in_box(const std::vector<int>& lo, const std::vector<int>& hi, std::vector<int>& cur, std::size_t j, F& f)
{
    if (j == lo.size()) {
        f(cur);
        return;
    }
    for (int v = lo[j]; v <= hi[j]; ++v) {
        cur[j] = v;
        for_each_in_box(lo, hi, cur, j + 1, f);
    }
}

template <class Count>
MultiPoly strip_chain(const SkewShape& shape, int n, Execution exec)
{
    const int L = static_cast<int>(shape.rows());
    const std::vector<int> outer = shape.outer().padded(L);
    const std::vector<int> inner = shape.inner().padded(L);
    auto outer_at = [&](int j) { return j < L ? outer[j] : 0; };
    const int radix = shape.boxes() + 1;

    // Bounds on row j after `done` letters, given `left` letters still to place.
    auto row_lo = [&](int j, int left) { return std::max(inner[j], outer_at(j + left)); };
    auto row_cap = [&](int j, int done) { return j >= done ? std::min(outer[j], inner[j - done]) : outer[j]; };

    std::vector<StripState<Count>> cur(1);
    cur[0].parts = inner;
    cur[0].size = shape.inner().size();
    cur[0].monos.push_back(Monomial{});
    cur[0].counts.push_back(Count(1));
    auto index = std::make_unique<StateIndex>(inner, outer);
    index->insert(inner, 0);

    for (int letter = 1; letter <= n; ++letter) {
        const int left = n - letter;
        std::vector<std::vector<int>> targets;
        if (letter == n) {
            targets.push_back(outer);
        } else {
            std::vector<int> sigma(L);
            auto rec = [&](auto&& self, int j) -> void {
                if (j == L) {
                    targets.push_back(sigma);
                    return;
                }
                int hi = row_cap(j, letter);
                if (j > 0)
                    hi = std::min(hi, sigma[j - 1]);
                for (int v = row_lo(j, left); v <= hi; ++v) {
                    sigma[j] = v;
                    self(self, j + 1);
                }
            };
            rec(rec, 0);
        }

        std::vector<StripState<Count>> next(targets.size());
        std::atomic<bool> overflow{false};
        const long long ntargets = static_cast<long long>(targets.size());
#pragma omp parallel if (exec == Execution::parallel)
        {
            StripAccumulator<Count> acc(letter, radix);
            std::vector<int> lo(L);
            std::vector<int> hi(L);
            std::vector<int> rho(L);
#pragma omp for schedule(dynamic, 8)
            for (long long t = 0; t < ntargets; ++t) {
                if (overflow.load(std::memory_order_relaxed))
                    continue;
                const auto& sigma = targets[t];
                const int sigma_size = std::accumulate(sigma.begin(), sigma.end(), 0);
                bool empty_box = false;
                for (int j = 0; j < L; ++j) {
                    int below = j + 1 < L ? sigma[j + 1] : 0;
                    lo[j] = std::max(row_lo(j, left + 1), below);
                    hi[j] = std::min(sigma[j], row_cap(j, letter - 1));
                    empty_box = empty_box || lo[j] > hi[j];
                }
                if (empty_box)
                    continue;
                bool ok = true;
                auto pull = [&](const std::vector<int>& r) {
                    std::size_t id = index->find(r);
                    if (id == StateIndex::npos || !ok)
                        return;
                    const auto& src = cur[id];
                    const int e = sigma_size - src.size;
                    for (std::size_t q = 0; q < src.monos.size() && ok; ++q) {
                        Monomial m = src.monos[q];
                        m.set(letter - 1, e);
                        ok = acc.add(m, src.counts[q]);
                    }
                };
                for_each_in_box(lo, hi, rho, 0, pull);
                auto& dst = next[t];
                ok = acc.take(dst) && ok;
                if (!ok) {
                    overflow = true;
                    continue;
                }
                dst.parts = sigma;
                dst.size = sigma_size;
            }
        }
        if (overflow)
            throw CountOverflow{};

        cur.clear();
        index = std::make_unique<StateIndex>(inner, outer);
        for (auto& s : next) {
            if (s.monos.empty())
                continue;
            index->insert(s.parts, cur.size());
            cur.push_back(std::move(s));
        }
    }

    std::vector<Term> terms;
    for (auto& s : cur) {
        if (s.parts != outer)
            continue;
        for (std::size_t q = 0; q < s.monos.size(); ++q)
            terms.push_back({s.monos[q], Integer(s.counts[q])});
    }
    return MultiPoly::from_terms(static_cast<std::size_t>(n), std::move(terms));
}

}  // namespace

MultiPoly skew_schur(const SkewShape& shape, int n, Execution exec)
{
    if (n < 1)
        throw std::invalid_argument("skew_schur: number of variables must be positive");
    if (static_cast<std::size_t>(n) > kMaxVars)
        throw std::invalid_argument("skew_schur: at most " + std::to_string(kMaxVars) + " variables supported");
    if (shape.boxes() == 0)
        return MultiPoly::constant(n, 1);
    for (const auto& sig : shape.column_signatures())
        if (sig.height() > n)
            return MultiPoly(n);
    try {
        return strip_chain<long long>(shape, n, exec);
    } catch (const CountOverflow&) {
        return strip_chain<Integer>(shape, n, exec);
    }
}

CompleteHomogeneous::CompleteHomogeneous(int n) : n_(n)
{
    if (n < 1 || static_cast<std::size_t>(n) > kMaxVars)
        throw std::invalid_argument("CompleteHomogeneous: bad variable count");
    cache_.push_back(MultiPoly::constant(n, 1));
}

const MultiPoly& CompleteHomogeneous::operator()(int k)
{
    if (k < 0)
        throw std::invalid_argument("h_k needs k >= 0");
    if (k < static_cast<int>(cache_.size()))
        return cache_[k];
    // Rebuild all degrees up to k: table[m][d] = h_d(x_1..x_m).
    std::vector<MultiPoly> prev(k + 1, MultiPoly(n_));
    prev[0] = MultiPoly::constant(n_, 1);
    for (int m = 0; m < n_; ++m) {
        std::vector<MultiPoly> cur(k + 1, MultiPoly(n_));
        for (int d = 0; d <= k; ++d) {
            MultiPoly sum(n_);
            for (int j = 0; j <= d; ++j) {
                if (prev[d - j].is_zero())
                    continue;
                Monomial xj;
                xj.set(m, j);
                sum += prev[d - j].times(xj);
            }
            cur[d] = std::move(sum);
        }
        prev = std::move(cur);
    }
    cache_ = std::move(prev);
    return cache_[k];
}

MultiPoly skew_schur_jacobi_trudi(const SkewShape& shape, int n)
{
    const int L = static_cast<int>(shape.rows());
    if (L == 0)
        return MultiPoly::constant(n, 1);
    if (L > 20)
        throw std::invalid_argument("Jacobi-Trudi oracle limited to 20 rows");
    CompleteHomogeneous h(n);
    const MultiPoly zero(n);
    auto entry = [&](int i, int j) -> const MultiPoly& {
        int k = shape.outer()[i] - shape.inner()[j] - i + j;
        return k < 0 ? zero : h(k);
    };
    // minors[mask]: signed sum over placements of rows 0..|mask|-1 into the columns of mask.
    std::vector<MultiPoly> minors(std::size_t{1} << L, zero);
    minors[0] = MultiPoly::constant(n, 1);
    for (std::size_t mask = 0; mask + 1 < minors.size(); ++mask) {
        if (minors[mask].is_zero())
            continue;
        const int row = std::popcount(mask);
        for (int j = 0; j < L; ++j) {
            if (mask & (std::size_t{1} << j))
                continue;
            const MultiPoly& e = entry(row, j);
            if (e.is_zero())
                continue;
            const int inversions = std::popcount(mask >> (j + 1));
            MultiPoly term = minors[mask] * e;
            auto& dst = minors[mask | (std::size_t{1} << j)];
            if (inversions % 2)
                dst -= term;
            else
                dst += term;
        }
    }
    return minors.back();
}

MultiPoly monomial_symmetric(const Partition& lambda, int n)
{
    if (n < 1)
        throw std::invalid_argument("monomial_symmetric: n must be positive");
    if (lambda.length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("monomial_symmetric: partition " + to_string(lambda) + " has more than " +
                                    std::to_string(n) + " parts");
    std::vector<int> w = lambda.padded(n);
    std::sort(w.begin(), w.end());
    std::vector<Term> terms;
    do {
        terms.push_back({Monomial(IntVector(w)), 1});
    } while (std::next_permutation(w.begin(), w.end()));
    return MultiPoly::from_terms(n, std::move(terms));
}

bool is_symmetric(const MultiPoly& p)
{
    for (std::size_t i = 0; i + 1 < p.nvars(); ++i)
        if (p.swapped(i, i + 1) != p)
            return false;
    return true;
}

}  // namespace skewrec
