#include "skewrec/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>


#include "fill.hpp"

namespace skewrec {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
{
    if (!contains(outer_, inner_))
        throw std::invalid_argument("skew shape " + to_string(outer_) + "/" + to_string(inner_) +
                                    ": outer does not contain inner");
}

ColumnSignature SkewShape::column(int col) const
{
    if (col < 1 || col > columns())
        throw std::out_of_range("column index out of range");
    int total = 0;
    while (static_cast<std::size_t>(total) < outer_.length() && outer_[total] >= col)
        ++total;
    int skew = 0;
    while (static_cast<std::size_t>(skew) < inner_.length() && inner_[skew] >= col)
        ++skew;
    return {skew + 1, total};
}

std::vector<ColumnSignature> SkewShape::column_signatures() const
{
    std::vector<ColumnSignature> out;
    out.reserve(columns());
    for (int c = 1; c <= columns(); ++c)
        out.push_back(column(c));
    return out;
}

SkewShape insert(const SkewShape& a, const SkewShape& b)
{
    return SkewShape(add(a.outer(), b.outer()), add(a.inner(), b.inner()));
}

SkewShape stretched_shape(const Partition& kappa, const Partition& lambda,
                          const Partition& mu, const Partition& nu, int k)
{
    return SkewShape(add(kappa, scale(k, mu)), add(lambda, scale(k, nu)));
}

Tableau::Tableau(SkewShape shape, int n, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), n_(n), rows_(std::move(rows))
{
    if (n_ < 1)
        throw std::invalid_argument("tableau alphabet must be positive");
    if (rows_.size() != shape_.rows())
        throw std::invalid_argument("tableau has " + std::to_string(rows_.size()) + " rows, shape has " +
                                    std::to_string(shape_.rows()));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (static_cast<int>(rows_[i].size()) != shape_.row_length(i))
            throw std::invalid_argument("tableau row " + std::to_string(i + 1) + " has the wrong length");
}

int Tableau::entry(std::size_t row, int col) const noexcept
{
    if (row >= rows_.size())
        return 0;
    int first = shape_.inner()[row] + 1;
    if (col < first || col > shape_.outer()[row])
        return 0;
    return rows_[row][col - first];
}

bool is_valid_ssyt(const Tableau& t)
{
    const auto& rows = t.rows();
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > t.alphabet())
                return false;
            if (j > 0 && row[j - 1] > row[j])
                return false;
        }
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& shape = t.shape();
        int lo = std::max(shape.inner()[i], shape.inner()[i - 1]) + 1;
        int hi = std::min(shape.outer()[i], shape.outer()[i - 1]);
        for (int c = lo; c <= hi; ++c)
            if (t.entry(i - 1, c) >= t.entry(i, c))
                return false;
    }
    return true;
}

std::vector<Tableau> enumerate(const SkewShape& shape, int n, Execution exec)
{
    if (n < 1)
        throw std::invalid_argument("enumerate: alphabet must be positive");
    detail::ColumnFiller probe(shape, n);
    int first = probe.first_nonempty_column();
    if (first > probe.columns())
        return {Tableau(shape, n, std::vector<std::vector<int>>(shape.rows()))};

    // Fillings of the first non-empty column seed independent subtrees.
    std::vector<std::vector<int>> seeds;
    {
        probe.set_stop_column(first + 1);
        detail::NoConstraint none;
        auto leaf = [&] { seeds.push_back(probe.column_values(first)); };
        probe.run(first, leaf, none);
    }

    std::vector<std::vector<Tableau>> parts(seeds.size());
    const long long nseeds = static_cast<long long>(seeds.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long long s = 0; s < nseeds; ++s) {
        detail::ColumnFiller filler(shape, n);
        filler.set_column(first, seeds[s]);
        detail::NoConstraint none;
        auto& out = parts[s];
        auto leaf = [&] { out.emplace_back(shape, n, filler.rows()); };
        filler.run(first + 1, leaf, none);
    }

    std::vector<Tableau> all;
    for (auto& p : parts)
        std::move(p.begin(), p.end(), std::back_inserter(all));
    detail::sort_canonical(all);
    return all;
}

long long count_tableaux(const SkewShape& shape, int n)
{
    if (n < 1)
        throw std::invalid_argument("count_tableaux: alphabet must be positive");
    detail::ColumnFiller filler(shape, n);
    detail::NoConstraint none;
    long long count = 0;
    auto leaf = [&] { ++count; };
    filler.run(1, leaf, none);
    return count;
}

IntVector weight(const Tableau& t)
{
    IntVector w(static_cast<std::size_t>(t.alphabet()), 0);
    for (const auto& row : t.rows())
        for (int v : row)
            ++w[v - 1];
    return w;
}

Tableau insert(const Tableau& a, const Tableau& b)
{
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("insert: tableaux have different alphabets");
    SkewShape shape = insert(a.shape(), b.shape());
    std::vector<std::vector<int>> rows(shape.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto* ra = i < a.rows().size() ? &a.rows()[i] : nullptr;
        const auto* rb = i < b.rows().size() ? &b.rows()[i] : nullptr;
        if (ra)
            rows[i] = *ra;
        if (rb) {
            auto mid = rows[i].insert(rows[i].end(), rb->begin(), rb->end());
            std::inplace_merge(rows[i].begin(), mid, rows[i].end());
        }
    }
    Tableau out(std::move(shape), a.alphabet(), std::move(rows));
    if (!is_valid_ssyt(out))
        throw std::logic_error("internal error: tableau insertion produced an invalid tableau");
    return out;
}

std::vector<ColumnView> columns(const Tableau& t)
{
    std::vector<ColumnView> out;
    for (int c = 1; c <= t.shape().columns(); ++c) {
        ColumnView view{c, t.shape().column(c), {}};
        for (int r = view.rows.first_row; r <= view.rows.last_row; ++r)
            view.entries.push_back(t.entry(r - 1, c));
        out.push_back(std::move(view));
    }
    return out;
}

Tableau column_tableau(const ColumnView& c, int n)
{
    std::vector<int> outer(c.rows.last_row, 1);
    std::vector<int> inner(c.rows.skew_height(), 1);
    std::vector<std::vector<int>> rows(outer.size());
    for (int r = c.rows.first_row; r <= c.rows.last_row; ++r)
        rows[r - 1].push_back(c.entries.at(r - c.rows.first_row));
    return Tableau(SkewShape(Partition(outer), Partition(inner)), n, std::move(rows));
}

bool sits_inside(const SkewShape& small, const SkewShape& big)
{
    std::map<ColumnSignature, int> available;
    for (const auto& sig : big.column_signatures())
        ++available[sig];
    for (const auto& sig : small.column_signatures())
        if (--available[sig] < 0)
            return false;
    return true;
}

std::pair<Tableau, Tableau> decompose(const Tableau& t, const SkewShape& small)
{
    const SkewShape& big = t.shape();
    auto big_sigs = big.column_signatures();
    std::vector<bool> taken(big_sigs.size(), false);
    std::vector<int> chosen;
    for (const auto& sig : small.column_signatures()) {
        std::size_t c = 0;
        while (c < big_sigs.size() && (taken[c] || big_sigs[c] != sig))
            ++c;
        if (c == big_sigs.size())
            throw std::invalid_argument("decompose: shape " + to_string(small.outer()) + "/" +
                                        to_string(small.inner()) + " does not sit inside the tableau's shape");
        taken[c] = true;
        chosen.push_back(static_cast<int>(c) + 1);
    }

    auto views = columns(t);
    Tableau first = Tableau::empty(t.alphabet());
    for (int c : chosen)
        first = insert(first, column_tableau(views[c - 1], t.alphabet()));

    auto outer = subtract(big.outer(), small.outer());
    auto inner = subtract(big.inner(), small.inner());
    SkewShape rest_shape(Partition(outer.entries()), Partition(inner.entries()));
    std::vector<std::vector<int>> rest_rows(rest_shape.rows());
    for (std::size_t r = 0; r < rest_rows.size(); ++r)
        for (int c = big.inner()[r] + 1; c <= big.outer()[r]; ++c)
            if (!taken[c - 1])
                rest_rows[r].push_back(t.entry(r, c));
    Tableau rest(std::move(rest_shape), t.alphabet(), std::move(rest_rows));

    if (!is_valid_ssyt(rest) || insert(first, rest) != t)
        throw std::logic_error("internal error: column deletion did not factor the tableau");
    return {std::move(first), std::move(rest)};
}

int first_valid_stretch(const Partition& kappa, const Partition& lambda,
                        const Partition& mu, const Partition& nu)
{
    if (!contains(mu, nu))
        throw std::invalid_argument("mu " + to_string(mu) + " does not contain nu " + to_string(nu));
    if (contains(kappa, lambda))
        return 0;
    auto cond = stretch_condition(kappa, lambda, mu, nu);
    if (!cond)
        throw std::invalid_argument("no stretch makes (kappa + k mu)/(lambda + k nu) a skew shape; row " +
                                    std::to_string(*cond.violating_row + 1) + " blocks it");
    return *cond.k;
}

int stabilization_index(const Partition& kappa, const Partition& lambda,
                        const Partition& mu, const Partition& nu)
{
    int shift = first_valid_stretch(kappa, lambda, mu, nu);
    Partition kappa0 = add(kappa, scale(shift, mu));
    Partition lambda0 = add(lambda, scale(shift, nu));
    SkewShape small(mu, nu);
    const int bound = kappa0[0] + 1;
    std::vector<char> inside(bound + 2, 0);
    for (int k = 1; k <= bound + 1; ++k)
        inside[k] = sits_inside(small, stretched_shape(kappa0, lambda0, mu, nu, k));
    for (int r = 0; r <= bound; ++r) {
        bool ok = true;
        for (int k = r + 1; k <= bound + 1 && ok; ++k)
            ok = inside[k] != 0;
        if (ok)
            return shift + r;
    }
    throw std::logic_error("internal error: no stabilization index within the column bound");
}

}  // namespace skewrec
