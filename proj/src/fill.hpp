#pragma once

// Column-by-column backtracking over semistandard fillings of a skew shape.

#include <algorithm>
#include <vector>

#include "skewrec/tableau.hpp"

namespace skewrec::detail {

/// Accepts every letter; the default for plain enumeration.
struct NoConstraint {
    bool take(int) noexcept { return true; }
    void give(int) noexcept {}
};

/// Caps the number of uses of each letter at w[letter - 1].
struct WeightBudget {
    explicit WeightBudget(const IntVector& w) : left(w.entries()) {}
    bool take(int v) noexcept
    {
        if (left[v - 1] == 0)
            return false;
        --left[v - 1];
        return true;
    }
    void give(int v) noexcept { ++left[v - 1]; }
    std::vector<int> left;
};

class ColumnFiller {
public:
    ColumnFiller(const SkewShape& shape, int n)
        : shape_(shape), n_(n), nrows_(static_cast<int>(shape.rows())), ncols_(shape.columns()),
          stride_(ncols_ + 1), grid_(static_cast<std::size_t>(nrows_) * stride_, 0),
          lo_(ncols_ + 2, 0), hi_(ncols_ + 2, -1)
    {
        for (int c = 1; c <= ncols_; ++c) {
            auto sig = shape.column(c);
            lo_[c] = sig.first_row - 1;
            hi_[c] = sig.last_row - 1;
        }
        stop_col_ = ncols_ + 1;
    }

    int columns() const noexcept { return ncols_; }
    bool column_empty(int c) const noexcept { return hi_[c] < lo_[c]; }
    int first_nonempty_column() const noexcept
    {
        for (int c = 1; c <= ncols_; ++c)
            if (!column_empty(c))
                return c;
        return ncols_ + 1;
    }

    /// Column at which the recursion stops and calls the leaf.
    void set_stop_column(int c) noexcept { stop_col_ = c; }

    int& at(int row, int col) noexcept { return grid_[static_cast<std::size_t>(row) * stride_ + col]; }
    int at(int row, int col) const noexcept { return grid_[static_cast<std::size_t>(row) * stride_ + col]; }

    std::vector<int> column_values(int c) const
    {
        std::vector<int> out;
        for (int r = lo_[c]; r <= hi_[c]; ++r)
            out.push_back(at(r, c));
        return out;
    }

    void set_column(int c, const std::vector<int>& values)
    {
        for (int r = lo_[c]; r <= hi_[c]; ++r)
            at(r, c) = values[r - lo_[c]];
    }

    std::vector<std::vector<int>> rows() const
    {
        std::vector<std::vector<int>> out(nrows_);
        for (int r = 0; r < nrows_; ++r)
            for (int c = shape_.inner()[r] + 1; c <= shape_.outer()[r]; ++c)
                out[r].push_back(at(r, c));
        return out;
    }

    template <class Leaf, class Hooks>
    void run(int col, Leaf& leaf, Hooks& hooks)
    {
        while (col < stop_col_ && col <= ncols_ && column_empty(col))
            ++col;
        if (col >= stop_col_ || col > ncols_) {
            leaf();
            return;
        }
        fill_cell(col, lo_[col], leaf, hooks);
    }

private:
    template <class Leaf, class Hooks>
    void fill_cell(int col, int row, Leaf& leaf, Hooks& hooks)
    {
        if (row > hi_[col]) {
            run(col + 1, leaf, hooks);
            return;
        }
        int lower = 1;
        if (col > 1)
            lower = std::max(lower, at(row, col - 1));  // skew boxes hold 0
        if (row > lo_[col])
            lower = std::max(lower, at(row - 1, col) + 1);
        int upper = n_ - (hi_[col] - row);
        for (int v = lower; v <= upper; ++v) {
            if (!hooks.take(v))
                continue;
            at(row, col) = v;
            fill_cell(col, row + 1, leaf, hooks);
            hooks.give(v);
        }
        at(row, col) = 0;
    }

    const SkewShape& shape_;
    int n_;
    int nrows_;
    int ncols_;
    int stride_;
    std::vector<int> grid_;
    std::vector<int> lo_;
    std::vector<int> hi_;
    int stop_col_;
};

inline void sort_canonical(std::vector<Tableau>& ts)
{
    auto flat_less = [](const Tableau& a, const Tableau& b) {
        const auto& ra = a.rows();
        const auto& rb = b.rows();
        for (std::size_t i = 0; i < ra.size() && i < rb.size(); ++i) {
            if (ra[i] != rb[i])
                return std::lexicographical_compare(ra[i].begin(), ra[i].end(), rb[i].begin(), rb[i].end());
        }
        return ra.size() < rb.size();
    };
    std::sort(ts.begin(), ts.end(), flat_less);
}

}  // namespace skewrec::detail
