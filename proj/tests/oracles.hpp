#pragma once
// Brute-force references shared by the unit tests. Deliberately naive.

#include <functional>
#include <map>
#include <vector>

#include "skewrec/multipoly.hpp"
#include "skewrec/partition.hpp"
#include "skewrec/tableau.hpp"

namespace oracle {

using skewrec::IntVector;
using skewrec::Partition;
using skewrec::SkewShape;

// Every filling of the ordinary boxes with letters 1..n, filtered by the
// semistandard conditions read straight off a coordinate grid.
inline std::vector<std::vector<std::vector<int>>> brute_ssyt(const SkewShape& s, int n)
{
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (int c = s.inner()[r] + 1; c <= s.outer()[r]; ++c)
            cells.emplace_back(static_cast<int>(r), c);
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> vals(cells.size(), 1);
    while (true) {
        std::map<std::pair<int, int>, int> grid;
        for (std::size_t i = 0; i < cells.size(); ++i)
            grid[cells[i]] = vals[i];
        bool ok = true;
        for (auto& [rc, v] : grid) {
            auto right = grid.find({rc.first, rc.second + 1});
            if (right != grid.end() && right->second < v)
                ok = false;
            auto below = grid.find({rc.first + 1, rc.second});
            if (below != grid.end() && below->second <= v)
                ok = false;
        }
        if (ok) {
            std::vector<std::vector<int>> rows(s.rows());
            for (std::size_t i = 0; i < cells.size(); ++i)
                rows[cells[i].first].push_back(vals[i]);
            out.push_back(rows);
        }
        std::size_t i = 0;
        while (i < vals.size() && vals[i] == n)
            vals[i++] = 1;
        if (i == vals.size())
            break;
        ++vals[i];
    }
    return out;
}

inline IntVector brute_weight(const std::vector<std::vector<int>>& rows, int n)
{
    IntVector w(static_cast<std::size_t>(n), 0);
    for (auto& row : rows)
        for (int v : row)
            ++w[v - 1];
    return w;
}

inline skewrec::MultiPoly brute_schur(const SkewShape& s, int n)
{
    skewrec::MultiPoly p(n);
    for (auto& rows : brute_ssyt(s, n))
        p += skewrec::MultiPoly::monomial(brute_weight(rows, n));
    return p;
}

// All skew shapes with |outer| <= max_outer (inner ranging over subpartitions).
inline std::vector<SkewShape> shapes_up_to(int max_outer)
{
    std::vector<SkewShape> out;
    for (int m = 0; m <= max_outer; ++m)
        for (auto& o : skewrec::partitions_of(m, static_cast<std::size_t>(m)))
            for (auto& i : skewrec::subpartitions(o))
                out.emplace_back(o, i);
    return out;
}

// Shapes with at most `boxes` ordinary boxes, outer bounded by max_outer.
inline std::vector<SkewShape> shapes_with_boxes(int boxes, int max_outer)
{
    std::vector<SkewShape> out;
    for (auto& s : shapes_up_to(max_outer))
        if (s.boxes() <= boxes)
            out.push_back(s);
    return out;
}

}  // namespace oracle
