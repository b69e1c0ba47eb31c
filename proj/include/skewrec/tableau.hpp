#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "skewrec/execution.hpp"
#include "skewrec/partition.hpp"

namespace skewrec {

/// A column of a skew diagram, described by the rows it occupies. Rows are
/// 1-based. Rows 1..first_row-1 hold skew boxes and first_row..last_row hold
/// ordinary boxes; a column of skew boxes only has last_row == first_row - 1.
struct ColumnSignature {
    int first_row = 1;
    int last_row = 0;

    int skew_height() const noexcept { return first_row - 1; }
    int height() const noexcept { return last_row - first_row + 1; }

    friend bool operator==(const ColumnSignature&, const ColumnSignature&) = default;
    friend auto operator<=>(const ColumnSignature&, const ColumnSignature&) = default;
};

class SkewShape {
public:
    SkewShape() = default;
    /// Throws std::invalid_argument unless outer contains inner.
    SkewShape(Partition outer, Partition inner = {});

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    std::size_t rows() const noexcept { return outer_.length(); }
    int columns() const noexcept { return outer_[0]; }
    int row_length(std::size_t row) const noexcept { return outer_[row] - inner_[row]; }
    int boxes() const noexcept { return outer_.size() - inner_.size(); }
    int skew_boxes() const noexcept { return inner_.size(); }

    /// Signature of the 1-based column `col`, 1 <= col <= columns().
    ColumnSignature column(int col) const;
    std::vector<ColumnSignature> column_signatures() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Shape-level insertion: (outer1 + outer2)/(inner1 + inner2).
SkewShape insert(const SkewShape& a, const SkewShape& b);

/// (kappa + k mu)/(lambda + k nu); throws if the result is not a skew shape.
SkewShape stretched_shape(const Partition& kappa, const Partition& lambda,
                          const Partition& mu, const Partition& nu, int k);

/// A filling of the ordinary boxes of a skew shape with letters 1..n.
/// Construction checks only that row lengths match the shape; use
/// is_valid_ssyt for the semistandard conditions.
class Tableau {
public:
    Tableau() = default;
    Tableau(SkewShape shape, int n, std::vector<std::vector<int>> rows);

    static Tableau empty(int n) { return Tableau(SkewShape{}, n, {}); }

    const SkewShape& shape() const noexcept { return shape_; }
    int alphabet() const noexcept { return n_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int boxes() const noexcept { return shape_.boxes(); }

    /// Entry at 0-based row and 1-based column, or 0 for skew/absent boxes.
    int entry(std::size_t row, int col) const noexcept;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    int n_ = 1;
    std::vector<std::vector<int>> rows_;
};

/// One column of a tableau viewed as a tableau of its own.
struct ColumnView {
    int col_index = 0;  ///< 1-based
    ColumnSignature rows;
    std::vector<int> entries;

    friend bool operator==(const ColumnView&, const ColumnView&) = default;
};

bool is_valid_ssyt(const Tableau& t);

/// All semistandard tableaux of `shape` with entries in 1..n, sorted
/// lexicographically on their row-major entry lists.
std::vector<Tableau> enumerate(const SkewShape& shape, int n, Execution exec = Execution::parallel);

/// Number of semistandard tableaux of `shape` with entries in 1..n.
long long count_tableaux(const SkewShape& shape, int n);

IntVector weight(const Tableau& t);

/// Tableau insertion: concatenate rows, skew boxes first, then sort each row.
Tableau insert(const Tableau& a, const Tableau& b);

/// Columns of every column position of the diagram, left to right,
/// including columns made only of skew boxes.
std::vector<ColumnView> columns(const Tableau& t);

/// The column as a tableau of shape (1^last_row)/(1^(first_row-1)).
Tableau column_tableau(const ColumnView& c, int n);

/// True when the column signatures of `small` form a sub-multiset of those of `big`.
bool sits_inside(const SkewShape& small, const SkewShape& big);

/// Splits t = t1 (x) t2 with shape(t1) == small, taking the leftmost
/// column of each required signature. Throws std::invalid_argument unless
/// sits_inside(small, t.shape()).
std::pair<Tableau, Tableau> decompose(const Tableau& t, const SkewShape& small);

/// Least k >= 0 at which (kappa + k mu)/(lambda + k nu) is a valid shape.
int first_valid_stretch(const Partition& kappa, const Partition& lambda,
                        const Partition& mu, const Partition& nu);

/// Least r >= first_valid_stretch such that mu/nu sits inside the stretched
/// shape at every index in r+1 .. B+1, where B = kappa'_1 + 1 for the
/// family normalized to start at its first valid index. Beyond B every
/// stretched shape contains mu/nu, so r is where the decomposition into
/// mu/nu columns starts to be available for all later shapes.
int stabilization_index(const Partition& kappa, const Partition& lambda,
                        const Partition& mu, const Partition& nu);

}  // namespace skewrec
