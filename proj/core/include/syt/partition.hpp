#ifndef SYT_PARTITION_HPP
#define SYT_PARTITION_HPP

#include <compare>
#include <set>
#include <vector>

#include "syt/errors.hpp"

namespace syt {

/// Integer partition: weakly decreasing positive row lengths, top to bottom.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);

    const std::vector<int>& rows() const noexcept { return rows_; }
    int size() const noexcept { return size_; }
    int row_count() const noexcept { return static_cast<int>(rows_.size()); }

    /// Length of 1-indexed row r; 0 for rows past the last.
    int row_length(int r) const noexcept {
        return (r >= 1 && r <= row_count()) ? rows_[r - 1] : 0;
    }

    bool empty() const noexcept { return rows_.empty(); }

    /// Row-wise containment (Young's lattice order).
    bool contains(const Partition& mu) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

/// 1-indexed (row, column) position inside a shape.
struct CellCoord {
    int row = 0;
    int col = 0;

    friend bool operator==(const CellCoord&, const CellCoord&) = default;
    friend std::strong_ordering operator<=>(const CellCoord&, const CellCoord&) = default;
};

using ShapeSet = std::set<Partition>;

bool coord_in_shape(const Partition& shape, CellCoord c) noexcept;

/// Cells that end both their row and their column, top to bottom.
std::vector<CellCoord> outer_corners(const Partition& shape);

/// Positions where a cell may be appended and the result is still a partition,
/// top to bottom. Defined for every shape including the empty one.
std::vector<CellCoord> addable_corners(const Partition& shape);

struct Regions {
    std::vector<CellCoord> in_cells;  // weakly above and weakly left of c, c included
    std::vector<CellCoord> out_cells; // complement within the shape
};

/// Splits the shape into In(c) and Out(c). Both lists are in row-major order.
Regions regions(const Partition& shape, CellCoord c);

/// All partitions mu of m with mu <= lambda row-wise.
ShapeSet contained_partitions(const Partition& lambda, int m);

/// All partitions of n, in lexicographically decreasing row-list order.
std::vector<Partition> partitions_of(int n);

/// lambda plus one cell at an addable corner.
Partition add_cell(const Partition& lambda, CellCoord c);

/// lambda minus one outer corner.
Partition remove_cell(const Partition& lambda, CellCoord c);

/// The single cell of larger \ smaller, when the difference is exactly one
/// cell; throws inconsistent_diff otherwise.
CellCoord single_cell_difference(const Partition& larger, const Partition& smaller);

} // namespace syt

#endif
