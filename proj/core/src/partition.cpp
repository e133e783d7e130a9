#include "syt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace syt {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_partition: return "invalid_partition";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::not_standard: return "not_standard";
    case Errc::alphabet_violation: return "alphabet_violation";
    case Errc::empty_shape: return "empty_shape";
    case Errc::invalid_coord: return "invalid_coord";
    case Errc::size_out_of_range: return "size_out_of_range";
    case Errc::entry_absent: return "entry_absent";
    case Errc::range_invalid: return "range_invalid";
    case Errc::k_too_large: return "k_too_large";
    case Errc::malformed_key: return "malformed_key";
    case Errc::no_candidate: return "no_candidate";
    case Errc::shape_ambiguous: return "shape_ambiguous";
    case Errc::inconsistent_diff: return "inconsistent_diff";
    case Errc::precondition_unmet: return "precondition_unmet";
    case Errc::no_surviving_minor: return "no_surviving_minor";
    case Errc::inconsistent_minors: return "inconsistent_minors";
    case Errc::ceiling_exceeded: return "ceiling_exceeded";
    }
    return "unknown";
}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw_error(Errc::invalid_partition, "row length must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw_error(Errc::invalid_partition, "row lengths must be weakly decreasing");
    }
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

bool Partition::contains(const Partition& mu) const noexcept {
    if (mu.row_count() > row_count())
        return false;
    for (int r = 1; r <= mu.row_count(); ++r)
        if (mu.row_length(r) > row_length(r))
            return false;
    return true;
}

bool coord_in_shape(const Partition& shape, CellCoord c) noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= shape.row_length(c.row);
}

std::vector<CellCoord> outer_corners(const Partition& shape) {
    if (shape.empty())
        throw_error(Errc::empty_shape, "outer corners of the empty shape");
    std::vector<CellCoord> corners;
    for (int r = 1; r <= shape.row_count(); ++r)
        if (shape.row_length(r) > shape.row_length(r + 1))
            corners.push_back({r, shape.row_length(r)});
    return corners;
}

std::vector<CellCoord> addable_corners(const Partition& shape) {
    std::vector<CellCoord> corners;
    for (int r = 1; r <= shape.row_count() + 1; ++r)
        if (r == 1 || shape.row_length(r - 1) > shape.row_length(r))
            corners.push_back({r, shape.row_length(r) + 1});
    return corners;
}

Regions regions(const Partition& shape, CellCoord c) {
    if (!coord_in_shape(shape, c))
        throw_error(Errc::invalid_coord, "cell outside shape");
    Regions out;
    for (int r = 1; r <= shape.row_count(); ++r)
        for (int col = 1; col <= shape.row_length(r); ++col) {
            if (r <= c.row && col <= c.col)
                out.in_cells.push_back({r, col});
            else
                out.out_cells.push_back({r, col});
        }
    return out;
}

namespace {

void contained_rec(const Partition& lambda, int row, int max_len, int remaining,
                   std::vector<int>& prefix, ShapeSet& acc) {
    if (remaining == 0) {
        acc.insert(Partition(prefix));
        return;
    }
    if (row > lambda.row_count())
        return;
    int cap = std::min(max_len, lambda.row_length(row));
    for (int len = std::min(cap, remaining); len >= 1; --len) {
        prefix.push_back(len);
        contained_rec(lambda, row + 1, len, remaining - len, prefix, acc);
        prefix.pop_back();
    }
}

} // namespace

ShapeSet contained_partitions(const Partition& lambda, int m) {
    if (m < 0 || m > lambda.size())
        throw_error(Errc::size_out_of_range, "target size outside [0, |lambda|]");
    ShapeSet acc;
    std::vector<int> prefix;
    contained_rec(lambda, 1, m == 0 ? 0 : lambda.row_length(1), m, prefix, acc);
    return acc;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& acc) {
    if (remaining == 0) {
        acc.emplace_back(prefix);
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, acc);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw_error(Errc::size_out_of_range, "negative size");
    std::vector<Partition> acc;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, acc);
    if (n == 0)
        acc.emplace_back();
    return acc;
}

Partition add_cell(const Partition& lambda, CellCoord c) {
    auto corners = addable_corners(lambda);
    if (std::find(corners.begin(), corners.end(), c) == corners.end())
        throw_error(Errc::invalid_coord, "not an addable corner");
    auto rows = lambda.rows();
    if (c.row == lambda.row_count() + 1)
        rows.push_back(1);
    else
        ++rows[c.row - 1];
    return Partition(rows);
}

Partition remove_cell(const Partition& lambda, CellCoord c) {
    if (lambda.empty())
        throw_error(Errc::empty_shape, "remove from empty shape");
    auto corners = outer_corners(lambda);
    if (std::find(corners.begin(), corners.end(), c) == corners.end())
        throw_error(Errc::invalid_coord, "not an outer corner");
    auto rows = lambda.rows();
    if (--rows[c.row - 1] == 0)
        rows.erase(rows.begin() + (c.row - 1));
    return Partition(rows);
}

CellCoord single_cell_difference(const Partition& larger, const Partition& smaller) {
    if (larger.size() != smaller.size() + 1 || !larger.contains(smaller))
        throw_error(Errc::inconsistent_diff, "shapes do not differ by one cell");
    for (int r = 1; r <= larger.row_count(); ++r)
        if (larger.row_length(r) != smaller.row_length(r))
            return {r, larger.row_length(r)};
    throw_error(Errc::inconsistent_diff, "shapes are equal");
}

} // namespace syt
