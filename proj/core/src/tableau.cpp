#include "syt/tableau.hpp"

#include <algorithm>
#include <string>

namespace syt {

namespace {

int row_offset(const Partition& shape, int row) {
    int off = 0;
    for (int r = 1; r < row; ++r)
        off += shape.row_length(r);
    return off;
}

} // namespace

Tableau Tableau::unchecked(Partition shape, std::vector<int> entries, int alphabet_max) {
    Tableau t;
    t.shape_ = std::move(shape);
    t.entries_ = std::move(entries);
    t.alphabet_max_ = alphabet_max;
    return t;
}

Tableau Tableau::validated(Partition shape, std::vector<int> entries, int alphabet_max) {
    return validate_tableau(std::move(shape), std::move(entries), alphabet_max);
}

int Tableau::at(CellCoord c) const {
    if (!coord_in_shape(shape_, c))
        throw_error(Errc::invalid_coord, "cell outside shape");
    return entries_[row_offset(shape_, c.row) + c.col - 1];
}

std::optional<CellCoord> Tableau::find(int entry) const noexcept {
    int idx = 0;
    for (int r = 1; r <= shape_.row_count(); ++r)
        for (int c = 1; c <= shape_.row_length(r); ++c, ++idx)
            if (entries_[idx] == entry)
                return CellCoord{r, c};
    return std::nullopt;
}

int Tableau::max_entry() const noexcept {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

Tableau validate_tableau(Partition shape, std::vector<int> entries, int alphabet_max) {
    if (static_cast<int>(entries.size()) != shape.size())
        throw_error(Errc::shape_mismatch, "entry count " + std::to_string(entries.size()) +
                                              " != shape size " + std::to_string(shape.size()));
    if (alphabet_max < shape.size())
        throw_error(Errc::alphabet_violation, "alphabet smaller than shape");
    for (int e : entries)
        if (e < 1 || e > alphabet_max)
            throw_error(Errc::alphabet_violation, "entry " + std::to_string(e) +
                                                      " outside [1, " +
                                                      std::to_string(alphabet_max) + "]");
    {
        auto sorted = entries;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw_error(Errc::not_standard, "duplicate entry");
    }
    int idx = 0;
    for (int r = 1; r <= shape.row_count(); ++r) {
        int len = shape.row_length(r);
        for (int c = 1; c <= len; ++c, ++idx) {
            if (c > 1 && entries[idx] <= entries[idx - 1])
                throw_error(Errc::not_standard, "row not increasing");
            if (r > 1) {
                int above = entries[row_offset(shape, r - 1) + c - 1];
                if (entries[idx] <= above)
                    throw_error(Errc::not_standard, "column not increasing");
            }
        }
    }
    return Tableau::unchecked(std::move(shape), std::move(entries), alphabet_max);
}

namespace {

Tableau extend(const Tableau& t, CellCoord corner) {
    Partition grown = add_cell(t.shape(), corner);
    std::vector<int> entries;
    entries.reserve(t.size() + 1);
    int idx = 0;
    for (int r = 1; r <= grown.row_count(); ++r) {
        int old_len = t.shape().row_length(r);
        for (int c = 1; c <= old_len; ++c, ++idx)
            entries.push_back(t.entries()[idx]);
        if (r == corner.row)
            entries.push_back(t.size() + 1);
    }
    return Tableau::unchecked(std::move(grown), std::move(entries), t.size() + 1);
}

void enumerate_rec(const Tableau& t, int n, const std::function<void(const Tableau&)>& visit) {
    if (t.size() == n) {
        visit(t);
        return;
    }
    for (CellCoord corner : addable_corners(t.shape()))
        enumerate_rec(extend(t, corner), n, visit);
}

} // namespace

void for_each_syt(int n, const std::function<void(const Tableau&)>& visit) {
    if (n < 0)
        throw_error(Errc::size_out_of_range, "negative size");
    enumerate_rec(Tableau(), n, visit);
}

std::vector<Tableau> enumerate_syt(int n) {
    std::vector<Tableau> out;
    for_each_syt(n, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

BigInt count_syt(int n) {
    if (n < 0)
        throw_error(Errc::size_out_of_range, "negative size");
    BigInt prev2 = 1, prev1 = 1; // I(0), I(1)
    if (n <= 1)
        return 1;
    BigInt cur = 0;
    for (int i = 2; i <= n; ++i) {
        cur = prev1 + BigInt(i - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

Tableau random_syt(int n, std::mt19937& rng) {
    if (n < 0)
        throw_error(Errc::size_out_of_range, "negative size");
    Tableau t;
    for (int i = 0; i < n; ++i) {
        auto corners = addable_corners(t.shape());
        std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
        t = extend(t, corners[pick(rng)]);
    }
    return t;
}

} // namespace syt
