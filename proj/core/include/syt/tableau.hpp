#ifndef SYT_TABLEAU_HPP
#define SYT_TABLEAU_HPP

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "syt/partition.hpp"

namespace syt {

using BigInt = boost::multiprecision::cpp_int;

/// Standard Young tableau: a shape filled row-major with distinct entries
/// from [1, alphabet_max], strictly increasing along rows and columns.
/// Immutable after construction. In the common dense case alphabet_max
/// equals the size and the entries are exactly 1..n.
class Tableau {
public:
    Tableau() = default;

    static Tableau validated(Partition shape, std::vector<int> entries, int alphabet_max);

    /// Skips validation; caller guarantees a standard filling.
    static Tableau unchecked(Partition shape, std::vector<int> entries, int alphabet_max);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int size() const noexcept { return shape_.size(); }
    int alphabet_max() const noexcept { return alphabet_max_; }
    bool dense() const noexcept { return alphabet_max_ == size(); }

    int at(CellCoord c) const;
    int at(int row, int col) const { return at(CellCoord{row, col}); }

    std::optional<CellCoord> find(int entry) const noexcept;
    int max_entry() const noexcept;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition shape_;
    std::vector<int> entries_;
    int alphabet_max_ = 0;
};

/// Checked constructor for raw data. Errors: shape_mismatch when the entry
/// count differs from the shape size, alphabet_violation for entries outside
/// [1, alphabet_max], not_standard for duplicate or non-increasing fillings.
Tableau validate_tableau(Partition shape, std::vector<int> entries, int alphabet_max);

/// Visits every element of YT(n) exactly once. Order is deterministic:
/// recursion on YT(n-1) with addable corners visited top to bottom.
void for_each_syt(int n, const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate_syt(int n);

/// Number of standard Young tableaux of size n, via the involution
/// recurrence I(n) = I(n-1) + (n-1) I(n-2). Independent of the enumeration.
BigInt count_syt(int n);

/// A tableau of size n grown by uniformly random corner additions.
/// Deterministic for a fixed generator state; not uniform over YT(n).
Tableau random_syt(int n, std::mt19937& rng);

} // namespace syt

#endif
