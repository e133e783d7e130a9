#ifndef SYT_TAQUIN_HPP
#define SYT_TAQUIN_HPP

#include <vector>

#include "syt/tableau.hpp"

namespace syt {

/// Gap trajectory of one jeu de taquin deletion. slide_path holds the gap
/// positions from the deleted cell to the terminal corner inclusive; a
/// one-element path means nothing slid.
struct DeletionTrace {
    int deleted_entry = 0;
    std::vector<CellCoord> slide_path;
    CellCoord terminal_corner;
};

/// T - m: delete entry m, repeatedly slide the smaller of the right/below
/// neighbors into the gap until an outer corner empties, then decrement every
/// entry above m. Maps YT(n, N) to YT(n-1, N-1).
Tableau jdt_delete(const Tableau& t, int m);

/// jdt_delete plus the slide diagnostics; the plain overload stays
/// allocation-light for sweeps.
Tableau jdt_delete(const Tableau& t, int m, DeletionTrace& trace);

/// R_[d, n]: restriction of a dense tableau to the entries [1, d-1]. The
/// removed entries are each the running maximum, so no slides occur and
/// direct truncation applies; equals iterated jdt_delete of the maximum
/// (asserted in debug builds).
Tableau remove_top_range(const Tableau& t, int d);

/// Dual promotion: T - 1 with the vacated corner refilled by n. Satisfies
/// remove_top_range(dual_promotion(T), n) == jdt_delete(T, 1).
Tableau dual_promotion(const Tableau& t);

/// Inverse of dual promotion: remove n, slide the gap up/left choosing the
/// larger neighbor, increment all entries, place 1 in the vacated top-left
/// cell. The inverse-slide rule is certified by round-trip sweeps rather than
/// derived; see the identity checks in the verify module.
Tableau promotion(const Tableau& t);

} // namespace syt

#endif
