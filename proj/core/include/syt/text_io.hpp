#ifndef SYT_TEXT_IO_HPP
#define SYT_TEXT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "syt/tableau.hpp"

namespace syt {

// Tableau text format: one tableau is a run of consecutive lines, each line
// the space-separated entries of one row, top row first; tableaux are
// separated by a single blank line. The alphabet is inferred as the largest
// entry.

std::string format_tableau(const Tableau& t);
void write_tableau(std::ostream& os, const Tableau& t);

/// Parses all tableaux from the stream. Validation errors propagate.
std::vector<Tableau> read_tableaux(std::istream& is);

/// Parses exactly one tableau; malformed_key if the stream holds none.
Tableau read_tableau(std::istream& is);

// Partition list format: one partition per line, space-separated row lengths;
// blank lines are skipped.

std::vector<Partition> read_partitions(std::istream& is);
std::string format_partition(const Partition& p);

} // namespace syt

#endif
