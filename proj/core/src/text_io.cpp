#include "syt/text_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace syt {

namespace {

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char ch) { return std::isspace(ch); });
}

std::vector<int> parse_int_line(const std::string& line) {
    std::istringstream iss(line);
    std::vector<int> out;
    int v;
    while (iss >> v)
        out.push_back(v);
    if (!iss.eof()) {
        std::string junk;
        iss.clear();
        iss >> junk;
        throw_error(Errc::malformed_key, "unexpected token '" + junk + "'");
    }
    return out;
}

Tableau tableau_from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lens, entries;
    for (const auto& row : rows) {
        lens.push_back(static_cast<int>(row.size()));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    int alphabet = entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end());
    Partition shape(lens); // invalid_partition if the row lengths do not decrease
    return validate_tableau(std::move(shape), std::move(entries), alphabet);
}

} // namespace

std::string format_tableau(const Tableau& t) {
    std::ostringstream oss;
    write_tableau(oss, t);
    return oss.str();
}

void write_tableau(std::ostream& os, const Tableau& t) {
    int idx = 0;
    for (int r = 1; r <= t.shape().row_count(); ++r) {
        for (int c = 1; c <= t.shape().row_length(r); ++c, ++idx) {
            if (c > 1)
                os << ' ';
            os << t.entries()[idx];
        }
        os << '\n';
    }
}

std::vector<Tableau> read_tableaux(std::istream& is) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> block;
    std::string line;
    auto flush = [&] {
        if (!block.empty()) {
            out.push_back(tableau_from_rows(block));
            block.clear();
        }
    };
    while (std::getline(is, line)) {
        if (blank(line))
            flush();
        else
            block.push_back(parse_int_line(line));
    }
    flush();
    return out;
}

Tableau read_tableau(std::istream& is) {
    auto all = read_tableaux(is);
    if (all.empty())
        throw_error(Errc::malformed_key, "no tableau in input");
    return all.front();
}

std::vector<Partition> read_partitions(std::istream& is) {
    std::vector<Partition> out;
    std::string line;
    while (std::getline(is, line)) {
        if (blank(line))
            continue;
        out.emplace_back(parse_int_line(line));
    }
    return out;
}

std::string format_partition(const Partition& p) {
    std::ostringstream oss;
    for (std::size_t i = 0; i < p.rows().size(); ++i) {
        if (i)
            oss << ' ';
        oss << p.rows()[i];
    }
    return oss.str();
}

} // namespace syt
