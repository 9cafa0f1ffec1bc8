#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "drd/graph.hpp"

namespace drd {

struct Labeling;

/// Thrown on malformed input files; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_)
    {
    }
    int line;
};

/// Edge-list text format: optional '#' comment lines, then "n m", then m
/// lines "u v" with 0-based ids.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes edges as "u v" with u < v, in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Labeling text format: first line "n", second line n values.
Labeling read_labeling(std::istream& in);
Labeling read_labeling_file(const std::string& path);
void write_labeling(std::ostream& out, const Labeling& f);
void write_labeling_file(const std::string& path, const Labeling& f);

} // namespace drd
