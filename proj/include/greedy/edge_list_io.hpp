#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "greedy/hypergraph.hpp"

namespace greedy {

// Edge-list text format:
//   r N m
//   <r ascending 0-based vertex ids>   (m lines)
// Lines starting with '#' and blank lines are ignored.

Hypergraph read_edge_list(std::istream& in);
Hypergraph read_edge_list(const std::filesystem::path& path);

void write_edge_list(const Hypergraph& h, std::ostream& out);
void write_edge_list(const Hypergraph& h, const std::filesystem::path& path);

}  // namespace greedy
