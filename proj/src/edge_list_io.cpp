#include "greedy/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "greedy/errors.hpp"

namespace greedy {

namespace {

// Splits on spaces/tabs and parses unsigned decimals; throws ParseError.
std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError(lineno, "expected a non-negative integer");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

bool skippable(const std::string& line) {
  if (!line.empty() && line[0] == '#') return true;
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Hypergraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t r = 0, n = 0, m = 0;
  std::vector<VertexId> flat;

  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto nums = parse_numbers(line, lineno);
    if (!have_header) {
      if (nums.size() != 3) throw ParseError(lineno, "header must be `r N m`");
      r = nums[0];
      n = nums[1];
      m = nums[2];
      if (r < 2) throw ParseError(lineno, "uniformity r must be at least 2");
      if (n > UINT32_MAX || m > UINT32_MAX) throw ParseError(lineno, "N or m too large");
      flat.reserve(static_cast<std::size_t>(r * m));
      have_header = true;
      continue;
    }
    if (flat.size() == r * m) {
      throw ParseError(lineno, "more edge lines than the header's m = " + std::to_string(m));
    }
    if (nums.size() != r) {
      throw ParseError(lineno, "edge has " + std::to_string(nums.size()) +
                                   " vertices, expected " + std::to_string(r));
    }
    for (std::size_t j = 0; j < nums.size(); ++j) {
      if (j > 0 && nums[j] <= nums[j - 1]) {
        throw ParseError(lineno, "edge vertices must be strictly increasing");
      }
      if (nums[j] >= n) throw ParseError(lineno, "vertex id out of range");
      flat.push_back(static_cast<VertexId>(nums[j]));
    }
  }
  if (!have_header) throw ParseError(lineno, "missing `r N m` header");
  if (flat.size() != r * m) {
    throw ParseError(lineno, "header promised " + std::to_string(m) + " edges, found " +
                                 std::to_string(flat.size() / r));
  }
  return build_hypergraph_flat(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r),
                               std::move(flat));
}

Hypergraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(const Hypergraph& h, std::ostream& out) {
  out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
  std::string buf;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    buf.clear();
    for (VertexId v : h.edge(e)) {
      if (!buf.empty()) buf += ' ';
      buf += std::to_string(v);
    }
    buf += '\n';
    out << buf;
  }
}

void write_edge_list(const Hypergraph& h, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(h, out);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace greedy
