#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "deltaclique/interval.h"
#include "deltaclique/temporal_graph.h"

namespace deltaclique {

// Zero-based whitespace-separated field indices of the time stamp and the
// two endpoints. The default matches "t u v".
struct ColumnSpec {
  std::size_t time = 0;
  std::size_t u = 1;
  std::size_t v = 2;
};

// Parses "t,u,v"-style index lists such as "0,1,2" or "2,0,1".
ColumnSpec parse_column_spec(const std::string& text);

struct EdgeListOptions {
  ColumnSpec columns;
  // Time stamps are integer-divided by this value (>= 1).
  Time time_divisor = 1;
  // When unset, the lifetime is [min t, max t] over all records.
  std::optional<Interval> lifetime;
  std::string resolution_note;
};

struct EdgeListResult {
  TemporalGraph graph;
  std::size_t records = 0;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

// Reads a plain-text edge list. Blank lines and lines starting with '#' are
// skipped; trailing columns are ignored. Vertex ids are assigned in
// lexicographic label order. Throws ParseError.
EdgeListResult parse_edge_list(std::istream& in,
                               const EdgeListOptions& options = {});
EdgeListResult read_edge_list_file(const std::string& path,
                                   const EdgeListOptions& options = {});

// Writes "t u v" lines in the graph's edge order.
void write_edge_list(std::ostream& out, const TemporalGraph& graph);

}  // namespace deltaclique
