#include "deltaclique/edge_list.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <vector>

#include "deltaclique/errors.h"

namespace deltaclique {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::optional<Time> parse_time(std::string_view text) {
  Time value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    return std::nullopt;
  }
  return value;
}

struct Record {
  Time t;
  std::string u;
  std::string v;
};

}  // namespace

ColumnSpec parse_column_spec(const std::string& text) {
  std::vector<std::size_t> idx;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    auto token = rest.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("bad column spec '" + text +
                            "' (expected three indices like 0,1,2)");
    }
    idx.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (idx.size() != 3 || idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) {
    throw InvalidArgument("bad column spec '" + text +
                          "' (expected three distinct indices)");
  }
  return ColumnSpec{idx[0], idx[1], idx[2]};
}

EdgeListResult parse_edge_list(std::istream& in, const EdgeListOptions& options) {
  if (options.time_divisor < 1) throw InvalidArgument("time divisor must be >= 1");
  const auto& cols = options.columns;
  const std::size_t needed = std::max({cols.time, cols.u, cols.v}) + 1;

  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() < needed) {
      throw ParseError(line_no, "expected at least " + std::to_string(needed) +
                                    " fields, found " +
                                    std::to_string(fields.size()));
    }
    auto t = parse_time(fields[cols.time]);
    if (!t) {
      throw ParseError(line_no, "timestamp '" + std::string(fields[cols.time]) +
                                    "' is not a non-negative integer");
    }
    records.push_back({*t / options.time_divisor, std::string(fields[cols.u]),
                       std::string(fields[cols.v])});
  }
  if (records.empty()) {
    throw ParseError(0, "no edges and no explicit vertex set");
  }

  std::map<std::string, VertexId> ids;
  for (const auto& r : records) {
    ids.emplace(r.u, 0);
    ids.emplace(r.v, 0);
  }
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (auto& [label, id] : ids) {
    id = static_cast<VertexId>(labels.size());
    labels.push_back(label);
  }

  EdgeListResult result{TemporalGraph({}, {}, {0, 0}), records.size(), 0, 0};
  Time lo = records.front().t;
  Time hi = lo;
  std::vector<TimeEdge> edges;
  edges.reserve(records.size());
  for (const auto& r : records) {
    lo = std::min(lo, r.t);
    hi = std::max(hi, r.t);
    if (r.u == r.v) {
      ++result.self_loops;
      continue;
    }
    edges.push_back({ids[r.u], ids[r.v], r.t});
  }
  Interval lifetime = options.lifetime.value_or(Interval{lo, hi});
  for (const auto& e : edges) {
    if (!lifetime.contains(e.t)) {
      throw ParseError(0, "edge time " + std::to_string(e.t) +
                              " lies outside the lifetime " + to_string(lifetime));
    }
  }
  result.graph = TemporalGraph(std::move(labels), std::move(edges), lifetime,
                               options.resolution_note);
  result.duplicates = result.graph.duplicates_removed();
  return result;
}

EdgeListResult read_edge_list_file(const std::string& path,
                                   const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const TemporalGraph& graph) {
  for (const auto& e : graph.edges()) {
    out << e.t << ' ' << graph.label(e.u) << ' ' << graph.label(e.v) << '\n';
  }
}

}  // namespace deltaclique
