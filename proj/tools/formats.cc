#include "formats.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "deltaclique/errors.h"

namespace deltaclique::cli {

LabeledClique label_clique(const Clique& clique, const TemporalGraph& graph) {
  LabeledClique out;
  out.interval = clique.interval;
  out.vertices.reserve(clique.vertices.size());
  for (auto v : clique.vertices) out.vertices.push_back(graph.label(v));
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

std::string tsv_line(const LabeledClique& clique) {
  std::string line = std::to_string(clique.interval.start) + '\t' +
                     std::to_string(clique.interval.end) + '\t';
  for (std::size_t i = 0; i < clique.vertices.size(); ++i) {
    if (i > 0) line += ',';
    line += clique.vertices[i];
  }
  return line;
}

CliqueWriter::~CliqueWriter() {
  if (!finished_) finish();
}

void CliqueWriter::write(const LabeledClique& clique) {
  if (format_ == Format::kTsv) {
    out_ << tsv_line(clique) << '\n';
    return;
  }
  nlohmann::json obj;
  obj["vertices"] = clique.vertices;
  obj["interval"] = {clique.interval.start, clique.interval.end};
  out_ << (started_ ? ",\n  " : "[\n  ") << obj.dump();
  started_ = true;
}

void CliqueWriter::finish() {
  finished_ = true;
  if (format_ != Format::kJson) return;
  out_ << (started_ ? "\n]\n" : "[]\n");
}

std::vector<LabeledClique> read_cliques_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid clique JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError(0, "clique JSON must be an array");
  std::vector<LabeledClique> out;
  for (const auto& item : doc) {
    try {
      LabeledClique c;
      c.vertices = item.at("vertices").get<std::vector<std::string>>();
      const auto& iv = item.at("interval");
      if (!iv.is_array() || iv.size() != 2) throw ParseError(0, "interval must be [a, b]");
      c.interval = {iv[0].get<Time>(), iv[1].get<Time>()};
      std::sort(c.vertices.begin(), c.vertices.end());
      out.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("invalid clique record: ") + e.what());
    }
  }
  return out;
}

std::vector<LabeledClique> read_cliques_tsv(std::istream& in) {
  std::vector<LabeledClique> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    LabeledClique c;
    std::string labels;
    if (!(fields >> c.interval.start >> c.interval.end >> labels)) {
      throw ParseError(line_no, "expected 'start<TAB>end<TAB>labels'");
    }
    std::istringstream split(labels);
    for (std::string label; std::getline(split, label, ',');) c.vertices.push_back(label);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace deltaclique::cli
