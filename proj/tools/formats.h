#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "deltaclique/enumerator.h"
#include "deltaclique/temporal_graph.h"

namespace deltaclique::cli {

// A clique with vertex labels, as written to and read from output files.
struct LabeledClique {
  std::vector<std::string> vertices;  // sorted
  Interval interval;

  friend auto operator<=>(const LabeledClique&, const LabeledClique&) = default;
};

LabeledClique label_clique(const Clique& clique, const TemporalGraph& graph);

// "start<TAB>end<TAB>l1,l2,..." with labels sorted.
std::string tsv_line(const LabeledClique& clique);

// Streams cliques either as TSV lines or as a JSON array of
// {"vertices": [...], "interval": [a, b]} objects.
class CliqueWriter {
 public:
  enum class Format { kTsv, kJson };

  CliqueWriter(std::ostream& out, Format format) : out_(out), format_(format) {}
  CliqueWriter(const CliqueWriter&) = delete;
  CliqueWriter& operator=(const CliqueWriter&) = delete;
  ~CliqueWriter();

  void write(const LabeledClique& clique);
  // Closes the JSON array; called by the destructor if needed.
  void finish();

 private:
  std::ostream& out_;
  Format format_;
  bool started_ = false;
  bool finished_ = false;
};

std::vector<LabeledClique> read_cliques_json(std::istream& in);
std::vector<LabeledClique> read_cliques_tsv(std::istream& in);

}  // namespace deltaclique::cli
