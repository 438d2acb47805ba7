#include "commands.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "deltaclique/degeneracy.h"
#include "deltaclique/edge_list.h"
#include "deltaclique/enumerator.h"
#include "deltaclique/errors.h"
#include "deltaclique/oracle.h"
#include "deltaclique/pivoting.h"
#include "deltaclique/static_graph.h"
#include "formats.h"

namespace deltaclique::cli {
namespace {

struct InputFlags {
  std::string input;
  std::string columns = "0,1,2";
  Time time_divisor = 1;
  std::string lifetime;
  std::string name;

  void attach(CLI::App& cmd) {
    cmd.add_option("--input,-i", input, "Edge list file (t u v per line)")->required();
    cmd.add_option("--columns", columns,
                   "Field indices of t,u,v (zero-based, default 0,1,2)");
    cmd.add_option("--time-divisor", time_divisor,
                   "Integer divisor applied to every timestamp")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--lifetime", lifetime, "Explicit lifetime a:b");
    cmd.add_option("--name", name, "Instance name for reports (default: file stem)");
  }

  std::string instance() const {
    return name.empty() ? std::filesystem::path(input).stem().string() : name;
  }
};

Interval parse_lifetime(const std::string& text) {
  auto colon = text.find(':');
  Interval out;
  auto parse = [&](std::string_view s, Time& value) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  std::string_view sv = text;
  if (colon == std::string::npos || !parse(sv.substr(0, colon), out.start) ||
      !parse(sv.substr(colon + 1), out.end) || out.start < 0 || out.start > out.end) {
    throw InvalidArgument("bad --lifetime '" + text + "' (expected a:b with 0 <= a <= b)");
  }
  return out;
}

EdgeListResult load(const InputFlags& flags) {
  EdgeListOptions options;
  options.columns = parse_column_spec(flags.columns);
  options.time_divisor = flags.time_divisor;
  if (!flags.lifetime.empty()) options.lifetime = parse_lifetime(flags.lifetime);
  return read_edge_list_file(flags.input, options);
}

struct DeltaFlags {
  std::vector<Time> deltas;
  std::vector<int> exponents;

  void attach(CLI::App& cmd) {
    auto* d = cmd.add_option("--delta", deltas, "Delta in time steps (comma list)")
                  ->delimiter(',');
    auto* e = cmd.add_option("--delta-exp", exponents,
                             "Delta as scaled exponent i (comma list)")
                  ->delimiter(',');
    d->excludes(e);
  }

  // Resolves exponents through scaled_delta and echoes each resolution.
  std::vector<Time> resolve(const TemporalGraph& graph, std::ostream& err) const {
    if (!exponents.empty()) {
      std::vector<Time> out;
      for (int i : exponents) {
        Time d = scaled_delta(graph, i);
        err << "delta=" << d << " (exponent " << i << ")\n";
        out.push_back(d);
      }
      return out;
    }
    return deltas;
  }
};

PivotStrategy strategy_from(const std::string& name) {
  auto s = parse_pivot_strategy(name);
  if (!s) {
    throw InvalidArgument("unknown pivot strategy '" + name +
                          "' (expected none, 1a, 1g, ma, mg or mm)");
  }
  return *s;
}

// Opens --out when given, otherwise forwards to the default stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void print_report(std::ostream& err, const std::string& instance,
                  const TemporalGraph& graph, Time delta, PivotStrategy strategy,
                  const RunStats& stats) {
  err << "instance=" << instance << " vertices=" << graph.vertex_count()
      << " edges=" << graph.edge_count() << " lifetime=" << graph.lifetime()
      << " delta=" << delta << " strategy=" << to_string(strategy)
      << " cliques=" << stats.clique_count << " max_size=" << stats.max_clique_size
      << " max_lifetime=" << stats.max_lifetime
      << " recursive_calls=" << stats.recursive_calls
      << " pivot_skips=" << stats.pivot_skips << " time_s=" << std::fixed
      << std::setprecision(3) << stats.wall_time_seconds << std::defaultfloat << '\n';
}

struct EnumerateCommand {
  InputFlags input;
  DeltaFlags delta;
  std::string out;
  std::string format = "tsv";
  std::string pivot = "1g";
  std::size_t min_size = 1;
  bool stream = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("enumerate", "Enumerate all maximal delta-cliques");
    input.attach(*cmd);
    delta.attach(*cmd);
    cmd->add_option("--out,-o", out, "Output file (default: standard output)");
    cmd->add_option("--format", format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}, CLI::ignore_case));
    cmd->add_option("--pivot", pivot, "none, 1a, 1g, ma, mg or mm");
    cmd->add_option("--min-size", min_size, "Only write cliques with at least this many vertices");
    cmd->add_flag("--stream", stream, "Write cliques in discovery order instead of canonical order");
  }

  int execute(std::ostream& stdout_stream, std::ostream& err) {
    const auto loaded = load(input);
    const auto& graph = loaded.graph;
    const PivotStrategy strategy = strategy_from(pivot);
    if (delta.deltas.size() + delta.exponents.size() != 1) {
      throw InvalidArgument("enumerate needs exactly one --delta or --delta-exp value");
    }
    const Time d = delta.resolve(graph, err).front();

    OutputTarget target(out, stdout_stream);
    const auto fmt = format == "json" || format == "JSON" ? CliqueWriter::Format::kJson
                                                          : CliqueWriter::Format::kTsv;
    CliqueWriter writer(target.get(), fmt);
    RunStats stats;
    if (stream) {
      stats = enumerate_maximal_cliques(graph, d, strategy, [&](const Clique& c) {
        if (c.vertices.size() >= min_size) writer.write(label_clique(c, graph));
      });
    } else {
      std::vector<Clique> kept;
      stats = enumerate_maximal_cliques(graph, d, strategy, [&](const Clique& c) {
        if (c.vertices.size() >= min_size) kept.push_back(c);
      });
      sort_canonical(kept, graph);
      for (const auto& c : kept) writer.write(label_clique(c, graph));
    }
    writer.finish();
    print_report(err, input.instance(), graph, d, strategy, stats);
    return kExitOk;
  }
};

struct DegeneracyCommand {
  InputFlags input;
  DeltaFlags delta;
  bool header = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "degeneracy", "Print static degeneracy and delta-slice degeneracy per delta");
    input.attach(*cmd);
    delta.attach(*cmd);
    cmd->add_flag("--header", header, "Print a column header line first");
  }

  int execute(std::ostream& out, std::ostream& err) {
    const auto loaded = load(input);
    const auto& graph = loaded.graph;
    const auto deltas = delta.resolve(graph, err);
    if (header) {
      out << "instance\tstatic";
      for (Time d : deltas) out << "\tdelta=" << d;
      out << '\n';
    }
    out << input.instance() << '\t'
        << degeneracy_ordering(underlying_static_graph(graph)).degeneracy;
    for (Time d : deltas) out << '\t' << delta_slice_degeneracy(graph, d);
    out << '\n';
    return kExitOk;
  }
};

struct VerifyCommand {
  std::size_t vertices = 5;
  Time span = 10;
  std::vector<Time> deltas{2};
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<double> probabilities{0.05, 0.15, 0.3};
  std::string pivot = "1g";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "verify", "Compare the enumerator with the brute-force oracle on random graphs");
    cmd->add_option("--vertices", vertices, "Vertices per random graph (<= 8)");
    cmd->add_option("--span", span, "Lifetime [0, span] (<= 16)");
    cmd->add_option("--delta", deltas, "Delta values (comma list)")->delimiter(',');
    cmd->add_option("--trials", trials, "Number of random graphs");
    cmd->add_option("--seed", seed, "Base seed");
    cmd->add_option("--prob", probabilities,
                    "Edge probabilities, cycled over trials (default 0.05,0.15,0.3)")
        ->delimiter(',');
    cmd->add_option("--pivot", pivot, "Strategy to check, or 'all'");
  }

  int execute(std::ostream& out, std::ostream& err) {
    std::vector<PivotStrategy> strategies;
    if (pivot == "all" || pivot == "ALL") {
      strategies.assign(std::begin(kAllPivotStrategies), std::end(kAllPivotStrategies));
    } else {
      strategies.push_back(strategy_from(pivot));
    }
    if (probabilities.empty()) throw InvalidArgument("--prob needs at least one value");
    std::size_t ok = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      oracle::GeneratorParams params{vertices, span,
                                     probabilities[trial % probabilities.size()],
                                     seed + trial};
      const auto graph = oracle::random_temporal_graph(params);
      bool trial_ok = true;
      for (Time d : deltas) {
        const auto expected = oracle::brute_force_cliques(graph, d);
        for (auto strategy : strategies) {
          auto actual = collect_maximal_cliques(graph, d, strategy);
          std::sort(actual.begin(), actual.end(), [](const Clique& x, const Clique& y) {
            if (x.interval != y.interval) return x.interval < y.interval;
            return x.vertices < y.vertices;
          });
          if (actual == expected) continue;
          trial_ok = false;
          report_mismatch(err, graph, params, d, strategy, expected, actual);
          break;
        }
        if (!trial_ok) break;
      }
      if (!trial_ok) {
        out << ok << "/" << trials << " OK before mismatch\n";
        return kExitMismatch;
      }
      ++ok;
    }
    out << ok << "/" << trials << " OK\n";
    return kExitOk;
  }

  static void report_mismatch(std::ostream& err, const TemporalGraph& graph,
                              const oracle::GeneratorParams& params, Time d,
                              PivotStrategy strategy, const std::vector<Clique>& expected,
                              const std::vector<Clique>& actual) {
    err << "mismatch: seed=" << params.seed << " prob=" << params.edge_probability
        << " delta=" << d << " strategy=" << to_string(strategy) << '\n';
    std::size_t i = 0;
    while (i < expected.size() && i < actual.size() && expected[i] == actual[i]) ++i;
    if (i < expected.size()) {
      err << "  oracle has:     " << tsv_line(label_clique(expected[i], graph)) << '\n';
    }
    if (i < actual.size()) {
      err << "  enumerator has: " << tsv_line(label_clique(actual[i], graph)) << '\n';
    }
  }
};

struct GenCommand {
  oracle::GeneratorParams params;
  std::string out;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen", "Write a random temporal graph as an edge list");
    cmd->add_option("--vertices", params.vertex_count, "Number of vertices");
    cmd->add_option("--span", params.span, "Lifetime [0, span]");
    cmd->add_option("--prob", params.edge_probability, "Edge probability per pair and step")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", params.seed, "Random seed");
    cmd->add_option("--out,-o", out, "Output file (default: standard output)");
  }

  int execute(std::ostream& stdout_stream, std::ostream&) {
    const auto graph = oracle::random_temporal_graph(params);
    OutputTarget target(out, stdout_stream);
    auto& os = target.get();
    os << "# vertices=" << params.vertex_count << " span=" << params.span
       << " prob=" << params.edge_probability << " seed=" << params.seed
       << " lifetime=" << graph.lifetime().start << ':' << graph.lifetime().end << '\n';
    write_edge_list(os, graph);
    return kExitOk;
  }
};

struct ScaleDeltaCommand {
  InputFlags input;
  std::size_t edges = 0;
  Time lifetime_length = 0;
  std::vector<int> exponents;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "scale-delta", "Print floor(5^i * lifetime / (5 * edges)) for each exponent");
    cmd->add_option("--input,-i", input.input, "Edge list file");
    cmd->add_option("--columns", input.columns, "Field indices of t,u,v");
    cmd->add_option("--time-divisor", input.time_divisor, "Timestamp divisor")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--lifetime", input.lifetime, "Explicit lifetime a:b");
    auto* m = cmd->add_option("--edges", edges, "Edge count (instead of --input)");
    auto* l = cmd->add_option("--lifetime-length", lifetime_length,
                              "Lifetime length (instead of --input)");
    m->needs(l);
    l->needs(m);
    cmd->add_option("--exp", exponents, "Exponents i (comma list)")
        ->delimiter(',')
        ->required();
  }

  int execute(std::ostream& out, std::ostream&) {
    std::size_t m = edges;
    Time length = lifetime_length;
    if (!input.input.empty()) {
      const auto loaded = load(input);
      m = loaded.graph.edge_count();
      length = loaded.graph.lifetime().length();
    } else if (m == 0) {
      throw InvalidArgument("scale-delta needs --input or --edges with --lifetime-length");
    }
    for (int i : exponents) out << scaled_delta(m, length, i) << '\n';
    return kExitOk;
  }
};

struct StatsCommand {
  InputFlags input;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("stats", "Print vertex, edge and lifetime statistics");
    input.attach(*cmd);
  }

  int execute(std::ostream& out, std::ostream&) {
    const auto loaded = load(input);
    const auto& g = loaded.graph;
    out << g.vertex_count() << " vertices, " << g.edge_count() << " edges, lifetime "
        << g.lifetime() << '\n';
    if (loaded.self_loops > 0 || loaded.duplicates > 0) {
      out << "dropped " << loaded.self_loops << " self-loops, " << loaded.duplicates
          << " duplicate edges\n";
    }
    return kExitOk;
  }
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal delta-clique enumeration in temporal graphs", "deltaclique"};
  app.require_subcommand(1);

  EnumerateCommand enumerate;
  DegeneracyCommand degeneracy;
  VerifyCommand verify;
  GenCommand gen;
  ScaleDeltaCommand scale;
  StatsCommand stats;
  enumerate.attach(app);
  degeneracy.attach(app);
  verify.attach(app);
  gen.attach(app);
  scale.attach(app);
  stats.attach(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("enumerate")) return enumerate.execute(out, err);
    if (app.got_subcommand("degeneracy")) return degeneracy.execute(out, err);
    if (app.got_subcommand("verify")) return verify.execute(out, err);
    if (app.got_subcommand("gen")) return gen.execute(out, err);
    if (app.got_subcommand("scale-delta")) return scale.execute(out, err);
    if (app.got_subcommand("stats")) return stats.execute(out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace deltaclique::cli
