// Command line workbench: classify .g6 streams, run the edge-deletion
// cascade, build count tables, expand delta-wye closures, audit order-13
// six-regular graphs for K6 minors, and convert between graph6 and edge
// lists.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apexion/apex.hpp"
#include "apexion/canonical.hpp"
#include "apexion/enumerate.hpp"
#include "apexion/graph6.hpp"
#include "apexion/mmna.hpp"
#include "apexion/named_graphs.hpp"
#include "apexion/parallel.hpp"
#include "apexion/pipeline.hpp"
#include "apexion/transforms.hpp"

namespace fs = std::filesystem;
using namespace apexion;

namespace {

constexpr int kExitIncomplete = 3;  // cascade stopped by max-depth budget

std::vector<SmallGraph> load(const std::string& path, bool skip_bad) {
  StreamOptions opts;
  opts.fail_fast = !skip_bad;
  StreamResult r = read_graph6_file(path, opts);
  for (const std::string& d : r.diagnostics) std::cerr << "warning: " << d << '\n';
  return r.graphs;
}

void write_sorted(const std::string& path, std::vector<SmallGraph> graphs) {
  std::sort(graphs.begin(), graphs.end(),
            [](const SmallGraph& a, const SmallGraph& b) {
              return canonical_form(a).key < canonical_form(b).key;
            });
  write_graph6_file(path, graphs);
}

// "n: u-v u-v ..." -> graph
SmallGraph parse_edge_list(const std::string& line) {
  std::istringstream is(line);
  int n;
  char colon;
  if (!(is >> n >> colon) || colon != ':')
    throw std::runtime_error("expected \"n: u-v u-v ...\"");
  SmallGraph g(n);
  std::string tok;
  while (is >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw std::runtime_error("bad edge " + tok);
    g.add_edge(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"apexion: small-graph apex / forbidden-minor workbench"};
  app.require_subcommand(1);

  std::string input, output;
  int threads = 0;
  std::uint64_t seed = 1;
  int min_degree = 3;
  bool connected_only = false;
  int max_depth = -1;

  auto* classify = app.add_subcommand("classify",
                                      "split a .g6 stream into planar / apex / non-apex files");
  classify->add_option("--input", input, "input .g6 file")->required();
  classify->add_option("--output", output, "output directory")->required();
  classify->add_option("--threads", threads, "worker count (or APEXION_THREADS)");

  auto* cascade_cmd = app.add_subcommand("cascade",
                                         "edge-deletion search for MMNA graphs");
  cascade_cmd->add_option("--input", input, "seed .g6 file")->required();
  cascade_cmd->add_option("--output", output, "output directory")->required();
  cascade_cmd->add_option("--min-degree", min_degree, "discard minors below this degree");
  cascade_cmd->add_flag("--connected-only", connected_only, "drop disconnected graphs");
  cascade_cmd->add_option("--max-depth", max_depth, "edge-deletion rounds (-1: to fixed point)");
  cascade_cmd->add_option("--threads", threads, "worker count (or APEXION_THREADS)");

  auto* table_cmd = app.add_subcommand("table", "count table (order, size) of a .g6 file");
  table_cmd->add_option("--input", input, "input .g6 file")->required();
  table_cmd->add_option("--output", output, "CSV output path (optional)");

  std::string caps = "31,465";
  auto* closure_cmd = app.add_subcommand("closure", "delta-wye / wye-delta closure");
  closure_cmd->add_option("--input", input, "seed .g6 file")->required();
  closure_cmd->add_option("--output", output, "output .g6 file")->required();
  closure_cmd->add_option("--caps", caps, "ORDER,SIZE caps (default 31,465)");

  int audit_count = 0;
  auto* audit_cmd = app.add_subcommand("k6-audit",
                                       "sample 6-regular 2-connected order-13 graphs, report K6 minors");
  audit_cmd->add_option("--count", audit_count, "number of samples")->required();
  audit_cmd->add_option("--seed", seed, "RNG seed");
  audit_cmd->add_option("--output", output, "directory for counterexample .g6 (optional)");

  auto* encode_cmd = app.add_subcommand("encode", "edge-list lines (n: u-v ...) -> .g6");
  encode_cmd->add_option("--input", input, "edge-list text file")->required();
  encode_cmd->add_option("--output", output, ".g6 output path")->required();

  auto* decode_cmd = app.add_subcommand("decode", ".g6 -> edge-list lines");
  decode_cmd->add_option("--input", input, "input .g6 file")->required();

  EnumSpec spec;
  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive generation, one graph per class");
  enum_cmd->add_option("--order", spec.order, "vertex count (<= 12)")->required();
  enum_cmd->add_option("--min-size", spec.min_size, "minimum edge count");
  enum_cmd->add_option("--max-size", spec.max_size, "maximum edge count");
  enum_cmd->add_option("--min-degree", spec.min_degree, "minimum vertex degree");
  enum_cmd->add_flag("--connected-only", spec.connected_only, "connected graphs only");
  enum_cmd->add_option("--output", output, ".g6 output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      fs::create_directories(output);
      ClassifyResult r = classify_graphs(load(input, true), resolve_threads(threads));
      write_sorted(output + "/planar.g6", r.planar);
      write_sorted(output + "/apex.g6", r.apex);
      write_sorted(output + "/nonapex.g6", r.nonapex);
      std::cout << "planar " << r.planar.size() << "\napex " << r.apex.size()
                << "\nnonapex " << r.nonapex.size() << '\n';
    } else if (*cascade_cmd) {
      fs::create_directories(output);
      CascadeConfig config;
      config.min_degree = min_degree;
      config.connected_only = connected_only;
      config.max_depth = max_depth;
      config.threads = resolve_threads(threads);
      config.checkpoint_dir = output + "/checkpoints";
      std::cout << "config: min_degree=" << config.min_degree
                << " connected_only=" << (config.connected_only ? "on" : "off")
                << " max_depth=" << config.max_depth
                << " threads=" << config.threads << '\n';
      CascadeResult r = cascade(load(input, false), config);
      write_graph6_file(output + "/mmna.g6", r.mmna);
      std::ofstream(output + "/table.csv") << r.table.to_csv();
      std::cout << r.table.to_text();
      std::cout << "depth " << r.depth_reached << '\n';
      if (!r.complete) {
        std::cerr << "incomplete: max-depth budget exhausted\n";
        return kExitIncomplete;
      }
    } else if (*table_cmd) {
      CountTable t = count_table(load(input, false));
      std::cout << t.to_text();
      if (!output.empty()) std::ofstream(output) << t.to_csv();
    } else if (*closure_cmd) {
      int order_cap = 31, size_cap = 465;
      if (std::sscanf(caps.c_str(), "%d,%d", &order_cap, &size_cap) != 2)
        throw std::runtime_error("--caps expects ORDER,SIZE");
      auto out = dy_closure(load(input, false), order_cap, size_cap);
      write_graph6_file(output, out);
      std::cout << out.size() << " graphs\n";
    } else if (*audit_cmd) {
      K6AuditResult r = k6_audit(audit_count, seed);
      std::cout << r.with_minor << "/" << r.sampled << " samples contain a K6 minor\n";
      if (!r.counterexamples.empty()) {
        if (!output.empty()) {
          fs::create_directories(output);
          write_sorted(output + "/k6_counterexamples.g6", r.counterexamples);
        }
        return 1;
      }
    } else if (*encode_cmd) {
      std::ifstream in(input);
      if (!in) throw std::runtime_error("cannot open " + input);
      std::vector<SmallGraph> graphs;
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) graphs.push_back(parse_edge_list(line));
      write_graph6_file(output, graphs);
      std::cout << graphs.size() << " graphs\n";
    } else if (*decode_cmd) {
      for (const SmallGraph& g : load(input, false))
        std::cout << to_edge_list_string(g) << '\n';
    } else if (*enum_cmd) {
      std::ofstream out(output);
      if (!out) throw std::runtime_error("cannot open " + output);
      std::size_t count = 0;
      enumerate_all(spec, [&](const SmallGraph& g) {
        out << graph6_encode(g) << '\n';
        ++count;
      });
      std::cout << count << " graphs\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
