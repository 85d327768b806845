#include "apexion/pipeline.hpp"

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "apexion/apex.hpp"
#include "apexion/canonical.hpp"
#include "apexion/enumerate.hpp"
#include "apexion/graph6.hpp"
#include "apexion/minor.hpp"
#include "apexion/mmna.hpp"
#include "apexion/named_graphs.hpp"
#include "apexion/parallel.hpp"

namespace apexion {

std::uint64_t CountTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [cell, count] : cells_) t += count;
  return t;
}

std::string CountTable::to_text() const {
  std::ostringstream os;
  os << "n / e : count\n";
  for (const auto& [cell, count] : cells_)
    os << cell.first << " / " << cell.second << " : " << count << '\n';
  os << "total : " << total() << '\n';
  return os.str();
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,e,count\n";
  for (const auto& [cell, count] : cells_)
    os << cell.first << ',' << cell.second << ',' << count << '\n';
  return os.str();
}

CountTable count_table(const std::vector<SmallGraph>& graphs) {
  CountTable t;
  for (const SmallGraph& g : dedup(graphs)) t.add(g);
  return t;
}

ClassifyResult classify_graphs(const std::vector<SmallGraph>& graphs,
                               int threads) {
  std::vector<char> kinds(graphs.size(), 0);
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    kinds[i] = static_cast<char>(classify_apex(graphs[i]).kind);
  });
  ClassifyResult out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    switch (static_cast<ApexKind>(kinds[i])) {
      case ApexKind::Planar:
        out.planar.push_back(graphs[i]);
        break;
      case ApexKind::Apex:
        out.apex.push_back(graphs[i]);
        break;
      case ApexKind::NonApex:
        out.nonapex.push_back(graphs[i]);
        break;
    }
  }
  return out;
}

CascadeResult cascade(const std::vector<SmallGraph>& seeds,
                      const CascadeConfig& config) {
  if (config.min_degree < 0) throw std::invalid_argument("min_degree must be >= 0");
  auto admissible = [&](const SmallGraph& g) {
    if (min_degree(g) < config.min_degree) return false;
    if (config.connected_only && !is_connected(g)) return false;
    return true;
  };

  CascadeResult result;
  CanonicalSet visited;
  CanonicalSet mmna_found;
  std::vector<SmallGraph> frontier;
  for (const SmallGraph& g : seeds)
    if (admissible(g) && visited.insert(g)) frontier.push_back(g);

  int depth = 0;
  while (!frontier.empty()) {
    if (!config.checkpoint_dir.empty()) {
      std::filesystem::create_directories(config.checkpoint_dir);
      write_graph6_file(config.checkpoint_dir + "/frontier_depth" +
                            std::to_string(depth) + ".g6",
                        dedup(frontier));
    }
    ClassifyResult classes = classify_graphs(frontier, config.threads);
    if (classes.nonapex.empty()) break;  // all remaining graphs became apex
    MmnaPartition part = mmna_filter(classes.nonapex, config.threads);
    for (const SmallGraph& g : part.mmna) mmna_found.insert(g);
    if (config.max_depth >= 0 && depth >= config.max_depth) {
      result.complete = false;
      break;
    }
    std::vector<SmallGraph> next;
    for (const SmallGraph& g : classes.nonapex) {
      for (const SmallGraph& minor : one_edge_deletions(g))
        if (admissible(minor) && visited.insert(minor)) next.push_back(minor);
    }
    frontier = std::move(next);
    ++depth;
  }
  result.depth_reached = depth;
  result.mmna = mmna_found.sorted_representatives();
  for (const SmallGraph& g : result.mmna) result.table.add(g);
  return result;
}

K6AuditResult k6_audit(int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  K6AuditResult result;
  std::uint64_t sub_seed = seed;
  for (int i = 0; i < count; ++i) {
    SmallGraph g = random_regular(13, 6, sub_seed++);
    while (!is_2_connected(g)) g = random_regular(13, 6, sub_seed++);
    ++result.sampled;
    auto witness = has_k6_minor(g);
    if (witness &&
        check_branch_decomposition(g, complete_graph(6), *witness)) {
      ++result.with_minor;
    } else {
      result.counterexamples.push_back(g);
    }
  }
  return result;
}

}  // namespace apexion
