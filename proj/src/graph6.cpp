#include "apexion/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace apexion {

namespace {
constexpr int kBias = 63;
constexpr unsigned char kMinByte = 63;
constexpr unsigned char kMaxByte = 126;
}  // namespace

std::string graph6_encode(const SmallGraph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
  return out;
}

SmallGraph graph6_decode(const std::string& record) {
  if (record.empty()) throw Graph6Error("empty record", 0);
  for (std::size_t i = 0; i < record.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(record[i]);
    if (c < kMinByte || c > kMaxByte)
      throw Graph6Error("byte outside graph6 range 63..126", i);
  }
  const int n = static_cast<unsigned char>(record[0]) - kBias;
  if (n == kMaxByte - kBias)
    throw Graph6Error("multi-byte order encoding not supported", 0);
  if (n < 1 || n > SmallGraph::kMaxOrder)
    throw Graph6Error("order " + std::to_string(n) + " outside supported range 1..31", 0);
  const int nbits = n * (n - 1) / 2;
  const std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
  if (record.size() != expect)
    throw Graph6Error("record length " + std::to_string(record.size()) +
                          ", expected " + std::to_string(expect),
                      record.size() < expect ? record.size() : expect);
  SmallGraph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = static_cast<unsigned char>(record[1 + bit / 6]) - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  // padding bits must be zero
  for (int b = nbits; b < 6 * static_cast<int>(record.size() - 1); ++b) {
    int byte = static_cast<unsigned char>(record[1 + b / 6]) - kBias;
    if ((byte >> (5 - b % 6)) & 1)
      throw Graph6Error("nonzero padding bit", 1 + static_cast<std::size_t>(b / 6));
  }
  return g;
}

StreamResult read_graph6_stream(std::istream& in, const StreamOptions& opts) {
  StreamResult result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind(">>graph6<<", 0) == 0) {
      line.erase(0, 10);
      if (line.empty()) continue;
    }
    try {
      result.graphs.push_back(graph6_decode(line));
    } catch (const Graph6Error& e) {
      std::string msg = "line " + std::to_string(lineno) + ": " + e.what();
      if (opts.fail_fast) throw Graph6Error(msg, e.offset());
      result.diagnostics.push_back(msg);
    }
  }
  result.lines_read = lineno;
  return result;
}

StreamResult read_graph6_file(const std::string& path, const StreamOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in, opts);
}

void write_graph6_stream(std::ostream& out, const std::vector<SmallGraph>& graphs) {
  for (const SmallGraph& g : graphs) out << graph6_encode(g) << '\n';
}

void write_graph6_file(const std::string& path, const std::vector<SmallGraph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_graph6_stream(out, graphs);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace apexion
