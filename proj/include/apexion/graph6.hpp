#ifndef APEXION_GRAPH6_HPP
#define APEXION_GRAPH6_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "apexion/small_graph.hpp"

namespace apexion {

/// Malformed graph6 input; `offset` is the byte position of the fault.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// graph6 record: order byte (63+n), then the upper adjacency triangle in
/// column order, packed big-endian six bits per byte, each byte offset by 63.
std::string graph6_encode(const SmallGraph& g);
SmallGraph graph6_decode(const std::string& record);

struct StreamOptions {
  bool fail_fast = true;  // otherwise skip bad lines and collect diagnostics
};

struct StreamResult {
  std::vector<SmallGraph> graphs;
  std::vector<std::string> diagnostics;  // one per skipped line, with line number
  std::size_t lines_read = 0;
};

/// Reads newline-delimited records; a leading ">>graph6<<" header is skipped.
/// CRLF tolerated. In fail-fast mode the first bad line throws Graph6Error
/// with the line number folded into the message.
StreamResult read_graph6_stream(std::istream& in, const StreamOptions& opts = {});
StreamResult read_graph6_file(const std::string& path, const StreamOptions& opts = {});

void write_graph6_stream(std::ostream& out, const std::vector<SmallGraph>& graphs);
void write_graph6_file(const std::string& path, const std::vector<SmallGraph>& graphs);

}  // namespace apexion

#endif
