#include <doctest.h>

#include <sstream>

#include "apexion/enumerate.hpp"
#include "apexion/graph6.hpp"
#include "apexion/named_graphs.hpp"

using namespace apexion;

TEST_CASE("format-spec fixed vectors") {
  // hand-derived from the byte layout: n=1 has no edge bits; K2's single
  // bit pads to 100000 = 32, 32+63 = 95 = '_'
  CHECK(graph6_encode(SmallGraph(1)) == "@");
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_decode("@") == SmallGraph(1));
  CHECK(graph6_decode("A_") == complete_graph(2));
}

TEST_CASE("round trip over all order-4 graphs") {
  EnumSpec spec;
  spec.order = 4;
  auto graphs = enumerate_all(spec);
  CHECK(graphs.size() == 11);
  for (const SmallGraph& g : graphs) CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("decode errors carry positions") {
  CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("E~~"), Graph6Error);      // truncated
  CHECK_THROWS_AS(graph6_decode("E~~w?"), Graph6Error);    // overlong
  CHECK_THROWS_AS(graph6_decode("A\x20"), Graph6Error);    // byte below 63
  CHECK_THROWS_AS(graph6_decode("Ao"), Graph6Error);       // nonzero padding
  CHECK_THROWS_AS(graph6_decode("~~~"), Graph6Error);      // multi-byte order
  CHECK_THROWS_AS(graph6_decode("a"), Graph6Error);        // order 34 > 31

  try {
    graph6_decode("A\x20");
    CHECK(false);
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("stream reading") {
  std::istringstream three("E~~w\nA_\n@\n");
  auto r = read_graph6_stream(three);
  CHECK(r.graphs.size() == 3);
  CHECK(r.graphs[0] == complete_graph(6));

  std::istringstream with_header(">>graph6<<A_\n@\n");
  CHECK(read_graph6_stream(with_header).graphs.size() == 2);

  std::istringstream crlf("A_\r\n@\r\n");
  CHECK(read_graph6_stream(crlf).graphs.size() == 2);

  StreamOptions skip;
  skip.fail_fast = false;
  std::istringstream bad("A_\nBOGUS*\n@\n");
  auto rs = read_graph6_stream(bad, skip);
  CHECK(rs.graphs.size() == 2);
  REQUIRE(rs.diagnostics.size() == 1);
  CHECK(rs.diagnostics[0].find("line 2") != std::string::npos);

  std::istringstream bad2("A_\nBOGUS*\n@\n");
  CHECK_THROWS_AS(read_graph6_stream(bad2), Graph6Error);
}

TEST_CASE("write then read preserves order") {
  std::vector<SmallGraph> graphs = {petersen_graph(), complete_graph(3),
                                    complete_bipartite_graph(3, 3)};
  std::ostringstream os;
  write_graph6_stream(os, graphs);
  std::istringstream is(os.str());
  auto r = read_graph6_stream(is);
  REQUIRE(r.graphs.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.graphs[i] == graphs[i]);
}
