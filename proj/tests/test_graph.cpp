#include "ackkit/constructions.hpp"
#include "ackkit/graph.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace ackkit;

namespace {

Graph k2() { return Graph::from_edges(2, {{1, 2}}); }

std::string parse_error_message(auto&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

std::size_t parse_error_position(auto&& body) {
  try {
    body();
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected ParseError");
  return 0;
}

// The 14-vertex matrix as printed alongside its edge list.
const int kG14Matrix[14][14] = {
    {0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
    {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0},
    {1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1},
    {1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
};

}  // namespace

TEST_CASE("vertex sets are sorted and unique") {
  const VertexSet s{5, 1, 3, 1};
  CHECK(s.members() == std::vector<int>{1, 3, 5});
  CHECK(s.to_string() == "{1,3,5}");
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(VertexSet{1, 2} < VertexSet{1, 3});
}

TEST_CASE("from_edges") {
  const Graph g = k2();
  CHECK(g.order() == 2);
  CHECK(g.edge_count() == 1);

  const Graph nut7 = Graph::from_edges(7, {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 5}, {3, 4}, {5, 7}, {6, 7}});
  CHECK(nut7 == catalog("NUT7").graph);

  CHECK(Graph::from_edges(3, {{2, 1}, {1, 2}}).edge_count() == 1);

  const auto loop = parse_error_message([] { Graph::from_edges(3, {{1, 1}}); });
  CHECK(loop.find("self-loop") != std::string::npos);
  CHECK(loop.find("{1,1}") != std::string::npos);
  const auto range = parse_error_message([] { Graph::from_edges(3, {{1, 4}}); });
  CHECK(range.find("{1,4}") != std::string::npos);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
}

TEST_CASE("adjacency matrix") {
  const QMatrix a = adjacency_matrix(k2());
  CHECK(a(0, 0) == 0);
  CHECK(a(0, 1) == 1);
  CHECK(a(1, 0) == 1);
  CHECK(a(1, 1) == 0);

  const QMatrix s7 = adjacency_matrix(satellite(3).graph);
  Rational row_sum = 0;
  for (const auto& x : s7.row(0)) row_sum += x;
  CHECK(row_sum == 6);
  CHECK(s7.is_symmetric());

  const QMatrix g14 = adjacency_matrix(catalog("G14").graph);
  for (int r = 0; r < 14; ++r)
    for (int c = 0; c < 14; ++c) CHECK(g14(r, c) == kG14Matrix[r][c]);
}

TEST_CASE("degrees and neighbourhoods") {
  CHECK(k2().degree_sequence() == std::vector<int>{1, 1});
  CHECK(k2().neighborhood(1) == VertexSet{2});
  CHECK(catalog("E8").graph.degree_sequence() == std::vector<int>{2, 4, 4, 4, 4, 5, 6, 7});
  // Degrees of the printed 14-vertex matrix. The caption sequence
  // {2,2,2,2,4,4,4,4,4,4,4,5,6,13} belongs to the k = 7 drawing placed next
  // to it, which is a different graph.
  CHECK(catalog("G14").graph.degree_sequence() == std::vector<int>{2, 2, 2, 2, 3, 4, 4, 4, 4, 4, 4, 5, 6, 12});
  CHECK_THROWS_AS(k2().degree(3), GraphError);
}

TEST_CASE("structural predicates") {
  const auto k = structural_predicates(k2());
  CHECK(k.connected);
  CHECK(k.bipartite);
  CHECK(k.regular);
  CHECK(k.diameter == 1);
  CHECK_FALSE(k.every_vertex_on_triangle);
  CHECK_FALSE(k.every_edge_on_triangle);

  const auto s = structural_predicates(satellite(3).graph);
  CHECK(s.connected);
  CHECK_FALSE(s.bipartite);
  CHECK_FALSE(s.regular);
  CHECK(s.diameter == 2);
  CHECK(s.every_vertex_on_triangle);
  CHECK(s.every_edge_on_triangle);

  CHECK(structural_predicates(catalog("PRISM6").graph).regular);

  const auto split = structural_predicates(Graph::from_edges(4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(split.connected);
  CHECK_FALSE(split.diameter.has_value());

  CHECK(structural_predicates(path_graph(5)).diameter == 4);
  CHECK(structural_predicates(cycle_graph(7)).bipartite == false);
  CHECK(structural_predicates(cycle_graph(8)).bipartite);
}

TEST_CASE("with_vertex and without_vertex") {
  const Graph p3 = path_graph(3);
  const Graph star = p3.with_vertex(VertexSet{2});
  CHECK(star.order() == 4);
  CHECK(star.degree(2) == 3);
  CHECK(star.without_vertex(4) == p3);
  CHECK(path_graph(4).without_vertex(1) == p3);
  CHECK_THROWS_AS(p3.with_vertex(VertexSet{4}), GraphError);
}

TEST_CASE("graph6 examples") {
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(emit_graph6(k2()) == "A_");
  const Graph empty3 = parse_graph6("B?");
  CHECK(empty3.order() == 3);
  CHECK(empty3.edge_count() == 0);
  CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("graph6 rejections carry byte offsets") {
  CHECK(parse_error_position([] { parse_graph6("Bww"); }) == 2);  // length
  CHECK(parse_error_position([] { parse_graph6("Bx"); }) == 1);   // padding bits
  CHECK(parse_error_position([] { parse_graph6("B "); }) == 1);   // out of range; trailing space stripped
  CHECK(parse_error_position([] { parse_graph6("B\x01"); }) == 1);
  CHECK(parse_error_position([] { parse_graph6("?"); }) == 0);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("~??~"), ParseError);  // long form for n < 63
}

TEST_CASE("graph6 long form") {
  const Graph c70 = cycle_graph(70);
  const std::string text = emit_graph6(c70);
  CHECK(text.substr(0, 4) == "~?@E");  // 70 = 000000 000001 000110
  CHECK(parse_graph6(text) == c70);
}

TEST_CASE("graph6 and edge-list round trip on random graphs") {
  std::mt19937_64 rng(0x96);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> order(1, 40);
    const Graph g = testing::random_graph(rng, order(rng), 0.3);
    CHECK(parse_graph6(emit_graph6(g)) == g);
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
  }
}

TEST_CASE("edge-list examples") {
  CHECK(parse_edge_list("n 2\n1 2") == k2());
  CHECK(parse_edge_list("# comment\nn 3   # three\n\n1 2\n2 3 # path\n") == path_graph(3));

  const std::string g14 =
      "n 14\n1 2\n1 3\n1 4\n1 6\n1 7\n1 8\n1 9\n1 10\n1 11\n1 12\n1 13\n1 14\n2 3\n2 10\n2 11\n3 4\n3 5\n"
      "4 5\n4 12\n5 6\n6 7\n6 8\n6 13\n7 8\n7 9\n8 9\n8 10\n8 14\n9 10\n";
  CHECK(parse_edge_list(g14) == catalog("G14").graph);

  CHECK(parse_error_position([] { parse_edge_list("n 3\n1 4"); }) == 2);
  CHECK(parse_error_message([] { parse_edge_list("n 3\n1 4"); }).find("out of range") != std::string::npos);
  CHECK(parse_error_position([] { parse_edge_list("n 3\n1 2\n2 2"); }) == 3);
  CHECK(parse_error_position([] { parse_edge_list("1 2"); }) == 1);
  CHECK(parse_error_position([] { parse_edge_list("n 3\n1 x"); }) == 2);
  CHECK(parse_error_position([] { parse_edge_list("n 3\n1 2 3"); }) == 2);
  CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
}

TEST_CASE("graph files") {
  const auto dir = std::filesystem::temp_directory_path() / "ackkit_graph_files";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "k3.g6") << "Bw\n";
    std::ofstream(dir / "k2.edges") << "n 2\n1 2\n";
    std::ofstream(dir / "bad.g6") << "Bx\n";
  }
  CHECK(load_graph_file(dir / "k3.g6") == complete_graph(3));
  CHECK(load_graph_file(dir / "k2.edges") == k2());
  const auto msg = parse_error_message([&] { load_graph_file(dir / "bad.g6"); });
  CHECK(msg.find("bad.g6") != std::string::npos);
  CHECK_THROWS_AS(load_graph_file(dir / "missing.g6"), GraphError);
  std::filesystem::remove_all(dir);
}
