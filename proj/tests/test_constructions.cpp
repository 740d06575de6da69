#include "ackkit/constructions.hpp"
#include "ackkit/linalg.hpp"
#include "ackkit/spectral.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ackkit;

namespace {

std::vector<std::string> failed_checks(auto&& body) {
  try {
    body();
  } catch (const PreconditionError& e) {
    return e.failed_checks;
  }
  FAIL("expected PreconditionError");
  return {};
}

bool has(const std::vector<std::string>& names, const std::string& name) {
  return std::ranges::find(names, name) != names.end();
}

}  // namespace

TEST_CASE("satellite graphs") {
  const auto s7 = satellite(3);
  CHECK(s7.graph.order() == 7);
  CHECK(s7.graph.edge_count() == 12);
  CHECK(s7.graph.degree_sequence() == std::vector<int>{2, 2, 2, 4, 4, 4, 6});
  CHECK(s7.certified_kernel_vectors.front() == from_ints({-1, 1, 1, 1, -1, -1, -1}));
  CHECK(s7.check("is_nut"));

  const auto s9 = satellite(4);
  CHECK(s9.graph.order() == 9);
  CHECK(classify(s9.graph).nullity == 1);
  CHECK(s9.check("is_nut"));
  CHECK_THROWS_AS(s9.check("nonexistent"), std::out_of_range);

  try {
    satellite(2);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "k >= 3 required");
    CHECK(e.failed_checks == std::vector<std::string>{"k_at_least_3"});
  }
}

TEST_CASE("simple families") {
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK_THROWS_AS(cycle_graph(2), GraphError);
}

TEST_CASE("catalog") {
  CHECK(catalog("NUT7").expected_nullity == 1);
  CHECK(catalog("E8").graph.degree_sequence() == std::vector<int>{2, 4, 4, 4, 4, 5, 6, 7});
  CHECK_FALSE(classify(catalog("G14").graph).zero_is_main);
  CHECK_THROWS_AS(catalog("NOPE"), std::out_of_range);

  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) {
    names.push_back(e.name);
    CHECK(static_cast<int>(rank_nullity(adjacency_matrix(e.graph)).nullity) == e.expected_nullity);
    for (const auto& x : e.expected_kernel) CHECK(is_zero(adjacency_matrix(e.graph) * x));
  }
  CHECK(names == std::vector<std::string>{"PRISM6", "NUT7", "E8", "E10", "E12", "G14", "G18", "H5", "H8"});
}

TEST_CASE("resolve_graph") {
  CHECK(resolve_graph("catalog:NUT7") == catalog("NUT7").graph);
  CHECK(resolve_graph("satellite:4") == satellite(4).graph);
  CHECK(resolve_graph("cycle:6") == cycle_graph(6));
  CHECK(resolve_graph("path:3") == path_graph(3));
  CHECK(resolve_graph("complete:4") == complete_graph(4));
  CHECK_THROWS_AS(resolve_graph("catalog:NOPE"), GraphError);
  CHECK_THROWS_AS(resolve_graph("cycle:x"), GraphError);
  CHECK_THROWS_AS(resolve_graph("satellite:2"), PreconditionError);
  CHECK_THROWS_AS(resolve_graph("/nonexistent/file.g6"), GraphError);
}

TEST_CASE("cartesian product") {
  const Graph c4 = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(c4 == Graph::from_edges(4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}}));
  CHECK(c4.degree_sequence() == std::vector<int>{2, 2, 2, 2});

  const Graph g = cartesian_product(complete_graph(2), catalog("H5").graph);
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 17);

  CHECK(cartesian_product(complete_graph(2), complete_graph(3)) == catalog("PRISM6").graph);
}

TEST_CASE("K2 product with H5") {
  const auto r = k2_product_ack(catalog("H5").graph);
  CHECK(r.graph.order() == 10);
  CHECK(r.check("swapped_variant_ok"));
  CHECK(r.check("hypotheses_hold"));
  CHECK_FALSE(r.check("plus1_simple"));
  CHECK(r.check("nullity_identity"));
  CHECK(r.check("block_form"));
  CHECK(r.check("ack_witness_found"));
  REQUIRE(r.ack.has_value());
  CHECK(r.ack->witness == VertexSet{1});
  REQUIRE(r.certified_kernel_vectors.size() == 1);
  const auto& w = r.certified_kernel_vectors.front();
  for (int i = 0; i < 5; ++i) CHECK(w[i] == w[i + 5]);
}

TEST_CASE("K2 product with C9") {
  // -1 is a double eigenvalue of C9, so the hypotheses fail; the direct
  // search still succeeds.
  const auto r = k2_product_ack(cycle_graph(9));
  CHECK_FALSE(r.check("hypotheses_hold"));
  CHECK(r.check("minus1_absent") == false);
  CHECK(r.certified_kernel_vectors.size() == 2);
  CHECK(r.check("nullity_identity"));
  CHECK(r.check("ack_witness_found"));
}

TEST_CASE("K2 product with K2") {
  const auto r = k2_product_ack(complete_graph(2));
  CHECK(r.check("plus1_simple"));
  CHECK_FALSE(r.check("minus1_absent"));
  CHECK_FALSE(r.check("hypotheses_hold"));
  CHECK(r.check("ack_when_hypotheses"));
  CHECK(r.ack.has_value());
  CHECK(r.certified_kernel_vectors.size() == 2);
}

TEST_CASE("K2 product nullity identity on random graphs") {
  std::mt19937_64 rng(0x2b);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> order(2, 8);
    const Graph h = testing::random_connected_graph(rng, order(rng), 0.4);
    CAPTURE(emit_graph6(h));
    const auto r = k2_product_ack(h);
    CHECK(r.check("nullity_identity"));
    CHECK(r.check("block_form"));
    CHECK(r.check("ack_when_hypotheses"));
    CHECK(static_cast<int>(r.certified_kernel_vectors.size()) == classify(r.graph).nullity);
  }
}

TEST_CASE("adding vertices adjacent to the dominating vertex") {
  const Graph g18 = catalog("G18").graph;
  const std::vector<VertexSet> sets{{3, 5}, {13, 15}};
  const auto r = add_vertex_dominating(g18, sets);
  CHECK(r.graph.order() == 20);
  CHECK(r.graph.neighborhood(19) == VertexSet{1, 3, 5});
  CHECK(r.graph.neighborhood(20) == VertexSet{1, 13, 15});
  REQUIRE(r.certified_kernel_vectors.size() == 1);
  QVector expected = catalog("G18").expected_kernel.front();
  expected.resize(20);
  CHECK(proportional(r.certified_kernel_vectors.front(), expected));
  CHECK(r.check("ack_witness_found"));

  const std::vector<VertexSet> one{{3, 5}};
  const auto r19 = add_vertex_dominating(g18, one);
  CHECK(r19.graph.order() == 19);
  CHECK(r19.ack->status == AckStatus::WitnessFound);

  const std::vector<VertexSet> bad{{2, 3}};
  const auto s7_failed = failed_checks([&] { add_vertex_dominating(satellite(3).graph, bad); });
  CHECK(has(s7_failed, "kernel_first_coordinate_zero"));
  CHECK(has(s7_failed, "sets_orthogonal_to_kernel"));  // x_2 + x_3 = 2

  const std::vector<VertexSet> overlapping{{3, 5}, {3, 5}};
  CHECK(has(failed_checks([&] { add_vertex_dominating(g18, overlapping); }), "sets_pairwise_disjoint"));
  const std::vector<VertexSet> not_zero_sum{{3}};
  CHECK(has(failed_checks([&] { add_vertex_dominating(g18, not_zero_sum); }), "sets_orthogonal_to_kernel"));
  CHECK(has(failed_checks([&] { add_vertex_dominating(g18, std::vector<VertexSet>{}); }), "at_least_one_set"));
  const std::vector<VertexSet> out_of_range{{3, 50}};
  CHECK_THROWS_AS(add_vertex_dominating(g18, out_of_range), GraphError);
}

TEST_CASE("nut extension") {
  const Graph nut7 = catalog("NUT7").graph;
  const Graph base = nut7.without_vertex(7);
  const auto r = nut_extension(base, 5, 6);
  CHECK(r.graph == nut7);
  CHECK(r.check("quadratic_zero"));
  CHECK(r.check("column_sum_full"));
  CHECK(r.check("is_nut"));
  CHECK(r.check("equivalence_holds"));
  REQUIRE(r.certified_kernel_vectors.size() == 1);
  CHECK(proportional(r.certified_kernel_vectors.front(), from_ints({1, 1, -1, -1, -1, 1, -1})));

  const auto k3 = nut_extension(complete_graph(2), 1, 2);
  CHECK(k3.graph == complete_graph(3));
  CHECK_FALSE(k3.check("quadratic_zero"));
  CHECK_FALSE(k3.check("is_nut"));
  CHECK(k3.check("equivalence_holds"));
  CHECK(k3.certified_kernel_vectors.empty());

  CHECK(failed_checks([] { nut_extension(path_graph(3), 1, 3); }) == std::vector<std::string>{"invertible"});
  CHECK(failed_checks([] { nut_extension(complete_graph(2), 1, 1); }) == std::vector<std::string>{"distinct_vertices"});
}

TEST_CASE("nut extension equivalence on random nonsingular graphs") {
  std::mt19937_64 rng(0x7e);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 150; ++trial) {
    std::uniform_int_distribution<int> order(2, 8);
    const Graph h = testing::random_graph(rng, order(rng), 0.5);
    if (classify(h).nullity != 0) continue;
    std::uniform_int_distribution<int> pick(1, h.order());
    const int i = pick(rng);
    const int j = pick(rng);
    if (i == j) continue;
    ++tested;
    const auto r = nut_extension(h, i, j);
    CAPTURE(emit_graph6(h));
    CHECK(r.check("equivalence_holds"));
  }
  CHECK(tested >= 100);
}

TEST_CASE("attaching several vertices to a nonsingular graph") {
  const Graph h8 = catalog("H8").graph;
  const std::vector<VertexSet> sets{{6, 8}, {1, 2}};
  const auto r = multi_attach(h8, sets);
  REQUIRE(r.derived_vectors.size() == 2);
  const QVector bc1{Rational(-1),   Rational(1),  Rational(1, 2),  Rational(-1, 2),
                    Rational(1, 2), Rational(-1), Rational(-1, 2), Rational(1)};
  const QVector bc2{Rational(1),    Rational(-1), Rational(-1, 2), Rational(1, 2),
                    Rational(1, 2), Rational(1),  Rational(-1, 2), Rational(-1)};
  CHECK(r.derived_vectors[0] == bc1);
  CHECK(r.derived_vectors[1] == bc2);
  CHECK(r.check("BC_full"));
  CHECK(r.check("CtBC_zero"));
  CHECK(r.check("nullity_at_least_k"));
  CHECK(r.check("core"));
  CHECK(r.check("ack_witness_found"));
  CHECK(r.graph.order() == 10);
  REQUIRE(r.certified_kernel_vectors.size() == 2);
  CHECK(r.certified_kernel_vectors[0][8] == -1);
  CHECK(r.certified_kernel_vectors[0][9] == 0);

  const std::vector<VertexSet> single{{6, 8}};
  const auto one = multi_attach(h8, single);
  CHECK(one.check("some_Si_not_a_neighborhood"));
  CHECK(one.check("CtBC_zero"));
  CHECK(one.ack.has_value());

  const std::vector<VertexSet> k2_set{{1}};
  const auto k2 = multi_attach(complete_graph(2), k2_set);
  CHECK(k2.derived_vectors.front() == from_ints({0, 1}));
  CHECK_FALSE(k2.check("BC_full"));
  CHECK(k2.certified_kernel_vectors.empty());
  CHECK_FALSE(k2.ack.has_value());

  CHECK(failed_checks([&] { multi_attach(path_graph(3), single); }) == std::vector<std::string>{"invertible"});
}

TEST_CASE("vertex duplication") {
  const Graph nut7 = catalog("NUT7").graph;
  const std::vector<DuplicationStep> plan{{1, 1}, {5, 2}};
  const auto r = duplicate_vertices(nut7, plan);
  CHECK(r.graph.order() == 10);
  CHECK(r.origin == std::vector<int>{1, 1, 2, 3, 4, 5, 5, 5, 6, 7});
  // Copies share the original's neighbourhood and are not adjacent to it.
  CHECK(r.graph.neighborhood(2) == r.graph.neighborhood(1));
  CHECK(r.graph.neighborhood(7) == r.graph.neighborhood(6));
  CHECK(r.graph.neighborhood(8) == r.graph.neighborhood(6));

  REQUIRE(r.certified_kernel_vectors.size() == 4);
  CHECK(r.certified_kernel_vectors[0] == from_ints({1, 0, 1, -1, -1, -1, 0, 0, 1, -1}));
  CHECK(r.certified_kernel_vectors[1] == from_ints({1, -1, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(r.certified_kernel_vectors[2] == from_ints({0, 0, 0, 0, 0, 1, -1, 0, 0, 0}));
  CHECK(r.certified_kernel_vectors[3] == from_ints({0, 0, 0, 0, 0, 1, 0, -1, 0, 0}));
  CHECK(r.check("certified_vectors_independent"));
  CHECK(r.check("core"));
  CHECK(r.check("nullity_at_least_expected"));
  CHECK(classify(r.graph).nullity == 4);
  CHECK(r.check("ack_witness_found"));

  // Repeating x_v on every copy of v is not a kernel vector.
  const QVector repeated = from_ints({1, 1, 1, -1, -1, -1, -1, -1, 1, -1});
  CHECK(r.derived_vectors.front() == repeated);
  CHECK_FALSE(r.check("repeated_extension_in_kernel"));
  CHECK(adjacency_matrix(r.graph) * repeated == from_ints({0, 0, -1, 1, 1, 0, 0, 0, 1, -2}));
}

TEST_CASE("vertex duplication edge cases") {
  const Graph nut7 = catalog("NUT7").graph;
  const auto same = duplicate_vertices(nut7, std::vector<DuplicationStep>{});
  CHECK(same.graph == nut7);
  REQUIRE(same.certified_kernel_vectors.size() == 1);
  CHECK(proportional(same.certified_kernel_vectors.front(), catalog("NUT7").expected_kernel.front()));

  const std::vector<DuplicationStep> plan{{2, 1}};
  const auto r = duplicate_vertices(nut7, plan, VertexSet{2, 3});
  CHECK(r.check("subset_zero_sum"));
  CHECK(r.check("subset_non_duplicate"));
  CHECK_FALSE(r.check("subset_disjoint_from_T"));
  CHECK(r.ack.has_value());

  CHECK(has(failed_checks([] { duplicate_vertices(catalog("PRISM6").graph, std::vector<DuplicationStep>{}); }),
            "input_is_nut"));
  const std::vector<DuplicationStep> repeated_vertex{{1, 1}, {1, 2}};
  CHECK(has(failed_checks([&] { duplicate_vertices(nut7, repeated_vertex); }), "valid_plan"));
  CHECK(failed_checks([&] { duplicate_vertices(nut7, plan, VertexSet{9}); }) == std::vector<std::string>{"subset_valid"});
}
