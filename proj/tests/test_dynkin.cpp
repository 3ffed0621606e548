#include <catch2/catch_amalgamated.hpp>

#include "ckforms/dynkin.hpp"
#include "helpers.hpp"

using namespace ckforms;

namespace {

std::vector<int> all_but(const DynkinDiagram& dg, int k) {
  std::vector<int> alive;
  for (int v : dg.nodes)
    if (v != k) alive.push_back(v);
  return alive;
}

}  // namespace

TEST_CASE("affine extension of A1 is the quadruple bond") {
  DynkinDiagram dg = extended_diagram({Family::A, 1});
  REQUIRE(dg.nodes.size() == 2);
  REQUIRE(dg.edges.size() == 1);
  CHECK(dg.edges[0].multiplicity == 4);
  CHECK(dg.edges[0].toward == -1);  // both roots long
  REQUIRE(dg.affine_node.has_value());
}

TEST_CASE("affine extension of G2 is a chain with one triple bond") {
  DynkinDiagram dg = extended_diagram({Family::G, 2});
  REQUIRE(dg.nodes.size() == 3);
  REQUIRE(dg.edges.size() == 2);
  int triples = 0, singles = 0;
  for (const auto& e : dg.edges) {
    triples += e.multiplicity == 3;
    singles += e.multiplicity == 1;
  }
  CHECK(triples == 1);
  CHECK(singles == 1);
  // the affine node hangs off the single bond
  for (const auto& e : dg.edges)
    if (e.a == *dg.affine_node || e.b == *dg.affine_node)
      CHECK(e.multiplicity == 1);
}

TEST_CASE("affine extension of E8 attaches to the end of the long arm") {
  DynkinDiagram dg = extended_diagram({Family::E, 8});
  REQUIRE(dg.nodes.size() == 9);
  const int aff = *dg.affine_node;
  int deg = 0, neighbor = -1;
  for (const auto& e : dg.edges) {
    if (e.a == aff) { ++deg; neighbor = e.b; }
    if (e.b == aff) { ++deg; neighbor = e.a; }
  }
  CHECK(deg == 1);
  // removing the attachment point must leave A1 + E7: only the tip of the
  // length-4 arm has that property
  auto types = classify_subdiagram(dg, all_but(dg, neighbor));
  CHECK(types == std::vector<SimpleType>{{Family::A, 1}, {Family::E, 7}});
}

TEST_CASE("deleting the affine node recovers the original diagram") {
  for (SimpleType t : testutil::all_types_up_to(8)) {
    INFO(to_string(t));
    DynkinDiagram ext = extended_diagram(t);
    REQUIRE(ext.affine_node.has_value());
    auto types = classify_subdiagram(ext, all_but(ext, *ext.affine_node));
    // up to the usual identifications D3 = A3 and C2 = B2
    SimpleType expect = t;
    if (t.family == Family::D && t.rank == 3) expect = {Family::A, 3};
    if (t.family == Family::C && t.rank == 2) expect = {Family::B, 2};
    CHECK(types == std::vector<SimpleType>{expect});
  }
}

TEST_CASE("arrow points toward the shorter root") {
  DynkinDiagram f4 = diagram({Family::F, 4});
  int double_edges = 0;
  for (const auto& e : f4.edges)
    if (e.multiplicity == 2) {
      ++double_edges;
      REQUIRE(e.toward != -1);
      CHECK(f4.length2[e.toward] < f4.length2[e.a == e.toward ? e.b : e.a]);
    }
  CHECK(double_edges == 1);
}

TEST_CASE("component classification normalizations") {
  // B3 extended: affine node forks off alpha_2; deleting the short root
  // leaves a 3-node simply-laced diagram, which is A3 (= D3)
  DynkinDiagram ext = extended_diagram({Family::B, 3});
  auto types = classify_subdiagram(ext, {0, 1, *ext.affine_node});
  CHECK(types == std::vector<SimpleType>{{Family::A, 3}});

  // a rank-2 doubly-laced component is always reported as B2
  DynkinDiagram c3 = diagram({Family::C, 3});
  CHECK(classify_subdiagram(c3, {1, 2}) ==
        std::vector<SimpleType>{{Family::B, 2}});

  // B vs C told apart by which end is short
  DynkinDiagram f4 = diagram({Family::F, 4});
  CHECK(classify_subdiagram(f4, {0, 1, 2}) ==
        std::vector<SimpleType>{{Family::B, 3}});
  CHECK(classify_subdiagram(f4, {1, 2, 3}) ==
        std::vector<SimpleType>{{Family::C, 3}});
}
