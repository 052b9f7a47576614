#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "csl/plane_graph.hpp"
#include "csl/polyhedra.hpp"
#include "csl/surgery.hpp"

using namespace csl;

namespace {

PlaneGraph raw_theta() {
  std::vector<Vertex> dart_vertex = {0, 1, 0, 1, 0, 1};
  std::vector<Dart> rot_next = {2, 5, 4, 1, 0, 3};
  return PlaneGraph(2, dart_vertex, rot_next, {}, true);
}

// Three internally disjoint length-2 paths between two hubs.
PlaneGraph subdivided_theta() {
  return PlaneGraph::from_rotation(
      {{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("splitting a wheel hub gives a prism") {
  PlaneGraph w = polyhedra::wheel(4);
  REQUIRE(w.degree(0) == 4);
  // Block = the two darts toward rim vertices 1 and 2.
  Dart d1 = w.find_dart(0, 1);
  SplitResult s = split_vertex(w, 0, d1, 2);
  REQUIRE(s.graph.num_vertices() == 6);
  REQUIRE(s.graph.num_edges() == 9);
  REQUIRE(s.graph.is_cubic());
  REQUIRE(s.graph.canonical_code() == polyhedra::prism(3).canonical_code());
  // Splitting adds one edge and keeps the face count.
  REQUIRE(s.graph.num_faces() == w.num_faces());
  // The new vertex inherits a primed label.
  REQUIRE(s.graph.label(s.v2) == "v0'");

  // Contracting the fresh edge undoes the split.
  DeletionResult back = contract_edge(s.graph, s.new_edge);
  REQUIRE(back.graph.canonical_code() == w.canonical_code());
}

TEST_CASE("split preconditions") {
  PlaneGraph cube = polyhedra::cube();
  REQUIRE_THROWS_MATCHES(
      split_vertex(cube, 0, cube.vertex_dart(0), 2), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::DegreeTooSmall;
      }));
  PlaneGraph w = polyhedra::wheel(6);
  REQUIRE_THROWS_MATCHES(
      split_vertex(w, 0, w.vertex_dart(0), 1), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::DegreeTooSmall;
      }));
  // A non-contiguous block of hub darts.
  auto ds = w.darts_of(0);
  REQUIRE_THROWS_MATCHES(
      split_vertex(w, 0, std::vector<Dart>{ds[0], ds[2]}), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::NonContiguousBlocks;
      }));
  // Contiguous blocks given as sets are accepted.
  SplitResult ok = split_vertex(w, 0, std::vector<Dart>{ds[1], ds[2], ds[3]});
  REQUIRE(ok.graph.num_vertices() == 8);
  REQUIRE(ok.graph.degree(ok.v1) == 4);
  REQUIRE(ok.graph.degree(ok.v2) == 4);
}

TEST_CASE("split and contract round-trip on larger hubs") {
  PlaneGraph w = polyhedra::wheel(6);
  auto ds = w.darts_of(0);
  for (std::size_t size = 2; size + 2 <= ds.size(); ++size) {
    for (std::size_t start = 0; start < ds.size(); ++start) {
      SplitResult s = split_vertex(w, 0, ds[start], size);
      DeletionResult back = contract_edge(s.graph, s.new_edge);
      REQUIRE(back.graph.canonical_code() == w.canonical_code());
    }
  }
}

TEST_CASE("suppression of a subdivided theta yields the theta multigraph") {
  PlaneGraph g = subdivided_theta();
  SuppressResult s = suppress_degree_two(g);
  REQUIRE(s.graph.num_vertices() == 2);
  REQUIRE(s.graph.num_edges() == 3);
  REQUIRE_FALSE(s.graph.is_simple());
  REQUIRE(s.graph.canonical_code() == raw_theta().canonical_code());
  REQUIRE(s.chain.size() == 3);
  for (const auto& c : s.chain) {
    REQUIRE(c.size() == 3);
    REQUIRE(g.degree(c.front()) == 3);
    REQUIRE(g.degree(c.back()) == 3);
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      REQUIRE(g.adjacent(c[i], c[i + 1]));
  }
}

TEST_CASE("suppress then subdivide round-trip") {
  // Subdivide three cube edges by varying amounts, then suppress.
  PlaneGraph g = polyhedra::cube();
  g = subdivide_edge(g, 0, 2);
  g = subdivide_edge(g, 5, 1);
  g = subdivide_edge(g, 11, 3);
  REQUIRE(g.num_vertices() == 8 + 6);
  SuppressResult s = suppress_degree_two(g);
  REQUIRE(s.graph.canonical_code() == polyhedra::cube().canonical_code());
  // Chain lengths: three subdivided edges plus nine untouched ones.
  std::vector<std::size_t> lens;
  for (const auto& c : s.chain) lens.push_back(c.size());
  std::sort(lens.begin(), lens.end());
  std::vector<std::size_t> expect(12, 2);
  expect[9] = 3;
  expect[10] = 4;
  expect[11] = 5;
  REQUIRE(lens == expect);
}

TEST_CASE("suppression preconditions") {
  std::vector<std::vector<Vertex>> cyc = {{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  REQUIRE_THROWS_MATCHES(
      suppress_degree_two(PlaneGraph::from_rotation(cyc)), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::AllDegreeTwo;
      }));
  REQUIRE_THROWS_MATCHES(
      suppress_degree_two(polyhedra::wheel(6)), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::NotSubcubic;
      }));
  PlaneGraph path = PlaneGraph::from_rotation({{1}, {0, 2}, {1}});
  REQUIRE_THROWS_MATCHES(
      suppress_degree_two(path), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::Not2Connected;
      }));
  // A cubic graph passes through unchanged.
  SuppressResult s = suppress_degree_two(polyhedra::cube());
  REQUIRE(s.graph.canonical_code() == polyhedra::cube().canonical_code());
  for (const auto& c : s.chain) REQUIRE(c.size() == 2);
}

TEST_CASE("contracting prism triangles gives the 3-dipole") {
  ContractResult r = contract_triangles(polyhedra::prism(3));
  REQUIRE(r.num_triangles == 2);
  REQUIRE(r.graph.num_vertices() == 2);
  REQUIRE(r.graph.num_edges() == 3);
  REQUIRE_FALSE(r.graph.is_simple());
  REQUIRE(r.graph.canonical_code() == raw_theta().canonical_code());
}

TEST_CASE("triangle contraction preconditions") {
  REQUIRE_THROWS_MATCHES(
      contract_triangles(polyhedra::tetrahedron()), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::OverlappingTriangles;
      }));
  REQUIRE_THROWS_MATCHES(
      contract_triangles(polyhedra::wheel(6)), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == ErrorCode::NotCubic; }));
  // No triangles: contraction is the identity up to isomorphism.
  ContractResult r = contract_triangles(polyhedra::cube());
  REQUIRE(r.num_triangles == 0);
  REQUIRE(r.graph.canonical_code() == polyhedra::cube().canonical_code());
}

TEST_CASE("edge deletion with component selection") {
  PlaneGraph p = polyhedra::prism(3);
  // Remove the three matching edges; keep the component of vertex 0.
  std::vector<char> rm(p.num_edges(), 0);
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    auto [a, b] = p.edge_endpoints(e);
    if ((a < 3) != (b < 3)) rm[e] = 1;
  }
  DeletionResult r = delete_edges_keep_component(p, rm, 0);
  REQUIRE(r.graph.num_vertices() == 3);
  REQUIRE(r.graph.num_edges() == 3);
  REQUIRE(r.vertex_to_old == std::vector<Vertex>{0, 1, 2});
  REQUIRE(r.graph.label(0) == "v0");
  // Keeping the inner component instead.
  DeletionResult s = delete_edges_keep_component(p, rm, 4);
  REQUIRE(s.vertex_to_old == std::vector<Vertex>{3, 4, 5});

  // Removing a single rim edge keeps everything connected.
  std::vector<char> one(p.num_edges(), 0);
  one[0] = 1;
  DeletionResult t = delete_edges_keep_component(p, one, 0);
  REQUIRE(t.graph.num_vertices() == 6);
  REQUIRE(t.graph.num_edges() == 8);
}
