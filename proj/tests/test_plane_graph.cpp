#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "csl/plane_graph.hpp"
#include "csl/polyhedra.hpp"

using namespace csl;

namespace {

// Independent connectivity oracle: G is k-connected iff |V| > k and removing
// any k-1 vertices leaves a connected graph.  Pure adjacency BFS, no reuse of
// the library's dart machinery.
bool oracle_k_connected(const std::vector<std::vector<Vertex>>& adj, int k) {
  const int n = static_cast<int>(adj.size());
  if (n <= k) return false;
  std::vector<int> removed;
  // Enumerate all subsets of size k-1.
  std::vector<int> idx(k - 1);
  auto connected_without = [&](const std::vector<int>& rem) {
    std::vector<char> out(n, 0);
    for (int r : rem) out[r] = 1;
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!out[v]) {
        start = v;
        break;
      }
    if (start < 0) return false;
    std::vector<int> stack{start};
    std::vector<char> vis(n, 0);
    vis[start] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v])
        if (!out[w] && !vis[w]) {
          vis[w] = 1;
          ++count;
          stack.push_back(static_cast<int>(w));
        }
    }
    return count == n - static_cast<int>(rem.size());
  };
  if (k == 1) return connected_without({});
  std::function<bool(int, int)> rec = [&](int pos, int from) {
    if (pos == k - 1) return connected_without(removed);
    for (int v = from; v < n; ++v) {
      removed.push_back(v);
      bool ok = rec(pos + 1, v + 1);
      removed.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, 0);
}

void check_connectivity_against_oracle(const PlaneGraph& g) {
  auto adj = g.adjacency();
  for (int k = 1; k <= 3; ++k) {
    INFO("k = " << k << ", V = " << g.num_vertices());
    REQUIRE(is_k_connected(g, k) == oracle_k_connected(adj, k));
  }
}

}  // namespace

TEST_CASE("tetrahedron basic structure") {
  PlaneGraph g = polyhedra::tetrahedron();
  REQUIRE(g.num_vertices() == 4);
  REQUIRE(g.num_edges() == 6);
  REQUIRE(g.num_faces() == 4);
  REQUIRE(g.is_simple());
  REQUIRE(g.is_cubic());
  REQUIRE(g.face_length_multiset() == std::vector<std::size_t>{3, 3, 3, 3});
  REQUIRE(g.neighbors(0) == std::vector<Vertex>{1, 3, 2});
  // Every face of a 2-connected graph is a simple cycle.
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    auto vs = g.face_vertices(f);
    std::set<Vertex> uniq(vs.begin(), vs.end());
    REQUIRE(uniq.size() == vs.size());
  }
}

TEST_CASE("face multisets of small polyhedra") {
  REQUIRE(polyhedra::cube().face_length_multiset() ==
          std::vector<std::size_t>{4, 4, 4, 4, 4, 4});
  REQUIRE(polyhedra::prism(3).face_length_multiset() ==
          std::vector<std::size_t>{3, 3, 4, 4, 4});
  REQUIRE(polyhedra::prism(6).face_length_multiset() ==
          std::vector<std::size_t>{4, 4, 4, 4, 4, 4, 6, 6});
  REQUIRE(polyhedra::wheel(5).face_length_multiset() ==
          std::vector<std::size_t>{3, 3, 3, 3, 3, 5});
  std::vector<std::size_t> twelve_pentagons(12, 5);
  REQUIRE(polyhedra::dodecahedron().face_length_multiset() == twelve_pentagons);
  REQUIRE(polyhedra::dodecahedron().is_cubic());
}

TEST_CASE("reversing one rotation produces a toroidal map") {
  // Reversing the cyclic order at a single vertex of the tetrahedron yields a
  // genus-1 embedding, which the Euler check must reject.
  std::vector<std::vector<Vertex>> rot = {
      {1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {1, 0, 2}};
  REQUIRE_THROWS_MATCHES(
      PlaneGraph::from_rotation(rot), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == ErrorCode::NotPlanar; }));
}

TEST_CASE("loops and parallels are policed") {
  REQUIRE_THROWS_MATCHES(
      PlaneGraph::from_rotation({{0, 0, 1}, {0}}), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == ErrorCode::LoopEdge; }));
  // Digon: two parallel edges, a legal sphere map when explicitly allowed.
  REQUIRE_THROWS_MATCHES(
      PlaneGraph::from_rotation({{1, 1}, {0, 0}}), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == ErrorCode::ParallelEdge; }));
  PlaneGraph digon = PlaneGraph::from_rotation({{1, 1}, {0, 0}}, {}, true);
  REQUIRE_FALSE(digon.is_simple());
  REQUIRE(digon.num_faces() == 2);
}

TEST_CASE("malformed rotations are rejected") {
  // 0 lists 2 as a neighbor but 2 does not list 0.
  REQUIRE_THROWS_MATCHES(
      PlaneGraph::from_rotation({{1, 2}, {0}, {1}}), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::InvalidRotation;
      }));
  // Two disjoint triangles: valid rotations but not connected.
  REQUIRE_THROWS_MATCHES(
      PlaneGraph::from_rotation(
          {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}}),
      Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::NotConnected;
      }));
}

TEST_CASE("trees embed with a single face") {
  PlaneGraph path = PlaneGraph::from_rotation({{1}, {0, 2}, {1}});
  REQUIRE(path.num_faces() == 1);
  REQUIRE(path.face_length(0) == 4);  // each edge walked twice
  REQUIRE_FALSE(is_2_connected(path));
}

TEST_CASE("connectivity predicates match the brute-force oracle") {
  check_connectivity_against_oracle(polyhedra::tetrahedron());
  check_connectivity_against_oracle(polyhedra::cube());
  check_connectivity_against_oracle(polyhedra::prism(3));
  check_connectivity_against_oracle(polyhedra::prism(5));
  check_connectivity_against_oracle(polyhedra::wheel(4));
  check_connectivity_against_oracle(polyhedra::wheel(6));
  check_connectivity_against_oracle(polyhedra::dodecahedron());

  // Triangle: 2-connected but too small to be 3-connected.
  PlaneGraph tri = PlaneGraph::from_rotation({{1, 2}, {2, 0}, {0, 1}});
  check_connectivity_against_oracle(tri);
  REQUIRE(is_2_connected(tri));
  REQUIRE_FALSE(is_3_connected(tri));

  // Bowtie: two triangles sharing a cut vertex.
  PlaneGraph bowtie = PlaneGraph::from_rotation(
      {{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}});
  check_connectivity_against_oracle(bowtie);
  REQUIRE_FALSE(is_2_connected(bowtie));

  // Square with a pendant path: 1-connected only.
  PlaneGraph lolly =
      PlaneGraph::from_rotation({{1, 3}, {2, 0}, {3, 1}, {0, 2, 4}, {3, 5}, {4}});
  check_connectivity_against_oracle(lolly);
}

TEST_CASE("canonical codes identify isomorphic maps") {
  PlaneGraph a = polyhedra::prism(3);
  // Same prism with vertices renamed by i -> (i*5+2) mod 6.
  std::vector<Vertex> pi(6);
  for (Vertex i = 0; i < 6; ++i) pi[i] = (i * 5 + 2) % 6;
  auto rot = a.rotation_lists();
  std::vector<std::vector<Vertex>> relabeled(6);
  for (Vertex v = 0; v < 6; ++v) {
    std::vector<Vertex> row;
    for (Vertex w : rot[v]) row.push_back(pi[w]);
    relabeled[pi[v]] = row;
  }
  PlaneGraph b = PlaneGraph::from_rotation(relabeled);
  REQUIRE(a.canonical_code() == b.canonical_code());

  // Mirror image: reverse every rotation list.
  std::vector<std::vector<Vertex>> mirrored = rot;
  for (auto& row : mirrored) std::reverse(row.begin(), row.end());
  PlaneGraph c = PlaneGraph::from_rotation(mirrored);
  REQUIRE(a.canonical_code() == c.canonical_code());

  REQUIRE(a.canonical_code() != polyhedra::cube().canonical_code());
  REQUIRE(polyhedra::cube().canonical_code() !=
          polyhedra::wheel(6).canonical_code());
}

TEST_CASE("labels are preserved") {
  PlaneGraph g = PlaneGraph::from_rotation({{1, 2}, {2, 0}, {0, 1}},
                                           {"alpha", "beta", "gamma"});
  REQUIRE(g.label(0) == "alpha");
  REQUIRE(g.label(2) == "gamma");
  PlaneGraph h = polyhedra::cube();
  REQUIRE(h.label(7) == "v7");
}
