#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "csl/base_ring.hpp"
#include "csl/plane_graph.hpp"

using namespace csl;

namespace {

std::map<std::size_t, int> face_census(const PlaneGraph& g) {
  std::map<std::size_t, int> census;
  for (std::size_t len : g.face_length_multiset()) ++census[len];
  return census;
}

}  // namespace

TEST_CASE("seven-ring frame has the pentagon/hexagon band structure") {
  for (int l : {3, 5, 11}) {
    RingFrame frame = seven_ring(l);
    const PlaneGraph& g = frame.graph;
    REQUIRE(g.num_vertices() == static_cast<std::size_t>(12 * l));
    REQUIRE(g.num_edges() == static_cast<std::size_t>(18 * l));
    REQUIRE(g.num_faces() == static_cast<std::size_t>(6 * l + 2));
    REQUIRE(g.is_cubic());

    auto census = face_census(g);
    // Two rims, one pentagon band along each rim, four hexagon bands.
    REQUIRE(census[static_cast<std::size_t>(l)] >= 2);
    REQUIRE(census[5] == 2 * l + (l == 5 ? 2 : 0));
    REQUIRE(census[6] == 4 * l);
  }
}

TEST_CASE("five-ring frame has the pentagon/hexagon band structure") {
  for (int l : {4, 7}) {
    RingFrame frame = five_ring(l);
    const PlaneGraph& g = frame.graph;
    REQUIRE(g.num_vertices() == static_cast<std::size_t>(8 * l));
    REQUIRE(g.num_edges() == static_cast<std::size_t>(12 * l));
    REQUIRE(g.num_faces() == static_cast<std::size_t>(4 * l + 2));
    REQUIRE(g.is_cubic());

    auto census = face_census(g);
    REQUIRE(census[static_cast<std::size_t>(l)] == 2);
    REQUIRE(census[5] == 2 * l);
    REQUIRE(census[6] == 2 * l);
  }
}

TEST_CASE("ring frames are 3-connected") {
  REQUIRE(is_3_connected(seven_ring(3).graph));
  REQUIRE(is_3_connected(five_ring(3).graph));
}

TEST_CASE("frame matching is an involution consistent with up/down") {
  RingFrame frame = seven_ring(4);
  for (int r = 0; r < frame.num_rings(); ++r) {
    for (int i = 0; i < frame.profile[r]; ++i) {
      auto [pr, pi] = frame.partner_pos(r, i);
      REQUIRE(frame.partner_pos(pr, pi) == std::make_pair(r, i));
      REQUIRE(frame.up(r, i) != frame.up(pr, pi));
      if (frame.up(r, i)) REQUIRE(pr == r + 1);
      // Matching edges must actually exist in the built graph.
      REQUIRE(frame.graph.find_dart(frame.at(r, i), frame.partner(r, i)) !=
              kNoDart);
    }
  }
}

TEST_CASE("rejects profiles outside the rim/band shape") {
  auto code_of = [](const std::vector<int>& profile) {
    try {
      base_ring(profile);
      FAIL("expected base_ring to throw");
      return ErrorCode::NoneFound;
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code_of({5, 10}) == ErrorCode::InvalidProfile);
  CHECK(code_of({2, 4, 2}) == ErrorCode::InvalidProfile);
  CHECK(code_of({5, 10, 10, 4}) == ErrorCode::InvalidProfile);
  CHECK(code_of({5, 9, 5}) == ErrorCode::InvalidProfile);
}

// ---------------------------------------------------------------------------
// Vertex replacement and the gap families.

#include "csl/family.hpp"
#include "csl/spectrum.hpp"
#include "csl/surgery.hpp"

TEST_CASE("dodecahedron frame is the pentagon polyhedron") {
  PlaneGraph d = dodecahedron();
  REQUIRE(d.num_vertices() == 20);
  REQUIRE(d.num_edges() == 30);
  REQUIRE(d.num_faces() == 12);
  REQUIRE(face_census(d) == std::map<std::size_t, int>{{5, 12}});
  REQUIRE(d.is_cubic());
  REQUIRE(is_3_connected(d));
}

TEST_CASE("triangle replacement truncates the dodecahedron") {
  Family fam = build_family(5, 0, true);
  REQUIRE(fam.graph.num_vertices() == 60);
  REQUIRE(fam.graph.is_cubic());
  REQUIRE(is_3_connected(fam.graph));
  REQUIRE(face_census(fam.graph) ==
          std::map<std::size_t, int>{{3, 20}, {10, 12}});

  // Contracting the twenty corner triangles recovers the dodecahedron.
  ContractResult back = contract_triangles(fam.graph);
  REQUIRE(back.num_triangles == 20);
  REQUIRE(back.graph.canonical_code() == dodecahedron().canonical_code());
}

TEST_CASE("family members avoid their whole gap interval on faces") {
  struct Row {
    int k;
    int l;
    bool cubic;
    std::size_t vertices;
    unsigned witness;
  };
  const Row rows[] = {
      {5, 0, true, 60, 10},     {7, 0, true, 140, 15},
      {9, 0, true, 792, 20},    {11, 0, true, 1716, 25},
      {13, 0, true, 2340, 29},  {5, 0, false, 224, 13},
      {7, 0, false, 432, 17},   {9, 0, false, 704, 21},
      {11, 0, false, 1040, 25},
  };
  for (const Row& row : rows) {
    CAPTURE(row.k, row.cubic);
    Family fam = build_family(row.k, row.l, row.cubic);
    REQUIRE(fam.graph.num_vertices() == row.vertices);
    REQUIRE(fam.witness == row.witness);
    REQUIRE(fam.graph.is_cubic() == row.cubic);
    REQUIRE(is_3_connected(fam.graph));

    // No face length may fall inside [k, witness-1]; the witness length
    // itself must occur as a face.
    bool witness_seen = false;
    for (std::size_t len : fam.graph.face_length_multiset()) {
      REQUIRE((len < static_cast<std::size_t>(row.k) ||
               len >= static_cast<std::size_t>(fam.witness)));
      witness_seen |= len == fam.witness;
    }
    REQUIRE(witness_seen);
  }
}

TEST_CASE("small cubic members certify their spectrum gaps exactly") {
  // 60 vertices: the bounded search finishes instantly and exhaustively.
  Family fam = build_family(5, 0, true);
  GapReport rep = gap_report(fam.graph, 5);
  REQUIRE(rep.exhaustive);
  REQUIRE_FALSE(rep.no_gap);
  REQUIRE(rep.gap_end >= 9);
  REQUIRE(rep.witness_length == 10);
}

TEST_CASE("replacement rejects bad hosts and incomplete plans") {
  PlaneGraph d = dodecahedron();
  Fragment tri = make_fragment("triangle");
  auto code_of = [](auto&& fn) {
    try {
      fn();
      return ErrorCode::NoneFound;
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code_of([&] {
          std::vector<VertexReplacement> plan(19, VertexReplacement{&tri, 0});
          replace_vertices(d, plan);
        }) == ErrorCode::MissingAssignment);
  CHECK(code_of([&] {
          std::vector<VertexReplacement> plan(20, VertexReplacement{&tri, 0});
          plan[7].fragment = nullptr;
          replace_vertices(d, plan);
        }) == ErrorCode::MissingAssignment);
  CHECK(code_of([&] {
          // Non-cubic host: subdividing an edge introduces a degree-2 vertex.
          PlaneGraph sub = subdivide_edge(d, 0, 1);
          std::vector<VertexReplacement> plan(sub.num_vertices(),
                                              VertexReplacement{&tri, 0});
          replace_vertices(sub, plan);
        }) == ErrorCode::NotCubic);
  CHECK(code_of([&] { build_family(15, 0, true); }) == ErrorCode::Unsupported);
  CHECK(code_of([&] { build_family(6, 0, false); }) == ErrorCode::Unsupported);
  CHECK(code_of([&] { build_family(9, 9, true); }) == ErrorCode::InvalidProfile);
}

#include "csl/io.hpp"

TEST_CASE("checked-in base polyhedron matches the builder") {
  auto gs = read_planar_code_file(std::string(CSL_REPO_DATA_DIR) +
                                  "/base/dodecahedron.plc");
  REQUIRE(gs.size() == 1);
  REQUIRE(gs[0].canonical_code() == dodecahedron().canonical_code());
}
