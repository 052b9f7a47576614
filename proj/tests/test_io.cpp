#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "csl/io.hpp"
#include "csl/plane_graph.hpp"
#include "csl/polyhedra.hpp"

using namespace csl;

namespace {

std::string k4_bytes() {
  std::string b = planar_code_header();
  const unsigned char rec[] = {4, 2, 3, 4, 0, 1, 4, 3, 0,
                               1, 2, 4, 0, 1, 3, 2, 0};
  b.append(reinterpret_cast<const char*>(rec), sizeof(rec));
  return b;
}

}  // namespace

TEST_CASE("the canonical K4 record") {
  std::vector<PlaneGraph> gs = parse_planar_code(k4_bytes());
  REQUIRE(gs.size() == 1);
  REQUIRE(gs[0].num_vertices() == 4);
  REQUIRE(gs[0].num_edges() == 6);
  REQUIRE(gs[0].canonical_code() == polyhedra::tetrahedron().canonical_code());
  // Writing the parsed graph reproduces the input byte for byte.
  REQUIRE(planar_code_bytes(gs[0]) == k4_bytes());
}

TEST_CASE("write-read round trips are bit-exact") {
  for (const PlaneGraph& g :
       {polyhedra::cube(), polyhedra::dodecahedron(), polyhedra::prism(7),
        polyhedra::wheel(5)}) {
    std::string bytes = planar_code_bytes(g);
    std::vector<PlaneGraph> back = parse_planar_code(bytes);
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].rotation_lists() == g.rotation_lists());
    REQUIRE(planar_code_bytes(back[0]) == bytes);
  }
}

TEST_CASE("two-byte regime for graphs above 255 vertices") {
  PlaneGraph big = polyhedra::prism(130);  // 260 vertices
  std::string bytes = planar_code_bytes(big);
  // Record must start with the zero marker after the header.
  REQUIRE(bytes[std::string(planar_code_header()).size()] == '\0');
  std::vector<PlaneGraph> back = parse_planar_code(bytes);
  REQUIRE(back.size() == 1);
  REQUIRE(back[0].num_vertices() == 260);
  REQUIRE(back[0].rotation_lists() == big.rotation_lists());
  REQUIRE(planar_code_bytes(back[0]) == bytes);
}

TEST_CASE("several records in one stream") {
  PlaneGraph a = polyhedra::tetrahedron(), b = polyhedra::cube(),
             c = polyhedra::prism(3);
  std::string bytes = planar_code_bytes({&a, &b, &c});
  std::vector<PlaneGraph> gs = parse_planar_code(bytes);
  REQUIRE(gs.size() == 3);
  REQUIRE(gs[1].num_vertices() == 8);
  REQUIRE(gs[2].face_length_multiset() ==
          std::vector<std::size_t>{3, 3, 4, 4, 4});
}

TEST_CASE("malformed planar_code input") {
  REQUIRE_THROWS_MATCHES(
      parse_planar_code(">>planar_###<<"), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == ErrorCode::BadHeader; }));
  std::string cut = k4_bytes();
  cut.resize(cut.size() - 3);
  REQUIRE_THROWS_MATCHES(
      parse_planar_code(cut), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::TruncatedRecord;
      }));
  // Vertex 1 claims two edges to vertex 2, vertex 2 answers only one.
  std::string bad = planar_code_header();
  const unsigned char rec[] = {2, 2, 2, 0, 1, 0};
  bad.append(reinterpret_cast<const char*>(rec), sizeof(rec));
  REQUIRE_THROWS_MATCHES(
      parse_planar_code(bad), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::RotationInconsistent;
      }));
}

TEST_CASE("file round trip") {
  std::string path = "io_test_tmp.pc";
  PlaneGraph d = polyhedra::dodecahedron();
  write_planar_code_file(path, {&d});
  std::vector<PlaneGraph> gs = read_planar_code_file(path);
  std::remove(path.c_str());
  REQUIRE(gs.size() == 1);
  REQUIRE(gs[0].rotation_lists() == polyhedra::dodecahedron().rotation_lists());
}

TEST_CASE("dot export carries face annotations") {
  std::string dot = to_dot(polyhedra::dodecahedron(), 6);
  REQUIRE(dot.find("graph G {") != std::string::npos);
  REQUIRE(dot.find("short") != std::string::npos);   // pentagons with k=6
  REQUIRE(dot.find("len 5") != std::string::npos);
  std::string dot2 = to_dot(polyhedra::cube(), 9);
  REQUIRE(dot2.find("short") != std::string::npos);  // squares below 9
}

TEST_CASE("json reports are reproducible modulo wall time") {
  PlaneGraph g = polyhedra::dodecahedron();
  GapReport r1 = gap_report(g, 6);
  GapReport r2 = gap_report(g, 6);
  auto j1 = gap_report_json(r1, "fixture", 0, g, 42);
  auto j2 = gap_report_json(r2, "fixture", 0, g, 42);
  j1["elapsed_ms"] = 0;
  j2["elapsed_ms"] = 0;
  REQUIRE(j1.dump() == j2.dump());
  // Field order is fixed.
  std::string s = j1.dump();
  REQUIRE(s.find("\"family\"") < s.find("\"k\""));
  REQUIRE(s.find("\"k\"") < s.find("\"interval\""));
  REQUIRE(s.find("\"witness_length\"") < s.find("\"witness_vertices\""));
  REQUIRE(s.find("\"seed\"") < s.find("\"elapsed_ms\""));
  REQUIRE(j1["gap_end"] == 7);
  REQUIRE(j1["witness_length"] == 8);
  REQUIRE(j1["n"] == 20);
  REQUIRE(j1["m"] == 30);
}
