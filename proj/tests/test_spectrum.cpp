#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "csl/plane_graph.hpp"
#include "csl/polyhedra.hpp"
#include "csl/spectrum.hpp"

using namespace csl;

namespace {

PlaneGraph cycle_graph(unsigned n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  return PlaneGraph::from_rotation(rot);
}

PlaneGraph theta_graph() {
  // Two vertices joined by three parallel edges.  The rotation at vertex 1
  // must be the reverse of the one at vertex 0 for a sphere embedding, which
  // requires spelling out the darts.
  std::vector<Vertex> dart_vertex = {0, 1, 0, 1, 0, 1};
  std::vector<Dart> rot_next = {2, 5, 4, 1, 0, 3};
  return PlaneGraph(2, dart_vertex, rot_next, {}, true);
}

void check_engines_agree(const PlaneGraph& g) {
  CycleSpectrum oracle = full_spectrum_oracle(g);
  CycleSpectrum fast =
      enumerate_cycle_lengths_upto(g, static_cast<unsigned>(g.num_vertices()));
  REQUIRE(fast.exhaustive);
  REQUIRE(oracle.present == fast.present);
  for (unsigned l = 2; l <= oracle.max_len; ++l) {
    if (oracle.present[l]) {
      INFO("length " << l);
      REQUIRE(is_cycle_witness(g, oracle.witness[l]));
      REQUIRE(oracle.witness[l].size() == l);
      REQUIRE(is_cycle_witness(g, fast.witness[l]));
      REQUIRE(fast.witness[l].size() == l);
    }
  }
  // Worker count must not change the outcome, witnesses included.
  CycleSpectrum par = enumerate_cycle_lengths_upto(
      g, static_cast<unsigned>(g.num_vertices()), {}, 4);
  REQUIRE(par.present == fast.present);
  REQUIRE(par.witness == fast.witness);
}

}  // namespace

TEST_CASE("frozen spectra of small fixtures") {
  REQUIRE(full_spectrum_oracle(polyhedra::tetrahedron()).lengths() ==
          std::vector<unsigned>{3, 4});
  REQUIRE(full_spectrum_oracle(polyhedra::cube()).lengths() ==
          std::vector<unsigned>{4, 6, 8});
  REQUIRE(full_spectrum_oracle(polyhedra::prism(3)).lengths() ==
          std::vector<unsigned>{3, 4, 5, 6});
  REQUIRE(full_spectrum_oracle(polyhedra::wheel(5)).lengths() ==
          std::vector<unsigned>{3, 4, 5, 6});
  REQUIRE(full_spectrum_oracle(cycle_graph(7)).lengths() ==
          std::vector<unsigned>{7});
  REQUIRE(full_spectrum_oracle(theta_graph()).lengths() ==
          std::vector<unsigned>{2});

  CycleSpectrum dodeca = full_spectrum_oracle(polyhedra::dodecahedron());
  REQUIRE(dodeca.has(5));
  REQUIRE_FALSE(dodeca.has(6));
  REQUIRE_FALSE(dodeca.has(7));
  REQUIRE(dodeca.has(8));
  REQUIRE(dodeca.has(20));  // the dodecahedron is Hamiltonian
}

TEST_CASE("bounded search agrees with the oracle") {
  check_engines_agree(polyhedra::tetrahedron());
  check_engines_agree(polyhedra::cube());
  check_engines_agree(polyhedra::prism(3));
  check_engines_agree(polyhedra::prism(6));
  check_engines_agree(polyhedra::prism(12));  // 24 vertices, oracle limit
  check_engines_agree(polyhedra::wheel(5));
  check_engines_agree(polyhedra::wheel(9));
  check_engines_agree(polyhedra::dodecahedron());
  check_engines_agree(cycle_graph(11));
  check_engines_agree(theta_graph());
}

TEST_CASE("oracle refuses large graphs") {
  // 13-prism: 26 vertices.
  REQUIRE_THROWS_MATCHES(
      full_spectrum_oracle(polyhedra::prism(13)), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == ErrorCode::TooLarge; }));
}

TEST_CASE("horizon truncates the search") {
  CycleSpectrum s = enumerate_cycle_lengths_upto(polyhedra::dodecahedron(), 9);
  REQUIRE(s.exhaustive);
  REQUIRE(s.lengths() == std::vector<unsigned>{5, 8, 9});
}

TEST_CASE("budget exhaustion yields a sound partial result") {
  CycleSpectrum partial = enumerate_cycle_lengths_upto(
      polyhedra::dodecahedron(), 20, SearchBudget{200, -1});
  REQUIRE_FALSE(partial.exhaustive);
  CycleSpectrum full = full_spectrum_oracle(polyhedra::dodecahedron());
  for (unsigned l = 2; l <= 20; ++l)
    if (partial.has(l)) {
      REQUIRE(full.has(l));  // partial results never invent cycles
      REQUIRE(is_cycle_witness(polyhedra::dodecahedron(), partial.witness[l]));
    }
}

TEST_CASE("interval queries") {
  REQUIRE_FALSE(has_cycle_in(polyhedra::cube(), 5, 5).has_value());
  REQUIRE_FALSE(has_cycle_in(polyhedra::dodecahedron(), 6, 7).has_value());
  auto w = has_cycle_in(polyhedra::tetrahedron(), 3, 4);
  REQUIRE(w.has_value());
  REQUIRE(is_cycle_witness(polyhedra::tetrahedron(), *w));
  REQUIRE_FALSE(has_cycle_in(polyhedra::prism(6), 5, 5).has_value());
}

TEST_CASE("girth") {
  REQUIRE(girth(polyhedra::tetrahedron()) == 3);
  REQUIRE(girth(polyhedra::cube()) == 4);
  REQUIRE(girth(polyhedra::dodecahedron()) == 5);
  REQUIRE(girth(polyhedra::prism(3)) == 3);
  REQUIRE(girth(cycle_graph(7)) == 7);
  REQUIRE(girth(theta_graph()) == 2);
  PlaneGraph path = PlaneGraph::from_rotation({{1}, {0, 2}, {1}});
  REQUIRE_THROWS_MATCHES(
      girth(path), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::Forest;
      }));
}

TEST_CASE("circumference") {
  CircumferenceResult c = circumference(polyhedra::tetrahedron());
  REQUIRE(c.value == 4);
  REQUIRE(c.exact);
  REQUIRE(is_cycle_witness(polyhedra::tetrahedron(), c.witness));
  REQUIRE(circumference(polyhedra::dodecahedron()).value == 20);
  REQUIRE(circumference(polyhedra::cube()).value == 8);
  // Force the lower-bound path by setting the exact threshold below |V|.
  CircumferenceResult lb = circumference(polyhedra::dodecahedron(), 10);
  REQUIRE_FALSE(lb.exact);
  REQUIRE(lb.value == 5);  // longest face
}

TEST_CASE("gap reports on fixtures") {
  // Dodecahedron, k=6: lengths 6 and 7 are absent, 8 is present.
  GapReport r = gap_report(polyhedra::dodecahedron(), 6);
  REQUIRE_FALSE(r.no_gap);
  REQUIRE(r.gap_end == 7);
  REQUIRE(r.witness_length == 8);
  REQUIRE(is_cycle_witness(polyhedra::dodecahedron(), r.witness));
  REQUIRE(r.exhaustive);

  // k=5 hits the girth: no gap at all.
  GapReport s = gap_report(polyhedra::dodecahedron(), 5);
  REQUIRE(s.no_gap);
  REQUIRE(s.witness_length == 5);

  GapReport t = gap_report(polyhedra::cube(), 5);
  REQUIRE(t.gap_end == 5);
  REQUIRE(t.witness_length == 6);

  // Cube has circumference 8 < 9: precondition fails.
  REQUIRE_THROWS_MATCHES(
      gap_report(polyhedra::cube(), 9), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::CircumferenceTooSmall;
      }));
}
