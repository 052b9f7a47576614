#ifndef CSL_POLYHEDRA_HPP
#define CSL_POLYHEDRA_HPP

// Canonical plane embeddings of a few small polyhedra, used as test fixtures,
// as sweep samples, and as base graphs for the vertex-replacement families.

#include <string>
#include <vector>

#include "csl/plane_graph.hpp"

namespace csl {
namespace polyhedra {

inline PlaneGraph tetrahedron() {
  // Outer triangle 0,1,2 (ccw) with 3 in the middle.
  return PlaneGraph::from_rotation({
      {1, 3, 2},
      {2, 3, 0},
      {0, 3, 1},
      {2, 0, 1},
  });
}

inline PlaneGraph cube() {
  // Outer square 0..3 (ccw), inner square 4..7, i matched with i+4.
  std::vector<std::vector<Vertex>> rot(8);
  for (Vertex i = 0; i < 4; ++i)
    rot[i] = {(i + 1) % 4, i + 4, (i + 3) % 4};
  for (Vertex i = 0; i < 4; ++i)
    rot[4 + i] = {i, 4 + (i + 1) % 4, 4 + (i + 3) % 4};
  return PlaneGraph::from_rotation(rot);
}

// n-gonal prism: outer n-cycle 0..n-1, inner n-cycle n..2n-1.
inline PlaneGraph prism(unsigned n) {
  std::vector<std::vector<Vertex>> rot(2 * n);
  for (Vertex i = 0; i < n; ++i)
    rot[i] = {(i + 1) % n, n + i, (i + n - 1) % n};
  for (Vertex i = 0; i < n; ++i)
    rot[n + i] = {i, n + (i + 1) % n, n + (i + n - 1) % n};
  return PlaneGraph::from_rotation(rot);
}

// Wheel with n rim vertices: hub 0, rim 1..n.
inline PlaneGraph wheel(unsigned n) {
  std::vector<std::vector<Vertex>> rot(n + 1);
  for (Vertex i = 1; i <= n; ++i) rot[0].push_back(i);
  for (Vertex i = 1; i <= n; ++i) {
    Vertex next = (i % n) + 1, prev = ((i + n - 2) % n) + 1;
    rot[i] = {next, 0, prev};
  }
  return PlaneGraph::from_rotation(rot);
}

// Dodecahedron in four layers of five: outer pentagon P=0..4, upper ring
// Q=5..9, lower ring R=10..14, inner pentagon S=15..19.
inline PlaneGraph dodecahedron() {
  std::vector<std::vector<Vertex>> rot(20);
  auto P = [](Vertex i) { return i % 5; };
  auto Q = [](Vertex i) { return 5 + i % 5; };
  auto R = [](Vertex i) { return 10 + i % 5; };
  auto S = [](Vertex i) { return 15 + i % 5; };
  for (Vertex i = 0; i < 5; ++i) {
    rot[P(i)] = {P(i + 1), Q(i), P(i + 4)};
    rot[Q(i)] = {P(i), R(i), R(i + 4)};
    rot[R(i)] = {Q(i), Q(i + 1), S(i)};
    rot[S(i)] = {S(i + 4), R(i), S(i + 1)};
  }
  return PlaneGraph::from_rotation(rot);
}

}  // namespace polyhedra
}  // namespace csl

#endif  // CSL_POLYHEDRA_HPP
