// Ring frames: concentric cycles joined by perfect matchings.  A frame with
// profile (l, 2l, ..., 2l, l) is a cubic polyhedral scaffold whose band faces
// are pentagons (next to the two l-gon rims) and hexagons (between equal-size
// rings).  Frames are the vertex-replacement substrate for the long-cycle
// family constructions.
#ifndef CSL_BASE_RING_HPP
#define CSL_BASE_RING_HPP

#include <utility>
#include <vector>

#include "csl/plane_graph.hpp"
#include "csl/util.hpp"

namespace csl {

namespace detail {

// True when (r, i)'s matching edge goes toward the higher ring index.
inline bool ring_up(int rings, int r, int i) {
  if (r == 0) return true;
  if (r == rings - 1) return false;
  return i % 2 == 1;
}

// The matched position of (r, i) under the pattern (indices mod ring size)
//   (0, i) -- (1, 2i),   (r, 2j+1) -- (r+1, 2j+2),   (last-1, 2j+1) -- (last, j)
// where l is the rim size and the middle rings have size 2l.
inline std::pair<int, int> ring_partner(int rings, int l, int r, int i) {
  int last = rings - 1;
  int m = 2 * l;  // middle-ring size
  if (r == 0) return {1, 2 * i};
  if (r == last) return {last - 1, 2 * i + 1};
  if (i % 2 == 1) return r + 1 == last ? std::pair{last, i / 2}
                                       : std::pair{r + 1, (i + 1) % m};
  if (r - 1 == 0) return {0, i / 2};
  return {r - 1, (i - 1 + m) % m};
}

}  // namespace detail

// A ring frame plus the bookkeeping needed to address its vertices by
// (ring, position) and to recover each vertex's matching partner.
struct RingFrame {
  PlaneGraph graph;
  std::vector<int> profile;              // ring sizes, outermost-first
  std::vector<std::vector<Vertex>> ring; // ring[r][i] = vertex id

  int num_rings() const { return static_cast<int>(profile.size()); }

  Vertex at(int r, int i) const { return ring[r][i]; }

  bool up(int r, int i) const { return detail::ring_up(num_rings(), r, i); }

  std::pair<int, int> partner_pos(int r, int i) const {
    return detail::ring_partner(num_rings(), profile[0], r, i);
  }

  Vertex partner(int r, int i) const {
    auto [pr, pi] = partner_pos(r, i);
    return ring[pr][pi];
  }
};

// Builds the frame for a profile of the shape (l, 2l, ..., 2l, l) with at
// least one middle ring and l >= 3.  Rotations are chosen so every band face
// between the two rims closes into a pentagon or hexagon: an up-matched
// vertex reads (M, next, prev) counterclockwise, a down-matched vertex
// (next, M, prev).
inline RingFrame base_ring(const std::vector<int>& profile) {
  int rings = static_cast<int>(profile.size());
  if (rings < 3) throw Error(ErrorCode::InvalidProfile, "need at least 3 rings");
  int l = profile[0];
  if (l < 3) throw Error(ErrorCode::InvalidProfile, "rim size must be >= 3");
  if (profile[rings - 1] != l)
    throw Error(ErrorCode::InvalidProfile, "rims must have equal size");
  for (int r = 1; r + 1 < rings; ++r)
    if (profile[r] != 2 * l)
      throw Error(ErrorCode::InvalidProfile,
                  "middle rings must have twice the rim size");

  std::vector<std::vector<Vertex>> ring(rings);
  std::size_t next_id = 0;
  for (int r = 0; r < rings; ++r) {
    ring[r].resize(profile[r]);
    for (int i = 0; i < profile[r]; ++i)
      ring[r][i] = static_cast<Vertex>(next_id++);
  }

  std::vector<std::vector<Vertex>> rot(next_id);
  std::vector<int> matched(next_id, 0);
  for (int r = 0; r < rings; ++r) {
    int s = profile[r];
    for (int i = 0; i < s; ++i) {
      Vertex v = ring[r][i];
      Vertex nxt = ring[r][(i + 1) % s];
      Vertex prv = ring[r][(i - 1 + s) % s];
      auto [pr, pi] = detail::ring_partner(rings, l, r, i);
      Vertex m = ring[pr][pi];
      ++matched[v];
      ++matched[m];
      if (detail::ring_up(rings, r, i))
        rot[v] = {m, nxt, prv};
      else
        rot[v] = {nxt, m, prv};
    }
  }
  // Every vertex appears in exactly one matching edge, counted from both
  // endpoints: its own row once, its partner's row once.
  for (std::size_t v = 0; v < next_id; ++v)
    if (matched[v] != 2)
      throw Error(ErrorCode::MatchingNotPerfect,
                  "ring matching does not cover every vertex exactly once");

  return RingFrame{PlaneGraph::from_rotation(rot), profile, std::move(ring)};
}

// (l, 2l, 2l, 2l, 2l, 2l, l): the frame behind the cubic families for k >= 9.
inline RingFrame seven_ring(int l) {
  return base_ring({l, 2 * l, 2 * l, 2 * l, 2 * l, 2 * l, l});
}

// (l, 2l, 2l, 2l, l): the frame behind the k = 9 cubic family and the planar
// (degree-unconstrained) families.
inline RingFrame five_ring(int l) {
  return base_ring({l, 2 * l, 2 * l, 2 * l, l});
}

}  // namespace csl

#endif  // CSL_BASE_RING_HPP
