#ifndef CSL_PLANE_GRAPH_HPP
#define CSL_PLANE_GRAPH_HPP

// Combinatorial-map representation of a graph embedded in the sphere.
//
// Each edge e owns two darts 2e and 2e+1 (one per direction); mate(d) = d^1.
// A graph is described by, per dart, the vertex it leaves and the next dart
// in counterclockwise rotation around that vertex.  Faces are orbits of
// d -> rot_next(mate(d)); embeddings are accepted only when Euler's relation
// V - E + F = 2 holds, which certifies genus zero for a connected map.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csl/util.hpp"

namespace csl {

using Vertex = std::uint32_t;
using Dart = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;

constexpr Dart kNoDart = 0xffffffffu;

inline Dart mate(Dart d) { return d ^ 1u; }
inline EdgeId edge_of(Dart d) { return d >> 1; }

class PlaneGraph {
 public:
  // Build from counterclockwise rotation lists: rot[v] lists the neighbors of
  // v in ccw order.  Parallel edges are paired by occurrence order and only
  // accepted when allow_parallel is set; loops are never accepted.
  static PlaneGraph from_rotation(const std::vector<std::vector<Vertex>>& rot,
                                  std::vector<std::string> labels = {},
                                  bool allow_parallel = false) {
    const std::size_t V = rot.size();
    std::vector<std::vector<Vertex>> nb(V);
    std::vector<std::vector<Dart>> slot(V);
    for (std::size_t v = 0; v < V; ++v) {
      nb[v] = rot[v];
      slot[v].assign(rot[v].size(), kNoDart);
      if (rot[v].empty())
        throw Error(ErrorCode::InvalidRotation,
                    "isolated vertex " + std::to_string(v));
      for (Vertex w : rot[v]) {
        if (w >= V)
          throw Error(ErrorCode::InvalidRotation,
                      "neighbor out of range at vertex " + std::to_string(v));
        if (w == static_cast<Vertex>(v))
          throw Error(ErrorCode::LoopEdge,
                      "loop at vertex " + std::to_string(v));
      }
    }
    // Pair dart slots into edges, scanning vertices in order.
    std::vector<Vertex> dart_vertex;
    std::vector<std::size_t> dart_slot;
    for (std::size_t u = 0; u < V; ++u) {
      for (std::size_t i = 0; i < nb[u].size(); ++i) {
        if (slot[u][i] != kNoDart) continue;
        Vertex v = nb[u][i];
        // First unassigned occurrence of u in v's list.
        std::size_t j = 0, n = nb[v].size();
        for (; j < n; ++j)
          if (nb[v][j] == static_cast<Vertex>(u) && slot[v][j] == kNoDart) break;
        if (j == n)
          throw Error(ErrorCode::InvalidRotation,
                      "edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " not mirrored in both rotation lists");
        Dart d = static_cast<Dart>(dart_vertex.size());
        slot[u][i] = d;
        slot[v][j] = d + 1;
        dart_vertex.push_back(static_cast<Vertex>(u));
        dart_vertex.push_back(v);
        dart_slot.push_back(i);
        dart_slot.push_back(j);
      }
    }
    std::vector<Dart> rot_next(dart_vertex.size());
    for (std::size_t v = 0; v < V; ++v) {
      std::size_t deg = slot[v].size();
      for (std::size_t i = 0; i < deg; ++i)
        rot_next[slot[v][i]] = slot[v][(i + 1) % deg];
    }
    return PlaneGraph(V, std::move(dart_vertex), std::move(rot_next),
                      std::move(labels), allow_parallel);
  }

  // Build from raw dart arrays (used by the surgery operations).
  PlaneGraph(std::size_t num_vertices, std::vector<Vertex> dart_vertex,
             std::vector<Dart> rot_next, std::vector<std::string> labels = {},
             bool allow_parallel = false)
      : dart_vertex_(std::move(dart_vertex)), rot_next_(std::move(rot_next)) {
    const std::size_t D = dart_vertex_.size();
    if (D % 2 != 0 || rot_next_.size() != D)
      throw Error(ErrorCode::InvalidRotation, "dart array size mismatch");
    num_vertices_ = num_vertices;
    if (labels.empty()) {
      labels_.reserve(num_vertices_);
      for (std::size_t v = 0; v < num_vertices_; ++v)
        labels_.push_back("v" + std::to_string(v));
    } else {
      if (labels.size() != num_vertices_)
        throw Error(ErrorCode::InvalidRotation, "label count mismatch");
      labels_ = std::move(labels);
    }
    validate_and_finalize(allow_parallel);
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return dart_vertex_.size() / 2; }
  std::size_t num_darts() const { return dart_vertex_.size(); }
  std::size_t num_faces() const { return face_rep_.size(); }
  bool is_simple() const { return simple_; }

  Vertex dart_vertex(Dart d) const { return dart_vertex_[d]; }
  Vertex dart_head(Dart d) const { return dart_vertex_[mate(d)]; }
  Dart rot_next(Dart d) const { return rot_next_[d]; }
  Dart rot_prev(Dart d) const { return rot_prev_[d]; }
  Dart next_in_face(Dart d) const { return rot_next_[mate(d)]; }
  Dart vertex_dart(Vertex v) const { return vertex_dart_[v]; }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::size_t min_degree() const {
    return *std::min_element(degree_.begin(), degree_.end());
  }
  bool is_cubic() const {
    return std::all_of(degree_.begin(), degree_.end(),
                       [](std::size_t d) { return d == 3; });
  }
  bool is_subcubic() const {
    return std::all_of(degree_.begin(), degree_.end(),
                       [](std::size_t d) { return d <= 3; });
  }

  // Darts leaving v, in ccw rotation order starting at the stored
  // representative.
  std::vector<Dart> darts_of(Vertex v) const {
    std::vector<Dart> out;
    Dart d0 = vertex_dart_[v];
    Dart d = d0;
    do {
      out.push_back(d);
      d = rot_next_[d];
    } while (d != d0);
    return out;
  }

  // Neighbors of v in ccw rotation order (repeats possible for parallels).
  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Dart d : darts_of(v)) out.push_back(dart_head(d));
    return out;
  }

  // First dart from u to v, or kNoDart.
  Dart find_dart(Vertex u, Vertex v) const {
    for (Dart d : darts_of(u))
      if (dart_head(d) == v) return d;
    return kNoDart;
  }

  bool adjacent(Vertex u, Vertex v) const { return find_dart(u, v) != kNoDart; }

  std::pair<Vertex, Vertex> edge_endpoints(EdgeId e) const {
    return {dart_vertex_[2 * e], dart_vertex_[2 * e + 1]};
  }

  FaceId face_of(Dart d) const { return face_of_dart_[d]; }
  std::size_t face_length(FaceId f) const { return face_len_[f]; }
  Dart face_rep(FaceId f) const { return face_rep_[f]; }

  // Darts of face f in boundary-walk order, starting at the representative.
  std::vector<Dart> face_darts(FaceId f) const {
    std::vector<Dart> out;
    Dart d0 = face_rep_[f];
    Dart d = d0;
    do {
      out.push_back(d);
      d = next_in_face(d);
    } while (d != d0);
    return out;
  }

  // Tail vertices of the boundary walk of f.  For a 2-connected graph this is
  // a simple cycle.
  std::vector<Vertex> face_vertices(FaceId f) const {
    std::vector<Vertex> out;
    for (Dart d : face_darts(f)) out.push_back(dart_vertex_[d]);
    return out;
  }

  // The two faces flanking edge e (equal for a bridge).
  std::pair<FaceId, FaceId> faces_of_edge(EdgeId e) const {
    return {face_of_dart_[2 * e], face_of_dart_[2 * e + 1]};
  }

  // Sorted multiset of face lengths (handy in tests).
  std::vector<std::size_t> face_length_multiset() const {
    std::vector<std::size_t> out(face_len_.begin(), face_len_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  // Rotation lists (ccw neighbor order per vertex); inverse of from_rotation.
  std::vector<std::vector<Vertex>> rotation_lists() const {
    std::vector<std::vector<Vertex>> out(num_vertices_);
    for (Vertex v = 0; v < num_vertices_; ++v) out[v] = neighbors(v);
    return out;
  }

  // Plain adjacency (ignores embedding); useful for oracles.
  std::vector<std::vector<Vertex>> adjacency() const { return rotation_lists(); }

  // Canonical code of the oriented map, minimized over starting darts and the
  // two orientations.  Equal codes <=> the maps are isomorphic (allowing
  // reflection).  Intended for test-sized graphs.
  std::vector<std::uint32_t> canonical_code() const {
    std::vector<std::uint32_t> best;
    const std::size_t D = dart_vertex_.size();
    for (int rev = 0; rev < 2; ++rev) {
      for (Dart s = 0; s < D; ++s) {
        std::vector<std::uint32_t> code = traversal_code(s, rev == 1);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
    return best;
  }

  // Rooted variant of the code above: the BFS starts at `start` and walks each
  // rotation forward (or backward when `mirrored`).  Useful when a caller
  // wants isomorphism tests that pin a distinguished dart.
  std::vector<std::uint32_t> traversal_code(Dart start, bool mirrored) const {
    const std::uint32_t UNSET = 0xffffffffu;
    std::vector<std::uint32_t> vnum(num_vertices_, UNSET);
    std::vector<Dart> ventry(num_vertices_, kNoDart);
    std::vector<Vertex> order;
    order.reserve(num_vertices_);
    auto discover = [&](Vertex v, Dart entry) {
      vnum[v] = static_cast<std::uint32_t>(order.size());
      ventry[v] = entry;
      order.push_back(v);
    };
    discover(dart_vertex_[start], start);
    std::vector<std::uint32_t> code;
    code.reserve(dart_vertex_.size() + num_vertices_);
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      Vertex v = order[idx];
      Dart d0 = ventry[v];
      code.push_back(static_cast<std::uint32_t>(degree_[v]));
      Dart d = d0;
      do {
        Vertex w = dart_head(d);
        if (vnum[w] == UNSET) discover(w, mate(d));
        code.push_back(vnum[w]);
        d = mirrored ? rot_prev_[d] : rot_next_[d];
      } while (d != d0);
    }
    return code;
  }

 private:
  PlaneGraph() = default;

  void validate_and_finalize(bool allow_parallel) {
    const std::size_t D = dart_vertex_.size();
    const std::size_t E = D / 2;
    // rot_next must be a permutation.
    std::vector<char> seen(D, 0);
    for (Dart d = 0; d < D; ++d) {
      if (rot_next_[d] >= D)
        throw Error(ErrorCode::InvalidRotation, "rot_next out of range");
      if (seen[rot_next_[d]]++)
        throw Error(ErrorCode::InvalidRotation, "rot_next not a permutation");
    }
    rot_prev_.assign(D, kNoDart);
    for (Dart d = 0; d < D; ++d) rot_prev_[rot_next_[d]] = d;

    // Vertex orbits: every dart in a rotation cycle must sit at one vertex,
    // and every vertex must own at least one dart.
    vertex_dart_.assign(num_vertices_, kNoDart);
    degree_.assign(num_vertices_, 0);
    std::vector<char> visited(D, 0);
    for (Dart d0 = 0; d0 < D; ++d0) {
      if (visited[d0]) continue;
      Vertex v = dart_vertex_[d0];
      if (v >= num_vertices_)
        throw Error(ErrorCode::InvalidRotation, "dart vertex out of range");
      if (vertex_dart_[v] != kNoDart)
        throw Error(ErrorCode::InvalidRotation,
                    "vertex " + std::to_string(v) + " has split rotation");
      vertex_dart_[v] = d0;
      Dart d = d0;
      do {
        if (dart_vertex_[d] != v)
          throw Error(ErrorCode::InvalidRotation,
                      "rotation cycle mixes vertices");
        visited[d] = 1;
        ++degree_[v];
        d = rot_next_[d];
      } while (d != d0);
    }
    for (Vertex v = 0; v < num_vertices_; ++v)
      if (vertex_dart_[v] == kNoDart)
        throw Error(ErrorCode::InvalidRotation,
                    "isolated vertex " + std::to_string(v));

    // Loop / parallel policy.
    simple_ = true;
    std::map<std::pair<Vertex, Vertex>, int> pair_count;
    for (EdgeId e = 0; e < E; ++e) {
      Vertex a = dart_vertex_[2 * e], b = dart_vertex_[2 * e + 1];
      if (a == b)
        throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
      auto key = std::minmax(a, b);
      if (++pair_count[{key.first, key.second}] > 1) simple_ = false;
    }
    if (!simple_ && !allow_parallel)
      throw Error(ErrorCode::ParallelEdge, "parallel edges not allowed here");

    // Connectivity over darts (vertex graph connectivity since no isolated
    // vertices exist).
    if (num_vertices_ > 0) {
      std::vector<char> vis(num_vertices_, 0);
      std::vector<Vertex> stack{dart_vertex_[0]};
      vis[dart_vertex_[0]] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        Dart d0 = vertex_dart_[v];
        Dart d = d0;
        do {
          Vertex w = dart_vertex_[mate(d)];
          if (!vis[w]) {
            vis[w] = 1;
            ++reached;
            stack.push_back(w);
          }
          d = rot_next_[d];
        } while (d != d0);
      }
      if (reached != num_vertices_)
        throw Error(ErrorCode::NotConnected,
                    "graph is not connected (" + std::to_string(reached) +
                        " of " + std::to_string(num_vertices_) + " reached)");
    }

    // Face orbits of d -> rot_next(mate(d)).
    face_of_dart_.assign(D, 0);
    face_rep_.clear();
    face_len_.clear();
    std::vector<char> fvis(D, 0);
    for (Dart d0 = 0; d0 < D; ++d0) {
      if (fvis[d0]) continue;
      FaceId f = static_cast<FaceId>(face_rep_.size());
      face_rep_.push_back(d0);
      std::size_t len = 0;
      Dart d = d0;
      do {
        fvis[d] = 1;
        face_of_dart_[d] = f;
        ++len;
        d = next_in_face(d);
      } while (d != d0);
      face_len_.push_back(len);
    }

    // Euler check certifies the embedding has genus zero.
    long long euler = static_cast<long long>(num_vertices_) -
                      static_cast<long long>(E) +
                      static_cast<long long>(face_rep_.size());
    if (euler != 2)
      throw Error(ErrorCode::NotPlanar,
                  "embedding has genus " + std::to_string((2 - euler) / 2) +
                      " (V-E+F = " + std::to_string(euler) + ")");
  }

  std::size_t num_vertices_ = 0;
  std::vector<Vertex> dart_vertex_;
  std::vector<Dart> rot_next_;
  std::vector<Dart> rot_prev_;
  std::vector<Dart> vertex_dart_;
  std::vector<std::size_t> degree_;
  std::vector<std::string> labels_;
  bool simple_ = true;
  std::vector<FaceId> face_of_dart_;
  std::vector<Dart> face_rep_;
  std::vector<std::size_t> face_len_;
};

// ---------------------------------------------------------------------------
// Connectivity predicates.

namespace detail {

// Flat adjacency arrays: darts grouped by tail vertex in rotation order.
struct FlatAdj {
  std::vector<std::uint32_t> off;  // size V+1
  std::vector<Vertex> to;          // size 2E
  std::vector<Dart> dart;          // size 2E, dart id per entry
};

inline FlatAdj flatten(const PlaneGraph& g) {
  FlatAdj a;
  const std::size_t V = g.num_vertices();
  a.off.assign(V + 1, 0);
  for (Vertex v = 0; v < V; ++v)
    a.off[v + 1] = a.off[v] + static_cast<std::uint32_t>(g.degree(v));
  a.to.resize(g.num_darts());
  a.dart.resize(g.num_darts());
  for (Vertex v = 0; v < V; ++v) {
    std::size_t i = a.off[v];
    for (Dart d : g.darts_of(v)) {
      a.to[i] = g.dart_head(d);
      a.dart[i] = d;
      ++i;
    }
  }
  return a;
}

// True iff the graph minus `skip` is connected and has no cut vertex.
// skip == V means nothing is removed.  Parallel edges are handled: only the
// exact reverse dart of the tree edge is ignored, so a second edge to the
// parent counts as the cycle edge it is.
inline bool biconnected_without(const FlatAdj& a, std::size_t V, Vertex skip) {
  const std::size_t n = (skip < V) ? V - 1 : V;
  if (n == 0) return false;
  Vertex root = (skip == 0) ? 1 : 0;
  if (root >= V) return n == 0;

  struct Frame {
    Vertex v;
    Dart enter;       // dart used to reach v (kNoDart at root)
    std::uint32_t i;  // next adjacency index to scan
  };
  std::vector<int> disc(V, -1), low(V, 0);
  std::vector<Frame> stack;
  int timer = 0;
  std::size_t visited = 1;
  int root_children = 0;
  bool ok = true;

  disc[root] = low[root] = timer++;
  stack.push_back({root, kNoDart, a.off[root]});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.i == a.off[f.v + 1]) {
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (p.v != root && low[done.v] >= disc[p.v]) ok = false;
      }
      continue;
    }
    std::uint32_t idx = f.i++;
    Vertex w = a.to[idx];
    Dart d = a.dart[idx];
    if (w == skip) continue;
    if (disc[w] == -1) {
      if (f.v == root) ++root_children;
      disc[w] = low[w] = timer++;
      ++visited;
      stack.push_back({w, d, a.off[w]});
    } else if (f.enter == kNoDart || d != mate(f.enter)) {
      low[f.v] = std::min(low[f.v], disc[w]);
    }
  }
  if (root_children > 1) ok = false;
  if (visited != n) ok = false;
  return ok;
}

}  // namespace detail

// Connectivity predicates.  The constructor already guarantees the graph is
// connected, so is_k_connected(g, 1) only needs a size check.
inline bool is_2_connected(const PlaneGraph& g) {
  if (g.num_vertices() < 3) return false;
  detail::FlatAdj a = detail::flatten(g);
  return detail::biconnected_without(a, g.num_vertices(),
                                     static_cast<Vertex>(g.num_vertices()));
}

inline bool is_3_connected(const PlaneGraph& g) {
  const std::size_t V = g.num_vertices();
  if (V < 4) return false;
  if (g.min_degree() < 3) return false;
  detail::FlatAdj a = detail::flatten(g);
  if (!detail::biconnected_without(a, V, static_cast<Vertex>(V))) return false;
  for (Vertex u = 0; u < V; ++u)
    if (!detail::biconnected_without(a, V, u)) return false;
  return true;
}

inline bool is_k_connected(const PlaneGraph& g, int k) {
  switch (k) {
    case 1:
      return g.num_vertices() >= 2;
    case 2:
      return is_2_connected(g);
    case 3:
      return is_3_connected(g);
    default:
      throw Error(ErrorCode::Unsupported,
                  "connectivity test only implemented for k <= 3");
  }
}

}  // namespace csl

#endif  // CSL_PLANE_GRAPH_HPP
