#ifndef CSL_SURGERY_HPP
#define CSL_SURGERY_HPP

// Pure surgical operations on plane graphs.  Every operation returns a fresh
// PlaneGraph built through the validating constructor, so structural damage
// (broken rotations, genus change, accidental loops) cannot pass silently.

#include <algorithm>
#include <string>
#include <vector>

#include "csl/plane_graph.hpp"

namespace csl {

// ---------------------------------------------------------------------------
// Edge deletion with component selection.

struct DeletionResult {
  PlaneGraph graph;
  std::vector<Vertex> vertex_to_old;  // new vertex id -> old vertex id
  std::vector<EdgeId> edge_to_old;    // new edge id -> old edge id
};

// Remove the flagged edges, then keep only the connected component containing
// `anchor`.  Vertex labels travel along.
inline DeletionResult delete_edges_keep_component(
    const PlaneGraph& g, const std::vector<char>& remove_edge, Vertex anchor) {
  const std::size_t V = g.num_vertices();
  const std::size_t E = g.num_edges();
  if (remove_edge.size() != E)
    throw Error(ErrorCode::InvalidRotation, "edge flag vector size mismatch");

  // Component of `anchor` over the surviving edges.
  std::vector<char> in_comp(V, 0);
  in_comp[anchor] = 1;
  std::vector<Vertex> stack{anchor};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : g.darts_of(v)) {
      if (remove_edge[edge_of(d)]) continue;
      Vertex w = g.dart_head(d);
      if (!in_comp[w]) {
        in_comp[w] = 1;
        stack.push_back(w);
      }
    }
  }

  std::vector<EdgeId> edge_new(E, 0xffffffffu);
  DeletionResult out{PlaneGraph::from_rotation({{1}, {0}}), {}, {}};
  for (EdgeId e = 0; e < E; ++e) {
    if (remove_edge[e]) continue;
    auto [a, b] = g.edge_endpoints(e);
    if (!in_comp[a]) continue;  // b is then outside too
    edge_new[e] = static_cast<EdgeId>(out.edge_to_old.size());
    out.edge_to_old.push_back(e);
  }
  std::vector<Vertex> vertex_new(V, 0xffffffffu);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < V; ++v) {
    if (!in_comp[v]) continue;
    // Vertices isolated by the deletion are dropped even inside the
    // component (they can only be the anchor itself with all edges gone,
    // which the constructor rejects anyway).
    bool has_edge = false;
    for (Dart d : g.darts_of(v))
      if (edge_new[edge_of(d)] != 0xffffffffu) {
        has_edge = true;
        break;
      }
    if (!has_edge) continue;
    vertex_new[v] = static_cast<Vertex>(out.vertex_to_old.size());
    out.vertex_to_old.push_back(v);
    labels.push_back(g.label(v));
  }

  const std::size_t E2 = out.edge_to_old.size();
  std::vector<Vertex> dart_vertex(2 * E2);
  std::vector<Dart> rot_next(2 * E2);
  for (EdgeId e2 = 0; e2 < E2; ++e2) {
    EdgeId e = out.edge_to_old[e2];
    dart_vertex[2 * e2] = vertex_new[g.dart_vertex(2 * e)];
    dart_vertex[2 * e2 + 1] = vertex_new[g.dart_vertex(2 * e + 1)];
  }
  for (Vertex v : out.vertex_to_old) {
    // Surviving darts of v in old rotation order form the new rotation.
    std::vector<Dart> kept;
    for (Dart d : g.darts_of(v))
      if (edge_new[edge_of(d)] != 0xffffffffu)
        kept.push_back(2 * edge_new[edge_of(d)] + (d & 1));
    for (std::size_t i = 0; i < kept.size(); ++i)
      rot_next[kept[i]] = kept[(i + 1) % kept.size()];
  }
  out.graph = PlaneGraph(out.vertex_to_old.size(), std::move(dart_vertex),
                         std::move(rot_next), std::move(labels),
                         /*allow_parallel=*/true);
  return out;
}

// ---------------------------------------------------------------------------
// Vertex splitting.

struct SplitResult {
  PlaneGraph graph;
  Vertex v1 = 0;         // keeps the old vertex id
  Vertex v2 = 0;         // the new vertex
  EdgeId new_edge = 0;   // edge v1-v2
};

// Split vertex v along its rotation: the `block_size` consecutive darts
// starting at `block_start` stay with v; the rest move to a new vertex v2;
// a fresh edge joins them.  Both sides must keep degree >= 2 so that the
// split vertices end with degree >= 3.
inline SplitResult split_vertex(const PlaneGraph& g, Vertex v, Dart block_start,
                                std::size_t block_size) {
  if (g.degree(v) < 4)
    throw Error(ErrorCode::DegreeTooSmall,
                "vertex " + std::to_string(v) + " has degree " +
                    std::to_string(g.degree(v)) + ", need >= 4");
  if (g.dart_vertex(block_start) != v)
    throw Error(ErrorCode::InvalidRotation, "block start not a dart of v");
  const std::size_t deg = g.degree(v);
  if (block_size < 2 || deg - block_size < 2)
    throw Error(ErrorCode::DegreeTooSmall,
                "both sides of a split must keep at least two darts");

  std::vector<Dart> order;
  Dart d = block_start;
  do {
    order.push_back(d);
    d = g.rot_next(d);
  } while (d != block_start);

  const std::size_t D = g.num_darts();
  const std::size_t E = g.num_edges();
  std::vector<Vertex> dart_vertex(D + 2);
  std::vector<Dart> rot_next(D + 2);
  for (Dart x = 0; x < D; ++x) {
    dart_vertex[x] = g.dart_vertex(x);
    rot_next[x] = g.rot_next(x);
  }
  const Vertex v2 = static_cast<Vertex>(g.num_vertices());
  const Dart n1 = static_cast<Dart>(2 * E), n2 = n1 + 1;
  for (std::size_t i = block_size; i < deg; ++i) dart_vertex[order[i]] = v2;
  dart_vertex[n1] = v;
  dart_vertex[n2] = v2;
  rot_next[order[block_size - 1]] = n1;
  rot_next[n1] = order[0];
  rot_next[order[deg - 1]] = n2;
  rot_next[n2] = order[block_size];

  std::vector<std::string> labels = g.labels();
  labels.push_back(g.label(v) + "'");
  SplitResult out{PlaneGraph(g.num_vertices() + 1, std::move(dart_vertex),
                             std::move(rot_next), std::move(labels),
                             !g.is_simple()),
                  v, v2, static_cast<EdgeId>(E)};
  return out;
}

// Same operation with the block given as a set of darts; rejects sets that do
// not form one contiguous run in the rotation.
inline SplitResult split_vertex(const PlaneGraph& g, Vertex v,
                                const std::vector<Dart>& block) {
  if (block.empty())
    throw Error(ErrorCode::DegreeTooSmall, "empty split block");
  for (Dart d : block)
    if (g.dart_vertex(d) != v)
      throw Error(ErrorCode::InvalidRotation, "block dart not at v");
  std::vector<char> in_block(g.num_darts(), 0);
  for (Dart d : block) in_block[d] = 1;
  // The unique dart whose rotation predecessor is outside the block starts
  // the run; any other shape is non-contiguous.
  Dart start = kNoDart;
  for (Dart d : block)
    if (!in_block[g.rot_prev(d)]) {
      if (start != kNoDart)
        throw Error(ErrorCode::NonContiguousBlocks,
                    "split block is not one contiguous rotation run");
      start = d;
    }
  if (start == kNoDart)  // block == all darts of v
    throw Error(ErrorCode::DegreeTooSmall,
                "split block must leave darts on both sides");
  Dart d = start;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (!in_block[d])
      throw Error(ErrorCode::NonContiguousBlocks,
                  "split block is not one contiguous rotation run");
    d = g.rot_next(d);
  }
  return split_vertex(g, v, start, block.size());
}

// Contract edge e, merging its endpoints; the inverse of split_vertex.  The
// endpoints must not be joined by a second parallel edge (that would create
// a loop).
inline DeletionResult contract_edge(const PlaneGraph& g, EdgeId e) {
  auto [a, b] = g.edge_endpoints(e);
  {
    int mult = 0;
    for (Vertex w : g.neighbors(a))
      if (w == b) ++mult;
    if (mult > 1)
      throw Error(ErrorCode::ParallelEdge,
                  "contracting a multi-edge would create a loop");
  }
  if (a > b) std::swap(a, b);  // keep the smaller id
  const Dart da = (g.dart_vertex(2 * e) == a) ? 2 * e : 2 * e + 1;
  const Dart db = mate(da);

  const std::size_t E = g.num_edges();
  std::vector<EdgeId> edge_new(E);
  std::vector<EdgeId> edge_to_old;
  for (EdgeId x = 0; x < E; ++x) {
    if (x == e) continue;
    edge_new[x] = static_cast<EdgeId>(edge_to_old.size());
    edge_to_old.push_back(x);
  }
  std::vector<Vertex> vertex_new(g.num_vertices());
  std::vector<Vertex> vertex_to_old;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == b) {
      vertex_new[v] = vertex_new[a];
      continue;
    }
    vertex_new[v] = static_cast<Vertex>(vertex_to_old.size());
    vertex_to_old.push_back(v);
    labels.push_back(g.label(v));
  }
  vertex_new[b] = vertex_new[a];

  // Merged rotation at the new vertex: a's darts after da, then b's darts
  // after db, in original cyclic order.
  std::vector<Dart> merged;
  for (Dart d = g.rot_next(da); d != da; d = g.rot_next(d)) merged.push_back(d);
  for (Dart d = g.rot_next(db); d != db; d = g.rot_next(d)) merged.push_back(d);

  auto map_dart = [&](Dart d) {
    return static_cast<Dart>(2 * edge_new[edge_of(d)] + (d & 1));
  };
  const std::size_t E2 = edge_to_old.size();
  std::vector<Vertex> dart_vertex(2 * E2);
  std::vector<Dart> rot_next(2 * E2);
  for (EdgeId x2 = 0; x2 < E2; ++x2) {
    EdgeId x = edge_to_old[x2];
    dart_vertex[2 * x2] = vertex_new[g.dart_vertex(2 * x)];
    dart_vertex[2 * x2 + 1] = vertex_new[g.dart_vertex(2 * x + 1)];
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == a || v == b) continue;
    auto ds = g.darts_of(v);
    for (std::size_t i = 0; i < ds.size(); ++i)
      rot_next[map_dart(ds[i])] = map_dart(ds[(i + 1) % ds.size()]);
  }
  for (std::size_t i = 0; i < merged.size(); ++i)
    rot_next[map_dart(merged[i])] = map_dart(merged[(i + 1) % merged.size()]);

  return DeletionResult{
      PlaneGraph(vertex_to_old.size(), std::move(dart_vertex),
                 std::move(rot_next), std::move(labels), /*allow_parallel=*/true),
      std::move(vertex_to_old), std::move(edge_to_old)};
}

// ---------------------------------------------------------------------------
// Degree-2 suppression and its inverse.

struct SuppressResult {
  PlaneGraph graph;                        // may contain parallel edges
  std::vector<Vertex> branch_to_old;       // new vertex id -> old vertex id
  std::vector<std::vector<Vertex>> chain;  // per new edge: old vertex path
};

// Replace every maximal path of degree-2 vertices by a single edge.  The
// input must be 2-connected and subcubic with at least one degree-3 vertex.
// chain[e] lists the original vertices along the path that became edge e,
// branch endpoints included.
inline SuppressResult suppress_degree_two(const PlaneGraph& g) {
  if (!g.is_subcubic())
    throw Error(ErrorCode::NotSubcubic, "suppression needs max degree 3");
  if (!is_2_connected(g))
    throw Error(ErrorCode::Not2Connected, "suppression needs 2-connectivity");
  std::vector<Vertex> branch;  // old ids of degree-3 vertices
  std::vector<Vertex> new_id(g.num_vertices(), 0xffffffffu);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 3) {
      new_id[v] = static_cast<Vertex>(branch.size());
      branch.push_back(v);
    }
  if (branch.empty())
    throw Error(ErrorCode::AllDegreeTwo,
                "graph is a bare cycle; nothing to suppress to");

  // Walk each chain once, from the lower-id branch dart.
  std::vector<Dart> h_dart(g.num_darts(), kNoDart);
  std::vector<std::vector<Vertex>> chains;
  for (Vertex b : branch) {
    for (Dart d0 : g.darts_of(b)) {
      if (h_dart[d0] != kNoDart) continue;
      std::vector<Vertex> path{b};
      Dart cur = d0;
      while (g.degree(g.dart_head(cur)) == 2) {
        Vertex w = g.dart_head(cur);
        path.push_back(w);
        Dart back = mate(cur);
        cur = g.rot_next(back);
        if (cur == back) cur = g.rot_next(cur);  // impossible at degree 2
      }
      path.push_back(g.dart_head(cur));
      Dart far = mate(cur);  // branch dart at the other end
      EdgeId c = static_cast<EdgeId>(chains.size());
      h_dart[d0] = 2 * c;
      h_dart[far] = 2 * c + 1;
      chains.push_back(std::move(path));
    }
  }

  const std::size_t E2 = chains.size();
  std::vector<Vertex> dart_vertex(2 * E2);
  std::vector<Dart> rot_next(2 * E2);
  std::vector<std::string> labels;
  for (Vertex b : branch) labels.push_back(g.label(b));
  for (Vertex b : branch) {
    auto ds = g.darts_of(b);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      dart_vertex[h_dart[ds[i]]] = new_id[b];
      rot_next[h_dart[ds[i]]] = h_dart[ds[(i + 1) % ds.size()]];
    }
  }
  return SuppressResult{PlaneGraph(branch.size(), std::move(dart_vertex),
                                   std::move(rot_next), std::move(labels),
                                   /*allow_parallel=*/true),
                        std::move(branch), std::move(chains)};
}

// Subdivide edge e with `extra` >= 1 new degree-2 vertices.
inline PlaneGraph subdivide_edge(const PlaneGraph& g, EdgeId e, unsigned extra) {
  if (extra == 0)
    throw Error(ErrorCode::Unsupported, "subdivision needs >= 1 new vertex");
  const std::size_t D = g.num_darts();
  const std::size_t E = g.num_edges();
  const std::size_t V = g.num_vertices();
  std::vector<Vertex> dart_vertex(D + 2 * extra);
  std::vector<Dart> rot_next(D + 2 * extra);
  for (Dart x = 0; x < D; ++x) {
    dart_vertex[x] = g.dart_vertex(x);
    rot_next[x] = g.rot_next(x);
  }
  // Edge e keeps its tail dart at u; its head dart 2e+1 moves to the first
  // new vertex.  New edge E+i joins x_{i+1} to x_{i+2} (x_{extra+1} = v).
  const Dart old_head = static_cast<Dart>(2 * e + 1);
  const Vertex v = g.dart_vertex(old_head);
  std::vector<std::string> labels = g.labels();
  for (unsigned i = 0; i < extra; ++i) {
    dart_vertex[old_head] = 0;  // fixed below
    labels.push_back("sub" + std::to_string(e) + "." + std::to_string(i));
  }
  for (unsigned i = 0; i < extra; ++i) {
    Vertex xi = static_cast<Vertex>(V + i);
    Dart a = static_cast<Dart>(2 * (E + i));      // at x_{i+1}
    Dart b = static_cast<Dart>(2 * (E + i) + 1);  // at x_{i+2} or v
    Dart into = (i == 0) ? old_head : static_cast<Dart>(2 * (E + i - 1) + 1);
    dart_vertex[into] = xi;
    dart_vertex[a] = xi;
    rot_next[into] = a;
    rot_next[a] = into;
    dart_vertex[b] = (i + 1 < extra) ? static_cast<Vertex>(V + i + 1) : v;
  }
  // Splice the final dart into v's rotation where old_head used to sit.
  const Dart last = static_cast<Dart>(2 * (E + extra - 1) + 1);
  const Dart p = g.rot_prev(old_head), q = g.rot_next(old_head);
  if (p == old_head) {
    rot_next[last] = last;
  } else {
    rot_next[p] = last;
    rot_next[last] = q;
  }
  return PlaneGraph(V + extra, std::move(dart_vertex), std::move(rot_next),
                    std::move(labels), !g.is_simple());
}

// ---------------------------------------------------------------------------
// Facial-triangle contraction.

struct ContractResult {
  PlaneGraph graph;                  // may contain parallel edges
  std::vector<Vertex> vertex_to_new;  // old vertex id -> new vertex id
  std::size_t num_triangles = 0;
};

// Contract every triangular face of a cubic plane graph to a single vertex.
// The triangles must be pairwise vertex-disjoint.
inline ContractResult contract_triangles(const PlaneGraph& g) {
  if (!g.is_cubic())
    throw Error(ErrorCode::NotCubic, "triangle contraction needs a cubic graph");
  const std::size_t V = g.num_vertices();
  const std::size_t E = g.num_edges();
  std::vector<int> tri_of(V, -1);
  std::vector<FaceId> tris;
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (g.face_length(f) != 3) continue;
    for (Vertex v : g.face_vertices(f))
      if (tri_of[v] >= 0)
        throw Error(ErrorCode::OverlappingTriangles,
                    "triangular faces share vertex " + std::to_string(v));
    for (Vertex v : g.face_vertices(f)) tri_of[v] = static_cast<int>(tris.size());
    tris.push_back(f);
  }

  std::vector<char> is_tri_edge(E, 0);
  for (FaceId f : tris)
    for (Dart d : g.face_darts(f)) is_tri_edge[edge_of(d)] = 1;

  std::vector<EdgeId> edge_new(E, 0xffffffffu);
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < E; ++e)
    if (!is_tri_edge[e]) {
      edge_new[e] = static_cast<EdgeId>(kept.size());
      kept.push_back(e);
    }

  ContractResult out{PlaneGraph::from_rotation({{1}, {0}}), {}, tris.size()};
  out.vertex_to_new.assign(V, 0xffffffffu);
  std::vector<std::string> labels;
  // Untouched vertices first (ascending), then one vertex per triangle.
  for (Vertex v = 0; v < V; ++v)
    if (tri_of[v] < 0) {
      out.vertex_to_new[v] = static_cast<Vertex>(labels.size());
      labels.push_back(g.label(v));
    }
  std::vector<Vertex> tri_vertex(tris.size());
  for (std::size_t t = 0; t < tris.size(); ++t) {
    tri_vertex[t] = static_cast<Vertex>(labels.size());
    std::string name = "tri(";
    auto vs = g.face_vertices(tris[t]);
    for (std::size_t i = 0; i < vs.size(); ++i)
      name += g.label(vs[i]) + (i + 1 < vs.size() ? "," : ")");
    labels.push_back(name);
    for (Vertex v : vs) out.vertex_to_new[v] = tri_vertex[t];
  }

  auto map_dart = [&](Dart d) {
    return static_cast<Dart>(2 * edge_new[edge_of(d)] + (d & 1));
  };
  const std::size_t E2 = kept.size();
  std::vector<Vertex> dart_vertex(2 * E2);
  std::vector<Dart> rot_next(2 * E2);
  for (EdgeId e2 = 0; e2 < E2; ++e2) {
    EdgeId e = kept[e2];
    dart_vertex[2 * e2] = out.vertex_to_new[g.dart_vertex(2 * e)];
    dart_vertex[2 * e2 + 1] = out.vertex_to_new[g.dart_vertex(2 * e + 1)];
  }
  for (Vertex v = 0; v < V; ++v) {
    if (tri_of[v] >= 0) continue;
    auto ds = g.darts_of(v);
    for (std::size_t i = 0; i < ds.size(); ++i)
      rot_next[map_dart(ds[i])] = map_dart(ds[(i + 1) % ds.size()]);
  }
  // Rotation at a contracted triangle: walking the face (a, b, c), the three
  // external darts attach in counterclockwise order (e_a, e_c, e_b).
  for (std::size_t t = 0; t < tris.size(); ++t) {
    std::vector<Dart> ext;
    for (Dart d : g.face_darts(tris[t])) {
      // The unique non-triangle dart at this corner.
      for (Dart x : g.darts_of(g.dart_vertex(d)))
        if (!is_tri_edge[edge_of(x)]) ext.push_back(x);
    }
    if (ext.size() != 3)
      throw Error(ErrorCode::OverlappingTriangles,
                  "triangle corner lacks a unique external edge");
    rot_next[map_dart(ext[0])] = map_dart(ext[2]);
    rot_next[map_dart(ext[2])] = map_dart(ext[1]);
    rot_next[map_dart(ext[1])] = map_dart(ext[0]);
  }
  const std::size_t V2 = labels.size();
  out.graph = PlaneGraph(V2, std::move(dart_vertex), std::move(rot_next),
                         std::move(labels), /*allow_parallel=*/true);
  return out;
}

}  // namespace csl

#endif  // CSL_SURGERY_HPP
