// Reduction engine: face classification, iterated elimination of adjacent
// short faces (with a full trace and a face-merge account), subcubic
// conversion by vertex splitting, the Euler counting report, and the
// discharging ledger.  Unconditional identities (Euler-derived counts,
// charge conservation) are enforced; hypothesis-dependent steps are
// evaluated and reported as data, so a run shows exactly where a concrete
// input escapes the contradiction argument.
#ifndef CSL_REDUCTION_HPP
#define CSL_REDUCTION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "csl/plane_graph.hpp"
#include "csl/surgery.hpp"
#include "csl/util.hpp"

namespace csl {

// ---------------------------------------------------------------------------
// Face classification.

struct FaceClassification {
  unsigned k = 0;
  std::vector<std::size_t> length;  // per face id
  std::vector<char> is_short;       // l(F) < k
  std::vector<FaceId> x_faces;      // short
  std::vector<FaceId> y_faces;      // long
};

inline FaceClassification classify_faces(const PlaneGraph& g, unsigned k) {
  FaceClassification out;
  out.k = k;
  out.length.resize(g.num_faces());
  out.is_short.resize(g.num_faces());
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    out.length[f] = g.face_length(f);
    out.is_short[f] = out.length[f] < k;
    (out.is_short[f] ? out.x_faces : out.y_faces).push_back(f);
  }
  return out;
}

// First long face in face order.
inline FaceId find_long_facial_cycle(const PlaneGraph& g,
                                     const FaceClassification& cls) {
  (void)g;
  if (cls.y_faces.empty())
    throw Error(ErrorCode::NoLongFace, "every facial cycle is short");
  return cls.y_faces.front();
}

namespace detail {

// Canonical key of a cyclic vertex sequence: lexicographic minimum over all
// rotations of the forward and the reversed walk.
inline std::vector<Vertex> cycle_key(std::vector<Vertex> seq) {
  auto best = seq;
  auto consider = [&](const std::vector<Vertex>& s) {
    std::vector<Vertex> rot = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  };
  consider(seq);
  std::reverse(seq.begin(), seq.end());
  consider(seq);
  return best;
}

inline std::vector<Vertex> face_key(const PlaneGraph& g, FaceId f,
                                    const std::vector<Vertex>& to_orig) {
  std::vector<Vertex> seq;
  for (Vertex v : g.face_vertices(f)) seq.push_back(to_orig[v]);
  return cycle_key(std::move(seq));
}

// Boundary edges of a face as unordered original-id endpoint pairs.
inline std::set<std::pair<Vertex, Vertex>> face_edge_set(
    const PlaneGraph& g, FaceId f, const std::vector<Vertex>& to_orig) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (Dart d : g.face_darts(f)) {
    Vertex a = to_orig[g.dart_vertex(d)], b = to_orig[g.dart_head(d)];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemma-style elimination of adjacent short faces.

struct EliminationStep {
  FaceId c1 = 0, c2 = 0;  // the merged short pair, ids in the pre-step graph
  std::vector<std::pair<Vertex, Vertex>> deleted;  // original vertex ids
  std::size_t sym_diff_cycles = 0;                 // s
  std::size_t num_components = 0;                  // components after deletion
  std::size_t kept_component = 0;                  // index in discovery order
  std::size_t vertices_before = 0, edges_before = 0;
  std::size_t vertices_after = 0, edges_after = 0;
  bool two_connected_after = false;
};

// Report over the five post-reduction properties.
struct LemmaReport {
  bool no_short_pair_shares_edge = false;       // (A)
  bool has_long_face = false;                   // (B)
  bool long_faces_are_host_faces = false;       // (C)
  bool long_face_meets_in_vertex_or_edge = false;  // (D)
  bool interior_neighbors_short = false;        // (E)
  std::vector<std::string> notes;
  bool all() const {
    return no_short_pair_shares_edge && has_long_face &&
           long_faces_are_host_faces && long_face_meets_in_vertex_or_edge &&
           interior_neighbors_short;
  }
};

struct Reduction {
  PlaneGraph reduced;
  std::vector<Vertex> to_orig;  // reduced vertex id -> host vertex id
  std::vector<EliminationStep> steps;
  // Per reduced face: the host faces whose regions merged into it.
  std::vector<std::vector<FaceId>> face_members;
  LemmaReport properties;
};

namespace detail {

// Lowest-id pair of distinct short faces sharing an edge, with their common
// edges; nullopt-style return via found flag.
struct ShortPair {
  bool found = false;
  FaceId c1 = 0, c2 = 0;
  std::vector<EdgeId> common;
};

inline ShortPair lowest_adjacent_short_pair(const PlaneGraph& g,
                                            const FaceClassification& cls) {
  ShortPair best;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    FaceId f1 = g.face_of(static_cast<Dart>(2 * e));
    FaceId f2 = g.face_of(static_cast<Dart>(2 * e + 1));
    if (f1 == f2 || !cls.is_short[f1] || !cls.is_short[f2]) continue;
    if (f1 > f2) std::swap(f1, f2);
    if (!best.found || std::make_pair(f1, f2) <
                           std::make_pair(best.c1, best.c2)) {
      best.found = true;
      best.c1 = f1;
      best.c2 = f2;
    }
  }
  if (best.found)
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      FaceId f1 = g.face_of(static_cast<Dart>(2 * e));
      FaceId f2 = g.face_of(static_cast<Dart>(2 * e + 1));
      if (std::minmax(f1, f2) == std::minmax(best.c1, best.c2))
        best.common.push_back(e);
    }
  return best;
}

// Components of the graph after removing `remove_edge`-flagged edges,
// ignoring isolated vertices.  Returns component index per vertex (or -1)
// and the component count.
inline std::pair<std::vector<int>, int> surviving_components(
    const PlaneGraph& g, const std::vector<char>& remove_edge) {
  std::vector<int> comp(g.num_vertices(), -1);
  int n = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    bool has_edge = false;
    for (Dart d : g.darts_of(s))
      if (!remove_edge[edge_of(d)]) has_edge = true;
    if (!has_edge) continue;
    comp[s] = n;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts_of(v)) {
        if (remove_edge[edge_of(d)]) continue;
        Vertex w = g.dart_head(d);
        if (comp[w] < 0) {
          comp[w] = n;
          stack.push_back(w);
        }
      }
    }
    ++n;
  }
  return {std::move(comp), n};
}

// Number of cycles in the symmetric difference of the two face boundaries
// (= connected components of that edge set; each is a closed even-degree
// walk, a cycle for boundary cycles of a 2-connected graph).
inline std::size_t symmetric_difference_cycles(const PlaneGraph& g, FaceId f1,
                                               FaceId f2) {
  std::set<EdgeId> e1, e2;
  for (Dart d : g.face_darts(f1)) e1.insert(edge_of(d));
  for (Dart d : g.face_darts(f2)) e2.insert(edge_of(d));
  std::set<EdgeId> sym;
  for (EdgeId e : e1)
    if (!e2.count(e)) sym.insert(e);
  for (EdgeId e : e2)
    if (!e1.count(e)) sym.insert(e);
  // Union-find over endpoint vertices restricted to sym edges.
  std::map<Vertex, Vertex> parent;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) return v;
    Vertex r = find(it->second);
    parent[v] = r;
    return r;
  };
  std::size_t merges = 0, vertices = 0;
  for (EdgeId e : sym) {
    auto [a, b] = g.edge_endpoints(e);
    for (Vertex v : {a, b})
      if (!parent.count(v)) {
        parent[v] = v;
        ++vertices;
      }
    Vertex ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      ++merges;
    }
  }
  return vertices - merges;  // components spanned by sym edges
}

}  // namespace detail

// One elimination step: find the lowest-id adjacent short pair, delete their
// common edges, and keep the component containing the first long face.
// The second element maps kept vertices to the input's vertex ids.
inline std::tuple<PlaneGraph, std::vector<Vertex>, EliminationStep>
eliminate_step(const PlaneGraph& g, unsigned k) {
  FaceClassification cls = classify_faces(g, k);
  FaceId long_face = find_long_facial_cycle(g, cls);
  detail::ShortPair pair = detail::lowest_adjacent_short_pair(g, cls);
  if (!pair.found)
    throw Error(ErrorCode::NoAdjacentShortPair,
                "no two short faces share an edge");

  EliminationStep step;
  step.c1 = pair.c1;
  step.c2 = pair.c2;
  step.vertices_before = g.num_vertices();
  step.edges_before = g.num_edges();
  step.sym_diff_cycles = detail::symmetric_difference_cycles(g, pair.c1, pair.c2);

  std::vector<char> remove(g.num_edges(), 0);
  for (EdgeId e : pair.common) {
    remove[e] = 1;
    auto [a, b] = g.edge_endpoints(e);
    step.deleted.push_back({a, b});
  }

  Vertex anchor = g.dart_vertex(g.face_darts(long_face).front());
  auto [comp, ncomp] = detail::surviving_components(g, remove);
  step.num_components = static_cast<std::size_t>(ncomp);
  step.kept_component = static_cast<std::size_t>(comp[anchor]);

  DeletionResult del = delete_edges_keep_component(g, remove, anchor);
  step.vertices_after = del.graph.num_vertices();
  step.edges_after = del.graph.num_edges();
  step.two_connected_after = is_2_connected(del.graph);
  return {std::move(del.graph), std::move(del.vertex_to_old), std::move(step)};
}

inline LemmaReport validate_lemma_properties(const Reduction& red,
                                             const PlaneGraph& host,
                                             unsigned k);

// Iterate eliminate_step to its fixpoint and account for every host face:
// each face of the result either is a host face or absorbed a set of them.
inline Reduction reduce_to_g_prime(const PlaneGraph& g, unsigned k) {
  {
    FaceClassification cls = classify_faces(g, k);
    find_long_facial_cycle(g, cls);  // throws NoLongFace up front
  }

  PlaneGraph cur = g;
  std::vector<Vertex> to_orig(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) to_orig[v] = v;
  std::vector<EliminationStep> steps;

  for (;;) {
    FaceClassification cls = classify_faces(cur, k);
    if (!detail::lowest_adjacent_short_pair(cur, cls).found) break;
    auto [next, vmap, step] = eliminate_step(cur, k);
    // Rewrite the step's deleted-edge endpoints into host ids.
    for (auto& [a, b] : step.deleted) {
      a = to_orig[a];
      b = to_orig[b];
    }
    std::vector<Vertex> composed(vmap.size());
    for (Vertex v = 0; v < vmap.size(); ++v) composed[v] = to_orig[vmap[v]];
    cur = std::move(next);
    to_orig = std::move(composed);
    steps.push_back(std::move(step));
  }

  Reduction red{std::move(cur), std::move(to_orig), std::move(steps), {}, {}};

  // Face-merge account.  Two host faces lie in the same region of the
  // reduced graph exactly when they are joined by a chain of host edges
  // absent from it, so union host faces across every missing edge.
  std::set<std::pair<Vertex, Vertex>> kept_edges;
  for (EdgeId e = 0; e < red.reduced.num_edges(); ++e) {
    auto [a, b] = red.reduced.edge_endpoints(e);
    Vertex oa = red.to_orig[a], ob = red.to_orig[b];
    kept_edges.insert({std::min(oa, ob), std::max(oa, ob)});
  }
  std::vector<FaceId> parent(g.num_faces());
  for (FaceId f = 0; f < g.num_faces(); ++f) parent[f] = f;
  std::function<FaceId(FaceId)> find = [&](FaceId f) {
    while (parent[f] != f) f = parent[f] = parent[parent[f]];
    return f;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge_endpoints(e);
    if (kept_edges.count({std::min(a, b), std::max(a, b)})) continue;
    FaceId f1 = find(g.face_of(static_cast<Dart>(2 * e)));
    FaceId f2 = find(g.face_of(static_cast<Dart>(2 * e + 1)));
    if (f1 != f2) parent[f1] = f2;
  }

  // Assign each class to the reduced face whose region holds it: follow any
  // surviving boundary edge from the same side.
  std::map<std::pair<Vertex, Vertex>, Dart> reduced_dart;
  for (Dart d = 0; d < 2 * red.reduced.num_edges(); ++d)
    reduced_dart[{red.to_orig[red.reduced.dart_vertex(d)],
                  red.to_orig[red.reduced.dart_head(d)]}] = d;
  red.face_members.assign(red.reduced.num_faces(), {});
  std::map<FaceId, FaceId> class_face;  // class root -> reduced face
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    FaceId root = find(f);
    if (!class_face.count(root)) {
      // Search the whole class for a face with a surviving boundary edge.
      for (FaceId h = 0; h < g.num_faces() && !class_face.count(root); ++h) {
        if (find(h) != root) continue;
        for (Dart d : g.face_darts(h)) {
          auto it = reduced_dart.find({g.dart_vertex(d), g.dart_head(d)});
          if (it != reduced_dart.end()) {
            class_face[root] = red.reduced.face_of(it->second);
            break;
          }
        }
      }
      if (!class_face.count(root))
        throw std::logic_error("face class without surviving boundary edge");
    }
    red.face_members[class_face[root]].push_back(f);
  }

  red.properties = validate_lemma_properties(red, g, k);
  return red;
}

// Checks the five properties of the reduced graph against its host.
inline LemmaReport validate_lemma_properties(const Reduction& red,
                                             const PlaneGraph& host,
                                             unsigned k) {
  const PlaneGraph& gp = red.reduced;
  FaceClassification cls = classify_faces(gp, k);
  FaceClassification host_cls = classify_faces(host, k);
  LemmaReport rep;

  // (A) no two short facial cycles share a common edge.
  rep.no_short_pair_shares_edge = true;
  for (EdgeId e = 0; e < gp.num_edges(); ++e) {
    FaceId f1 = gp.face_of(static_cast<Dart>(2 * e));
    FaceId f2 = gp.face_of(static_cast<Dart>(2 * e + 1));
    if (f1 != f2 && cls.is_short[f1] && cls.is_short[f2]) {
      rep.no_short_pair_shares_edge = false;
      rep.notes.push_back("short faces " + std::to_string(f1) + "," +
                          std::to_string(f2) + " share edge " +
                          std::to_string(e));
    }
  }

  // (B) a long facial cycle exists.
  rep.has_long_face = !cls.y_faces.empty();
  if (!rep.has_long_face) rep.notes.push_back("no long face");

  // (C) every long facial cycle is a facial cycle of the host.
  std::set<std::vector<Vertex>> host_keys;
  std::vector<Vertex> host_id(host.num_vertices());
  for (Vertex v = 0; v < host.num_vertices(); ++v) host_id[v] = v;
  for (FaceId f = 0; f < host.num_faces(); ++f)
    host_keys.insert(detail::face_key(host, f, host_id));
  rep.long_faces_are_host_faces = true;
  for (FaceId f : cls.y_faces)
    if (!host_keys.count(detail::face_key(gp, f, red.to_orig))) {
      rep.long_faces_are_host_faces = false;
      rep.notes.push_back("long face " + std::to_string(f) +
                          " is not a host facial cycle");
    }

  // (D) two long facial cycles meet in at most a vertex or an edge.
  rep.long_face_meets_in_vertex_or_edge = true;
  for (std::size_t i = 0; i < cls.y_faces.size(); ++i) {
    std::set<Vertex> vi;
    for (Vertex v : gp.face_vertices(cls.y_faces[i])) vi.insert(v);
    auto ei = detail::face_edge_set(gp, cls.y_faces[i], red.to_orig);
    for (std::size_t j = i + 1; j < cls.y_faces.size(); ++j) {
      std::vector<Vertex> common;
      for (Vertex v : gp.face_vertices(cls.y_faces[j]))
        if (vi.count(v)) common.push_back(v);
      if (common.empty()) continue;
      auto ej = detail::face_edge_set(gp, cls.y_faces[j], red.to_orig);
      std::size_t shared_edges = 0;
      for (const auto& e : ej) shared_edges += ei.count(e);
      bool ok = (common.size() == 1 && shared_edges == 0) ||
                (common.size() == 2 && shared_edges == 1);
      if (!ok) {
        rep.long_face_meets_in_vertex_or_edge = false;
        rep.notes.push_back("long faces " + std::to_string(cls.y_faces[i]) +
                            "," + std::to_string(cls.y_faces[j]) +
                            " meet in " + std::to_string(common.size()) +
                            " vertices / " + std::to_string(shared_edges) +
                            " edges");
      }
    }
  }

  // (E) every host face merged into a short face and touching its boundary
  // is itself short.
  rep.interior_neighbors_short = true;
  for (FaceId f : cls.x_faces) {
    auto boundary = detail::face_edge_set(gp, f, red.to_orig);
    for (FaceId member : red.face_members[f]) {
      std::vector<Vertex> id(host.num_vertices());
      for (Vertex v = 0; v < host.num_vertices(); ++v) id[v] = v;
      auto member_edges = detail::face_edge_set(host, member, id);
      bool touches = false;
      for (const auto& e : member_edges)
        if (boundary.count(e)) touches = true;
      if (touches && !host_cls.is_short[member]) {
        rep.interior_neighbors_short = false;
        rep.notes.push_back("host face " + std::to_string(member) +
                            " inside short face " + std::to_string(f) +
                            " touches its boundary but is long");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Subcubic conversion by vertex splitting.

struct SplitRecord {
  Vertex v = 0;        // the split vertex (id in the graph at that moment)
  bool short_rule = false;  // kept a short-face corner together
  Vertex w1 = 0, w2 = 0;    // the corner's neighbors (short rule only)
};

struct SubcubicResult {
  PlaneGraph graph;
  std::vector<SplitRecord> splits;
  std::vector<FaceId> face_to_input;  // result face -> input face
  // Properties of the result (primed variants of the lemma list):
  bool short_faces_disjoint = false;       // (A')
  bool has_long_face = false;              // (B')
  bool long_faces_correspond = false;      // (C')
  bool long_faces_share_le_one_edge = false;  // (D')
  bool short_lengths_preserved = false;
};

inline SubcubicResult make_subcubic(const PlaneGraph& g_in, unsigned k) {
  PlaneGraph cur = g_in;
  std::vector<FaceId> face_map(cur.num_faces());
  for (FaceId f = 0; f < cur.num_faces(); ++f) face_map[f] = f;
  std::vector<SplitRecord> splits;

  for (;;) {
    Vertex v = 0;
    bool found = false;
    for (; v < cur.num_vertices(); ++v)
      if (cur.degree(v) > 3) {
        found = true;
        break;
      }
    if (!found) break;

    FaceClassification cls = classify_faces(cur, k);
    // Short rule: keep together the first corner that lies on a short face.
    Dart corner = kNoDart;
    for (Dart d : cur.darts_of(v))
      if (cls.is_short[cur.face_of(d)]) {
        corner = d;
        break;
      }
    SplitRecord rec;
    rec.v = v;
    Dart block_start;
    if (corner != kNoDart) {
      rec.short_rule = true;
      block_start = cur.rot_prev(corner);
      rec.w1 = cur.dart_head(block_start);
      rec.w2 = cur.dart_head(corner);
    } else {
      block_start = cur.vertex_dart(v);
    }
    std::size_t old_darts = cur.num_darts();
    SplitResult split = split_vertex(cur, v, block_start, 2);

    // Faces survive a split; map each new face through any pre-split dart.
    std::vector<FaceId> next_map(split.graph.num_faces());
    for (FaceId f = 0; f < split.graph.num_faces(); ++f) {
      FaceId mapped = static_cast<FaceId>(-1);
      for (Dart d : split.graph.face_darts(f))
        if (d < old_darts) {
          mapped = face_map[cur.face_of(d)];
          break;
        }
      if (mapped == static_cast<FaceId>(-1))
        throw std::logic_error("split created a face with no old dart");
      next_map[f] = mapped;
    }
    face_map = std::move(next_map);
    cur = std::move(split.graph);
    splits.push_back(rec);
  }

  SubcubicResult out{std::move(cur), std::move(splits), std::move(face_map),
                     false,          false,             false,
                     false,          false};
  const PlaneGraph& gpp = out.graph;
  FaceClassification in_cls = classify_faces(g_in, k);
  FaceClassification cls = classify_faces(gpp, k);

  // (A') short facial cycles pairwise vertex-disjoint.
  out.short_faces_disjoint = true;
  for (Vertex v = 0; v < gpp.num_vertices(); ++v) {
    std::set<FaceId> short_here;
    for (Dart d : gpp.darts_of(v))
      if (cls.is_short[gpp.face_of(d)]) short_here.insert(gpp.face_of(d));
    if (short_here.size() > 1) out.short_faces_disjoint = false;
  }

  out.has_long_face = !cls.y_faces.empty();  // (B')

  // (C') long faces map to long input faces; short lengths are preserved.
  out.long_faces_correspond = true;
  out.short_lengths_preserved = true;
  for (FaceId f = 0; f < gpp.num_faces(); ++f) {
    FaceId src = out.face_to_input[f];
    if (cls.is_short[f]) {
      if (in_cls.is_short[src] == 0 ||
          cls.length[f] != in_cls.length[src])
        out.short_lengths_preserved = false;
    } else if (in_cls.is_short[src]) {
      out.long_faces_correspond = false;
    }
  }

  // (D') two long facial cycles share at most one edge.
  out.long_faces_share_le_one_edge = true;
  for (std::size_t i = 0; i < cls.y_faces.size(); ++i) {
    std::set<EdgeId> ei;
    for (Dart d : gpp.face_darts(cls.y_faces[i])) ei.insert(edge_of(d));
    for (std::size_t j = i + 1; j < cls.y_faces.size(); ++j) {
      std::size_t shared = 0;
      for (Dart d : gpp.face_darts(cls.y_faces[j]))
        shared += ei.count(edge_of(d));
      if (shared > 1) out.long_faces_share_le_one_edge = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Euler counting report.

struct CountingReport {
  unsigned k = 0;
  std::size_t n = 0;  // branch (degree-3) vertices, = |V(H)|
  std::size_t x = 0, y = 0;
  std::size_t px = 0;             // total subdivided paths on short faces
  std::size_t sum_short_l = 0;    // sum of l(F), F short
  std::size_t sum_long_l = 0;     // sum of l(F), F long
  std::size_t sum_short_lh = 0;   // sum of branch-vertex counts, F short
  std::size_t min_paths_per_face = 0;
  bool h_simple = false;
  bool h_two_connected = false;
  bool euler_identity = false;      // x + y == n/2 + 2
  bool chain_n_ge_sum_lh = false;   // n >= sum_short_lh
  bool chain_sum_lh_ge_3x = false;  // sum_short_lh >= 3x
  bool chain_upper = false;         // sum_long_l <= 3n + (k-7)x
  bool chain_lower = false;         // sum_long_l >= (2k+4)y
  bool final_contradiction = false;  // (k-1)n < (3k-3)x
  std::size_t k4_min_face_after_contraction = 0;  // 0 = not applicable
};

inline CountingReport counting_report(const PlaneGraph& g, unsigned k) {
  if (!g.is_subcubic())
    throw Error(ErrorCode::NotSubcubic, "counting needs max degree 3");
  if (!is_2_connected(g))
    throw Error(ErrorCode::Not2Connected, "counting needs 2-connectivity");

  CountingReport rep;
  rep.k = k;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 3) ++rep.n;

  FaceClassification cls = classify_faces(g, k);
  rep.x = cls.x_faces.size();
  rep.y = cls.y_faces.size();
  rep.min_paths_per_face = g.num_vertices();
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    std::size_t branch_on_boundary = 0;
    for (Vertex v : g.face_vertices(f))
      if (g.degree(v) == 3) ++branch_on_boundary;
    rep.min_paths_per_face = std::min(rep.min_paths_per_face,
                                      branch_on_boundary);
    if (cls.is_short[f]) {
      rep.sum_short_l += cls.length[f];
      rep.sum_short_lh += branch_on_boundary;
    } else {
      rep.sum_long_l += cls.length[f];
    }
  }
  rep.px = rep.sum_short_lh;

  SuppressResult sup = suppress_degree_two(g);
  rep.h_simple = sup.graph.is_simple();
  rep.h_two_connected = is_2_connected(sup.graph);

  rep.euler_identity = rep.x + rep.y == rep.n / 2 + 2;
  if (sup.graph.is_cubic() && rep.h_two_connected && !rep.euler_identity)
    throw std::logic_error("Euler face-count identity violated");

  long long kk = static_cast<long long>(k);
  long long n = static_cast<long long>(rep.n);
  long long x = static_cast<long long>(rep.x);
  long long y = static_cast<long long>(rep.y);
  rep.chain_n_ge_sum_lh = n >= static_cast<long long>(rep.sum_short_lh);
  rep.chain_sum_lh_ge_3x = static_cast<long long>(rep.sum_short_lh) >= 3 * x;
  rep.chain_upper =
      static_cast<long long>(rep.sum_long_l) <= 3 * n + (kk - 7) * x;
  rep.chain_lower =
      static_cast<long long>(rep.sum_long_l) >= (2 * kk + 4) * y;
  rep.final_contradiction = (kk - 1) * n < (3 * kk - 3) * x;

  if (k == 4 && g.is_cubic()) {
    try {
      ContractResult con = contract_triangles(g);
      rep.k4_min_face_after_contraction = con.graph.num_faces()
          ? *std::min_element(con.graph.face_length_multiset().begin(),
                              con.graph.face_length_multiset().end())
          : 0;
    } catch (const Error&) {
      rep.k4_min_face_after_contraction = 0;  // overlapping triangles etc.
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Subdivided-path diagnostics for short faces.

struct FacePathDiagnostics {
  FaceId face = 0;
  std::size_t length = 0;            // l(F)
  std::size_t max_path_len = 0;      // longest subdivided path, in edges
  std::size_t max_path_internal = 0; // its degree-2 vertex count (p)
  std::size_t deg2_off_path = 0;     // degree-2 vertices not on it (r)
  long slack = 0;                    // l(F) - 3 - (p + r)
  bool bare_cycle = false;           // boundary has no degree-3 vertex
};

struct SubdividedPathDiagnostics {
  unsigned k = 0;
  std::size_t bound = 0;  // (k-3)/2, in edges
  std::vector<FacePathDiagnostics> faces;
  bool all_within_bound = true;
};

inline SubdividedPathDiagnostics subdivided_path_bound_check(
    const PlaneGraph& g, unsigned k, const FaceClassification& cls) {
  SubdividedPathDiagnostics out;
  out.k = k;
  out.bound = (k >= 3) ? (k - 3) / 2 : 0;
  for (FaceId f : cls.x_faces) {
    FacePathDiagnostics d;
    d.face = f;
    d.length = cls.length[f];
    std::vector<int> deg;
    for (Vertex v : g.face_vertices(f))
      deg.push_back(static_cast<int>(g.degree(v)));
    std::size_t m = deg.size();
    std::size_t branch = 0, deg2 = 0;
    for (int x : deg) (x >= 3 ? branch : deg2)++;
    if (branch == 0) {
      d.bare_cycle = true;
      out.faces.push_back(d);
      continue;
    }
    // Longest cyclic run of degree-2 vertices.
    std::size_t best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (deg[i] < 3) continue;
      std::size_t run = 0, j = (i + 1) % m;
      while (deg[j] < 3) {
        ++run;
        j = (j + 1) % m;
      }
      best = std::max(best, run);
    }
    d.max_path_internal = best;
    d.max_path_len = best + 1;
    d.deg2_off_path = deg2 - best;
    d.slack = static_cast<long>(d.length) - 3 -
              static_cast<long>(best + d.deg2_off_path);
    if (d.max_path_len > out.bound) out.all_within_bound = false;
    out.faces.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Discharging ledger.

struct ChargeLedger {
  unsigned k = 0;
  std::vector<std::size_t> initial;  // l_G(F)
  std::vector<long> final_charge;    // after discharging
  struct Transfer {
    EdgeId edge;
    FaceId from, to;
  };
  std::vector<Transfer> transfers;
  std::vector<char> in_y;
  long sum_initial_minus6 = 0;  // always -12 for cubic connected inputs
  // Per long face: (final charge, the ceiling lower bound).
  std::vector<std::pair<long, long>> long_face_bounds;
  bool all_long_faces_ge6 = true;
};

inline ChargeLedger discharge(const PlaneGraph& g, unsigned k,
                              const std::vector<char>& in_y) {
  if (!g.is_cubic())
    throw Error(ErrorCode::NotCubic, "discharging runs on cubic graphs");
  if (!is_3_connected(g))
    throw Error(ErrorCode::Not3Connected,
                "discharging runs on 3-connected graphs");
  if (in_y.size() != g.num_faces())
    throw Error(ErrorCode::MissingAssignment, "one Y flag per face");

  ChargeLedger led;
  led.k = k;
  led.in_y = in_y;
  led.initial.resize(g.num_faces());
  led.final_charge.resize(g.num_faces());
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    led.initial[f] = g.face_length(f);
    led.final_charge[f] = static_cast<long>(led.initial[f]);
    led.sum_initial_minus6 += static_cast<long>(led.initial[f]) - 6;
  }
  if (led.sum_initial_minus6 != -12)
    throw std::logic_error("total curvature of a cubic plane graph is not -12");

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    FaceId f1 = g.face_of(static_cast<Dart>(2 * e));
    FaceId f2 = g.face_of(static_cast<Dart>(2 * e + 1));
    if (in_y[f1] == in_y[f2]) continue;
    FaceId from = in_y[f1] ? f1 : f2;
    FaceId to = in_y[f1] ? f2 : f1;
    led.transfers.push_back({e, from, to});
    --led.final_charge[from];
    ++led.final_charge[to];
  }

  long total_initial = 0, total_final = 0;
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    total_initial += static_cast<long>(led.initial[f]);
    total_final += led.final_charge[f];
  }
  if (total_initial != total_final ||
      total_initial != static_cast<long>(2 * g.num_edges()))
    throw std::logic_error("discharging lost charge");

  long denom = static_cast<long>((k >= 3 ? (k - 3) / 2 : 0) + 1);
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (!in_y[f]) continue;
    long bound = (static_cast<long>(led.initial[f]) + denom - 1) / denom;
    led.long_face_bounds.push_back({led.final_charge[f], bound});
    if (led.final_charge[f] < 6) led.all_long_faces_ge6 = false;
  }
  return led;
}

// The host faces that are long faces of the reduced graph, as Y flags
// (the discharging rule's Y set, transported to the host).
inline std::vector<char> y_faces_of_host(const PlaneGraph& host,
                                         const Reduction& red, unsigned k) {
  FaceClassification cls = classify_faces(red.reduced, k);
  std::vector<char> in_y(host.num_faces(), 0);
  std::vector<Vertex> id(host.num_vertices());
  for (Vertex v = 0; v < host.num_vertices(); ++v) id[v] = v;
  for (FaceId f : cls.y_faces) {
    auto key = detail::face_key(red.reduced, f, red.to_orig);
    for (FaceId member : red.face_members[f])
      if (detail::face_key(host, member, id) == key) in_y[member] = 1;
  }
  return in_y;
}

// ---------------------------------------------------------------------------
// Interior-charge account for one short face of the reduced graph.

struct InteriorChargeReport {
  FaceId face = 0;          // reduced face id
  std::size_t p1 = 0;       // boundary vertices joined to the exterior
  std::size_t p2 = 0;       // boundary-to-interior plus interior vertices
  std::size_t interior_faces = 0;        // |members|
  std::size_t euler_face_count = 0;      // p2/2 + 1
  bool euler_consistent = false;
  long sum_final_charge = 0;             // over interior host faces
  long expected_sum = 0;                 // 2 p1 + 3 p2
  long sum_final_minus6 = 0;
  bool nonnegative = false;
};

inline InteriorChargeReport interior_charge_check(const PlaneGraph& host,
                                                  const Reduction& red,
                                                  FaceId f0, unsigned k,
                                                  const ChargeLedger& ledger) {
  if (!host.is_cubic())
    throw Error(ErrorCode::NotCubic, "interior account needs a cubic host");
  FaceClassification cls = classify_faces(red.reduced, k);
  if (!cls.is_short[f0])
    throw Error(ErrorCode::FaceNotShort,
                "face " + std::to_string(f0) + " is long");

  InteriorChargeReport rep;
  rep.face = f0;
  std::set<FaceId> members(red.face_members[f0].begin(),
                           red.face_members[f0].end());
  rep.interior_faces = members.size();

  // Boundary vertices in host ids, and their boundary edges.
  std::vector<Vertex> boundary;
  for (Vertex v : red.reduced.face_vertices(f0))
    boundary.push_back(red.to_orig[v]);
  std::set<Vertex> on_boundary(boundary.begin(), boundary.end());
  std::set<std::pair<Vertex, Vertex>> boundary_edges;
  std::vector<Vertex> id(host.num_vertices());
  for (Vertex v = 0; v < host.num_vertices(); ++v) id[v] = v;
  boundary_edges = detail::face_edge_set(red.reduced, f0, red.to_orig);

  std::size_t inward = 0;
  for (Vertex v : on_boundary) {
    for (Dart d : host.darts_of(v)) {
      Vertex w = host.dart_head(d);
      auto e = std::minmax(v, w);
      if (boundary_edges.count({e.first, e.second})) continue;
      // The third edge: inside the region iff its side faces are members.
      if (members.count(host.face_of(d)))
        ++inward;
      else
        ++rep.p1;
    }
  }
  std::size_t strict_interior = 0;
  for (Vertex v = 0; v < host.num_vertices(); ++v) {
    if (on_boundary.count(v)) continue;
    bool all_member = true, any = false;
    for (Dart d : host.darts_of(v)) {
      any = true;
      if (!members.count(host.face_of(d))) all_member = false;
    }
    if (any && all_member) ++strict_interior;
  }
  rep.p2 = inward + strict_interior;
  rep.euler_face_count = rep.p2 / 2 + 1;
  rep.euler_consistent = rep.euler_face_count == rep.interior_faces;

  for (FaceId f : members) {
    rep.sum_final_charge += ledger.final_charge[f];
    rep.sum_final_minus6 += ledger.final_charge[f] - 6;
  }
  rep.expected_sum = 2 * static_cast<long>(rep.p1) +
                     3 * static_cast<long>(rep.p2);
  rep.nonnegative = rep.sum_final_minus6 >= 0;
  return rep;
}

}  // namespace csl

#endif  // CSL_REDUCTION_HPP
