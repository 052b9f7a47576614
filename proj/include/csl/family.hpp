// Long-cycle-gap families: cubic and general 3-connected plane graphs whose
// cycle spectrum avoids a whole interval [k, G] while still containing a
// longer cycle.  Built by replacing every vertex of a cubic frame (ring
// frames, the dodecahedron) with a validated attachment fragment, chosen per
// frame slot so that every band face closes to the intended long length.
#ifndef CSL_FAMILY_HPP
#define CSL_FAMILY_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csl/base_ring.hpp"
#include "csl/fragment.hpp"
#include "csl/plane_graph.hpp"
#include "csl/util.hpp"

namespace csl {

// Largest G such that a 3-connected plane graph with circumference >= k can
// avoid every cycle length in [k, G].  (One below the forced-length bound.)
inline unsigned gap_ceiling(unsigned k) {
  if (k <= 3) return 4;
  if (k == 4) return 9;
  return 2 * k + 2;
}

// Same bound within the class of *cubic* 3-connected plane graphs, where odd
// k in {5, 7, 9} admit wider gaps.
inline unsigned gap_ceiling_cubic(unsigned k) {
  if (k <= 3) return 4;
  if (k == 4) return 9;
  if (k == 5 || k == 7 || k == 9) return 5 * (k - 1) / 2 - 1;
  return 2 * k + 2;
}

// The dodecahedron as a ring frame: pentagon rims around a 10-ring.
inline PlaneGraph dodecahedron() { return base_ring({5, 10, 5}).graph; }

// Per-vertex replacement instruction: which fragment goes in, and which of
// its stubs (0-based index) lands on rotation position 0 of the vertex.  The
// remaining stubs continue forward-cyclically: rotation position j receives
// stub (first_stub + j) % 3.
struct VertexReplacement {
  const Fragment* fragment = nullptr;
  int first_stub = 0;
};

// Replaces every vertex of a cubic plane graph by its assigned fragment,
// joining stub vertices across the original edges.  Orientation is preserved:
// walking counterclockwise around a replaced vertex meets the fragment's
// stubs in counterclockwise boundary order.
inline PlaneGraph replace_vertices(const PlaneGraph& g,
                                   const std::vector<VertexReplacement>& plan) {
  if (!g.is_cubic())
    throw Error(ErrorCode::NotCubic, "vertex replacement needs a cubic host");
  if (plan.size() != g.num_vertices())
    throw Error(ErrorCode::MissingAssignment,
                "need exactly one replacement per vertex");

  std::map<const Fragment*, FragmentGeometry> geo;
  for (const VertexReplacement& r : plan) {
    if (r.fragment == nullptr)
      throw Error(ErrorCode::MissingAssignment, "null fragment in plan");
    if (r.first_stub < 0 || r.first_stub > 2)
      throw Error(ErrorCode::MissingAssignment, "stub index out of range");
    if (!geo.count(r.fragment))
      geo.emplace(r.fragment, validate_fragment(*r.fragment));
  }

  std::size_t nv = g.num_vertices();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + plan[v].fragment->num_vertices();

  // Rotation position of d within darts_of(vertex) — all cubic, so <= 3.
  auto position_of = [&](Dart d) {
    Vertex v = g.dart_vertex(d);
    auto ds = g.darts_of(v);
    for (int j = 0; j < 3; ++j)
      if (ds[static_cast<std::size_t>(j)] == d) return j;
    throw Error(ErrorCode::InvalidRotation, "dart not found at its vertex");
  };

  std::vector<std::vector<Vertex>> rot(offset[nv]);
  std::vector<std::string> labels(offset[nv]);
  for (std::size_t v = 0; v < nv; ++v) {
    const Fragment& f = *plan[v].fragment;
    auto ds = g.darts_of(static_cast<Vertex>(v));
    for (std::size_t w = 0; w < f.num_vertices(); ++w) {
      labels[offset[v] + w] =
          g.label(static_cast<Vertex>(v)) + "." + std::to_string(w);
      std::vector<Vertex> row;
      row.reserve(f.rot[w].size());
      for (int entry : f.rot[w]) {
        if (entry >= 0) {
          row.push_back(static_cast<Vertex>(offset[v] + entry));
          continue;
        }
        // Stub sentinel: cross the host dart this stub is attached to.
        int s = -entry - 1;
        int j = ((s - plan[v].first_stub) % 3 + 3) % 3;
        Dart d = ds[static_cast<std::size_t>(j)];
        Vertex u = g.dart_head(d);
        int jp = position_of(mate(d));
        int sp = (plan[u].first_stub + jp) % 3;
        Vertex target = geo.at(plan[u].fragment).stub_vertex[sp];
        row.push_back(static_cast<Vertex>(offset[u] + target));
      }
      rot[offset[v] + w] = std::move(row);
    }
  }
  return PlaneGraph::from_rotation(rot, std::move(labels));
}

namespace detail {

// One frame slot of an assignment table: fragment name plus the stub index
// (0-based) that points along the slot's matching edge.
struct SlotRole {
  const char* frag;
  int stub_at_m;
};

// Builds the per-vertex plan for a ring frame from per-slot roles.
// table[r][0] serves the down-matched vertices of ring r, table[r][1] the
// up-matched ones; rims consult the side they actually use.
inline std::vector<VertexReplacement> frame_plan(
    const RingFrame& frame, const std::vector<std::array<SlotRole, 2>>& table,
    std::map<std::string, Fragment>& store) {
  if (static_cast<int>(table.size()) != frame.num_rings())
    throw Error(ErrorCode::MissingAssignment, "one table row per ring");
  std::vector<VertexReplacement> plan(frame.graph.num_vertices());
  for (int r = 0; r < frame.num_rings(); ++r) {
    for (int i = 0; i < frame.profile[r]; ++i) {
      bool up = frame.up(r, i);
      const SlotRole& role = table[r][up ? 1 : 0];
      auto it = store.find(role.frag);
      if (it == store.end())
        it = store.emplace(role.frag, make_fragment(role.frag)).first;
      Vertex v = frame.at(r, i);
      // Locate the matching dart's rotation position, then place the
      // role's stub there.
      auto ds = frame.graph.darts_of(v);
      Vertex m = frame.partner(r, i);
      int jm = -1;
      for (int j = 0; j < 3; ++j)
        if (frame.graph.dart_head(ds[static_cast<std::size_t>(j)]) == m)
          jm = j;
      if (jm < 0)
        throw Error(ErrorCode::MatchingNotPerfect, "matching dart missing");
      plan[v] = VertexReplacement{&it->second,
                                  ((role.stub_at_m - jm) % 3 + 3) % 3};
    }
  }
  return plan;
}

}  // namespace detail

// A constructed gap family member together with its certified parameters.
struct Family {
  PlaneGraph graph;
  int k = 0;
  bool cubic = false;
  int l = 0;              // ring parameter; 0 for the dodecahedral bases
  unsigned gap_low = 0;   // spectrum must avoid [gap_low, gap_high] ...
  unsigned gap_high = 0;
  unsigned witness = 0;   // ... while containing a cycle of this length
};

// Builds the gap family member for parameter k.  Cubic members exist for
// k in {5, 7, 9, 11, 13}; general (degree-unconstrained) members for every
// odd k >= 5.  l is the ring parameter where applicable (pass 0 for the
// smallest certified value, k + 2).
inline Family build_family(int k, int l, bool cubic) {
  std::map<std::string, Fragment> store;

  if (cubic && (k == 5 || k == 7)) {
    // Dodecahedral base; one symmetric fragment everywhere.
    PlaneGraph base = dodecahedron();
    Fragment& f = store.emplace(k == 5 ? "triangle" : "a7",
                                make_fragment(k == 5 ? "triangle" : "a7"))
                      .first->second;
    std::vector<VertexReplacement> plan(base.num_vertices(),
                                        VertexReplacement{&f, 0});
    unsigned hi = gap_ceiling_cubic(static_cast<unsigned>(k));
    return Family{replace_vertices(base, plan), k,  true,
                  0,                            static_cast<unsigned>(k),
                  hi,                           hi + 1};
  }

  if (k < 5 || k % 2 == 0)
    throw Error(ErrorCode::Unsupported, "no gap family for this k");
  if (l == 0) l = k + 2;
  if (l < k + 2)
    throw Error(ErrorCode::InvalidProfile,
                "ring parameter below the certified minimum");

  using detail::SlotRole;
  std::vector<std::array<SlotRole, 2>> table;
  std::string e = (cubic ? "e" : "pa") + std::to_string(k);
  std::string b = (cubic ? "b" : "pb") + std::to_string(k);
  unsigned witness = 2 * static_cast<unsigned>(k) + 3;

  if (!cubic) {
    // Five-ring frame; unit-return fragments except at the two hexagon-band
    // donors, which use the two-return kind.
    SlotRole A{e.c_str(), 1}, B{b.c_str(), 1};
    table = {{A, A}, {A, B}, {A, A}, {B, A}, {A, A}};
  } else if (k == 9) {
    SlotRole B3{"b9", 2}, A2{"a9", 1};
    table = {{B3, B3}, {B3, A2}, {B3, B3}, {A2, B3}, {B3, B3}};
    witness = 20;  // widened ceiling for cubic k = 9
  } else if (k == 11) {
    SlotRole E3{e.c_str(), 2}, E2{e.c_str(), 1}, B2{b.c_str(), 1};
    table = {{E3, E3}, {E3, E2}, {E3, B2}, {B2, B2},
             {B2, E3}, {E2, E3}, {E3, E3}};
  } else if (k == 13) {
    SlotRole E3{e.c_str(), 2}, E1{e.c_str(), 0}, B1{b.c_str(), 0};
    table = {{E3, E3}, {E3, B1}, {B1, E1}, {B1, B1},
             {E1, B1}, {B1, E3}, {E3, E3}};
  } else {
    throw Error(ErrorCode::Unsupported,
                "no certified cubic assignment table for this k");
  }

  RingFrame frame = table.size() == 5 ? five_ring(l) : seven_ring(l);
  PlaneGraph graph =
      replace_vertices(frame.graph, detail::frame_plan(frame, table, store));
  return Family{std::move(graph), k, cubic, l, static_cast<unsigned>(k),
                witness - 1,      witness};
}

}  // namespace csl

#endif  // CSL_FAMILY_HPP
