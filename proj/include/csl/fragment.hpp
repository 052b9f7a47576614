#ifndef CSL_FRAGMENT_HPP
#define CSL_FRAGMENT_HPP

// Attachment fragments: small plane graphs carrying three labelled half-edge
// stubs (S1, S2, S3) on a common outer face.  A fragment replaces a vertex of
// a cubic frame graph; the stubs take over the three edges that met that
// vertex.  Validation is intrinsic:
//   * closing the stubs against an apex vertex must give a simple, connected,
//     genus-0 map (so the stubs really lie on one face, in a fixed cyclic
//     order);
//   * the fragment's own circumference must equal its certified value, so a
//     fragment can never contribute a cycle at or above the target length;
//   * graph distances between stubs must equal the outer-boundary arcs, so
//     gluing fragments together cannot create shortcuts.
// Fragments come from parametric builders, from text files, or from an
// exhaustive search over all valid wirings of a given boundary profile.

#include <csl/plane_graph.hpp>
#include <csl/spectrum.hpp>
#include <csl/util.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace csl {

// Rotation-entry sentinels for the three stubs.
inline constexpr int kStub1 = -1;
inline constexpr int kStub2 = -2;
inline constexpr int kStub3 = -3;

struct Fragment {
  std::string name;
  int k = 0;          // cycle-gap parameter the fragment is sized for
  bool cubic = true;  // true: every vertex ends with degree exactly 3
  // rot[v]: ccw neighbour list; entries are vertex ids or kStub1..kStub3.
  std::vector<std::vector<int>> rot;

  std::size_t num_vertices() const { return rot.size(); }
  bool operator==(const Fragment& o) const {
    return name == o.name && k == o.k && cubic == o.cubic && rot == o.rot;
  }
};

// Geometry certificate produced by validate_fragment.
struct FragmentGeometry {
  std::array<Vertex, 3> stub_vertex{};  // carriers of S1, S2, S3
  std::array<int, 3> arc{};             // outer arcs S1->S2, S2->S3, S3->S1
  std::array<int, 3> stub_distance{};   // distances S1-S2, S2-S3, S3-S1
  std::size_t circumference = 0;        // of the fragment without stubs
};

namespace detail {

inline std::array<Vertex, 3> locate_stubs(const Fragment& f) {
  const std::size_t n = f.rot.size();
  std::array<Vertex, 3> sv{kNoDart, kNoDart, kNoDart};
  std::array<int, 3> count{0, 0, 0};
  for (Vertex v = 0; v < n; ++v) {
    for (int e : f.rot[v]) {
      if (e >= 0) {
        if (static_cast<std::size_t>(e) >= n)
          throw Error(ErrorCode::InvalidRotation, "fragment neighbour out of range");
        continue;
      }
      if (e < kStub3)
        throw Error(ErrorCode::InvalidRotation, "unknown sentinel in fragment rotation");
      int s = -e - 1;
      ++count[s];
      sv[s] = v;
    }
  }
  for (int s = 0; s < 3; ++s)
    if (count[s] != 1)
      throw Error(ErrorCode::InvalidRotation, "each stub must appear exactly once");
  if (sv[0] == sv[1] || sv[1] == sv[2] || sv[0] == sv[2])
    throw Error(ErrorCode::InvalidRotation, "stubs must sit on distinct vertices");
  return sv;
}

}  // namespace detail

// Closes the three stubs against a fresh apex vertex whose rotation meets the
// stubs in the order (S3, S2, S1).  Construction succeeds exactly when the
// stubs lie on one face of the fragment in the canonical cyclic order.
inline PlaneGraph close_with_apex(const Fragment& f) {
  const std::size_t n = f.rot.size();
  std::array<Vertex, 3> sv = detail::locate_stubs(f);
  const Vertex apex = static_cast<Vertex>(n);
  std::vector<std::vector<Vertex>> rot(n + 1);
  for (Vertex v = 0; v < n; ++v) {
    rot[v].reserve(f.rot[v].size());
    for (int e : f.rot[v])
      rot[v].push_back(e >= 0 ? static_cast<Vertex>(e) : apex);
  }
  rot[apex] = {sv[2], sv[1], sv[0]};
  return PlaneGraph::from_rotation(rot);
}

// The fragment as a plain plane graph, stub slots dropped.
inline PlaneGraph fragment_interior_graph(const Fragment& f) {
  const std::size_t n = f.rot.size();
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v)
    for (int e : f.rot[v])
      if (e >= 0) rot[v].push_back(static_cast<Vertex>(e));
  return PlaneGraph::from_rotation(rot);
}

// Full intrinsic check; throws on any defect, returns the geometry on success.
inline FragmentGeometry validate_fragment(const Fragment& f) {
  const std::size_t n = f.rot.size();
  if (n < 3) throw Error(ErrorCode::InvalidProfile, "fragment too small");
  FragmentGeometry geo;
  geo.stub_vertex = detail::locate_stubs(f);

  // Size regime: cubic fragments carry k vertices (the k=5 triangle carries
  // three); degree-raising fragments carry k-1.
  if (f.cubic) {
    if (!(n == static_cast<std::size_t>(f.k) || (n == 3 && f.k == 5)))
      throw Error(ErrorCode::InvalidProfile,
                  "cubic fragment must have k vertices (or 3 when k=5)");
  } else {
    if (n != static_cast<std::size_t>(f.k) - 1)
      throw Error(ErrorCode::InvalidProfile,
                  "degree-raising fragment must have k-1 vertices");
  }

  // Degree regime.
  for (Vertex v = 0; v < n; ++v) {
    std::size_t stubs = 0;
    for (int e : f.rot[v])
      if (e < 0) ++stubs;
    std::size_t real = f.rot[v].size() - stubs;
    if (f.cubic) {
      if (f.rot[v].size() != 3)
        throw Error(ErrorCode::NotCubic, "cubic fragment vertex of degree != 3");
    } else {
      std::size_t need = stubs > 0 ? 2 : 3;
      if (real < need)
        throw Error(ErrorCode::DegreeTooSmall, "fragment vertex degree too small");
    }
  }

  // Planarity of the apex closure certifies the stub face and orientation.
  PlaneGraph closed = close_with_apex(f);
  const Vertex apex = static_cast<Vertex>(n);

  // The three faces at the apex read off the outer arcs: the face carrying
  // the apex edges to S_i and S_{i+1} has length arc_i + 2.
  std::map<FaceId, std::set<int>> face_stubs;
  for (int s = 0; s < 3; ++s) {
    Dart d = closed.find_dart(apex, geo.stub_vertex[s]);
    face_stubs[closed.face_of(d)].insert(s);
    face_stubs[closed.face_of(mate(d))].insert(s);
  }
  if (face_stubs.size() != 3)
    throw Error(ErrorCode::StubMismatch, "apex corners do not span three faces");
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    bool found = false;
    for (const auto& [face, ss] : face_stubs) {
      if (ss == std::set<int>{i, j}) {
        geo.arc[i] = static_cast<int>(closed.face_length(face)) - 2;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(ErrorCode::StubMismatch, "stub pair shares no apex face");
  }
  for (int i = 0; i < 3; ++i) {
    if (geo.arc[i] < 1 || 2 * geo.arc[i] > f.k - 1)
      throw Error(ErrorCode::StubMismatch, "outer arc longer than (k-1)/2");
  }

  // Stub distances inside the fragment must match the boundary arcs: no
  // interior shortcut may undercut min(direct arc, the two other arcs).
  PlaneGraph interior = fragment_interior_graph(f);
  auto bfs_dist = [&](Vertex from, Vertex to) {
    std::vector<int> dist(n, -1);
    std::queue<Vertex> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (v == to) return dist[v];
      for (Vertex w : interior.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    return -1;
  };
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    int direct = geo.arc[i];
    int around = geo.arc[(i + 1) % 3] + geo.arc[(i + 2) % 3];
    int expect = std::min(direct, around);
    geo.stub_distance[i] = bfs_dist(geo.stub_vertex[i], geo.stub_vertex[j]);
    if (geo.stub_distance[i] != expect)
      throw Error(ErrorCode::StubMismatch, "stub distance disagrees with outer arcs");
  }

  // Certified circumference: exactly k-1 (the triangle's is 3).  This both
  // requires a longest cycle of that length and excludes anything longer --
  // in particular a cubic fragment must not be Hamiltonian.
  if (n > 24)
    throw Error(ErrorCode::Unsupported, "fragment too large to certify intrinsically");
  CycleSpectrum sp = full_spectrum_oracle(interior);
  std::vector<unsigned> lens = sp.lengths();
  geo.circumference = lens.empty() ? 0 : lens.back();
  std::size_t expect_circ = (n == 3) ? 3 : static_cast<std::size_t>(f.k) - 1;
  if (geo.circumference != expect_circ)
    throw Error(ErrorCode::IncompatibleK, "fragment circumference != certified value");
  return geo;
}

namespace detail {

// Declarative description of a fragment drawn in a disk: a boundary cycle
// b0..b_{nb-1} (ccw), the three stub corners, chords drawn inside, and
// interior vertices with hand-ordered neighbour lists.  Interior entries in
// `legs` are boundary positions (>= 0) or ~j for interior vertex j.
struct DiskSpec {
  int nb = 0;
  std::array<int, 3> corner_pos{};
  std::vector<std::pair<int, int>> chords;
  std::vector<std::vector<int>> legs;
};

inline Fragment assemble_disk(const DiskSpec& spec, std::string name, int k,
                              bool cubic) {
  const int nb = spec.nb;
  const int t = static_cast<int>(spec.legs.size());
  auto vertex_id = [&](int entry) {
    return entry >= 0 ? entry : nb + (~entry);
  };
  Fragment f;
  f.name = std::move(name);
  f.k = k;
  f.cubic = cubic;
  f.rot.assign(nb + t, {});

  // extras[p]: (sort key, neighbour id); chords keyed by forward distance.
  std::vector<std::vector<std::pair<int, int>>> extras(nb);
  for (auto [p, q] : spec.chords) {
    extras[p].push_back({(q - p + nb) % nb, q});
    extras[q].push_back({(p - q + nb) % nb, p});
  }
  for (int j = 0; j < t; ++j) {
    for (int entry : spec.legs[j]) {
      if (entry >= 0) extras[entry].push_back({-1, nb + j});
    }
  }
  for (int p = 0; p < nb; ++p) {
    auto& ex = extras[p];
    if (std::any_of(ex.begin(), ex.end(),
                    [](const auto& e) { return e.first < 0; }) &&
        ex.size() != 1)
      throw Error(ErrorCode::InvalidRotation,
                  "boundary vertex mixing a leg with other extras");
    std::sort(ex.begin(), ex.end());
    std::vector<int>& r = f.rot[p];
    r.push_back((p + 1) % nb);
    for (const auto& [key, id] : ex) r.push_back(id);
    r.push_back((p + nb - 1) % nb);
    for (int s = 0; s < 3; ++s)
      if (spec.corner_pos[s] == p) r.push_back(-(s + 1));
  }
  for (int j = 0; j < t; ++j) {
    std::vector<int>& r = f.rot[nb + j];
    for (int entry : spec.legs[j]) r.push_back(vertex_id(entry));
  }
  return f;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parametric builders.  Boundary profiles are written (arc1, arc2, arc3) with
// arc1 = S1->S2, arc2 = S2->S3, arc3 = S3->S1 along the outer face.
// ---------------------------------------------------------------------------

// k=5 building block: a bare triangle, one stub per corner.  Profile (1,1,1).
inline Fragment fragment_triangle() {
  detail::DiskSpec spec;
  spec.nb = 3;
  spec.corner_pos = {0, 1, 2};
  return detail::assemble_disk(spec, "triangle", 5, true);
}

// k=7 block: hexagon with a hub joined to the three non-stub corners.
// Profile (2,2,2).
inline Fragment fragment_a7() {
  detail::DiskSpec spec;
  spec.nb = 6;
  spec.corner_pos = {0, 2, 4};
  spec.legs = {{1, 3, 5}};
  return detail::assemble_disk(spec, "a7", 7, true);
}

// k=9 block with profile (2,2,3): boundary 7-cycle plus an adjacent interior
// pair, one hub for the two short arcs, one for the long arc.
inline Fragment fragment_a9() {
  detail::DiskSpec spec;
  spec.nb = 7;
  spec.corner_pos = {0, 2, 4};
  spec.legs = {{1, 3, ~1}, {5, 6, ~0}};
  return detail::assemble_disk(spec, "a9", 9, true);
}

// k=9 block with profile (2,3,3): boundary 8-cycle, one hub, one chord.
inline Fragment fragment_b9() {
  detail::DiskSpec spec;
  spec.nb = 8;
  spec.corner_pos = {0, 2, 5};
  spec.chords = {{4, 6}};
  spec.legs = {{1, 3, 7}};
  return detail::assemble_disk(spec, "b9", 9, true);
}

// Profile (2, m, m) with m = (k-3)/2, for odd k >= 11: hub joined to the
// short-arc midpoint and to the extreme vertices of the two long arcs, with
// a ladder of chords between the long arcs.  The unique wiring of its
// profile (words containing a length-1 arc admit no valid wiring at all:
// the adjacent stub corners force a Hamiltonian boundary detour).
inline Fragment fragment_word_e(int k) {
  if (k < 11 || k % 2 == 0)
    throw Error(ErrorCode::IncompatibleK, "profile (2,m,m) needs odd k >= 11");
  const int m = (k - 3) / 2;
  detail::DiskSpec spec;
  spec.nb = 2 * m + 2;
  spec.corner_pos = {0, 2, m + 2};
  for (int i = 1; i <= m - 2; ++i) spec.chords.push_back({3 + i, 2 * m + 1 - i});
  spec.legs = {{1, 3, 2 * m + 1}};
  return detail::assemble_disk(spec, "e" + std::to_string(k), k, true);
}

// Profile (floor((m+3)/2), ceil((m+3)/2), m-1) for odd k >= 11: one hub with
// a leg into each arc, three ladder zones between consecutive arcs.
inline Fragment fragment_word_b(int k) {
  if (k < 11 || k % 2 == 0)
    throw Error(ErrorCode::IncompatibleK, "balanced profile needs odd k >= 11");
  const int m = (k - 3) / 2;
  const int alpha = (m + 3) / 2;
  const int beta = m + 3 - alpha;
  const int a = (m - 1 + alpha - beta) / 2;
  const int b = alpha - a;
  const int c = beta - b;
  detail::DiskSpec spec;
  spec.nb = 2 * m + 2;
  spec.corner_pos = {0, alpha, alpha + beta};
  spec.legs = {{a, alpha + b, alpha + beta + c}};
  for (int i = 1; i <= alpha - 1 - a; ++i)
    spec.chords.push_back({a + i, alpha + b - i});
  for (int i = 1; i <= beta - 1 - b; ++i)
    spec.chords.push_back({alpha + b + i, alpha + beta + c - i});
  for (int i = 1; i <= m - 2 - c; ++i)
    spec.chords.push_back({alpha + beta + c + i, a - i});
  return detail::assemble_disk(spec, "b" + std::to_string(k), k, true);
}

// Profile (m-1, m-1, 3) for odd k >= 11: adjacent interior pair bridging the
// first and third arcs, ladder between the two long arcs, one long chord.
inline Fragment fragment_word_c(int k) {
  if (k < 11 || k % 2 == 0)
    throw Error(ErrorCode::IncompatibleK, "profile (m-1,m-1,3) needs odd k >= 11");
  const int m = (k - 3) / 2;
  detail::DiskSpec spec;
  spec.nb = 2 * m + 1;
  spec.corner_pos = {0, m - 1, 2 * m - 2};
  for (int t = 1; t <= m - 4; ++t) spec.chords.push_back({2 + t, 2 * m - 4 - t});
  spec.chords.push_back({1, 2 * m});
  spec.legs = {{2, ~1, 2 * m - 1}, {2 * m - 4, 2 * m - 3, ~0}};
  return detail::assemble_disk(spec, "c" + std::to_string(k), k, true);
}

// Degree-raising profile (floor((k-2)/2), ceil((k-2)/2), 1) for odd k >= 5:
// a chorded (k-1)-cycle; at k=5 it degenerates to K4 minus an edge.
inline Fragment fragment_planar_a(int k) {
  if (k < 5 || k % 2 == 0)
    throw Error(ErrorCode::IncompatibleK, "degree-raising profile needs odd k >= 5");
  detail::DiskSpec spec;
  std::string name = "pa" + std::to_string(k);
  if (k == 5) {
    spec.nb = 4;
    spec.corner_pos = {0, 1, 3};
    spec.chords = {{2, 0}};
    return detail::assemble_disk(spec, name, k, false);
  }
  const int alpha = (k - 3) / 2;
  const int beta = (k - 1) / 2;
  spec.nb = k - 1;
  spec.corner_pos = {0, alpha, alpha + beta};
  for (int i = 1; i <= alpha - 1; ++i) spec.chords.push_back({i, 2 * alpha - i});
  spec.chords.push_back({1, 2 * alpha});
  return detail::assemble_disk(spec, name, k, false);
}

// Degree-raising profile ((k-3)/2, (k-3)/2, 2) for odd k >= 5: a chorded
// (k-1)-cycle with a pendant-arc vertex; at k=5 it is K4 minus an edge again,
// with the stubs placed differently.
inline Fragment fragment_planar_b(int k) {
  if (k < 5 || k % 2 == 0)
    throw Error(ErrorCode::IncompatibleK, "degree-raising profile needs odd k >= 5");
  detail::DiskSpec spec;
  std::string name = "pb" + std::to_string(k);
  if (k == 5) {
    spec.nb = 4;
    spec.corner_pos = {0, 1, 2};
    spec.chords = {{3, 1}};
    return detail::assemble_disk(spec, name, k, false);
  }
  const int t = (k - 3) / 2;
  spec.nb = 2 * t + 2;
  spec.corner_pos = {0, t, 2 * t};
  spec.chords.push_back({2 * t + 1, 1});
  for (int i = 0; i <= t - 2; ++i) spec.chords.push_back({1 + i, 2 * t - 1 - i});
  return detail::assemble_disk(spec, name, k, false);
}

// ---------------------------------------------------------------------------
// Text serialisation.
// ---------------------------------------------------------------------------

inline std::string fragment_to_text(const Fragment& f) {
  std::ostringstream out;
  out << "fragment " << f.name << " k=" << f.k
      << " regime=" << (f.cubic ? "cubic" : "planar") << "\n";
  for (std::size_t v = 0; v < f.rot.size(); ++v) {
    out << v << ":";
    for (int e : f.rot[v]) {
      if (e >= 0)
        out << " " << e;
      else
        out << " S" << (-e);
    }
    out << "\n";
  }
  return out.str();
}

inline Fragment fragment_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Fragment f;
  bool have_header = false;
  std::size_t next_id = 0;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok != "fragment")
        throw Error(ErrorCode::BadHeader, "fragment file must start with 'fragment'");
      std::string kf, rf;
      if (!(ls >> f.name >> kf >> rf) || kf.rfind("k=", 0) != 0 ||
          rf.rfind("regime=", 0) != 0)
        throw Error(ErrorCode::BadHeader, "malformed fragment header");
      try {
        f.k = std::stoi(kf.substr(2));
      } catch (const std::exception&) {
        throw Error(ErrorCode::BadHeader, "malformed k in fragment header");
      }
      std::string regime = rf.substr(7);
      if (regime == "cubic")
        f.cubic = true;
      else if (regime == "planar")
        f.cubic = false;
      else
        throw Error(ErrorCode::BadHeader, "regime must be cubic or planar");
      have_header = true;
      continue;
    }
    if (tok.empty() || tok.back() != ':')
      throw Error(ErrorCode::RotationInconsistent, "vertex line must start with 'id:'");
    std::size_t id;
    try {
      id = std::stoul(tok.substr(0, tok.size() - 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::RotationInconsistent, "malformed vertex id");
    }
    if (id != next_id)
      throw Error(ErrorCode::RotationInconsistent, "vertex ids must be consecutive");
    ++next_id;
    std::vector<int> entries;
    while (ls >> tok) {
      if (tok == "S1")
        entries.push_back(kStub1);
      else if (tok == "S2")
        entries.push_back(kStub2);
      else if (tok == "S3")
        entries.push_back(kStub3);
      else {
        try {
          entries.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw Error(ErrorCode::RotationInconsistent, "malformed rotation entry");
        }
        if (entries.back() < 0)
          throw Error(ErrorCode::RotationInconsistent, "negative vertex id");
      }
    }
    f.rot.push_back(std::move(entries));
  }
  if (!have_header) throw Error(ErrorCode::BadHeader, "empty fragment file");
  if (f.rot.empty())
    throw Error(ErrorCode::RotationInconsistent, "fragment file has no vertices");
  return f;
}

inline Fragment read_fragment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fragment_from_text(buf.str());
}

inline void write_fragment_file(const std::string& path, const Fragment& f) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  out << fragment_to_text(f);
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path);
}

// Named lookup.  A CSL_DATA_DIR environment override is consulted first
// (file <dir>/fragments/<name>.frag); otherwise the parametric builders
// answer.  Unknown names raise NoneFound.
inline Fragment make_fragment(const std::string& name) {
  if (const char* dir = std::getenv("CSL_DATA_DIR")) {
    std::filesystem::path path =
        std::filesystem::path(dir) / "fragments" / (name + ".frag");
    if (std::filesystem::exists(path)) return read_fragment_file(path.string());
  }
  auto parse_k = [&](std::size_t prefix) -> int {
    try {
      return std::stoi(name.substr(prefix));
    } catch (const std::exception&) {
      return -1;
    }
  };
  if (name == "triangle") return fragment_triangle();
  if (name == "a7") return fragment_a7();
  if (name == "a9") return fragment_a9();
  if (name == "b9") return fragment_b9();
  if (name.rfind("pa", 0) == 0) {
    int k = parse_k(2);
    if (k >= 5 && k % 2 == 1) return fragment_planar_a(k);
  } else if (name.rfind("pb", 0) == 0) {
    int k = parse_k(2);
    if (k >= 5 && k % 2 == 1) return fragment_planar_b(k);
  } else if (name.size() > 1 && (name[0] == 'b' || name[0] == 'c' || name[0] == 'e')) {
    int k = parse_k(1);
    if (k >= 11 && k % 2 == 1) {
      if (name[0] == 'b') return fragment_word_b(k);
      if (name[0] == 'c') return fragment_word_c(k);
      return fragment_word_e(k);
    }
  }
  throw Error(ErrorCode::NoneFound, "no fragment named '" + name + "'");
}

// Isomorphism key that respects the stubs: traversal codes of the apex
// closure rooted at the apex, minimised over the stub relabelings (rotations
// and reflections) that preserve the arc profile.
inline std::vector<std::uint32_t> fragment_canonical_key(
    const Fragment& f, const FragmentGeometry& geo) {
  PlaneGraph closed = close_with_apex(f);
  const Vertex apex = static_cast<Vertex>(f.rot.size());
  const std::array<int, 3>& w = geo.arc;
  std::vector<std::uint32_t> best;
  for (int s = 0; s < 3; ++s) {
    for (int rev = 0; rev < 2; ++rev) {
      std::array<int, 3> induced =
          rev ? std::array<int, 3>{w[(s + 2) % 3], w[(s + 1) % 3], w[s]}
              : std::array<int, 3>{w[s], w[(s + 1) % 3], w[(s + 2) % 3]};
      if (induced != w) continue;
      Dart d = closed.find_dart(apex, geo.stub_vertex[s]);
      std::vector<std::uint32_t> code = closed.traversal_code(d, rev == 1);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exhaustive search over all wirings of a boundary profile.
// ---------------------------------------------------------------------------

namespace detail {

// State for the wiring search: a boundary cycle with fixed stub corners,
// `t` interior vertices, and extra edges to be chosen.  Cubic regime: every
// non-corner boundary vertex gets exactly one extra edge end, corners none,
// interior vertices exactly three.  Degree-raising regime: non-corner
// 1..2 extra ends, corners 0..1, interior exactly three.
struct WiringSearch {
  int k = 0;
  bool cubic = true;
  int nb = 0, t = 0, n = 0;
  std::array<int, 3> word{};
  std::array<int, 3> cpos{};
  std::vector<int> min_extra, max_extra, deg;
  std::vector<std::vector<char>> used;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> candidates;  // lex list for the extras pass
  std::set<std::vector<std::pair<int, int>>> emitted;
  std::map<std::vector<std::uint32_t>, Fragment> found;

  bool boundary(int v) const { return v < nb; }
  bool cycle_adjacent(int u, int v) const {
    if (!boundary(u) || !boundary(v)) return false;
    return (u + 1) % nb == v || (v + 1) % nb == u;
  }
  static bool interleaved(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
  }
  bool crosses_existing(int u, int v) const {
    if (!boundary(u) || !boundary(v)) return false;
    for (auto [p, q] : edges)
      if (boundary(p) && boundary(q) && interleaved(u, v, p, q)) return true;
    return false;
  }
  bool legal(int u, int v) const {
    if (u == v || used[u][v]) return false;
    if (cycle_adjacent(u, v)) return false;
    if (crosses_existing(u, v)) return false;
    return true;
  }
  void add(int u, int v) {
    used[u][v] = used[v][u] = 1;
    ++deg[u];
    ++deg[v];
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  void remove(int u, int v) {
    used[u][v] = used[v][u] = 0;
    --deg[u];
    --deg[v];
    edges.pop_back();
  }

  void run() {
    extend(-1, -1);
  }

  void extend(int last_driver, int last_partner) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (deg[i] < min_extra[i]) {
        v = i;
        break;
      }
    if (v < 0) {
      extras_pass(0);
      return;
    }
    int start = (v == last_driver) ? last_partner + 1 : 0;
    for (int w = start; w < n; ++w) {
      if (deg[w] >= max_extra[w] || !legal(v, w)) continue;
      add(v, w);
      extend(v, w);
      remove(v, w);
    }
  }

  void extras_pass(std::size_t from) {
    emit();
    for (std::size_t i = from; i < candidates.size(); ++i) {
      auto [u, v] = candidates[i];
      if (deg[u] >= max_extra[u] || deg[v] >= max_extra[v] || !legal(u, v))
        continue;
      add(u, v);
      extras_pass(i + 1);
      remove(u, v);
    }
  }

  void emit() {
    std::vector<std::pair<int, int>> key = edges;
    std::sort(key.begin(), key.end());
    if (!emitted.insert(key).second) return;

    // Per-vertex extras, then enumerate the genuinely ambiguous orderings:
    // boundary vertices with two extras (2 orders) and interior vertices
    // (2 cyclic orders of their three neighbours).
    std::vector<std::vector<int>> extra(n);
    for (auto [u, v] : edges) {
      extra[u].push_back(v);
      extra[v].push_back(u);
    }
    std::vector<int> choice_vertex;
    for (int v = 0; v < n; ++v) {
      if (boundary(v) ? extra[v].size() == 2 : true) choice_vertex.push_back(v);
    }
    const std::size_t combos = std::size_t{1} << choice_vertex.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      Fragment f;
      f.k = k;
      f.cubic = cubic;
      f.rot.assign(n, {});
      for (int p = 0; p < nb; ++p) {
        std::vector<int> ex = extra[p];
        auto it = std::find(choice_vertex.begin(), choice_vertex.end(), p);
        if (it != choice_vertex.end() &&
            (mask >> (it - choice_vertex.begin())) & 1)
          std::reverse(ex.begin(), ex.end());
        std::vector<int>& r = f.rot[p];
        r.push_back((p + 1) % nb);
        for (int e : ex) r.push_back(e);
        r.push_back((p + nb - 1) % nb);
        for (int s = 0; s < 3; ++s)
          if (cpos[s] == p) r.push_back(-(s + 1));
      }
      for (int j = 0; j < t; ++j) {
        std::vector<int> ex = extra[nb + j];
        auto it = std::find(choice_vertex.begin(), choice_vertex.end(), nb + j);
        if (it != choice_vertex.end() &&
            (mask >> (it - choice_vertex.begin())) & 1)
          std::swap(ex[1], ex[2]);
        f.rot[nb + j] = ex;
      }
      try {
        FragmentGeometry geo = validate_fragment(f);
        if (geo.arc != word) continue;
        std::vector<std::uint32_t> code = fragment_canonical_key(f, geo);
        found.emplace(std::move(code), std::move(f));
      } catch (const Error&) {
        continue;
      }
    }
  }
};

}  // namespace detail

// Enumerates, up to stub-respecting isomorphism, every valid fragment with
// the given profile and number of interior vertices.  Deterministic order.
// Bounded to k <= 13 and at most two interior vertices.
inline std::vector<Fragment> search_fragment(int k, std::array<int, 3> word,
                                             int interior, bool cubic) {
  if (k > 13)
    throw Error(ErrorCode::Unsupported, "wiring search is certified for k <= 13");
  if (interior < 0 || interior > 2)
    throw Error(ErrorCode::Unsupported,
                "wiring search supports at most two interior vertices");
  for (int w : word)
    if (w < 1) throw Error(ErrorCode::InvalidProfile, "profile arcs must be >= 1");

  detail::WiringSearch s;
  s.k = k;
  s.cubic = cubic;
  s.word = word;
  s.nb = word[0] + word[1] + word[2];
  s.t = interior;
  s.n = s.nb + s.t;
  s.cpos = {0, word[0], word[0] + word[1]};
  const bool triangle_case = cubic && s.n == 3 && k == 5;
  if (cubic) {
    if (!(s.n == k || triangle_case))
      throw Error(ErrorCode::InvalidProfile,
                  "cubic wiring needs profile+interior summing to k vertices");
  } else {
    if (s.n != k - 1)
      throw Error(ErrorCode::InvalidProfile,
                  "degree-raising wiring needs k-1 vertices");
  }

  s.min_extra.assign(s.n, 0);
  s.max_extra.assign(s.n, 0);
  for (int v = 0; v < s.nb; ++v) {
    bool corner = v == s.cpos[0] || v == s.cpos[1] || v == s.cpos[2];
    if (corner) {
      s.max_extra[v] = cubic ? 0 : 1;
    } else {
      s.min_extra[v] = 1;
      s.max_extra[v] = cubic ? 1 : 2;
    }
  }
  for (int j = 0; j < s.t; ++j) {
    s.min_extra[s.nb + j] = 3;
    s.max_extra[s.nb + j] = 3;
  }
  // Quick parity exit for the rigid cubic regime.
  int slot_sum = 0;
  for (int v = 0; v < s.n; ++v) slot_sum += s.min_extra[v];
  if (cubic && slot_sum % 2 == 1) return {};

  s.deg.assign(s.n, 0);
  s.used.assign(s.n, std::vector<char>(s.n, 0));
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.max_extra[u] > 0 && s.max_extra[v] > 0 && !s.cycle_adjacent(u, v))
        s.candidates.push_back({u, v});
  s.run();

  std::vector<Fragment> out;
  std::size_t idx = 0;
  for (auto& [code, frag] : s.found) {
    frag.name = std::string(cubic ? "c" : "p") + std::to_string(k) + "w" +
                std::to_string(word[0]) + std::to_string(word[1]) +
                std::to_string(word[2]) + "#" + std::to_string(idx++);
    out.push_back(std::move(frag));
  }
  return out;
}

}  // namespace csl

#endif  // CSL_FRAGMENT_HPP
