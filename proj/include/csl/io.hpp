#ifndef CSL_IO_HPP
#define CSL_IO_HPP

// Serialization: planar_code records, DOT export, JSON gap reports.
//
// planar_code is the embedded-graph exchange format used by plantri and
// friends: after the ASCII header ">>planar_code<<", each record is a vertex
// count followed by the 1-indexed counterclockwise neighbor list of each
// vertex, 0-terminated.  Graphs with at most 255 vertices use single bytes;
// larger graphs start the record with a zero byte and use little-endian
// 2-byte values throughout.  Only simple plane graphs are supported: the
// format stores neighbor ids, which cannot distinguish the sides of a
// parallel pair.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "csl/plane_graph.hpp"
#include "csl/spectrum.hpp"

namespace csl {

inline const char* planar_code_header() { return ">>planar_code<<"; }

inline void append_planar_code(std::string& out, const PlaneGraph& g) {
  if (!g.is_simple())
    throw Error(ErrorCode::Unsupported,
                "planar_code stores neighbor ids; parallel edges would be "
                "ambiguous");
  const std::size_t V = g.num_vertices();
  auto rot = g.rotation_lists();
  if (V <= 255) {
    out.push_back(static_cast<char>(V));
    for (const auto& row : rot) {
      for (Vertex w : row) out.push_back(static_cast<char>(w + 1));
      out.push_back('\0');
    }
  } else {
    if (V > 65535)
      throw Error(ErrorCode::Unsupported, "planar_code limit is 65535 vertices");
    out.push_back('\0');
    auto put16 = [&out](std::size_t x) {
      out.push_back(static_cast<char>(x & 0xff));
      out.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    put16(V);
    for (const auto& row : rot) {
      for (Vertex w : row) put16(w + 1);
      put16(0);
    }
  }
}

inline std::string planar_code_bytes(const std::vector<const PlaneGraph*>& gs) {
  std::string out = planar_code_header();
  for (const PlaneGraph* g : gs) append_planar_code(out, *g);
  return out;
}

inline std::string planar_code_bytes(const PlaneGraph& g) {
  return planar_code_bytes(std::vector<const PlaneGraph*>{&g});
}

inline std::vector<PlaneGraph> parse_planar_code(const std::string& bytes) {
  const std::string header = planar_code_header();
  if (bytes.size() < header.size() ||
      bytes.compare(0, header.size(), header) != 0)
    throw Error(ErrorCode::BadHeader, "missing >>planar_code<< header");
  std::size_t pos = header.size();
  auto need = [&](std::size_t n) {
    if (pos + n > bytes.size())
      throw Error(ErrorCode::TruncatedRecord,
                  "record ends after byte " + std::to_string(bytes.size()));
  };
  std::vector<PlaneGraph> out;
  while (pos < bytes.size()) {
    need(1);
    bool wide = false;
    std::size_t V = static_cast<unsigned char>(bytes[pos++]);
    if (V == 0) {
      wide = true;
      need(2);
      V = static_cast<unsigned char>(bytes[pos]) |
          (static_cast<std::size_t>(static_cast<unsigned char>(bytes[pos + 1]))
           << 8);
      pos += 2;
    }
    auto get = [&]() -> std::size_t {
      if (wide) {
        need(2);
        std::size_t x =
            static_cast<unsigned char>(bytes[pos]) |
            (static_cast<std::size_t>(static_cast<unsigned char>(bytes[pos + 1]))
             << 8);
        pos += 2;
        return x;
      }
      need(1);
      return static_cast<unsigned char>(bytes[pos++]);
    };
    std::vector<std::vector<Vertex>> rot(V);
    for (std::size_t v = 0; v < V; ++v) {
      while (true) {
        std::size_t w = get();
        if (w == 0) break;
        if (w > V)
          throw Error(ErrorCode::RotationInconsistent,
                      "neighbor id " + std::to_string(w) + " out of range");
        rot[v].push_back(static_cast<Vertex>(w - 1));
      }
    }
    try {
      out.push_back(PlaneGraph::from_rotation(rot));
    } catch (const Error& e) {
      throw Error(ErrorCode::RotationInconsistent, e.what());
    }
  }
  return out;
}

inline void write_planar_code_file(const std::string& path,
                                   const std::vector<const PlaneGraph*>& gs) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  std::string bytes = planar_code_bytes(gs);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error(ErrorCode::IoFailure, "write failed for " + path);
}

inline std::vector<PlaneGraph> read_planar_code_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_planar_code(ss.str());
}

// ---------------------------------------------------------------------------
// DOT export.  When k > 0, faces are annotated short (length < k) or long
// (length > 2k); lengths in between carry no tag.

inline std::string to_dot(const PlaneGraph& g, unsigned k = 0) {
  std::ostringstream o;
  o << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    o << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge_endpoints(e);
    auto [f1, f2] = g.faces_of_edge(e);
    o << "  " << a << " -- " << b << " [comment=\"faces " << f1 << "|" << f2
      << "\"];\n";
  }
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    o << "  // face " << f << " len " << g.face_length(f);
    if (k > 0) {
      if (g.face_length(f) < k)
        o << " short";
      else if (g.face_length(f) > 2 * k)
        o << " long";
    }
    o << " :";
    for (Vertex v : g.face_vertices(f)) o << " " << v;
    o << "\n";
  }
  o << "}\n";
  return o.str();
}

// ---------------------------------------------------------------------------
// JSON gap report with a fixed field set and order, reproducible up to the
// elapsed-time field.

inline nlohmann::ordered_json gap_report_json(const GapReport& rep,
                                              const std::string& family,
                                              unsigned l, const PlaneGraph& g,
                                              std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["family"] = family;
  j["k"] = rep.k;
  j["l"] = l;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["interval"] = {rep.k, rep.gap_end};
  j["gap_end"] = rep.gap_end;
  j["witness_length"] = rep.witness_length;
  j["witness_vertices"] = rep.witness;
  j["exhaustive"] = rep.exhaustive;
  j["seed"] = seed;
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

}  // namespace csl

#endif  // CSL_IO_HPP
