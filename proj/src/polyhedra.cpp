#include "regcensus/polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace regcensus {

const char* kind_name(PolyhedronKind kind) {
  return kind == PolyhedronKind::Tetrahedron ? "tet" : "oct";
}

PolyhedronKind kind_from_name(const std::string& name) {
  if (name == "tet") return PolyhedronKind::Tetrahedron;
  if (name == "oct") return PolyhedronKind::Octahedron;
  throw std::invalid_argument("unknown polyhedron kind: '" + name + "' (expected tet|oct)");
}

int PolyhedronTemplate::corner_of(int f, int vertex) const {
  for (int k = 0; k < 3; ++k)
    if (faces[f].v[k] == vertex) return k;
  return -1;
}

int PolyhedronTemplate::edge_index(int u, int w) const {
  if (u > w) std::swap(u, w);
  for (int e = 0; e < edge_count(); ++e)
    if (edges[e][0] == u && edges[e][1] == w) return e;
  throw std::invalid_argument("no such edge");
}

namespace {

// Vertex coordinates of the regular models; used only to generate the
// rotation groups as vertex permutations.
constexpr int kOctCoords[6][3] = {{0, 0, 1}, {1, 0, 0},  {0, 1, 0},
                                  {0, -1, 0}, {-1, 0, 0}, {0, 0, -1}};
constexpr int kTetCoords[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};

std::vector<std::vector<int>> rotation_vertex_maps(PolyhedronKind kind) {
  std::vector<std::vector<int>> out;
  const int nv = kind == PolyhedronKind::Tetrahedron ? 4 : 6;
  const int(*coords)[3] = kind == PolyhedronKind::Tetrahedron ? kTetCoords : kOctCoords;
  // All signed permutation matrices with determinant +1. For the octahedron
  // these are exactly its 24 rotations; for the tetrahedron model (alternate
  // cube vertices) only half of them preserve the vertex set, giving the 12
  // rotations.
  int axes[3] = {0, 1, 2};
  do {
    int inv = 0;  // permutation parity via inversion count
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (axes[i] > axes[j]) ++inv;
    const int psign = inv % 2 == 0 ? 1 : -1;
    for (int smask = 0; smask < 8; ++smask) {
      int sign[3];
      int det = psign;
      for (int j = 0; j < 3; ++j) {
        sign[j] = (smask >> j) & 1 ? -1 : 1;
        det *= sign[j];
      }
      if (det != 1) continue;
      // Image of vertex i: rotate its coordinate vector. Row form: the
      // matrix sends e_j to sign[j] * e_{axes[j]}.
      std::vector<int> vm(nv, -1);
      bool ok = true;
      for (int i = 0; i < nv && ok; ++i) {
        int img[3] = {0, 0, 0};
        for (int j = 0; j < 3; ++j) img[axes[j]] += sign[j] * coords[i][j];
        int target = -1;
        for (int t = 0; t < nv; ++t)
          if (coords[t][0] == img[0] && coords[t][1] == img[1] && coords[t][2] == img[2]) {
            target = t;
            break;
          }
        if (target < 0) ok = false;
        vm[i] = target;
      }
      if (ok) out.push_back(std::move(vm));
    }
  } while (std::next_permutation(axes, axes + 3));
  return out;
}

void build_incidence(PolyhedronTemplate& t) {
  const int F = t.face_count();
  const int E = t.edge_count();
  t.face_side_edge.assign(F, {-1, -1, -1});
  std::vector<std::vector<std::array<int, 2>>> per_edge(E);
  for (int f = 0; f < F; ++f) {
    for (int k = 0; k < 3; ++k) {
      const int e = t.edge_index(t.faces[f].v[k], t.faces[f].v[(k + 1) % 3]);
      t.face_side_edge[f][k] = e;
      per_edge[e].push_back({f, k});
    }
  }
  t.edge_faces.resize(E);
  for (int e = 0; e < E; ++e) {
    if (per_edge[e].size() != 2) throw std::logic_error("edge not on exactly 2 faces");
    t.edge_faces[e][0] = per_edge[e][0];
    t.edge_faces[e][1] = per_edge[e][1];
  }
  // Faces around each vertex in cyclic order: from face f with v at corner c,
  // step across the edge (v, f.v[c+1]) to the neighbouring face. The rule is
  // the rotation system induced by the outward face orientations.
  t.vertex_faces.assign(t.vertex_count, {});
  t.vertex_edges.assign(t.vertex_count, {});
  for (int v = 0; v < t.vertex_count; ++v) {
    int start = -1;
    for (int f = 0; f < F && start < 0; ++f)
      if (t.corner_of(f, v) >= 0) start = f;
    int f = start;
    do {
      const int c = t.corner_of(f, v);
      const int e = t.edge_index(v, t.faces[f].v[(c + 1) % 3]);
      t.vertex_faces[v].push_back(f);
      t.vertex_edges[v].push_back(e);
      const auto& ef = t.edge_faces[e];
      f = ef[0][0] == f ? ef[1][0] : ef[0][0];
    } while (f != start);
  }
}

void build_rotations(PolyhedronTemplate& t) {
  for (auto& vm : rotation_vertex_maps(t.kind)) {
    Rotation r;
    r.vertex_map = vm;
    r.face_map.assign(t.face_count(), -1);
    r.corner_shift.assign(t.face_count(), -1);
    for (int f = 0; f < t.face_count(); ++f) {
      std::array<int, 3> img = {vm[t.faces[f].v[0]], vm[t.faces[f].v[1]], vm[t.faces[f].v[2]]};
      std::array<int, 3> key = img;
      std::sort(key.begin(), key.end());
      int fi = -1;
      for (int g = 0; g < t.face_count() && fi < 0; ++g) {
        std::array<int, 3> gk = t.faces[g].v;
        std::sort(gk.begin(), gk.end());
        if (gk == key) fi = g;
      }
      if (fi < 0) throw std::logic_error("rotation does not permute faces");
      int shift = -1;
      for (int s = 0; s < 3 && shift < 0; ++s) {
        bool match = true;
        for (int k = 0; k < 3; ++k)
          if (t.faces[fi].v[(k + s) % 3] != img[k]) match = false;
        if (match) shift = s;
      }
      if (shift < 0) throw std::logic_error("rotation reverses a face cycle");
      r.face_map[f] = fi;
      r.corner_shift[f] = shift;
    }
    t.rotations.push_back(std::move(r));
  }
  const size_t expect = t.kind == PolyhedronKind::Tetrahedron ? 12 : 24;
  if (t.rotations.size() != expect) throw std::logic_error("unexpected rotation group order");
}

PolyhedronTemplate make_template(PolyhedronKind kind) {
  PolyhedronTemplate t;
  t.kind = kind;
  if (kind == PolyhedronKind::Tetrahedron) {
    t.vertex_count = 4;
    t.faces = {{{1, 3, 2}}, {{0, 2, 3}}, {{0, 3, 1}}, {{0, 1, 2}}};
    t.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    t.edge_valence_target = 6;  // 2*pi / (pi/3)
  } else {
    t.vertex_count = 6;
    t.faces = {{{0, 1, 2}}, {{0, 2, 4}}, {{0, 4, 3}}, {{0, 3, 1}},
               {{5, 2, 1}}, {{5, 4, 2}}, {{5, 3, 4}}, {{5, 1, 3}}};
    t.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
               {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    t.vertex_opposite = {5, 4, 3, 2, 1, 0};
    t.edge_valence_target = 4;  // 2*pi / (pi/2)
  }
  build_incidence(t);
  build_rotations(t);
  return t;
}

}  // namespace

const PolyhedronTemplate& polyhedron_template(PolyhedronKind kind) {
  static const PolyhedronTemplate tet = make_template(PolyhedronKind::Tetrahedron);
  static const PolyhedronTemplate oct = make_template(PolyhedronKind::Octahedron);
  return kind == PolyhedronKind::Tetrahedron ? tet : oct;
}

int target_edge_valence(PolyhedronKind kind) {
  return polyhedron_template(kind).edge_valence_target;
}

int opposite_face(PolyhedronKind kind, int face) {
  if (kind != PolyhedronKind::Octahedron)
    throw std::invalid_argument("opposite_face: the tetrahedron has no vertex-disjoint faces");
  const auto& t = polyhedron_template(kind);
  if (face < 0 || face >= t.face_count()) throw std::invalid_argument("opposite_face: bad index");
  for (int g = 0; g < t.face_count(); ++g) {
    if (g == face) continue;
    bool disjoint = true;
    for (int k = 0; k < 3 && disjoint; ++k)
      if (t.corner_of(g, t.faces[face].v[k]) >= 0) disjoint = false;
    if (disjoint) return g;
  }
  throw std::logic_error("octahedron face without opposite");
}

}  // namespace regcensus
