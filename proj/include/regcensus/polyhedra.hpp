#pragma once

#include <array>
#include <string>
#include <vector>

namespace regcensus {

enum class PolyhedronKind { Tetrahedron, Octahedron };

/// Short format name: "tet" or "oct".
const char* kind_name(PolyhedronKind kind);
PolyhedronKind kind_from_name(const std::string& name);  // throws std::invalid_argument

/// An orientation-preserving symmetry of a template, as a vertex permutation
/// plus its induced action on faces. Applying the rotation sends corner k of
/// face f to corner (k + corner_shift[f]) % 3 of face_map[f]; the shift form
/// is valid exactly because rotations preserve the cyclic corner order.
struct Rotation {
  std::vector<int> vertex_map;
  std::vector<int> face_map;
  std::vector<int> corner_shift;
};

/// A triangular face as a cyclically ordered vertex triple. The order is the
/// outward orientation of the boundary sphere (counterclockwise seen from
/// outside), fixed once per template.
struct Face {
  std::array<int, 3> v;
};

/// Immutable combinatorics of an ideal regular polyhedron: faces, edges,
/// incidences, rotation group, and the edge valence required for the regular
/// hyperbolic structure to close up around an edge (2*pi over the dihedral
/// angle: 4 for the octahedron, 6 for the tetrahedron).
///
/// Fixed labeling: octahedron vertices 0..5 with opposite pairs (0,5), (1,4),
/// (2,3); tetrahedron vertices 0..3 with face i opposite vertex i.
struct PolyhedronTemplate {
  PolyhedronKind kind;
  int vertex_count = 0;
  std::vector<Face> faces;
  std::vector<std::array<int, 2>> edges;  // u < v, lexicographic order
  std::vector<int> vertex_opposite;       // octahedron only; empty for tetrahedron
  std::vector<Rotation> rotations;        // tetrahedron: 12, octahedron: 24
  int edge_valence_target = 0;

  // Derived incidence tables.
  std::vector<std::array<std::array<int, 2>, 2>> edge_faces;  // edge -> two (face, side)
  std::vector<std::array<int, 3>> face_side_edge;             // (face, side) -> edge
  std::vector<std::vector<int>> vertex_faces;  // faces around a vertex, cyclic
  std::vector<std::vector<int>> vertex_edges;  // vertex_edges[v][i] joins vertex_faces[v][i], [i+1]

  int face_count() const { return static_cast<int>(faces.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Index of `vertex` within face `f`, or -1.
  int corner_of(int f, int vertex) const;
  /// Edge index of the unordered pair {u, w}; throws if not an edge.
  int edge_index(int u, int w) const;
};

/// Canonical template for a kind. Built once, immutable, safe to share.
const PolyhedronTemplate& polyhedron_template(PolyhedronKind kind);

/// Number of edge copies that must meet along every edge class of a glued
/// complex: 2*pi divided by the ideal regular dihedral angle.
int target_edge_valence(PolyhedronKind kind);

/// The unique face sharing no vertex with `face`. Octahedron only; the
/// tetrahedron has no vertex-disjoint face pairs.
int opposite_face(PolyhedronKind kind, int face);

}  // namespace regcensus
