#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "regcensus/polyhedra.hpp"

namespace regcensus {

struct FaceRef {
  int poly = 0;
  int face = 0;
  auto operator<=>(const FaceRef&) const = default;
};

/// Corner k of face a is identified with corner (rot - k) mod 3 of face b.
/// This is the orientation-reversing matching convention: it reverses the
/// boundary cycle, so a complete pairing always yields an oriented complex.
/// The corner map is an involution, hence (a,b,rot) and (b,a,rot) describe
/// the same identification; pairings are normalized with a < b.
struct FacePairing {
  FaceRef a, b;
  int rot = 0;
  auto operator<=>(const FacePairing&) const = default;
};

inline int pair_corner(int rot, int k) { return ((rot - k) % 3 + 3) % 3; }

/// N labeled polyhedra of one kind with a complete set of face pairings.
/// Immutable after construction; the constructor checks the type invariants
/// (every face in exactly one pairing, no face glued to itself) and
/// normalizes the pairing list.
class GluingComplex {
 public:
  GluingComplex(PolyhedronKind kind, int count, std::vector<FacePairing> pairings);

  PolyhedronKind kind() const { return kind_; }
  int count() const { return count_; }
  const std::vector<FacePairing>& pairings() const { return pairings_; }
  const PolyhedronTemplate& poly() const { return *template_; }

  struct Partner {
    FaceRef face;
    int rot = 0;
  };
  const Partner& partner(FaceRef f) const { return table_[f.poly * poly().face_count() + f.face]; }

  bool operator==(const GluingComplex& other) const {
    return kind_ == other.kind_ && count_ == other.count_ && pairings_ == other.pairings_;
  }

 private:
  PolyhedronKind kind_;
  int count_;
  std::vector<FacePairing> pairings_;
  const PolyhedronTemplate* template_;
  std::vector<Partner> table_;
};

struct EdgeEmbedding {
  int poly = 0;
  int edge = 0;
  int dir = 1;  // traversal direction relative to the class representative
  auto operator<=>(const EdgeEmbedding&) const = default;
};

/// Orbit of polyhedron edges under the gluing. `flipped` marks classes whose
/// closure identifies an edge embedding with itself reversed.
struct EdgeClass {
  std::vector<EdgeEmbedding> members;  // sorted by (poly, edge)
  bool flipped = false;
  int size() const { return static_cast<int>(members.size()); }
};

struct VertexEmbedding {
  int poly = 0;
  int vertex = 0;
  auto operator<=>(const VertexEmbedding&) const = default;
};

/// The closed surface linking a vertex class, assembled from the corner
/// polygons (squares for octahedra, triangles for tetrahedra) glued along
/// the face pairings.
struct CuspLink {
  std::vector<VertexEmbedding> vertices;  // sorted
  int link_euler = 0;
  bool link_orientable = true;
  bool is_torus() const { return link_euler == 0 && link_orientable; }
};

struct ValidityReport {
  bool edge_valences_ok = false;
  bool edge_holonomy_ok = false;
  bool links_are_tori = false;
  bool oriented_ok = false;
  bool connected_ok = false;
  int cusp_count = 0;
  std::vector<int> cusp_vertex_distribution;  // ascending

  bool accepted() const {
    return edge_valences_ok && edge_holonomy_ok && links_are_tori && oriented_ok && connected_ok;
  }
};

/// Partition of all edge embeddings by the pairing-induced identifications,
/// ordered by smallest member. Valence or direction violations are reported
/// in the classes, never thrown.
std::vector<EdgeClass> edge_classes(const GluingComplex& complex);

/// One link per vertex class, ordered by smallest member.
std::vector<CuspLink> vertex_links(const GluingComplex& complex);

/// Full combinatorial hyperbolicity check: an accepted complex is exactly one
/// carrying the complete finite-volume hyperbolic structure built from
/// regular ideal polyhedra of its kind.
ValidityReport validate(const GluingComplex& complex);

/// Relabeled copy: polyhedron p becomes poly_perm[p] with template rotation
/// rotation_index[p] applied to its labels. Isomorphic to the input.
GluingComplex relabel(const GluingComplex& complex, std::span<const int> poly_perm,
                      std::span<const int> rotation_index);

/// Canonical interchange format: a JSON document with fields kind, count,
/// pairings; order-normalized, bit-exact round-trip.
std::string to_gluing_text(const GluingComplex& complex);
GluingComplex from_gluing_text(const std::string& text);
GluingComplex read_gluing_file(const std::string& path);
void write_gluing_file(const GluingComplex& complex, const std::string& path);

}  // namespace regcensus
