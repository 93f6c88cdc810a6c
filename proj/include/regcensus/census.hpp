#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regcensus/gluing.hpp"

namespace regcensus {

/// Thrown when a query exceeds the supported instance sizes.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusQuery {
  PolyhedronKind kind = PolyhedronKind::Octahedron;
  int count = 1;
  std::optional<int> cusp_filter;
  bool orientable_only = true;  // always true in v1
};

/// Printable string encoding the isomorphism class of a complex: two
/// complexes have equal signatures iff one maps to the other by a polyhedron
/// relabeling composed with per-polyhedron template rotations.
struct CanonicalSignature {
  std::string text;
  auto operator<=>(const CanonicalSignature&) const = default;
};

/// Lexicographically minimal serialized form over all (polyhedron, rotation)
/// seeds; for each seed the remaining polyhedra are relabeled by breadth-first
/// traversal across the pairings, with each discovered polyhedron's rotation
/// forced by the discovering pairing. Deterministic.
CanonicalSignature canonical_signature(const GluingComplex& complex);

/// The relabeled complex realizing the minimal form. Canonical representative
/// of the isomorphism class; connected complexes only.
GluingComplex canonical_form(const GluingComplex& complex);

struct CensusClass {
  CanonicalSignature signature;
  GluingComplex complex;  // canonical representative
  ValidityReport validity;
};

/// Complete, duplicate-free, signature-sorted list of accepted isomorphism
/// classes matching the query. Output is independent of `jobs`.
/// Supported sizes: count <= 3 octahedra, count <= 8 tetrahedra.
std::vector<CensusClass> enumerate(const CensusQuery& query, int jobs = 1);

/// Ground-truth oracle: exhaustive enumeration with no pruning and no
/// symmetry fixing, canonicalized and deduplicated afterwards. Refuses
/// instances with count * faces > 16.
std::vector<CanonicalSignature> enumerate_naive(const CensusQuery& query);

}  // namespace regcensus
