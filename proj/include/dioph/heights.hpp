#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dioph/exactnum/matrix.hpp"
#include "dioph/exactnum/place.hpp"
#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/roots.hpp"
#include "dioph/report.hpp"

namespace dioph {

/// Exact height with its local factors; places missing from the map have norm 1.
struct HeightReport {
  Rational value;
  std::map<Place, Rational> per_place;

  /// {"value": "n/d", "per_place": {"inf": ..., "2": ...}}
  Json to_json() const;
};

/// Product over all places of max_i |a_i|_v. Throws ZeroVector.
HeightReport height_vector(const std::vector<Rational>& a);
/// Height of the coefficient vector.
HeightReport height_poly(const RatPoly& p);
/// Height of the vector of maximal minors (column subsets in lexicographic order).
/// Needs rows <= cols and full row rank; throws RankDeficient otherwise.
HeightReport height_matrix(const RatMatrix& m);

/// A subspace of Q^N given by a basis (rows) and/or a matrix whose kernel it is.
struct SubspaceRep {
  std::size_t ambient = 0;
  std::optional<RatMatrix> basis;
  std::optional<RatMatrix> kernel;
};

/// Height of the subspace; computed both ways when both representations are
/// present. Throws InconsistentRep when they disagree.
HeightReport height_subspace(const SubspaceRep& v);

/// Kernel representation of the row space of `basis`.
RatMatrix orthogonal_complement(const RatMatrix& basis);

struct ProductHeights {
  Rational height_of_product;
  Rational product_of_heights;
  bool holds = false;
};

/// Compares H(P_1 ... P_s) with H(P_1)...H(P_s) against e^{-n}, e^{n}.
/// n defaults to max(1, deg of the product); throws DegreeOverflow if the product exceeds n.
ProductHeights height_poly_product_bounds(const std::vector<RatPoly>& ps, std::optional<int> n = std::nullopt);

struct MahlerRecord {
  DyadicBall measure;
  DyadicBall bound;
  bool holds = false;
};

/// Enclosure of |a_n| prod max(1, |alpha_i|) from certified roots and the check
/// M(P) <= sqrt(n+1) ||P||. Throws RootsIncomplete unless there is one disk per root.
MahlerRecord mahler_measure_bound(const RatPoly& p, const std::vector<ComplexDisk>& roots);
MahlerRecord mahler_measure_bound(const RatPoly& p);

}  // namespace dioph
