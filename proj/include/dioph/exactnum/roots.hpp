#pragma once

#include <optional>
#include <vector>

#include "dioph/exactnum/dyadic.hpp"
#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/real.hpp"

namespace dioph {

std::vector<RatPoly> sturm_sequence(const RatPoly& p);
/// Distinct real roots of p in (a, b].
int sturm_count(const RatPoly& p, const Rational& a, const Rational& b);
/// Distinct real roots of p on the whole line.
int sturm_count_all(const RatPoly& p);

/// Isolating interval of a single real root: lo == hi for an exact rational
/// root, otherwise the root is interior and p changes sign across (lo, hi).
struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};

/// Power of two bounding the modulus of every complex root of p.
Rational root_bound(const RatPoly& p);

/// Isolating intervals for the distinct real roots of p in [a, b] (whole line
/// when unset), ascending and pairwise disjoint.
std::vector<RootInterval> isolate_real_root_intervals(const RatPoly& p,
                                                      const std::optional<Rational>& a = std::nullopt,
                                                      const std::optional<Rational>& b = std::nullopt);
/// Shrinks an interior interval until its width is at most 2^-bits.
RootInterval refine_root(const RatPoly& p, RootInterval iv, long bits);

/// Disjoint balls, one per distinct real root in [a, b], with radius at most 2^-bits.
std::vector<DyadicBall> isolate_real_roots(const RatPoly& p,
                                           const std::optional<Rational>& a = std::nullopt,
                                           const std::optional<Rational>& b = std::nullopt,
                                           long bits = 32);

/// Certified complex root: the closed disk |z - (re + i im)| <= rad holds
/// exactly one root of the squarefree part.
struct ComplexDisk {
  Dyadic re, im, rad;
  bool real = false;
  ComplexBall ball() const { return {DyadicBall(re, rad), DyadicBall(im, rad)}; }
};

/// Pairwise disjoint inclusion disks for all distinct complex roots, each of
/// radius at most 2^-bits.  Real roots are flagged and have im == 0.
std::vector<ComplexDisk> certified_complex_roots(const RatPoly& p, long bits = 64);

/// Number of distinct complex roots in the closed disk |z - center| <= radius.
/// Throws BoundaryUndecidable when a root stays on the circle up to the precision cap.
int count_roots_in_disk(const RatPoly& p, const RealNumber& center, const Rational& radius);

}  // namespace dioph
