#include "dioph/heights.hpp"

#include "dioph/error.hpp"
#include "dioph/exactnum/logs.hpp"

namespace dioph {

Json HeightReport::to_json() const {
  Json places = Json::object();
  for (const auto& [v, norm] : per_place) places[v.key()] = dioph::to_json(norm);
  return Json{{"value", dioph::to_json(value)}, {"per_place", places}};
}

HeightReport height_vector(const std::vector<Rational>& a) {
  Integer g = 0, l = 1;
  Rational top = 0;
  for (const auto& x : a) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    top = std::max<Rational>(top, abs(x));
  }
  if (g == 0) fail(ErrorCode::ZeroVector, "height of the zero vector");
  HeightReport r;
  r.per_place[Place::infinite()] = top;
  Rational content = make_rational(g, l);
  Rational value = top;
  for (const Integer& part : {g, l}) {
    if (part == 1) continue;
    for (const auto& [p, e] : factor_integer(part)) {
      Rational norm = abs_at_place(content, Place::finite(p));
      r.per_place[Place::finite(p)] = norm;
      value *= norm;
    }
  }
  r.value = value;
  if (r.value != top / content) fail(ErrorCode::HardAssertion, "height factors do not multiply to the height");
  return r;
}

HeightReport height_poly(const RatPoly& p) { return height_vector(p.coeffs()); }

HeightReport height_matrix(const RatMatrix& m) {
  if (m.rows() == 0 || m.rows() > m.cols())
    fail(ErrorCode::InvalidArgument, "height_matrix needs 1 <= rows <= cols");
  if (rank(m) != m.rows()) fail(ErrorCode::RankDeficient, "matrix does not have full row rank");
  return height_vector(maximal_minors(m));
}

RatMatrix orthogonal_complement(const RatMatrix& basis) {
  auto ker = kernel_basis(basis);
  RatMatrix k(ker.size(), basis.cols());
  for (std::size_t i = 0; i < ker.size(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) k(i, j) = ker[i][j];
  return k;
}

namespace {

HeightReport unit_height() {
  HeightReport r;
  r.value = 1;
  r.per_place[Place::infinite()] = 1;
  return r;
}

HeightReport rep_height(const RatMatrix& m) {
  if (m.rows() == 0) return unit_height();
  return height_matrix(m);
}

}  // namespace

HeightReport height_subspace(const SubspaceRep& v) {
  if (!v.basis && !v.kernel) fail(ErrorCode::InvalidArgument, "subspace needs a basis or a kernel matrix");
  for (const auto* m : {v.basis ? &*v.basis : nullptr, v.kernel ? &*v.kernel : nullptr})
    if (m && m->rows() > 0 && m->cols() != v.ambient)
      fail(ErrorCode::InvalidArgument, "representation has the wrong number of columns");
  if (v.basis && v.kernel) {
    const RatMatrix& b = *v.basis;
    const RatMatrix& k = *v.kernel;
    std::size_t rb = b.rows() ? rank(b) : 0, rk = k.rows() ? rank(k) : 0;
    bool orthogonal = true;
    if (b.rows() && k.rows()) orthogonal = (b * k.transpose()) == RatMatrix(b.rows(), k.rows());
    if (rb + rk != v.ambient || !orthogonal)
      fail(ErrorCode::InconsistentRep, "basis and kernel describe different subspaces");
    HeightReport hb = rep_height(b), hk = rep_height(k);
    if (hb.value != hk.value)
      fail(ErrorCode::InconsistentRep,
           "basis height " + to_string(hb.value) + " differs from kernel height " + to_string(hk.value));
    return hb;
  }
  return v.basis ? rep_height(*v.basis) : rep_height(*v.kernel);
}

ProductHeights height_poly_product_bounds(const std::vector<RatPoly>& ps, std::optional<int> n) {
  RatPoly prod = RatPoly::constant(1);
  Rational hprod = 1;
  for (const auto& p : ps) {
    prod *= p;
    hprod *= height_poly(p).value;
  }
  if (prod.is_zero()) fail(ErrorCode::ZeroPolynomial, "product is zero");
  int deg = n.value_or(std::max(1, prod.degree()));
  if (deg < 1) fail(ErrorCode::InvalidArgument, "n must be at least 1");
  if (prod.degree() > deg)
    fail(ErrorCode::DegreeOverflow, "product degree " + std::to_string(prod.degree()) + " exceeds " + std::to_string(deg));
  ProductHeights r;
  r.height_of_product = height_poly(prod).value;
  r.product_of_heights = hprod;
  Rational en_lo = exp_bounds(Rational(deg)).first;
  r.holds = hprod < en_lo * r.height_of_product && r.height_of_product < en_lo * hprod;
  return r;
}

MahlerRecord mahler_measure_bound(const RatPoly& p, const std::vector<ComplexDisk>& roots) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "Mahler measure of zero");
  if (static_cast<int>(roots.size()) != p.degree())
    fail(ErrorCode::RootsIncomplete,
         std::to_string(roots.size()) + " roots given for degree " + std::to_string(p.degree()));
  const long prec = 128;
  MahlerRecord r;
  DyadicBall m = DyadicBall::from_rational(abs(p.leading()), prec);
  for (const auto& d : roots) m = (m * max(DyadicBall(1), d.ball().abs(prec))).rounded(prec);
  r.measure = m;
  DyadicBall root = sqrt(DyadicBall(p.degree() + 1), prec);
  r.bound = (root * DyadicBall::from_rational(p.norm_inf(), prec)).rounded(prec);
  r.holds = p.degree() == 0 || certainly_lt(r.measure, r.bound);
  return r;
}

MahlerRecord mahler_measure_bound(const RatPoly& p) {
  if (squarefree_part(p).degree() != p.degree())
    fail(ErrorCode::RootsIncomplete, "repeated roots are not supported");
  return mahler_measure_bound(p, p.degree() >= 1 ? certified_complex_roots(p, 64) : std::vector<ComplexDisk>{});
}

}  // namespace dioph
