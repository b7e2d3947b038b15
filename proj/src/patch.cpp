#include "mincq/patch.hpp"

#include <algorithm>

namespace mincq {

RectangleDomain::RectangleDomain(ComplexScalar p0, Rational a, Rational b,
                                 ComplexScalar rotation)
    : P0(std::move(p0)), r1(std::move(a)), r2(std::move(b)), rot(std::move(rotation)) {
  if (r1 <= 0 || r2 <= 0) throw BadRectangle("side lengths must be positive");
  ComplexScalar conj{rot.re, Rational(-rot.im)};
  if (!(rot * conj == ComplexScalar(1)))
    throw BadRectangle("rotation must be an exact unit complex number");
}

std::array<ComplexScalar, 4> RectangleDomain::vertices() const {
  ComplexScalar e1 = ComplexScalar(r1) * rot;
  ComplexScalar e2 = ComplexScalar(Rational(0), r2) * rot;
  return {P0, P0 + e1, P0 + e1 + e2, P0 + e2};
}

Domain RectangleDomain::bounding_box() const {
  auto vs = vertices();
  Domain d;
  d.u0 = d.u1 = vs[0].re.get_d();
  d.v0 = d.v1 = vs[0].im.get_d();
  for (auto& v : vs) {
    d.u0 = std::min(d.u0, v.re.get_d());
    d.u1 = std::max(d.u1, v.re.get_d());
    d.v0 = std::min(d.v0, v.im.get_d());
    d.v1 = std::max(d.v1, v.im.get_d());
  }
  return d;
}

ComplexScalar proj_det(const ProjPoint& a, const ProjPoint& b) {
  return a.p * b.q - b.p * a.q;
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
  return proj_det(a, b).is_zero();
}

ComplexScalar ProjValue::value() const {
  if (den.is_zero()) throw DivisionByZero("cross-ratio is infinite");
  return num / den;
}

ComplexQuaternion null_point(const ComplexScalar& s, const ComplexScalar& t) {
  if (s.is_zero() && t.is_zero()) throw ZeroParameter("(s, t) = (0, 0)");
  ComplexScalar I = imag_unit();
  ComplexScalar s2 = s * s, t2 = t * t;
  return {ComplexScalar(0), s2 + t2, I * (s2 - t2), ComplexScalar(2) * I * s * t};
}

NullParam null_param(const ComplexQuaternion& phi) {
  if (!phi.z0.is_zero()) throw NotVectorial("phi has a scalar part");
  ComplexScalar defect = phi.z1 * phi.z1 + phi.z2 * phi.z2 + phi.z3 * phi.z3;
  if (!defect.is_zero()) throw NotNull("phi phi^c != 0");
  if (phi.z1.is_zero() && phi.z2.is_zero() && phi.z3.is_zero())
    throw ZeroParameter("phi = 0");

  ComplexScalar I = imag_unit();
  ComplexScalar half(Rational(1, 2));
  ComplexScalar s2 = (phi.z1 - I * phi.z2) * half;
  ComplexScalar t2 = (phi.z1 + I * phi.z2) * half;

  if (s2.is_zero()) {
    // [0 : 1]; nu = t^2 since N(0, 1) = i - i j (second i complex).
    return {ComplexScalar(0), ComplexScalar(1), t2};
  }
  auto s = exact_sqrt(s2);
  if (s) {
    auto t = exact_sqrt(t2);
    if (t) {
      // Reconcile the sign of t against 2 i s t = phi3.
      if (ComplexScalar(2) * I * *s * *t == phi.z3) return {*s, *t, ComplexScalar(1)};
      ComplexScalar tn = -*t;
      if (ComplexScalar(2) * I * *s * tn == phi.z3) return {*s, tn, ComplexScalar(1)};
    }
  }
  // Rational fallback representative (s^2, s t) = s * (s, t), nu = 1/s^2.
  ComplexScalar st = phi.z3 / (ComplexScalar(2) * I);
  return {s2, st, s2.inverse()};
}

ProjValue cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                      const ProjPoint& d) {
  std::array<const ProjPoint*, 4> pts{&a, &b, &c, &d};
  for (auto* p : pts)
    if (p->is_zero()) throw DegenerateTuple("[0 : 0] is not a projective point");
  int distinct = 0;
  for (int i = 0; i < 4; ++i) {
    bool dup = false;
    for (int j = 0; j < i; ++j) dup = dup || proj_equal(*pts[i], *pts[j]);
    if (!dup) ++distinct;
  }
  if (distinct < 3) throw DegenerateTuple("fewer than three distinct points");
  return {proj_det(a, c) * proj_det(b, d), proj_det(b, c) * proj_det(a, d)};
}

ConditionReport check_conditions(const RectangleDomain& rect, const CornerData& data) {
  ConditionReport r;
  for (int l = 0; l < 4; ++l) {
    r.scalar_part[l] = data.phi[l].z0;
    const ComplexQuaternion& q = data.phi[l];
    r.nullity[l] = q.z0 * q.z0 + q.z1 * q.z1 + q.z2 * q.z2 + q.z3 * q.z3;
  }
  ComplexScalar R = rect.R();
  ComplexScalar R2 = R * R;
  ComplexScalar absR2(rect.r1 * rect.r1 + rect.r2 * rect.r2);
  auto scaleq = [](const ComplexScalar& c, const ComplexQuaternion& q) {
    return ComplexQuaternion{c * q.z0, c * q.z1, c * q.z2, c * q.z3};
  };
  r.linear_defect = scaleq(absR2, data.phi[0]) + scaleq(R2, data.phi[1]) -
                    scaleq(absR2, data.phi[2]) - scaleq(R2, data.phi[3]);
  try {
    auto vs = rect.vertices();
    std::array<NullParam, 4> params;
    for (int l = 0; l < 4; ++l) params[l] = null_param(data.phi[l]);
    r.cr_corners = cross_ratio(ProjPoint::affine(vs[0]), ProjPoint::affine(vs[1]),
                               ProjPoint::affine(vs[2]), ProjPoint::affine(vs[3]));
    r.cr_params = cross_ratio(params[0].proj(), params[1].proj(), params[2].proj(),
                              params[3].proj());
    r.cross_ratio_defined = true;
  } catch (const Error&) {
    r.cross_ratio_defined = false;
  }
  return r;
}

bool ConditionReport::eq1_pass() const {
  for (int l = 0; l < 4; ++l)
    if (!scalar_part[l].is_zero() || !nullity[l].is_zero()) return false;
  return true;
}

std::array<ComplexScalar, 4> solve_scales(const RectangleDomain& rect,
                                          const std::array<ComplexQuaternion, 4>& dirs) {
  ComplexScalar R = rect.R();
  ComplexScalar R2 = R * R;
  ComplexScalar absR2(rect.r1 * rect.r1 + rect.r2 * rect.r2);
  std::array<ComplexScalar, 4> colscale{absR2, R2, -absR2, -R2};
  // 3 complex equations (vector components) in nu0..nu3.
  std::array<std::array<ComplexScalar, 4>, 3> m;
  auto comp = [](const ComplexQuaternion& q, int w) {
    return w == 1 ? q.z1 : w == 2 ? q.z2 : q.z3;
  };
  for (int w = 1; w <= 3; ++w)
    for (int c = 0; c < 4; ++c) m[w - 1][c] = colscale[c] * comp(dirs[c], w);

  // Gaussian elimination with exact pivots.
  int rank = 0;
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  for (int col = 0; col < 4 && rank < 3; ++col) {
    int pr = -1;
    for (int r = rank; r < 3; ++r)
      if (!m[r][col].is_zero()) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    ComplexScalar inv = m[rank][col].inverse();
    for (int c = col; c < 4; ++c) m[rank][c] = m[rank][c] * inv;
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      ComplexScalar f = m[r][col];
      for (int c = col; c < 4; ++c) m[r][c] = m[r][c] - f * m[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank < 3) throw NonUniqueBeyondScale("kernel dimension exceeds one");

  // Back-substitute with the free column set to 1.
  int free_col = 0;
  {
    bool used[4] = {false, false, false, false};
    for (int r = 0; r < rank; ++r) used[pivot_col[r]] = true;
    for (int c = 3; c >= 0; --c)
      if (!used[c]) { free_col = c; break; }
  }
  std::array<ComplexScalar, 4> nu;
  nu[free_col] = ComplexScalar(1);
  for (int r = 0; r < rank; ++r) nu[pivot_col[r]] = -m[r][free_col];
  if (!nu[3].is_zero()) {
    ComplexScalar inv = nu[3].inverse();
    for (auto& x : nu) x = x * inv;
  }
  for (auto& x : nu)
    if (x.is_zero()) throw NoSolution("a corner scale vanishes");
  return nu;
}

std::pair<CPoly, CPoly> MobiusMap::st() const {
  CPoly s, t;
  s.add_term(1, m00);
  s.add_term(0, m01);
  t.add_term(1, m10);
  t.add_term(0, m11);
  return {s, t};
}

namespace {

// 2x2 matrix columns u, v with alpha u + beta v = w for a projective frame.
struct Frame {
  ComplexScalar a00, a01, a10, a11;
};

Frame frame_matrix(const ProjPoint& x0, const ProjPoint& x1, const ProjPoint& x2) {
  ComplexScalar d = proj_det(x0, x1);
  if (d.is_zero()) throw DegenerateTuple("coincident frame points");
  // Solve alpha x0 + beta x1 = x2 by Cramer's rule.
  ComplexScalar alpha = proj_det(x2, x1) / d;
  ComplexScalar beta = proj_det(x0, x2) / d;
  if (alpha.is_zero() || beta.is_zero())
    throw DegenerateTuple("third frame point coincides with another");
  return {alpha * x0.p, beta * x1.p, alpha * x0.q, beta * x1.q};
}

}  // namespace

MobiusMap mobius_from_corners(const RectangleDomain& rect,
                              const std::array<NullParam, 4>& params) {
  auto vs = rect.vertices();
  Frame S = frame_matrix(ProjPoint::affine(vs[0]), ProjPoint::affine(vs[1]),
                         ProjPoint::affine(vs[2]));
  Frame T = frame_matrix(params[0].proj(), params[1].proj(), params[2].proj());
  // M = T * adj(S).
  ComplexScalar s00 = S.a11, s01 = -S.a01, s10 = -S.a10, s11 = S.a00;
  MobiusMap m{T.a00 * s00 + T.a01 * s10, T.a00 * s01 + T.a01 * s11,
              T.a10 * s00 + T.a11 * s10, T.a10 * s01 + T.a11 * s11};
  if (!proj_equal(m.apply(ProjPoint::affine(vs[3])), params[3].proj()))
    throw CrossRatioMismatch("fourth corner fails the projective correspondence");
  return m;
}

namespace {

QPoly st_to_quaternion(const CPoly& s, const CPoly& t) {
  QPoly q;
  for (auto& [e, c] : s.terms())
    q.add_term(e, ComplexQuaternion(c, ComplexScalar(0), ComplexScalar(0),
                                    ComplexScalar(0)));
  for (auto& [e, c] : t.terms())
    q.add_term(e, ComplexQuaternion(ComplexScalar(0), c, ComplexScalar(0),
                                    ComplexScalar(0)));
  return q;
}

ComplexScalar proportionality(const ComplexQuaternion& lhs, const ComplexQuaternion& rhs) {
  // lhs = mu * rhs for a nonzero rhs; verified on all components.
  ComplexScalar mu;
  if (!rhs.z1.is_zero()) mu = lhs.z1 / rhs.z1;
  else if (!rhs.z2.is_zero()) mu = lhs.z2 / rhs.z2;
  else if (!rhs.z3.is_zero()) mu = lhs.z3 / rhs.z3;
  else throw ZeroParameter("zero corner value");
  auto scaleq = [&](const ComplexScalar& c, const ComplexScalar& r) {
    return c * r;
  };
  if (!(lhs.z0 == scaleq(mu, rhs.z0) && lhs.z1 == scaleq(mu, rhs.z1) &&
        lhs.z2 == scaleq(mu, rhs.z2) && lhs.z3 == scaleq(mu, rhs.z3)))
    throw ConditionsViolated("corner value is not proportional to the target");
  return mu;
}

}  // namespace

LinearPreimage linear_preimage(const RectangleDomain& rect, const CornerData& data) {
  ConditionReport rep = check_conditions(rect, data);
  if (!rep.eq1_pass()) throw ConditionsViolated("eq1: corner values not null vectorial");
  if (!rep.eq2_pass()) throw ConditionsViolated("eq2: linear relation defect nonzero");
  if (!rep.eq3_pass()) throw ConditionsViolated("eq3: cross-ratio mismatch");

  std::array<NullParam, 4> params;
  for (int l = 0; l < 4; ++l) params[l] = null_param(data.phi[l]);
  MobiusMap m = mobius_from_corners(rect, params);
  auto [s, t] = m.st();
  QPoly st = st_to_quaternion(s, t);
  QPoly A = real_preimage(st);

  // A L A^c = mu * phi at every corner, with one common mu; rescale so the
  // corner certificate holds exactly, pushing any non-square factor into
  // lambda.
  auto vs = rect.vertices();
  QLaurent alac = A * QLaurent(0, ComplexQuaternion::L()) * conj_quat(A);
  ComplexScalar mu;
  for (int l = 0; l < 4; ++l) {
    ComplexScalar ml = proportionality(alac.eval(vs[l]), data.phi[l]);
    if (l == 0) mu = ml;
    else if (!(ml == mu))
      throw ConditionsViolated("corner scales are inconsistent");
  }
  PreimagePair pair;
  pair.lambda = LambdaScale();
  auto root = exact_sqrt(mu.inverse());
  if (root) {
    // Rescale the projective data by c = sqrt(1/mu) before reducing to a
    // real representative: real_preimage preserves A L A^c, and
    // (c st) L (c st)^c = c^2 st L st^c, so the reduced A satisfies
    // A L A^c = phi exactly with lambda = 1.
    QPoly scaled;
    for (auto& [e, c] : st.terms())
      scaled.set(e, ComplexQuaternion(*root * c.z0, *root * c.z1, *root * c.z2,
                                      *root * c.z3));
    pair.A = real_preimage(scaled);
  } else {
    pair.A = A;
    pair.lambda = LambdaScale(CLaurent(mu.inverse()), CLaurent(ComplexScalar(1)));
  }

  // Exact certificate at all four corners.
  const QLaurent phi = pair.phi();
  for (int l = 0; l < 4; ++l) {
    ComplexQuaternion got = phi.eval(vs[l]);
    if (!(got == data.phi[l])) throw ConditionsViolated("corner certificate failed");
  }
  return {std::move(pair), m};
}

PatchResult patch(const RectangleDomain& rect, const CornerData& data,
                  const std::array<Rational, 3>& base_point) {
  LinearPreimage pre = linear_preimage(rect, data);
  SurfaceSpec spec{IsotropicCurve(pre.pair.phi()), base_point, SurfacePart::Real,
                   rect.bounding_box()};
  ClosedFormSurface X = integrate_surface(spec);
  return {std::move(pre), spec, X};
}

}  // namespace mincq
