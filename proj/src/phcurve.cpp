#include "mincq/phcurve.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace mincq {

namespace {

bool is_real(const CLaurent& p) {
  for (auto& [e, c] : p.terms())
    if (c.im != 0) return false;
  return true;
}

bool is_real(const QLaurent& p) {
  for (int w = 0; w < 4; ++w)
    if (!is_real(component(p, w))) return false;
  return true;
}

CLaurent apply_scale(const LambdaScale& lambda, const CLaurent& p) {
  if (lambda.is_laurent()) return lambda.laurent() * p;
  return divide_exact(lambda.num * p, lambda.den);
}

}  // namespace

PHCurve::PHCurve(PHSpec spec) : spec_(std::move(spec)) {
  if (!is_real(spec_.A)) throw NotRational("preimage A must have real coefficients");
  if (!is_real(spec_.lambda.num) || !is_real(spec_.lambda.den))
    throw NotRational("scale lambda must be real");
  QLaurent aiac = spec_.A * QLaurent(0, ComplexQuaternion::i()) * conj_quat(spec_.A);
  hodograph_ = assemble(apply_scale(spec_.lambda, component(aiac, 0)),
                        apply_scale(spec_.lambda, component(aiac, 1)),
                        apply_scale(spec_.lambda, component(aiac, 2)),
                        apply_scale(spec_.lambda, component(aiac, 3)));
  if (!component(hodograph_, 0).is_zero())
    throw NotVectorial("hodograph has a scalar part");
  if (!is_real(hodograph_))
    throw NotRational("hodograph must be real");
  speed_ = apply_scale(spec_.lambda, qsnorm(spec_.A));
  // Certify the defining PH identity sigma^2 = |gamma'|^2 exactly.
  CLaurent defect = component(hodograph_, 1) * component(hodograph_, 1) +
                    component(hodograph_, 2) * component(hodograph_, 2) +
                    component(hodograph_, 3) * component(hodograph_, 3) -
                    speed_ * speed_;
  if (!defect.is_zero()) throw Error("PH identity violated");
}

const QLaurent& PHCurve::curve() const {
  if (!curve_) {
    ComplexQuaternion res = residue_at_zero(hodograph_);
    if (!(res == ComplexQuaternion{}))
      throw NonzeroResidue("hodograph has a nonzero t^{-1} coefficient");
    curve_ = antiderivative(hodograph_).principal;
  }
  return *curve_;
}

std::array<Rational, 3> PHCurve::eval_exact(const Rational& t) const {
  ComplexQuaternion g = curve().eval(ComplexScalar(t));
  return {g.z1.re + spec_.base_point[0], g.z2.re + spec_.base_point[1],
          g.z3.re + spec_.base_point[2]};
}

std::array<double, 3> PHCurve::eval(double t) const {
  FloatComplexQuaternion g = eval_f(curve(), {t, 0});
  return {g.c[1].real() + spec_.base_point[0].get_d(),
          g.c[2].real() + spec_.base_point[1].get_d(),
          g.c[3].real() + spec_.base_point[2].get_d()};
}

Rational PHCurve::speed_exact(const Rational& t) const {
  return speed_.eval(ComplexScalar(t)).re;
}

CLaurent PHCurve::arc_length(const Rational& t0) const {
  CAntiderivativeForm F = antiderivative(speed_);
  if (F.has_log()) throw NonzeroResidue("speed has a t^{-1} term");
  CLaurent s = F.principal;
  s.add_term(0, -s.eval(ComplexScalar(t0)));
  return s;
}

void export_phcurve_csv(const PHCurve& c, double t0, double t1, int n, std::ostream& os) {
  os << "t,x,y,z,sigma\n";
  auto fmt = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (int i = 0; i < n; ++i) {
    double t = n == 1 ? t0 : t0 + (t1 - t0) * i / (n - 1);
    auto p = c.eval(t);
    double sigma = eval_f(c.speed(), {t, 0}).real();
    os << fmt(t) << "," << fmt(p[0]) << "," << fmt(p[1]) << "," << fmt(p[2]) << ","
       << fmt(sigma) << "\n";
  }
}

}  // namespace mincq
