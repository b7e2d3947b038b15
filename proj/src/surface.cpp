#include "mincq/surface.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace mincq {

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (auto& [k, c] : o.terms_) r.add(k.first, k.second, Rational(-c));
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (auto& [ka, ca] : terms_)
    for (auto& [kb, cb] : o.terms_)
      r.add(ka.first + kb.first, ka.second + kb.second, Rational(ca * cb));
  return r;
}

BivarPoly BivarPoly::scaled(const Rational& c) const {
  BivarPoly r;
  if (c == 0) return r;
  for (auto& [k, cc] : terms_) r.terms_[k] = cc * c;
  return r;
}

Rational BivarPoly::eval(const Rational& u, const Rational& v) const {
  Rational acc = 0;
  for (auto& [k, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < k.first; ++i) t *= u;
    for (int i = 0; i < k.second; ++i) t *= v;
    acc += t;
  }
  return acc;
}

double BivarPoly::eval(double u, double v) const {
  double acc = 0;
  for (auto& [k, c] : terms_)
    acc += c.get_d() * std::pow(u, k.first) * std::pow(v, k.second);
  return acc;
}

namespace {

BivarPoly r2_poly() {
  BivarPoly r;
  r.add(2, 0, 1);
  r.add(0, 2, 1);
  return r;
}

BivarPoly r2_pow(int n) {
  BivarPoly r((Rational(1)));
  BivarPoly r2 = r2_poly();
  for (int i = 0; i < n; ++i) r = r * r2;
  return r;
}

}  // namespace

double ClosedFormComponent::eval(double u, double v) const {
  double r2 = u * u + v * v;
  double val = num.eval(u, v) / std::pow(r2, denom_pow) + shift.get_d();
  if (log_coef != 0) val += log_coef.get_d() * std::log(r2);
  return val;
}

Rational ClosedFormComponent::eval_exact(const Rational& u, const Rational& v) const {
  Rational r2 = u * u + v * v;
  if (log_coef != 0 && r2 != 1)
    throw NotRational("log term does not vanish at this sample point");
  if (denom_pow > 0 && r2 == 0) throw PoleEvaluation("evaluation at (0, 0)");
  Rational d = 1;
  for (int i = 0; i < denom_pow; ++i) d *= r2;
  return num.eval(u, v) / d + shift;
}

bool ClosedFormComponent::same_function(const ClosedFormComponent& o) const {
  if (log_coef != o.log_coef) return false;
  BivarPoly a = num + r2_pow(denom_pow).scaled(shift);
  BivarPoly b = o.num + r2_pow(o.denom_pow).scaled(o.shift);
  return a * r2_pow(o.denom_pow) == b * r2_pow(denom_pow);
}

std::array<double, 3> ClosedFormSurface::eval(double u, double v) const {
  return {comp_[0].eval(u, v), comp_[1].eval(u, v), comp_[2].eval(u, v)};
}

std::array<Rational, 3> ClosedFormSurface::eval_exact(const Rational& u,
                                                      const Rational& v) const {
  return {comp_[0].eval_exact(u, v), comp_[1].eval_exact(u, v), comp_[2].eval_exact(u, v)};
}

ClosedFormSurface integrate_surface(const SurfaceSpec& spec) {
  const QLaurent& phi = spec.phi.phi();
  AntiderivativeForm F = antiderivative(phi);
  bool singular_at_zero = !phi.is_polynomial();
  if (singular_at_zero && spec.domain.contains_origin())
    throw PoleInDomain("domain contains the pole at 0");

  std::array<ClosedFormComponent, 3> comps;
  for (int w = 1; w < 4; ++w) {
    CLaurent prin = component(F.principal, w);
    ClosedFormComponent cf;
    int maxneg = 0;
    for (auto& [e, c] : prin.terms()) maxneg = std::max(maxneg, -e);
    cf.denom_pow = maxneg;
    // Powers of z = u + iv as real/imaginary bivariate polynomials.
    int maxabs = 0;
    for (auto& [e, c] : prin.terms()) maxabs = std::max(maxabs, std::abs(e));
    std::vector<BivarPoly> re_pow(maxabs + 1), im_pow(maxabs + 1);
    re_pow[0] = BivarPoly(Rational(1));
    BivarPoly U = BivarPoly::term(1, 0, 1), V = BivarPoly::term(0, 1, 1);
    for (int k = 1; k <= maxabs; ++k) {
      re_pow[k] = re_pow[k - 1] * U - im_pow[k - 1] * V;
      im_pow[k] = re_pow[k - 1] * V + im_pow[k - 1] * U;
    }
    for (auto& [e, c] : prin.terms()) {
      int m = std::abs(e);
      // z^e = re + i*im; for e < 0 use conj(z)^m / (u^2+v^2)^m.
      BivarPoly re = re_pow[m];
      BivarPoly im = e < 0 ? im_pow[m].scaled(-1) : im_pow[m];
      BivarPoly part_poly =
          spec.part == SurfacePart::Real
              ? re.scaled(c.re) - im.scaled(c.im)    // Re(c z^e)
              : re.scaled(c.im) + im.scaled(c.re);   // Im(c z^e)
      int denom_here = e < 0 ? m : 0;
      cf.num = cf.num + part_poly * r2_pow(maxneg - denom_here);
    }
    for (auto& [pole, res] : F.log_terms) {
      ComplexScalar rc = w == 1 ? res.z1 : w == 2 ? res.z2 : res.z3;
      // Re(c log z) = c_re * ln|z| - c_im * arg z; arg terms are outside the
      // closed-form basis and are rejected.
      if (spec.part == SurfacePart::Real) {
        if (rc.im != 0)
          throw UnsupportedPoleStructure("imaginary residue needs an arg(z) term");
        cf.log_coef += rc.re / 2;
      } else {
        if (rc.re != 0)
          throw UnsupportedPoleStructure("real residue needs an arg(z) term");
        cf.log_coef += rc.im / 2;
      }
    }
    cf.shift = spec.base_point[w - 1];
    comps[w - 1] = cf;
  }
  return ClosedFormSurface(spec, comps);
}

namespace {

std::array<double, 3> vec_of(const FloatComplexQuaternion& q,
                             bool imag_part) {
  auto pick = [&](std::complex<double> z) { return imag_part ? z.imag() : z.real(); };
  return {pick(q.c[1]), pick(q.c[2]), pick(q.c[3])};
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> scale(const std::array<double, 3>& a, double s) {
  return {a[0] * s, a[1] * s, a[2] * s};
}

void check_point(const QLaurent& phi, double u, double v) {
  if (!phi.is_polynomial() && u == 0 && v == 0)
    throw PoleEvaluation("Phi has a pole at (0, 0)");
}

}  // namespace

std::pair<std::array<double, 3>, std::array<double, 3>> partials(
    const ClosedFormSurface& X, double u, double v) {
  check_point(X.phi(), u, v);
  FloatComplexQuaternion ph = eval_f(X.phi(), {u, v});
  bool im = X.spec().part == SurfacePart::Imaginary;
  // Phi = X_u - i X_v; the imaginary-part surface swaps the roles.
  std::array<double, 3> Xu = vec_of(ph, im);
  std::array<double, 3> Xv = im ? vec_of(ph, false) : scale(vec_of(ph, true), -1);
  return {Xu, Xv};
}

GeometryReport geometry_report(const ClosedFormSurface& X, double u, double v) {
  check_point(X.phi(), u, v);
  auto [Xu, Xv] = partials(X, u, v);
  QLaurent dphi = X.phi().derivative();
  FloatComplexQuaternion dp = eval_f(dphi, {u, v});
  bool im = X.spec().part == SurfacePart::Imaginary;
  // Phi' = X_uu - i X_uv, and X_vv = -X_uu by harmonicity of the closed form.
  std::array<double, 3> Xuu = vec_of(dp, im);
  std::array<double, 3> Xuv = im ? vec_of(dp, false) : scale(vec_of(dp, true), -1);
  std::array<double, 3> Xvv = scale(Xuu, -1);

  GeometryReport r{};
  r.E = dot(Xu, Xu);
  r.F = dot(Xu, Xv);
  r.G = dot(Xv, Xv);
  std::array<double, 3> n = cross(Xu, Xv);
  double nn = std::sqrt(dot(n, n));
  if (nn <= 1e-14 * (r.E + r.G + 1e-300))
    throw DegenerateNormal("X_u x X_v vanishes");
  r.N = scale(n, 1.0 / nn);
  r.e = -dot(Xuu, r.N);
  r.f = -dot(Xuv, r.N);
  r.g = -dot(Xvv, r.N);
  // Shape operator -II * I^{-1}; principal curvatures are its eigenvalues.
  double det_I = r.E * r.G - r.F * r.F;
  double s00 = -(r.e * r.G - r.f * r.F) / det_I;
  double s01 = -(r.f * r.E - r.e * r.F) / det_I;
  double s10 = -(r.f * r.G - r.g * r.F) / det_I;
  double s11 = -(r.g * r.E - r.f * r.F) / det_I;
  double tr = s00 + s11, det = s00 * s11 - s01 * s10;
  double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  r.k1 = tr / 2 + disc;
  r.k2 = tr / 2 - disc;
  r.H = tr / 2;
  r.K = det;
  return r;
}

std::array<double, 3> normal_field(const QLaurent& phi, const LambdaScale& lambda,
                                   double u, double v) {
  std::complex<double> z(u, v);
  std::complex<double> lam = lambda.eval_f(z);
  FloatComplexQuaternion ph = eval_f(phi, z);
  std::array<std::complex<double>, 3> p{lam * ph.c[1], lam * ph.c[2], lam * ph.c[3]};
  std::array<double, 3> Xu{p[0].real(), p[1].real(), p[2].real()};
  std::array<double, 3> Xv{-p[0].imag(), -p[1].imag(), -p[2].imag()};
  std::array<double, 3> n = cross(Xu, Xv);

  // Cross-check: X_u x X_v = -(i |lambda|^2 / 2) (Phi x conj Phi), with Phi
  // the unscaled curve.
  std::array<std::complex<double>, 3> q{ph.c[1], ph.c[2], ph.c[3]};
  std::array<std::complex<double>, 3> qb{std::conj(q[0]), std::conj(q[1]), std::conj(q[2])};
  std::array<std::complex<double>, 3> cc{q[1] * qb[2] - q[2] * qb[1],
                                         q[2] * qb[0] - q[0] * qb[2],
                                         q[0] * qb[1] - q[1] * qb[0]};
  std::complex<double> factor = std::complex<double>(0, -0.5) * std::norm(lam);
  double scale_ref = std::abs(n[0]) + std::abs(n[1]) + std::abs(n[2]) + 1.0;
  for (int t = 0; t < 3; ++t) {
    std::complex<double> ref = factor * cc[t];
    if (std::abs(ref - n[t]) > 1e-9 * scale_ref)
      throw Error("normal-field identity violated beyond tolerance");
  }
  return n;
}

std::vector<LambdaRoot> lambda_singularities(const CLaurent& lambda, const Domain& domain) {
  if (lambda.is_zero()) throw Error("lambda is identically zero");
  std::vector<LambdaRoot> out;
  int val = lambda.valuation();
  if (val > 0 && domain.contains_origin()) out.push_back({{0, 0}, val});
  CPoly p = lambda.shifted(-val);
  if (p.degree() == 0) return out;

  // Square-free decomposition: c_i holds the roots of multiplicity i.
  CPoly g = poly_gcd(p, p.derivative());
  CPoly c = divide_exact(p, g);
  int mult = 1;
  while (!c.is_zero() && c.degree() > 0) {
    CPoly d = g.is_zero() || g.degree() == 0 ? CPoly(ComplexScalar(1)) : poly_gcd(c, g);
    CPoly factor = divide_exact(c, d);
    if (factor.degree() > 0) {
      int n = factor.degree();
      Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
      std::complex<double> lead = factor.coeff(n).to_double();
      for (int r = 1; r < n; ++r) companion(r, r - 1) = 1.0;
      for (int r = 0; r < n; ++r)
        companion(r, n - 1) = -factor.coeff(r).to_double() / lead;
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion);
      for (int r = 0; r < n; ++r) {
        std::complex<double> root = es.eigenvalues()(r);
        if (domain.contains(root.real(), root.imag())) out.push_back({root, mult});
      }
    }
    c = d;
    if (!g.is_zero() && g.degree() > 0) g = divide_exact(g, d);
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const LambdaRoot& a, const LambdaRoot& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

Mesh mesh(const ClosedFormSurface& X, const Domain& domain, int nu, int nv,
          const std::vector<LambdaRoot>& flagged) {
  if (nu < 2 || nv < 2) throw Error("grid must be at least 2x2");
  bool singular = X.components()[0].denom_pow > 0 || X.components()[1].denom_pow > 0 ||
                  X.components()[2].denom_pow > 0 ||
                  X.components()[0].log_coef != 0 || X.components()[1].log_coef != 0 ||
                  X.components()[2].log_coef != 0;
  if (singular && domain.contains_origin())
    throw PoleInDomain("mesh domain contains the pole at 0");
  Mesh m;
  m.nu = nu;
  m.nv = nv;
  m.vertices.reserve(static_cast<size_t>(nu) * nv);
  for (int iu = 0; iu < nu; ++iu) {
    double u = domain.u0 + (domain.u1 - domain.u0) * iu / (nu - 1);
    for (int iv = 0; iv < nv; ++iv) {
      double v = domain.v0 + (domain.v1 - domain.v0) * iv / (nv - 1);
      MeshVertex vert{u, v, X.eval(u, v), false};
      for (auto& root : flagged)
        if (std::abs(root.root.real() - u) < 1e-9 && std::abs(root.root.imag() - v) < 1e-9)
          vert.degenerate = true;
      m.vertices.push_back(vert);
    }
  }
  for (int iu = 0; iu + 1 < nu; ++iu)
    for (int iv = 0; iv + 1 < nv; ++iv) {
      int a = iu * nv + iv;
      m.quads.push_back({a, a + nv, a + nv + 1, a + 1});
    }
  return m;
}

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void export_obj(const Mesh& m, std::ostream& os) {
  for (auto& v : m.vertices) {
    os << "v " << fmt_double(v.p[0]) << " " << fmt_double(v.p[1]) << " "
       << fmt_double(v.p[2]);
    if (v.degenerate) os << " # degenerate";
    os << "\n";
  }
  for (auto& q : m.quads)
    os << "f " << q[0] + 1 << " " << q[1] + 1 << " " << q[2] + 1 << " " << q[3] + 1 << "\n";
}

void export_csv(const Mesh& m, const ClosedFormSurface& X, std::ostream& os) {
  os << "u,v,x,y,z,H,E,F,G\n";
  for (auto& v : m.vertices) {
    double H = std::nan(""), E = H, F = H, G = H;
    try {
      GeometryReport r = geometry_report(X, v.u, v.v);
      H = r.H; E = r.E; F = r.F; G = r.G;
    } catch (const Error&) {
      // Leave NaN at degenerate or pole points.
    }
    os << fmt_double(v.u) << "," << fmt_double(v.v) << "," << fmt_double(v.p[0]) << ","
       << fmt_double(v.p[1]) << "," << fmt_double(v.p[2]) << "," << fmt_double(H) << ","
       << fmt_double(E) << "," << fmt_double(F) << "," << fmt_double(G) << "\n";
  }
}

}  // namespace mincq
