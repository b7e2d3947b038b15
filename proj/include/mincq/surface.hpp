#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mincq/weierstrass.hpp"

namespace mincq {

/// Real bivariate polynomial in (u, v) with exact rational coefficients.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;  // (u-exponent, v-exponent)

  BivarPoly() = default;
  explicit BivarPoly(const Rational& c) { add(0, 0, c); }
  static BivarPoly term(int eu, int ev, const Rational& c) {
    BivarPoly p;
    p.add(eu, ev, c);
    return p;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int eu, int ev, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find({eu, ev});
    if (it == terms_.end()) {
      terms_[{eu, ev}] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly scaled(const Rational& c) const;
  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

  Rational eval(const Rational& u, const Rational& v) const;
  double eval(double u, double v) const;

 private:
  std::map<Key, Rational> terms_;
};

/// One coordinate of a closed-form surface:
///   num(u,v) / (u^2+v^2)^denom_pow + log_coef * ln(u^2+v^2) + shift.
struct ClosedFormComponent {
  BivarPoly num;
  int denom_pow = 0;
  Rational log_coef = 0;
  Rational shift = 0;

  double eval(double u, double v) const;
  /// Exact evaluation; requires log_coef == 0 or (u,v) on the unit circle.
  Rational eval_exact(const Rational& u, const Rational& v) const;

  /// Exact equality as functions (cross-multiplied rational comparison).
  bool same_function(const ClosedFormComponent& o) const;
};

enum class SurfacePart { Real, Imaginary };

struct Domain {
  double u0 = -1, u1 = 1, v0 = -1, v1 = 1;

  bool contains(double u, double v) const {
    return u >= u0 && u <= u1 && v >= v0 && v <= v1;
  }
  bool contains_origin() const { return contains(0, 0); }
};

struct SurfaceSpec {
  IsotropicCurve phi;
  std::array<Rational, 3> base_point{0, 0, 0};
  SurfacePart part = SurfacePart::Real;
  Domain domain;
};

class ClosedFormSurface {
 public:
  ClosedFormSurface(SurfaceSpec spec, std::array<ClosedFormComponent, 3> comp)
      : spec_(std::move(spec)), comp_(std::move(comp)) {}

  const SurfaceSpec& spec() const { return spec_; }
  const std::array<ClosedFormComponent, 3>& components() const { return comp_; }
  const QLaurent& phi() const { return spec_.phi.phi(); }

  std::array<double, 3> eval(double u, double v) const;
  std::array<Rational, 3> eval_exact(const Rational& u, const Rational& v) const;

 private:
  SurfaceSpec spec_;
  std::array<ClosedFormComponent, 3> comp_;
};

/// First and second fundamental quantities at a point, with the unit normal
/// and principal curvatures.
struct GeometryReport {
  double E, F, G;       // first fundamental form
  double e, f, g;       // second fundamental form
  std::array<double, 3> N;
  double H, K, k1, k2;
};

/// Integrates Phi to the closed-form parametrization X = c + part(int Phi).
ClosedFormSurface integrate_surface(const SurfaceSpec& spec);

/// X_u and X_v from Phi = X_u - i X_v (exact derivative convention); the
/// factor-2 corner convention of patch data is handled by the caller.
std::pair<std::array<double, 3>, std::array<double, 3>> partials(
    const ClosedFormSurface& X, double u, double v);

GeometryReport geometry_report(const ClosedFormSurface& X, double u, double v);

/// X_u x X_v for the surface integrated from lambda * Phi; checked against
/// -(i |lambda|^2 / 2)(Phi x conj Phi) internally.
std::array<double, 3> normal_field(const QLaurent& phi, const LambdaScale& lambda,
                                   double u, double v);

struct LambdaRoot {
  std::complex<double> root;
  int multiplicity;
};

/// Numeric roots of lambda inside the domain (z = u + iv), with exact
/// multiplicities from square-free decomposition.
std::vector<LambdaRoot> lambda_singularities(const CLaurent& lambda, const Domain& domain);

struct MeshVertex {
  double u, v;
  std::array<double, 3> p;
  bool degenerate = false;
};

struct Mesh {
  int nu = 0, nv = 0;
  std::vector<MeshVertex> vertices;        // row-major over (u, v) grid
  std::vector<std::array<int, 4>> quads;   // 0-based indices
};

Mesh mesh(const ClosedFormSurface& X, const Domain& domain, int nu, int nv,
          const std::vector<LambdaRoot>& flagged = {});

/// OBJ: `v x y z` lines row-major, then `f` quads (1-based), LF endings.
void export_obj(const Mesh& m, std::ostream& os);
/// CSV columns: u,v,x,y,z,H,E,F,G.
void export_csv(const Mesh& m, const ClosedFormSurface& X, std::ostream& os);

}  // namespace mincq
