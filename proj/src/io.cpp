#include "mincq/io.hpp"

#include <Eigen/SVD>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mincq {

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const ComplexScalar& z) {
  return Json::array({to_json(z.re), to_json(z.im)});
}

Json to_json(const ComplexQuaternion& q) {
  return Json::array({to_json(q.z0), to_json(q.z1), to_json(q.z2), to_json(q.z3)});
}

Json to_json(const CLaurent& p) {
  Json a = Json::array();
  for (auto& [e, c] : p.terms()) a.push_back({{"exp", e}, {"coef", to_json(c)}});
  return a;
}

Json to_json(const QLaurent& p) {
  Json a = Json::array();
  for (auto& [e, c] : p.terms()) a.push_back({{"exp", e}, {"coef", to_json(c)}});
  return a;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string())
    throw ParseError(where + ": expected a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

ComplexScalar complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(where + ": expected [re, im]");
  return {rational_from_json(j[0], where + "[0]"), rational_from_json(j[1], where + "[1]")};
}

ComplexQuaternion quaternion_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError(where + ": expected four [re, im] pairs in z0..z3 order");
  return {complex_from_json(j[0], where + "[0]"), complex_from_json(j[1], where + "[1]"),
          complex_from_json(j[2], where + "[2]"), complex_from_json(j[3], where + "[3]")};
}

namespace {

template <typename L, typename CoefParser>
L laurent_from_json(const Json& j, const std::string& where, CoefParser parse) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of terms");
  L p;
  int idx = 0;
  for (auto& t : j) {
    std::string here = where + "[" + std::to_string(idx++) + "]";
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
      throw ParseError(here + ": expected {\"exp\", \"coef\"}");
    if (!t["exp"].is_number_integer()) throw ParseError(here + ".exp: expected an integer");
    int e = t["exp"].get<int>();
    if (!p.coeff(e).is_zero()) throw ParseError(here + ": duplicate exponent");
    p.set(e, parse(t["coef"], here + ".coef"));
  }
  return p;
}

}  // namespace

CLaurent claurent_from_json(const Json& j, const std::string& where) {
  return laurent_from_json<CLaurent>(j, where, complex_from_json);
}

QLaurent qlaurent_from_json(const Json& j, const std::string& where) {
  return laurent_from_json<QLaurent>(j, where, quaternion_from_json);
}

const char* to_string(RepKind k) {
  switch (k) {
    case RepKind::FG: return "fg";
    case RepKind::PQW: return "pqw";
    case RepKind::Pair: return "pair";
    case RepKind::Phi: return "phi";
  }
  return "?";
}

RepKind kind_from_string(const std::string& s) {
  if (s == "fg") return RepKind::FG;
  if (s == "pqw") return RepKind::PQW;
  if (s == "pair") return RepKind::Pair;
  if (s == "phi") return RepKind::Phi;
  throw ParseError("unknown representation type \"" + s + "\"");
}

Json to_json(const Representation& r) {
  Json j{{"type", to_string(r.kind)}};
  switch (r.kind) {
    case RepKind::FG:
      j["f"] = to_json(r.fg.f);
      j["g_num"] = to_json(r.fg.g_num);
      j["g_den"] = to_json(r.fg.g_den);
      break;
    case RepKind::PQW:
      j["p"] = to_json(r.pqw.p);
      j["q"] = to_json(r.pqw.q);
      j["w"] = to_json(r.pqw.w);
      break;
    case RepKind::Pair:
      j["A"] = to_json(r.pair.A);
      j["lambda_num"] = to_json(r.pair.lambda.num);
      j["lambda_den"] = to_json(r.pair.lambda.den);
      break;
    case RepKind::Phi:
      j["phi"] = to_json(r.phi);
      break;
  }
  return j;
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string(name) + ": missing field");
  return j[name];
}

}  // namespace

Representation representation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("top level: expected an object");
  Representation r;
  r.kind = kind_from_string(
      field(j, "type").is_string() ? j["type"].get<std::string>()
                                   : throw ParseError("type: expected a string"));
  switch (r.kind) {
    case RepKind::FG:
      r.fg.f = claurent_from_json(field(j, "f"), "f");
      r.fg.g_num = claurent_from_json(field(j, "g_num"), "g_num");
      r.fg.g_den = claurent_from_json(field(j, "g_den"), "g_den");
      break;
    case RepKind::PQW:
      r.pqw.p = claurent_from_json(field(j, "p"), "p");
      r.pqw.q = claurent_from_json(field(j, "q"), "q");
      r.pqw.w = claurent_from_json(field(j, "w"), "w");
      break;
    case RepKind::Pair:
      r.pair.A = qlaurent_from_json(field(j, "A"), "A");
      r.pair.lambda = LambdaScale(claurent_from_json(field(j, "lambda_num"), "lambda_num"),
                                  claurent_from_json(field(j, "lambda_den"), "lambda_den"));
      break;
    case RepKind::Phi:
      r.phi = qlaurent_from_json(field(j, "phi"), "phi");
      break;
  }
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Representation read_representation_file(const std::string& path) {
  try {
    return representation_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_representation_file(const Representation& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << to_json(r).dump(2) << "\n";
}

IsotropicCurve curve_of(const Representation& r) {
  switch (r.kind) {
    case RepKind::FG: return phi_from_fg(r.fg);
    case RepKind::PQW: return phi_from_pqw(r.pqw);
    case RepKind::Pair: return IsotropicCurve(r.pair.phi());
    case RepKind::Phi: return IsotropicCurve(r.phi);
  }
  throw Error("unreachable");
}

Representation convert(const Representation& r, RepKind target) {
  Representation out;
  out.kind = target;
  IsotropicCurve phi = curve_of(r);
  switch (target) {
    case RepKind::FG:
      out.fg = fg_from_phi(phi);
      break;
    case RepKind::PQW: {
      PreimagePair pair = r.kind == RepKind::Pair ? r.pair : pair_from_phi_rational(phi);
      out.pqw = pqw_from_pair(pair);
      break;
    }
    case RepKind::Pair:
      out.pair = r.kind == RepKind::Pair ? r.pair : pair_from_phi_rational(phi);
      break;
    case RepKind::Phi:
      out.phi = phi.phi();
      break;
  }
  return out;
}

Json to_json(const CornerFile& c) {
  return {{"rect",
           {{"P0", to_json(c.rect.P0)},
            {"r1", to_json(c.rect.r1)},
            {"r2", to_json(c.rect.r2)},
            {"rot", to_json(c.rect.rot)}}},
          {"phi", Json::array({to_json(c.data.phi[0]), to_json(c.data.phi[1]),
                               to_json(c.data.phi[2]), to_json(c.data.phi[3])})}};
}

CornerFile corners_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("top level: expected an object");
  const Json& rect = field(j, "rect");
  ComplexScalar rot(Rational(1), Rational(0));
  if (rect.contains("rot")) rot = complex_from_json(rect["rot"], "rect.rot");
  RectangleDomain rd(complex_from_json(field(rect, "P0"), "rect.P0"),
                     rational_from_json(field(rect, "r1"), "rect.r1"),
                     rational_from_json(field(rect, "r2"), "rect.r2"), rot);
  const Json& phis = field(j, "phi");
  if (!phis.is_array() || phis.size() != 4)
    throw ParseError("phi: expected four quaternions");
  CornerData data;
  for (int l = 0; l < 4; ++l)
    data.phi[l] = quaternion_from_json(phis[l], "phi[" + std::to_string(l) + "]");
  return {rd, data};
}

CornerFile read_corner_file(const std::string& path) {
  try {
    return corners_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

VerifyReport verify_representation(const Representation& r) {
  VerifyReport rep;
  QLaurent phi;
  switch (r.kind) {
    case RepKind::FG: phi = phi_from_fg(r.fg).phi(); break;
    case RepKind::PQW: phi = phi_from_pqw(r.pqw).phi(); break;
    case RepKind::Pair:
      try {
        phi = r.pair.phi();
      } catch (const Error& e) {
        rep.ok = false;
        rep.lines.push_back(std::string("pair expansion failed: ") + e.what());
        return rep;
      }
      break;
    case RepKind::Phi: phi = r.phi; break;
  }
  CLaurent scalar = component(phi, 0);
  rep.lines.push_back(std::string("scalar part: ") +
                      (scalar.is_zero() ? "zero" : "NONZERO"));
  CLaurent defect = isotropy_defect(phi);
  rep.lines.push_back(std::string("isotropy defect: ") +
                      (defect.is_zero() ? "zero" : "NONZERO"));
  if (!scalar.is_zero() || !defect.is_zero()) rep.ok = false;
  ComplexQuaternion res = residue_at_zero(phi);
  bool res_zero = res == ComplexQuaternion{};
  rep.lines.push_back(std::string("residue at 0: ") + (res_zero ? "zero" : "NONZERO"));
  if (!res_zero) {
    // Informational: the integral picks up logarithmic terms but the surface
    // is still closed-form unless the residue forces an arg(z) term, which
    // the integration step below reports.
    rep.lines.push_back("  integral includes logarithmic terms");
  }
  if (rep.ok) {
    try {
      Domain d{0.5, 1.5, 0.5, 1.5};
      SurfaceSpec sspec{IsotropicCurve(phi), {0, 0, 0}, SurfacePart::Real, d};
      ClosedFormSurface X = integrate_surface(sspec);
      double maxH = 0, maxF = 0, maxEG = 0;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          double u = 0.5 + 0.25 * i, v = 0.5 + 0.25 * j;
          try {
            GeometryReport g = geometry_report(X, u, v);
            maxH = std::max(maxH, std::abs(g.H));
            maxF = std::max(maxF, std::abs(g.F));
            maxEG = std::max(maxEG, std::abs(g.E - g.G));
          } catch (const Error&) {
            // Degenerate point; skipped in the statistics.
          }
        }
      std::ostringstream os;
      os << "grid max |H| = " << maxH << ", max |F| = " << maxF
         << ", max |E-G| = " << maxEG << " (25 samples on [1/2,3/2]^2)";
      rep.lines.push_back(os.str());
      if (maxH > 1e-8 || maxF > 1e-8 || maxEG > 1e-8) {
        rep.ok = false;
        rep.lines.push_back("  surface statistics exceed tolerance");
      }
    } catch (const Error& e) {
      rep.lines.push_back(std::string("surface statistics skipped: ") + e.what());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Built-in examples.

namespace {

ComplexScalar cs(long re, long im = 0) { return {Rational(re), Rational(im)}; }
ComplexScalar csq(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return ComplexScalar(r);
}

ComplexQuaternion vec(ComplexScalar a, ComplexScalar b, ComplexScalar c) {
  return {ComplexScalar(0), std::move(a), std::move(b), std::move(c)};
}

}  // namespace

QLaurent catenoid_phi() {
  // (z^2-1)/(2z^2) i - i(z^2+1)/(2z^2) j - (1/z) k (second i complex).
  QLaurent p;
  p.set(0, vec(csq(1, 2), {Rational(0), Rational(-1, 2)}, cs(0)));
  p.set(-1, vec(cs(0), cs(0), cs(-1)));
  p.set(-2, vec(csq(-1, 2), {Rational(0), Rational(-1, 2)}, cs(0)));
  return p;
}

QLaurent catenoid_chi_numerator() {
  // (1 - 3z^2) i + i(1 - z^2) j + 2z k.
  QLaurent a;
  a.set(0, vec(cs(1), cs(0, 1), cs(0)));
  a.set(1, vec(cs(0), cs(0), cs(2)));
  a.set(2, vec(cs(-3), cs(0, -1), cs(0)));
  return a;
}

PreimagePair catenoid_pair() {
  PreimagePair p;
  p.A = catenoid_chi_numerator();
  p.lambda = LambdaScale(CLaurent(ComplexScalar(1)), CLaurent(4, cs(8)));  // 1/(8 z^4)
  return p;
}

QLaurent rational_phi() {
  CLaurent factor;  // (z^4 + 1) z^{-2}
  factor.set(2, cs(1));
  factor.set(-2, cs(1));
  QLaurent phi = catenoid_phi();
  return assemble(factor * component(phi, 0), factor * component(phi, 1),
                  factor * component(phi, 2), factor * component(phi, 3));
}

QLaurent richmond_phi() {
  // ((z^4-1)/z^2, i(z^4+1)/z^2, 2) as a vectorial quaternion.
  QLaurent p;
  p.set(2, vec(cs(1), cs(0, 1), cs(0)));
  p.set(0, vec(cs(0), cs(0), cs(2)));
  p.set(-2, vec(cs(-1), cs(0, 1), cs(0)));
  return p;
}

QLaurent richmond_chi() {
  // Phi h + h L with scalar h = z^2.
  QLaurent h(2, ComplexQuaternion::one());
  return richmond_phi() * h + h * QLaurent(0, ComplexQuaternion::L());
}

PreimagePair enneper_pair() {
  PreimagePair p;
  p.A = QLaurent(1, ComplexQuaternion::one()) + QLaurent(0, ComplexQuaternion::j());
  p.lambda = LambdaScale();
  return p;
}

CornerFile ex1_corners() {
  CornerFile c;
  c.rect = RectangleDomain(cs(0), 1, 2);
  c.data.phi[0] = vec(cs(25), cs(0, 25), cs(0));
  c.data.phi[1] = vec(cs(0), cs(0, 32), cs(32));
  c.data.phi[2] = vec(cs(60, -80), cs(-48, -36), cs(0, 48) + cs(64));
  c.data.phi[3] = vec(cs(85, -20), cs(20, -43), cs(32, 80));
  return c;
}

std::array<ComplexScalar, 3> rank3_invariants() {
  // F = ij + k, G = i + (sqrt2/2)(j + k): p0 = i (complex), Fv^s = 0,
  // Gv^s = 1.
  return {cs(0, 1), cs(0), cs(1)};
}

FloatComplexQuaternion rank3_F() {
  return {{0, 0}, {0, 0}, {0, 1}, {1, 0}};
}

FloatComplexQuaternion rank3_G() {
  double h = std::sqrt(2.0) / 2;
  return {{0, 1}, {0, 0}, {h, 0}, {h, 0}};
}

namespace {

BivarPoly bp(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  BivarPoly p;
  for (auto& [eu, ev, c] : terms) p.add(eu, ev, c);
  return p;
}

ClosedFormComponent catenoid_expected(int w) {
  // X = 1/2 (u + u/(u^2+v^2), v + v/(u^2+v^2), -ln(u^2+v^2)).
  ClosedFormComponent c;
  if (w == 1) {
    c.num = bp({{3, 0, Rational(1, 2)}, {1, 2, Rational(1, 2)}, {1, 0, Rational(1, 2)}});
    c.denom_pow = 1;
  } else if (w == 2) {
    c.num = bp({{0, 3, Rational(1, 2)}, {2, 1, Rational(1, 2)}, {0, 1, Rational(1, 2)}});
    c.denom_pow = 1;
  } else {
    c.log_coef = Rational(-1, 2);
  }
  return c;
}

ClosedFormComponent poly_component(const BivarPoly& p) {
  ClosedFormComponent c;
  c.num = p;
  return c;
}

ClosedFormComponent rational_expected(int w) {
  BivarPoly u = BivarPoly::term(1, 0, 1), v = BivarPoly::term(0, 1, 1);
  BivarPoly u2 = u * u, v2 = v * v;
  BivarPoly r2 = u2 + v2;
  BivarPoly one(Rational(1));
  ClosedFormComponent c;
  c.denom_pow = 3;
  if (w == 1) {
    BivarPoly inner = u2 * u2 * u2 - u2 * u2 * v2 - u2 * (v2 * v2).scaled(5) -
                      (v2 * v2 * v2).scaled(3) - (u2 * u2).scaled(4) -
                      (u2 * v2).scaled(4) + u2 - v2.scaled(3);
    c.num = ((r2 + one) * u * inner).scaled(Rational(1, 6));
  } else if (w == 2) {
    BivarPoly inner = (u2 * u2 * u2).scaled(3) + (u2 * u2 * v2).scaled(5) +
                      u2 * v2 * v2 - v2 * v2 * v2 + (u2 * v2).scaled(4) +
                      (v2 * v2).scaled(4) + u2.scaled(3) - v2;
    c.num = ((r2 + one) * inner * v).scaled(Rational(1, 6));
  } else {
    c.num = (r2 * (u2 - v2) * (r2 - one) * (r2 + one)).scaled(Rational(-1, 2));
  }
  return c;
}

ClosedFormComponent enneper_expected(int w) {
  // (u^3/3 - u v^2 - u, v^3/3 - u^2 v - v, v^2 - u^2).
  if (w == 1)
    return poly_component(
        bp({{3, 0, Rational(1, 3)}, {1, 2, Rational(-1)}, {1, 0, Rational(-1)}}));
  if (w == 2)
    return poly_component(
        bp({{0, 3, Rational(1, 3)}, {2, 1, Rational(-1)}, {0, 1, Rational(-1)}}));
  return poly_component(bp({{0, 2, Rational(1)}, {2, 0, Rational(-1)}}));
}

ClosedFormComponent ex1_expected(int w) {
  // 25/3 (-15u^3+45uv^2-15u^2+15v^2+75u, -51u^2v+17v^3+30uv-75v,
  //       -8u^3+24uv^2+60u^2-60v^2).
  Rational s(25, 3);
  if (w == 1)
    return poly_component(bp({{3, 0, -15 * s},
                              {1, 2, 45 * s},
                              {2, 0, -15 * s},
                              {0, 2, 15 * s},
                              {1, 0, 75 * s}}));
  if (w == 2)
    return poly_component(bp(
        {{2, 1, -51 * s}, {0, 3, 17 * s}, {1, 1, 30 * s}, {0, 1, -75 * s}}));
  return poly_component(
      bp({{3, 0, -8 * s}, {1, 2, 24 * s}, {2, 0, 60 * s}, {0, 2, -60 * s}}));
}

void check(ExampleReport& rep, bool ok, const std::string& what) {
  rep.lines.push_back((ok ? "pass: " : "FAIL: ") + what);
  rep.ok = rep.ok && ok;
}

void write_surface_artifacts(ExampleReport& rep, const ClosedFormSurface& X,
                             const Domain& d, const std::string& outdir,
                             const std::string& stem) {
  Mesh m = mesh(X, d, 33, 33);
  std::string obj = outdir + "/" + stem + ".obj";
  std::string csv = outdir + "/" + stem + ".csv";
  {
    std::ofstream os(obj, std::ios::binary);
    export_obj(m, os);
  }
  {
    std::ofstream os(csv, std::ios::binary);
    export_csv(m, X, os);
  }
  rep.artifacts.push_back(obj);
  rep.artifacts.push_back(csv);
}

void write_phi_artifact(ExampleReport& rep, const QLaurent& phi,
                        const std::string& outdir, const std::string& stem) {
  Representation r;
  r.kind = RepKind::Phi;
  r.phi = phi;
  std::string path = outdir + "/" + stem + ".phi.json";
  write_representation_file(r, path);
  rep.artifacts.push_back(path);
}

ClosedFormSurface surface_of(const QLaurent& phi, const Domain& d) {
  return integrate_surface({IsotropicCurve(phi), {0, 0, 0}, SurfacePart::Real, d});
}

void run_catenoid(ExampleReport& rep, const std::string& outdir) {
  QLaurent phi = catenoid_phi();
  QLaurent A = catenoid_chi_numerator();
  // Conjugacy Phi chi = chi L for chi = A/(2z^2); the scalar denominator
  // cancels, so the polynomial identity Phi A == A L is equivalent.
  QLaurent lhs = phi * A;
  QLaurent rhs = A * QLaurent(0, ComplexQuaternion::L());
  check(rep, lhs == rhs, "conjugacy Phi chi - chi L == 0");
  Domain d{0.5, 2.0, 0.5, 2.0};
  ClosedFormSurface X = surface_of(phi, d);
  bool match = true;
  for (int w = 1; w <= 3; ++w)
    match = match && X.components()[w - 1].same_function(catenoid_expected(w));
  check(rep, match, "closed form matches 1/2 (u + u/(u^2+v^2), v + v/(u^2+v^2), -ln(u^2+v^2))");
  write_phi_artifact(rep, phi, outdir, "catenoid");
  write_surface_artifacts(rep, X, d, outdir, "catenoid");
}

void run_rational(ExampleReport& rep, const std::string& outdir) {
  QLaurent phi = rational_phi();
  check(rep, residue_at_zero(phi) == ComplexQuaternion{}, "residue at 0 is zero");
  Domain d{0.5, 2.0, 0.5, 2.0};
  ClosedFormSurface X = surface_of(phi, d);
  bool match = true;
  for (int w = 1; w <= 3; ++w)
    match = match && X.components()[w - 1].same_function(rational_expected(w));
  check(rep, match, "closed form matches the rational surface parametrization");
  write_phi_artifact(rep, phi, outdir, "rational");
  write_surface_artifacts(rep, X, d, outdir, "rational");
}

void run_richmond(ExampleReport& rep, const std::string& outdir) {
  QLaurent phi = richmond_phi();
  QLaurent chi = richmond_chi();
  // (z^4+z^2-1) i + i(z^4+z^2+1) j + 2z^2 k (second i complex).
  QLaurent expected;
  expected.set(4, vec(cs(1), cs(0, 1), cs(0)));
  expected.set(2, vec(cs(1), cs(0, 1), cs(2)));
  expected.set(0, vec(cs(-1), cs(0, 1), cs(0)));
  check(rep, chi == expected, "chi = Phi h + h L with h = z^2 matches the printed polynomial");
  CLaurent qs = qsnorm(chi);
  check(rep, qs == CLaurent(2, cs(-4)), "qsnorm(chi) == -4 z^2");
  PreimagePair pair;
  pair.A = chi;
  pair.lambda = LambdaScale(CLaurent(ComplexScalar(1)), qs);
  check(rep, pair.phi() == phi, "lambda chi L chi^c == Phi");
  write_phi_artifact(rep, phi, outdir, "richmond");
  Domain d{0.5, 2.0, 0.5, 2.0};
  ClosedFormSurface X = surface_of(phi, d);
  write_surface_artifacts(rep, X, d, outdir, "richmond");
}

void run_enneper(ExampleReport& rep, const std::string& outdir) {
  PreimagePair pair = enneper_pair();
  QLaurent phi = pair.phi();
  Domain d{-3, 3, -3, 3};
  ClosedFormSurface X = surface_of(phi, d);
  bool match = true;
  for (int w = 1; w <= 3; ++w)
    match = match && X.components()[w - 1].same_function(enneper_expected(w));
  check(rep, match, "A = z + j integrates to the printed cubic");
  write_phi_artifact(rep, phi, outdir, "enneper");
  write_surface_artifacts(rep, X, d, outdir, "enneper");
}

void run_ex1(ExampleReport& rep, const std::string& outdir) {
  CornerFile c = ex1_corners();
  PatchResult pr = patch(c.rect, c.data);
  // The published preimage -(5+20j)z + 25 carries corner values 25 phi_l;
  // the exactly interpolating representative is 1/5 of it (up to sign).
  QLaurent paper_A;
  paper_A.set(0, ComplexQuaternion(cs(25), cs(0), cs(0), cs(0)));
  paper_A.set(1, ComplexQuaternion(cs(-5), cs(0), cs(-20), cs(0)));
  const QLaurent& A = pr.preimage.pair.A;
  bool prop = A.scaled(cs(5)) == paper_A || A.scaled(cs(-5)) == paper_A;
  check(rep, prop, "preimage is the published -(5+20j)z + 25 up to the exact scale 1/5");
  bool match = true;
  for (int w = 1; w <= 3; ++w) {
    ClosedFormComponent ours = pr.surface.components()[w - 1];
    ours.num = ours.num.scaled(25);
    ours.shift = ours.shift * 25;
    ours.log_coef = ours.log_coef * 25;
    match = match && ours.same_function(ex1_expected(w));
  }
  check(rep, match, "25 X matches the published cubic patch");
  std::string path = outdir + "/ex1.corners.json";
  {
    std::ofstream os(path, std::ios::binary);
    os << to_json(c).dump(2) << "\n";
  }
  rep.artifacts.push_back(path);
  write_surface_artifacts(rep, pr.surface, pr.spec.domain, outdir, "ex1");
}

void run_rank3(ExampleReport& rep, const std::string& outdir) {
  auto inv = rank3_invariants();
  SylvesterRank r = classify_rank_invariants(inv[0], inv[1], inv[2], false, false);
  check(rep, r == SylvesterRank::Rank3, "exact invariants classify as Rank3");
  FloatSylvesterMatrix M = operator_matrix(rank3_F(), rank3_G());
  Eigen::Matrix4cd m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = M.m[i][j];
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
  auto sv = svd.singularValues();
  check(rep, sv(3) / sv(0) < 1e-10, "floating matrix has numeric rank 3");
  std::string path = outdir + "/sylvester-rank3.txt";
  {
    std::ofstream os(path, std::ios::binary);
    os << "rank class: " << to_string(r) << "\n";
    os << "singular values:";
    for (int i = 0; i < 4; ++i) os << " " << sv(i);
    os << "\n";
  }
  rep.artifacts.push_back(path);
}

}  // namespace

std::vector<std::string> example_names() {
  return {"catenoid", "rational", "richmond", "enneper", "ex1", "sylvester-rank3"};
}

ExampleReport run_example(const std::string& name, const std::string& outdir) {
  ExampleReport rep;
  rep.name = name;
  std::filesystem::create_directories(outdir);
  if (name == "catenoid") run_catenoid(rep, outdir);
  else if (name == "rational") run_rational(rep, outdir);
  else if (name == "richmond") run_richmond(rep, outdir);
  else if (name == "enneper") run_enneper(rep, outdir);
  else if (name == "ex1") run_ex1(rep, outdir);
  else if (name == "sylvester-rank3") run_rank3(rep, outdir);
  else throw UnknownExample("no example named \"" + name + "\"");
  return rep;
}

}  // namespace mincq
