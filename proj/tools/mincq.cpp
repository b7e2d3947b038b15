#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mincq/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDefect = 2;
constexpr int kExitInput = 3;

using namespace mincq;

Domain domain_from(const std::vector<double>& d) {
  if (d.empty()) return Domain{};
  return Domain{d[0], d[1], d[2], d[3]};
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParseError(path + ": cannot open for writing");
  return os;
}

int cmd_convert(const std::string& in, const std::string& to, const std::string& out) {
  Representation r = read_representation_file(in);
  Representation c = convert(r, kind_from_string(to));
  if (out.empty())
    std::cout << to_json(c).dump(2) << "\n";
  else
    write_representation_file(c, out);
  return kExitOk;
}

int cmd_surface(const std::string& in, const std::string& part,
                const std::vector<double>& dom, int nu, int nv,
                const std::vector<std::string>& base, const std::string& obj,
                const std::string& csv) {
  Representation r = read_representation_file(in);
  SurfaceSpec spec{curve_of(r), {0, 0, 0}, SurfacePart::Real, domain_from(dom)};
  if (part == "imag") spec.part = SurfacePart::Imaginary;
  else if (part != "real") throw ParseError("--part must be real or imag");
  if (!base.empty())
    for (int i = 0; i < 3; ++i) spec.base_point[i] = parse_rational(base[i]);
  ClosedFormSurface X = integrate_surface(spec);
  Mesh m = mesh(X, spec.domain, nu, nv);
  if (!obj.empty()) {
    auto os = open_out(obj);
    export_obj(m, os);
  }
  if (!csv.empty()) {
    auto os = open_out(csv);
    export_csv(m, X, os);
  }
  if (obj.empty() && csv.empty())
    std::cout << "surface integrated; use --obj/--csv to export\n";
  return kExitOk;
}

int cmd_patch(const std::string& corners, int nu, int nv, const std::string& obj,
              const std::string& csv, const std::string& pair_out) {
  CornerFile c = read_corner_file(corners);
  ConditionReport rep = check_conditions(c.rect, c.data);
  std::cout << "eq1 (null vectorial corners): " << (rep.eq1_pass() ? "pass" : "FAIL")
            << "\n";
  std::cout << "eq2 (linear relation):        " << (rep.eq2_pass() ? "pass" : "FAIL")
            << "\n";
  std::cout << "eq3 (cross-ratio):            " << (rep.eq3_pass() ? "pass" : "FAIL")
            << "\n";
  if (!rep.all_pass()) return kExitDefect;
  PatchResult pr = patch(c.rect, c.data);
  Mesh m = mesh(pr.surface, pr.spec.domain, nu, nv);
  if (!obj.empty()) {
    auto os = open_out(obj);
    export_obj(m, os);
  }
  if (!csv.empty()) {
    auto os = open_out(csv);
    export_csv(m, pr.surface, os);
  }
  if (!pair_out.empty()) {
    Representation r;
    r.kind = RepKind::Pair;
    r.pair = pr.preimage.pair;
    write_representation_file(r, pair_out);
  }
  std::cout << "patch built; corner certificate exact\n";
  return kExitOk;
}

int cmd_phcurve(const std::string& in, double t0, double t1, int n,
                const std::string& csv) {
  Json j = read_json_file(in);
  PHSpec spec;
  if (!j.is_object() || !j.contains("A")) throw ParseError(in + ": missing field A");
  spec.A = qlaurent_from_json(j["A"], "A");
  if (j.contains("lambda_num"))
    spec.lambda = LambdaScale(claurent_from_json(j["lambda_num"], "lambda_num"),
                              j.contains("lambda_den")
                                  ? claurent_from_json(j["lambda_den"], "lambda_den")
                                  : CLaurent(ComplexScalar(1)));
  if (j.contains("base")) {
    if (!j["base"].is_array() || j["base"].size() != 3)
      throw ParseError("base: expected three rationals");
    for (int i = 0; i < 3; ++i)
      spec.base_point[i] = rational_from_json(j["base"][i], "base");
  }
  PHCurve curve(std::move(spec));
  curve.curve();  // force the residue check
  if (csv.empty()) {
    export_phcurve_csv(curve, t0, t1, n, std::cout);
  } else {
    auto os = open_out(csv);
    export_phcurve_csv(curve, t0, t1, n, os);
  }
  return kExitOk;
}

int cmd_sylvester(const std::string& in) {
  Json j = read_json_file(in);
  if (!j.is_object() || !j.contains("F") || !j.contains("G"))
    throw ParseError(in + ": expected fields F and G");
  ComplexQuaternion F = quaternion_from_json(j["F"], "F");
  ComplexQuaternion G = quaternion_from_json(j["G"], "G");
  SylvesterMatrix M = operator_matrix(F, G);
  ComplexScalar det = M.determinant();
  std::cout << "rank class: " << to_string(classify_rank(F, G)) << "\n";
  std::cout << "det (closed form == expansion): "
            << (det == det_closed_form(F, G) ? "agree" : "DISAGREE") << "\n";
  auto ev = eigenvalues(FloatComplexQuaternion(F), FloatComplexQuaternion(G));
  std::cout << "eigenvalues:";
  for (auto& e : ev) std::cout << " " << e.real() << (e.imag() < 0 ? "-" : "+")
                               << std::abs(e.imag()) << "i";
  std::cout << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& in) {
  Representation r = read_representation_file(in);
  VerifyReport rep = verify_representation(r);
  for (auto& line : rep.lines) std::cout << line << "\n";
  std::cout << (rep.ok ? "verification passed" : "verification FAILED") << "\n";
  return rep.ok ? kExitOk : kExitDefect;
}

int cmd_example(const std::string& name, const std::string& outdir) {
  if (name == "list") {
    for (auto& n : example_names()) std::cout << n << "\n";
    return kExitOk;
  }
  ExampleReport rep = run_example(name, outdir);
  for (auto& line : rep.lines) std::cout << line << "\n";
  for (auto& a : rep.artifacts) std::cout << "wrote " << a << "\n";
  std::cout << (rep.ok ? "example passed" : "example FAILED") << "\n";
  return rep.ok ? kExitOk : kExitDefect;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimal-surface representations via complex quaternions"};
  app.require_subcommand(1);

  std::string in, out, to, part = "real", corners, pair_out, name;
  std::string outdir = "mincq-out";
  std::vector<double> dom;
  std::vector<std::string> base;
  int nu = 33, nv = 33, samples = 65;
  double t0 = -1, t1 = 1;

  auto* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("--in", in, "input representation JSON")->required();
  convert->add_option("--to", to, "target type: fg|pqw|pair|phi")->required();
  convert->add_option("--out", out, "output file (stdout when omitted)");

  auto* surface = app.add_subcommand("surface", "Integrate to a surface and export");
  surface->add_option("--in", in, "input representation JSON")->required();
  surface->add_option("--part", part, "real|imag (conjugate surface)");
  surface->add_option("--domain", dom, "u0 u1 v0 v1")->expected(4);
  surface->add_option("--nu", nu, "grid count in u");
  surface->add_option("--nv", nv, "grid count in v");
  surface->add_option("--base", base, "base point, three rationals")->expected(3);
  surface->add_option("--obj", out, "OBJ output path");
  std::string csv;
  surface->add_option("--csv", csv, "CSV output path");

  auto* patchc = app.add_subcommand("patch", "Corner-data Enneper patch");
  patchc->add_option("--corners", corners, "corner data JSON")->required();
  patchc->add_option("--nu", nu, "grid count in u");
  patchc->add_option("--nv", nv, "grid count in v");
  patchc->add_option("--obj", out, "OBJ output path");
  patchc->add_option("--csv", csv, "CSV output path");
  patchc->add_option("--pair", pair_out, "write the recovered preimage pair");

  auto* ph = app.add_subcommand("phcurve", "Pythagorean-hodograph curve sampling");
  ph->add_option("--in", in, "PH spec JSON (A, lambda_num, lambda_den, base)")->required();
  ph->add_option("--t0", t0, "sample range start");
  ph->add_option("--t1", t1, "sample range end");
  ph->add_option("-n,--samples", samples, "sample count");
  ph->add_option("--csv", csv, "CSV output path (stdout when omitted)");

  auto* syl = app.add_subcommand("sylvester", "Sylvester operator analysis");
  syl->add_option("--in", in, "JSON with quaternions F and G")->required();

  auto* verify = app.add_subcommand("verify", "Verify a representation file");
  verify->add_option("--in", in, "input representation JSON")->required();

  auto* example = app.add_subcommand("example", "Run a built-in example");
  example->add_option("name", name, "example name, or 'list'")->required();
  example->add_option("--outdir", outdir, "artifact directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (convert->parsed()) return cmd_convert(in, to, out);
    if (surface->parsed()) return cmd_surface(in, part, dom, nu, nv, base, out, csv);
    if (patchc->parsed()) return cmd_patch(corners, nu, nv, out, csv, pair_out);
    if (ph->parsed()) return cmd_phcurve(in, t0, t1, samples, csv);
    if (syl->parsed()) return cmd_sylvester(in);
    if (verify->parsed()) return cmd_verify(in);
    if (example->parsed()) return cmd_example(name, outdir);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnknownExample& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mincq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDefect;
  }
  return kExitInput;
}
