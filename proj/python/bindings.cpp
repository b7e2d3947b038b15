// Python bindings: the exact engine is exposed through JSON strings (the same
// encoding the CLI uses), so exact rationals survive the language boundary.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mincq/io.hpp"

namespace py = pybind11;
using namespace mincq;

namespace {

Representation rep_from_string(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return representation_from_json(j);
}

std::string convert_json(const std::string& text, const std::string& to) {
  Representation r = rep_from_string(text);
  return to_json(convert(r, kind_from_string(to))).dump(2);
}

py::tuple verify_json(const std::string& text) {
  VerifyReport rep = verify_representation(rep_from_string(text));
  return py::make_tuple(rep.ok, rep.lines);
}

std::string phi_json(const std::string& text) {
  Representation r = rep_from_string(text);
  Representation phi{RepKind::Phi, {}, {}, {}, curve_of(r).phi()};
  return to_json(phi).dump(2);
}

std::string surface_obj(const std::string& text, double u0, double u1, double v0,
                        double v1, int nu, int nv, const std::string& part) {
  Representation r = rep_from_string(text);
  SurfaceSpec spec{curve_of(r), {0, 0, 0},
                   part == "imag" ? SurfacePart::Imaginary : SurfacePart::Real,
                   Domain{u0, u1, v0, v1}};
  ClosedFormSurface X = integrate_surface(spec);
  Mesh m = mesh(X, spec.domain, nu, nv);
  std::ostringstream os;
  export_obj(m, os);
  return os.str();
}

std::vector<std::array<double, 3>> surface_points(
    const std::string& text, const std::vector<std::array<double, 2>>& uv) {
  Representation r = rep_from_string(text);
  SurfaceSpec spec{curve_of(r), {0, 0, 0}, SurfacePart::Real, Domain{}};
  ClosedFormSurface X = integrate_surface(spec);
  std::vector<std::array<double, 3>> out;
  out.reserve(uv.size());
  for (auto& p : uv) out.push_back(X.eval(p[0], p[1]));
  return out;
}

py::dict patch_report(const std::string& corners_text) {
  Json j = Json::parse(corners_text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  CornerFile c = corners_from_json(j);
  ConditionReport rep = check_conditions(c.rect, c.data);
  py::dict d;
  d["eq1"] = rep.eq1_pass();
  d["eq2"] = rep.eq2_pass();
  d["eq3"] = rep.eq3_pass();
  if (rep.all_pass()) {
    PatchResult pr = patch(c.rect, c.data);
    Representation pair{RepKind::Pair, {}, {}, pr.preimage.pair, {}};
    d["pair"] = to_json(pair).dump(2);
  }
  return d;
}

std::string sylvester_rank(const std::string& f_text, const std::string& g_text) {
  Json jf = Json::parse(f_text, nullptr, false);
  Json jg = Json::parse(g_text, nullptr, false);
  if (jf.is_discarded() || jg.is_discarded()) throw ParseError("invalid JSON");
  ComplexQuaternion F = quaternion_from_json(jf, "F");
  ComplexQuaternion G = quaternion_from_json(jg, "G");
  return to_string(classify_rank(F, G));
}

std::vector<std::array<double, 4>> ph_samples(const std::string& text, double t0,
                                              double t1, int n) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("A"))
    throw ParseError("expected an object with field A");
  PHSpec spec;
  spec.A = qlaurent_from_json(j["A"], "A");
  if (j.contains("lambda_num"))
    spec.lambda = LambdaScale(claurent_from_json(j["lambda_num"], "lambda_num"),
                              j.contains("lambda_den")
                                  ? claurent_from_json(j["lambda_den"], "lambda_den")
                                  : CLaurent(ComplexScalar(1)));
  PHCurve c(std::move(spec));
  c.curve();
  std::vector<std::array<double, 4>> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    double t = n == 1 ? t0 : t0 + (t1 - t0) * k / (n - 1);
    auto p = c.eval(t);
    out.push_back({t, p[0], p[1], p[2]});
  }
  return out;
}

std::map<std::string, py::object> run_example_py(const std::string& name,
                                                 const std::string& outdir) {
  ExampleReport rep = run_example(name, outdir);
  std::map<std::string, py::object> d;
  d["name"] = py::cast(rep.name);
  d["ok"] = py::cast(rep.ok);
  d["lines"] = py::cast(rep.lines);
  d["artifacts"] = py::cast(rep.artifacts);
  return d;
}

}  // namespace

PYBIND11_MODULE(_mincq, m) {
  m.doc() = "Exact minimal-surface representations via complex quaternions";

  // Later registrations are matched first, so the subclasses win.
  py::register_exception<Error>(m, "MincqError");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<UnknownExample>(m, "UnknownExample");

  m.def("convert", &convert_json, py::arg("representation_json"), py::arg("to"),
        "Convert a representation JSON string to another kind (fg|pqw|pair|phi).");
  m.def("verify", &verify_json, py::arg("representation_json"),
        "Exact verification; returns (ok, report_lines).");
  m.def("phi", &phi_json, py::arg("representation_json"),
        "The isotropic curve of any representation, as a phi JSON string.");
  m.def("surface_obj", &surface_obj, py::arg("representation_json"), py::arg("u0"),
        py::arg("u1"), py::arg("v0"), py::arg("v1"), py::arg("nu") = 33,
        py::arg("nv") = 33, py::arg("part") = "real",
        "Integrate the representation and return an OBJ mesh as a string.");
  m.def("surface_points", &surface_points, py::arg("representation_json"),
        py::arg("uv"), "Evaluate the integrated surface at (u, v) points.");
  m.def("patch", &patch_report, py::arg("corners_json"),
        "Check the corner conditions; on success also build the exact preimage pair.");
  m.def("sylvester_rank", &sylvester_rank, py::arg("f_json"), py::arg("g_json"),
        "Exact rank class of the operator z -> F z + z G.");
  m.def("ph_samples", &ph_samples, py::arg("ph_json"), py::arg("t0"), py::arg("t1"),
        py::arg("n"), "Sample a Pythagorean-hodograph curve: rows (t, x, y, z).");
  m.def("example_names", &example_names, "Names of the built-in examples.");
  m.def("run_example", &run_example_py, py::arg("name"), py::arg("outdir"),
        "Run a built-in example; returns name, ok, lines, artifacts.");
}
