#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mincq/patch.hpp"
#include "mincq/phcurve.hpp"

namespace mincq {

using Json = nlohmann::json;

/// JSON encodings.  Rationals are "num/den" strings so exactness survives
/// serialization; complex numbers are [re, im]; quaternions are four such
/// pairs in z0..z3 order; Laurent polynomials are arrays of
/// {"exp": int, "coef": ...} records.
Json to_json(const Rational& r);
Json to_json(const ComplexScalar& z);
Json to_json(const ComplexQuaternion& q);
Json to_json(const CLaurent& p);
Json to_json(const QLaurent& p);

Rational rational_from_json(const Json& j, const std::string& where);
ComplexScalar complex_from_json(const Json& j, const std::string& where);
ComplexQuaternion quaternion_from_json(const Json& j, const std::string& where);
CLaurent claurent_from_json(const Json& j, const std::string& where);
QLaurent qlaurent_from_json(const Json& j, const std::string& where);

enum class RepKind { FG, PQW, Pair, Phi };

const char* to_string(RepKind k);
RepKind kind_from_string(const std::string& s);

/// One of the four representations of an isotropic curve.
struct Representation {
  RepKind kind;
  WEData fg;          // kind == FG
  PQWData pqw;        // kind == PQW
  PreimagePair pair;  // kind == Pair
  QLaurent phi;       // kind == Phi
};

Json to_json(const Representation& r);
Representation representation_from_json(const Json& j);
Representation read_representation_file(const std::string& path);
void write_representation_file(const Representation& r, const std::string& path);

/// The isotropic curve described by any representation.
IsotropicCurve curve_of(const Representation& r);
Representation convert(const Representation& r, RepKind target);

/// Corner-data input for the patch pipeline.
struct CornerFile {
  RectangleDomain rect{ComplexScalar(0), 1, 1};
  CornerData data;
};

Json to_json(const CornerFile& c);
CornerFile corners_from_json(const Json& j);
CornerFile read_corner_file(const std::string& path);

Json read_json_file(const std::string& path);

/// Verification report; ok == false maps to the CLI's defect exit code.
struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
};

VerifyReport verify_representation(const Representation& r);

/// Built-in example data.
QLaurent catenoid_phi();
QLaurent catenoid_chi_numerator();  // A of the catenoid pair
PreimagePair catenoid_pair();       // lambda = 1/(8 z^4)
QLaurent rational_phi();            // (z^4+1) z^{-2} * catenoid Phi
QLaurent richmond_phi();
QLaurent richmond_chi();            // Phi h + h L with h = z^2
PreimagePair enneper_pair();        // A = z + j, lambda = 1
CornerFile ex1_corners();
/// Invariants of the rank-3 operator pair: p0 = F0+G0, Fv^s, Gv^s.
std::array<ComplexScalar, 3> rank3_invariants();
FloatComplexQuaternion rank3_F();
FloatComplexQuaternion rank3_G();

struct ExampleReport {
  std::string name;
  bool ok = true;
  std::vector<std::string> lines;
  std::vector<std::string> artifacts;  // files written
};

std::vector<std::string> example_names();
/// Runs a registered example: performs its exact checks and writes meshes,
/// CSV tables and representation files under outdir.
ExampleReport run_example(const std::string& name, const std::string& outdir);

}  // namespace mincq
