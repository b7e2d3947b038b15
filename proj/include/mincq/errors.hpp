#pragma once

#include <stdexcept>
#include <string>

namespace mincq {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MINCQ_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                           \
    explicit Name(const std::string& msg = #Name) : Error(msg) {} \
  }

// cq_core
MINCQ_DEFINE_ERROR(DivisionByZero);
MINCQ_DEFINE_ERROR(ZeroComplexNorm);
MINCQ_DEFINE_ERROR(NotExactSquare);
MINCQ_DEFINE_ERROR(NotRational);

// polyring
MINCQ_DEFINE_ERROR(PoleEvaluation);
MINCQ_DEFINE_ERROR(UnsupportedPoleStructure);
MINCQ_DEFINE_ERROR(BothZero);
MINCQ_DEFINE_ERROR(NotDivisible);

// sylvester
MINCQ_DEFINE_ERROR(ConjugacyObstruction);
MINCQ_DEFINE_ERROR(NonInvertibleChi);
MINCQ_DEFINE_ERROR(SearchExhausted);

// weierstrass
MINCQ_DEFINE_ERROR(NotIsotropic);
MINCQ_DEFINE_ERROR(DegenerateWE);
MINCQ_DEFINE_ERROR(NonPolynomialScale);
MINCQ_DEFINE_ERROR(NotPolynomial);

// surface
MINCQ_DEFINE_ERROR(PoleInDomain);
MINCQ_DEFINE_ERROR(DegenerateNormal);

// phcurve
MINCQ_DEFINE_ERROR(NonzeroResidue);

// patchdesign
MINCQ_DEFINE_ERROR(ZeroParameter);
MINCQ_DEFINE_ERROR(NotNull);
MINCQ_DEFINE_ERROR(NotVectorial);
MINCQ_DEFINE_ERROR(DegenerateTuple);
MINCQ_DEFINE_ERROR(NoSolution);
MINCQ_DEFINE_ERROR(NonUniqueBeyondScale);
MINCQ_DEFINE_ERROR(CrossRatioMismatch);
MINCQ_DEFINE_ERROR(ConditionsViolated);
MINCQ_DEFINE_ERROR(BadRectangle);

// cli_io
MINCQ_DEFINE_ERROR(ParseError);
MINCQ_DEFINE_ERROR(UnknownExample);

#undef MINCQ_DEFINE_ERROR

}  // namespace mincq
