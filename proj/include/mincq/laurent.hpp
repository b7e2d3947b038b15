#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mincq/quaternion.hpp"
#include "mincq/scalar.hpp"

namespace mincq {

/// Sparse Laurent polynomial in one complex variable.  Coeff is either
/// ComplexScalar or ComplexQuaternion; zero coefficients are never stored.
template <typename Coeff>
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Coeff& constant) { set(0, constant); }
  Laurent(int exp, const Coeff& coeff) { set(exp, coeff); }

  static Laurent monomial(int exp, const Coeff& coeff) { return Laurent(exp, coeff); }

  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  /// Degree of the zero polynomial is undefined; callers guard with is_zero().
  int degree() const { return terms_.rbegin()->first; }
  int valuation() const { return terms_.begin()->first; }

  Coeff coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void set(int exp, const Coeff& c) {
    if (c.is_zero())
      terms_.erase(exp);
    else
      terms_[exp] = c;
  }

  void add_term(int exp, const Coeff& c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[exp] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Laurent operator-() const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  Laurent operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  /// Convolution product; coefficient order is preserved, so this is valid
  /// for non-commutative quaternion coefficients as well.
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [ea, ca] : terms_)
      for (auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent scaled(const ComplexScalar& s) const {
    Laurent r;
    if (s.is_zero()) return r;
    for (auto& [e, c] : terms_) r.set(e, c * s);
    return r;
  }

  /// Multiplication by z^k.
  Laurent shifted(int k) const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }

  Laurent derivative() const {
    Laurent r;
    for (auto& [e, c] : terms_)
      if (e != 0) r.set(e - 1, c * ComplexScalar(Rational(e)));
    return r;
  }

  /// Exact evaluation.  Throws PoleEvaluation at z = 0 when negative
  /// exponents are present.
  Coeff eval(const ComplexScalar& z) const {
    if (!is_polynomial() && z.is_zero()) throw PoleEvaluation("evaluation at the pole z = 0");
    Coeff acc{};
    for (auto& [e, c] : terms_) acc += c * z.pow(e);
    return acc;
  }

  std::complex<double> pow_f(std::complex<double> z, int e) const {
    return std::pow(z, e);
  }

  std::string str(const std::string& var = "z") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      if (e != 0) out += "*" + var + "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::map<int, Coeff> terms_;
};

using CLaurent = Laurent<ComplexScalar>;
using QLaurent = Laurent<ComplexQuaternion>;
// Polynomial aliases: same representation, valuation >= 0 expected.
using CPoly = CLaurent;
using QPoly = QLaurent;

inline QLaurent to_qlaurent(const CLaurent& p) {
  QLaurent r;
  for (auto& [e, c] : p.terms()) r.set(e, ComplexQuaternion(c));
  return r;
}

/// Floating evaluation of a Laurent polynomial with quaternion coefficients.
FloatComplexQuaternion eval_f(const QLaurent& p, std::complex<double> z);
std::complex<double> eval_f(const CLaurent& p, std::complex<double> z);

/// Coefficient-wise quaternionic conjugate p^c.
QLaurent conj_quat(const QLaurent& p);
/// Coefficient-wise complex conjugate applied to coefficients only (the
/// variable is untouched).
QLaurent conj_complex_coeffs(const QLaurent& p);

/// Scalar part and component extraction.
CLaurent component(const QLaurent& p, int which);  // 0..3
QLaurent assemble(const CLaurent& c0, const CLaurent& c1, const CLaurent& c2,
                  const CLaurent& c3);

/// p p^c projected to its scalar part; the vector part vanishes identically
/// and is asserted to do so.
CLaurent qsnorm(const QLaurent& p);

/// Closed antiderivative of a Laurent polynomial around 0: z^{-1} terms
/// become logarithmic.
template <typename Coeff>
struct AntiderivativeFormT {
  Laurent<Coeff> principal;  // derivative of this recovers all non-z^{-1} terms
  // Log terms (pole, residue); only the pole at 0 is supported.
  std::vector<std::pair<ComplexScalar, Coeff>> log_terms;

  bool has_log() const { return !log_terms.empty(); }
};
using AntiderivativeForm = AntiderivativeFormT<ComplexQuaternion>;
using CAntiderivativeForm = AntiderivativeFormT<ComplexScalar>;

template <typename Coeff>
AntiderivativeFormT<Coeff> antiderivative(const Laurent<Coeff>& p) {
  AntiderivativeFormT<Coeff> r;
  for (auto& [e, c] : p.terms()) {
    if (e == -1) {
      r.log_terms.emplace_back(ComplexScalar(0), c);
    } else {
      Rational inv(1, e + 1);
      inv.canonicalize();  // mpq requires a positive denominator
      r.principal.set(e + 1, c * ComplexScalar(inv));
    }
  }
  return r;
}

/// Antiderivative with an explicit pole list.  The exact engine supports
/// Laurent expansions around 0 only; any other listed pole is rejected.
template <typename Coeff>
AntiderivativeFormT<Coeff> antiderivative(const Laurent<Coeff>& p,
                                          const std::vector<ComplexScalar>& poles) {
  for (auto& pole : poles)
    if (!pole.is_zero())
      throw UnsupportedPoleStructure("only the pole at 0 is supported exactly");
  if (!p.is_polynomial() && poles.empty())
    throw UnsupportedPoleStructure("negative exponents require listing the pole 0");
  return antiderivative(p);
}

/// Residue at 0 (the z^{-1} coefficient).
template <typename Coeff>
Coeff residue_at_zero(const Laurent<Coeff>& p) {
  return p.coeff(-1);
}

// --- polynomial algebra over the Gaussian rationals -------------------------

/// Monic gcd of two complex polynomials (Euclidean algorithm, exact
/// arithmetic).  Laurent inputs are normalized by their valuation first,
/// i.e. z is treated as a unit.
CPoly poly_gcd(const CPoly& a, const CPoly& b);

/// gcd of several polynomials by folding.
CPoly poly_gcd(const std::vector<CPoly>& ps);

/// Quotient/remainder of polynomial division.
std::pair<CPoly, CPoly> poly_divmod(const CPoly& a, const CPoly& b);

/// Exact division; throws NotDivisible when a remainder is left.  Works on
/// Laurent inputs via valuation shifts.
CLaurent divide_exact(const CLaurent& a, const CLaurent& b);

/// Extended Euclid: returns (g, alpha, beta) with alpha a + beta b = g,
/// g monic.
struct BezoutResult {
  CPoly g, alpha, beta;
};
BezoutResult bezout(const CPoly& a, const CPoly& b);

}  // namespace mincq
