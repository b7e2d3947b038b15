#include "mincq/scalar.hpp"

#include <sstream>

namespace mincq {

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

ComplexScalar ComplexScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  ComplexScalar acc(1), base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::optional<ComplexScalar> exact_sqrt(const ComplexScalar& z) {
  if (z.is_zero()) return ComplexScalar(0);
  if (z.im == 0) {
    if (z.re > 0) {
      auto s = exact_sqrt(z.re);
      if (!s) return std::nullopt;
      return ComplexScalar(*s);
    }
    auto s = exact_sqrt(Rational(-z.re));
    if (!s) return std::nullopt;
    return ComplexScalar(Rational(0), *s);
  }
  // (x + iy)^2 = a + ib with r = |a+ib| rational, x^2 = (a+r)/2
  auto r = exact_sqrt(z.norm());
  if (!r) return std::nullopt;
  auto x = exact_sqrt(Rational((z.re + *r) / 2));
  if (!x || *x == 0) return std::nullopt;
  Rational y = z.im / (2 * *x);
  ComplexScalar root(*x, y);
  if (root.re < 0 || (root.re == 0 && root.im < 0)) root = -root;
  return root;
}

Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string ComplexScalar::str() const {
  std::ostringstream os;
  os << format_rational(re);
  if (im != 0) os << (im > 0 ? "+" : "-") << format_rational(Rational(abs(im))) << "i";
  return os.str();
}

bool lex_less(const ComplexScalar& a, const ComplexScalar& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

}  // namespace mincq
