#include "silverstern/quadfield.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace silverstern {

namespace mp = boost::multiprecision;

QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }

QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }

QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b}; }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadInt operator*(const QuadInt& x, const Int& s) { return {x.a * s, x.b * s}; }

QuadInt conj(const QuadInt& x) { return {x.a, -x.b}; }

QuadInt mul_sqrt2(const QuadInt& x) { return {2 * x.b, x.a}; }

Int field_norm(const QuadInt& x) { return x.a * x.a - 2 * x.b * x.b; }

int sign(const QuadInt& x) {
  const int sa = x.a.sign();
  const int sb = x.b.sign();
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // Mixed signs: a + b*sqrt(2) has the sign of a iff a^2 > 2 b^2.
  const int n = field_norm(x).sign();
  return sa > 0 ? n : -n;
}

QuadInt pow(const QuadInt& x, unsigned n) {
  QuadInt result{1, 0};
  QuadInt base = x;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace {

std::strong_ordering ordering_from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
  return ordering_from_sign(sign(x - y));
}

double to_float(const QuadInt& x) { return to_float(QuadRat(x)); }

std::string to_string(const QuadInt& x) {
  if (x.b == 0) return x.a.str();
  const Int babs = mp::abs(x.b);
  const std::string radical = (babs == 1 ? std::string() : babs.str()) + "√2";
  if (x.a == 0) return (x.b < 0 ? "-" : "") + radical;
  return x.a.str() + (x.b < 0 ? " - " : " + ") + radical;
}

QuadRat::QuadRat(QuadInt n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw std::invalid_argument("QuadRat: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const Int g = mp::gcd(mp::gcd(mp::abs(num.a), mp::abs(num.b)), den);
  if (g > 1) {
    num.a /= g;
    num.b /= g;
    den /= g;
  }
}

QuadRat::QuadRat(const Rational& r) : num(mp::numerator(r), 0), den(mp::denominator(r)) {}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
  return {x.num * y.den + y.num * x.den, x.den * y.den};
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) {
  return {x.num * y.den - y.num * x.den, x.den * y.den};
}

QuadRat operator-(const QuadRat& x) { return {-x.num, x.den}; }

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  return {x.num * y.num, x.den * y.den};
}

QuadRat inverse(const QuadRat& x) {
  const Int n = field_norm(x.num);
  if (n == 0) throw std::domain_error("QuadRat: division by zero");
  return {conj(x.num) * x.den, n};
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * inverse(y); }

int sign(const QuadRat& x) { return sign(x.num); }

QuadRat abs(const QuadRat& x) { return sign(x) < 0 ? -x : x; }

std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y) {
  return ordering_from_sign(sign(x.num * y.den - y.num * x.den));
}

double to_float(const QuadRat& x) {
  static const double sqrt2 = std::sqrt(2.0);
  const int sa = x.num.a.sign();
  const int sb = x.num.b.sign();
  if (sa * sb >= 0) {
    // Reinforcing terms: divide per coefficient so huge numerators over
    // huge denominators stay in the double range on the way through.
    const double ra = Rational(x.num.a, x.den).convert_to<double>();
    const double rb = Rational(x.num.b, x.den).convert_to<double>();
    return ra + rb * sqrt2;
  }
  // Opposite-sign coefficients cancel, sometimes by many digits (quotients
  // of exact values land here), so combine them in 50-digit floats first.
  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  static const BigFloat big_sqrt2 = sqrt(BigFloat(2));
  const BigFloat value =
      (BigFloat(x.num.a) + BigFloat(x.num.b) * big_sqrt2) / BigFloat(x.den);
  return value.convert_to<double>();
}

std::string to_string(const QuadRat& x) {
  if (x.den == 1) return to_string(x.num);
  const bool both_terms = x.num.a != 0 && x.num.b != 0;
  const std::string n = to_string(x.num);
  return (both_terms ? "(" + n + ")" : n) + "/" + x.den.str();
}

}  // namespace silverstern
