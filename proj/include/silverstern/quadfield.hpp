#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

namespace silverstern {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*sqrt(2) of the ring Z[sqrt(2)].
///
/// Coefficients are arbitrary-precision integers: products never overflow,
/// and sqrt(2) being irrational makes the representation unique, so value
/// equality is coefficient equality.  All operations below are pure; values
/// are safe to share across threads once constructed.
struct QuadInt {
  Int a;  ///< rational part
  Int b;  ///< coefficient of sqrt(2)

  QuadInt() = default;
  QuadInt(Int ra, Int rb) : a(std::move(ra)), b(std::move(rb)) {}

  bool operator==(const QuadInt&) const = default;
};

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(const QuadInt& x, const QuadInt& y);
QuadInt operator*(const QuadInt& x, const Int& s);

/// (a, b) -> (a, -b), the nontrivial ring automorphism.
QuadInt conj(const QuadInt& x);

/// Multiplication by sqrt(2): (a, b) -> (2b, a).  Cheaper than a product.
QuadInt mul_sqrt2(const QuadInt& x);

/// x * conj(x) = a^2 - 2 b^2, an ordinary integer.
Int field_norm(const QuadInt& x);

/// Sign of the real number a + b*sqrt(2), decided in integer arithmetic
/// only (square-and-compare for mixed-sign coefficients, never floats).
int sign(const QuadInt& x);

/// x^n by repeated squaring; pow(x, 0) == 1.
QuadInt pow(const QuadInt& x, unsigned n);

/// Total order consistent with the real values.
std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y);

/// Nearest-double embedding (display/diagnostics only, roughly 4 ulp).
double to_float(const QuadInt& x);

/// "p + q√2" rendering, omitting zero terms and unit coefficients.
std::string to_string(const QuadInt& x);

inline const QuadInt kSqrt2{0, 1};
inline const QuadInt kSilver{1, 1};  ///< sqrt(2) + 1, the silver ratio

/// Exact element of Q(sqrt(2)) held as a QuadInt numerator over a positive
/// integer denominator in lowest terms: den > 0 and gcd(gcd(a, b), den) = 1.
/// The canonical form is unique, so operator== decides value equality.
struct QuadRat {
  QuadInt num;
  Int den{1};

  QuadRat() = default;
  QuadRat(QuadInt n, Int d);  ///< canonicalizes; throws std::invalid_argument if d == 0
  QuadRat(QuadInt n) : num(std::move(n)) {}
  QuadRat(const Rational& r);

  bool operator==(const QuadRat&) const = default;
};

QuadRat operator+(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x);
QuadRat operator*(const QuadRat& x, const QuadRat& y);
QuadRat operator/(const QuadRat& x, const QuadRat& y);

/// 1/x; throws std::domain_error on zero.
QuadRat inverse(const QuadRat& x);

int sign(const QuadRat& x);
QuadRat abs(const QuadRat& x);

/// Exact ordering via sign of the cross-multiplied difference.
std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y);

/// (a + b*sqrt(2))/den as the nearest double, within about 4 ulp.  The two
/// coefficients are converted separately and combined; display only.
double to_float(const QuadRat& x);

/// "p + q√2" or "(p + q√2)/d" rendering.
std::string to_string(const QuadRat& x);

}  // namespace silverstern
