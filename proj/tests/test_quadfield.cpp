#include "silverstern/quadfield.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"

using namespace silverstern;

namespace {

std::mt19937_64 rng(20240811u);

Int random_int(int words = 1) {
  Int v = 0;
  for (int i = 0; i < words; ++i) v = (v << 62) + Int(rng() >> 2);
  return rng() & 1 ? v : -v;
}

QuadInt random_quadint(int words = 1) { return {random_int(words), random_int(words)}; }

}  // namespace

TEST_CASE("quadint addition") {
  CHECK(QuadInt{1, 1} + QuadInt{1, -1} == QuadInt{2, 0});
  CHECK(QuadInt{0, 0} + QuadInt{3, 2} == QuadInt{3, 2});

  // (sqrt2+1)^5 + (sqrt2-1)^5 = 58*sqrt2, with the power checked against
  // plain repeated multiplication.
  const QuadInt p5 = pow(kSilver, 5);
  CHECK(p5 == oracles::slow_pow(kSilver, 5));
  CHECK(p5 == QuadInt{41, 29});
  CHECK(QuadInt{41, 29} + QuadInt{-41, 29} == QuadInt{0, 58});
}

TEST_CASE("quadint multiplication") {
  CHECK(QuadInt{1, 1} * QuadInt{1, 1} == QuadInt{3, 2});
  CHECK(QuadInt{1, 1} * QuadInt{1, -1} == QuadInt{-1, 0});
  CHECK(QuadInt{17, 12} * QuadInt{1, 1} == QuadInt{41, 29});
  CHECK(mul_sqrt2(QuadInt{3, 2}) == kSqrt2 * QuadInt{3, 2});
}

TEST_CASE("quadint conjugation") {
  CHECK(conj(QuadInt{3, 2}) == QuadInt{3, -2});
  const QuadInt x{41, 29};
  CHECK(conj(conj(x)) == x);
  CHECK(QuadInt{3, 2} * conj(QuadInt{3, 2}) == QuadInt{1, 0});
}

TEST_CASE("quadint sign is exact") {
  CHECK(sign(QuadInt{-7, 5}) == 1);   // 5*sqrt2 > 7 since 50 > 49
  CHECK(sign(QuadInt{0, 0}) == 0);
  CHECK(sign(QuadInt{99, -70}) == 1);  // 99^2 = 9801 > 9800 = 2*70^2
  CHECK(sign(QuadInt{-99, 70}) == -1);
  CHECK(sign(QuadInt{7, -5}) == -1);
  CHECK(sign(QuadInt{0, -3}) == -1);
}

TEST_CASE("quadint power") {
  CHECK(pow(kSilver, 2) == QuadInt{3, 2});
  CHECK(pow(kSilver, 5) == QuadInt{41, 29});
  CHECK(pow(QuadInt{5, -3}, 0) == QuadInt{1, 0});
  for (unsigned n : {1u, 3u, 7u, 20u}) {
    const QuadInt x = random_quadint();
    CHECK(pow(x, n) == oracles::slow_pow(x, n));
  }
}

TEST_CASE("quadrat ordering") {
  const QuadRat x(QuadInt{1, 1}, 2);   // (1+sqrt2)/2
  const QuadRat y(QuadInt{3, 2}, 5);   // (3+2sqrt2)/5
  CHECK(x > y);
  CHECK(oracles::embed(x) > oracles::embed(y));
  CHECK((x <=> x) == std::strong_ordering::equal);
  CHECK(QuadRat(QuadInt{0, 0}) < QuadRat(QuadInt{0, 1}, 1000));
}

TEST_CASE("quadrat canonical form") {
  const QuadRat q(QuadInt{4, 6}, -10);
  CHECK(q.num == QuadInt{-2, -3});
  CHECK(q.den == 5);
  // Re-canonicalizing a reduced value is the identity.
  CHECK(QuadRat(q.num, q.den) == q);
  CHECK(QuadRat(QuadInt{0, 0}, 7) == QuadRat{});
  CHECK_THROWS_AS(QuadRat(QuadInt{1, 0}, 0), std::invalid_argument);
}

TEST_CASE("quadrat field operations") {
  const QuadRat x(QuadInt{1, 1}, 2);
  const QuadRat y(QuadInt{3, -1}, 4);
  CHECK(x + y - y == x);
  CHECK(x * y / y == x);
  CHECK(inverse(inverse(x)) == x);
  CHECK(x * inverse(x) == QuadRat(QuadInt{1, 0}));
  CHECK_THROWS_AS(inverse(QuadRat{}), std::domain_error);
  CHECK(abs(-x) == x);
}

TEST_CASE("to_float") {
  CHECK(to_float(QuadRat(kSqrt2)) == doctest::Approx(1.4142135623730951).epsilon(1e-15));
  CHECK(to_float(QuadRat(QuadInt{1, 0})) == 1.0);
  const double w = (41.0 + 29.0 * std::sqrt(2.0)) / 2.0;
  CHECK(to_float(QuadRat(QuadInt{41, 29}, 2)) == doctest::Approx(w).epsilon(1e-15));
  CHECK(to_float(QuadRat(QuadInt{41, 29}, 2)) == doctest::Approx(41.00609).epsilon(1e-6));
}

TEST_CASE("to_string") {
  CHECK(to_string(QuadInt{3, 0}) == "3");
  CHECK(to_string(QuadInt{0, 1}) == "√2");
  CHECK(to_string(QuadInt{0, -2}) == "-2√2");
  CHECK(to_string(QuadInt{41, 29}) == "41 + 29√2");
  CHECK(to_string(QuadInt{3, -2}) == "3 - 2√2");
  CHECK(to_string(QuadRat(QuadInt{41, 29}, 2)) == "(41 + 29√2)/2");
  CHECK(to_string(QuadRat(QuadInt{0, 29}, 2)) == "29√2/2");
  CHECK(to_string(QuadRat(QuadInt{3, 0}, 4)) == "3/4");
}

TEST_CASE("ring axioms on random triples") {
  for (int i = 0; i < 200; ++i) {
    const QuadInt x = random_quadint(2), y = random_quadint(2), z = random_quadint(2);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("sign is multiplicative and norm is rational") {
  for (int i = 0; i < 500; ++i) {
    const QuadInt x = random_quadint(), y = random_quadint();
    CHECK(sign(x * y) == sign(x) * sign(y));
    CHECK(x * conj(x) == QuadInt{field_norm(x), 0});
  }
}

TEST_CASE("ordering matches a 50-digit float embedding") {
  std::uniform_int_distribution<std::int64_t> coeff(-1000000000, 1000000000);
  std::uniform_int_distribution<std::int64_t> denom(1, 1000000000);
  std::vector<QuadRat> values;
  while (values.size() < 10000) {
    QuadRat q(QuadInt{Int(coeff(rng)), Int(coeff(rng))}, Int(denom(rng)));
    const double v = std::abs(to_float(q));
    if (v < 1e-6 || v > 1e6) continue;
    values.push_back(std::move(q));
  }
  std::vector<std::size_t> by_cmp(values.size()), by_float(values.size());
  std::iota(by_cmp.begin(), by_cmp.end(), 0u);
  by_float = by_cmp;
  std::sort(by_cmp.begin(), by_cmp.end(), [&](std::size_t i, std::size_t j) {
    const auto c = values[i] <=> values[j];
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return i < j;
  });
  std::sort(by_float.begin(), by_float.end(), [&](std::size_t i, std::size_t j) {
    const auto a = oracles::embed(values[i]), b = oracles::embed(values[j]);
    if (a != b) return a < b;
    return i < j;
  });
  CHECK(by_cmp == by_float);
}
