#include "silverstern/envelope.hpp"

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "silverstern/errors.hpp"

using namespace silverstern;
using namespace silverstern::env;

TEST_CASE("breakpoints and segments") {
  const Breakpoint b2 = breakpoint(2);
  CHECK(b2.x == Rational(9, 2));
  CHECK(b2.y == QuadRat(QuadInt{3, 2}, 2));

  CHECK(segment(0).slope == QuadRat(kSilver, 3));
  CHECK(segment(0).intercept == QuadRat{});

  // Piece n evaluates to y_n at its left end and y_{n+1} at its right end.
  for (int n = 0; n <= 40; ++n) {
    const Segment s = segment(n);
    const auto at = [&](const Rational& x) { return s.slope * QuadRat(x) + s.intercept; };
    CHECK(at(s.lo) == breakpoint(n).y);
    CHECK(at(s.hi) == breakpoint(n + 1).y);
  }
}

TEST_CASE("segment lookup") {
  CHECK(segment_of(Rational(1)).index == 0);
  CHECK(segment_of(Rational(5)).index == 2);
  CHECK(segment_of(Rational(9, 2)).index == 1);  // left piece at a breakpoint
  CHECK(segment_of(Rational(3, 2)).index == 0);
  CHECK_THROWS_AS(segment_of(Rational(-1)), std::invalid_argument);

  // Both pieces agree at the shared breakpoint.
  const Segment left = segment(1), right = segment(2);
  const QuadRat x(Rational(9, 2));
  CHECK(left.slope * x + left.intercept == right.slope * x + right.intercept);
  CHECK(value(Rational(9, 2)) == QuadRat(QuadInt{3, 2}, 2));
}

TEST_CASE("exact envelope values") {
  CHECK(value(Rational(0)) == QuadRat{});
  for (int n = 1; n <= 40; ++n) CHECK(value(breakpoint(n).x) == breakpoint(n).y);
  CHECK(value(Rational(4)) == QuadRat(QuadInt{16, 11}, 12));
  CHECK(to_float(value(Rational(4))) == doctest::Approx(2.62970).epsilon(1e-5));
  CHECK(value(Rational(2)) == QuadRat(QuadInt{8, 7}, 12));
}

TEST_CASE("slopes decrease and stay positive") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(sign(segment(n).slope) == 1);
    CHECK(segment(n + 1).slope < segment(n).slope);
  }
}

TEST_CASE("floor_log3") {
  CHECK(floor_log3(Int(1)) == 0);
  CHECK(floor_log3(Int(2)) == 0);
  CHECK(floor_log3(Int(3)) == 1);
  CHECK(floor_log3(Int(8)) == 1);
  CHECK(floor_log3(Int(9)) == 2);
  const Int p12 = boost::multiprecision::pow(Int(3), 12);
  CHECK(floor_log3(p12) == 12);
  CHECK(floor_log3(p12 - 1) == 11);
  CHECK_THROWS_AS(floor_log3(Int(0)), std::invalid_argument);
}

TEST_CASE("upper bound check") {
  CHECK(check_log_bound(2, 9).pass());
  CHECK(check_log_bound(2, 9, BoundCoeff::unit).pass());
  CHECK(check_log_bound(2, 729).pass());
  CHECK_THROWS_AS(check_log_bound(1, 9), std::invalid_argument);
  CHECK_THROWS_AS(check_log_bound(5, 4), std::invalid_argument);

  // Deterministic across worker counts.
  const BoundReport serial = check_log_bound(2, 2000, BoundCoeff::silver, 1);
  const BoundReport parallel = check_log_bound(2, 2000, BoundCoeff::silver, 4);
  CHECK(serial.pass());
  CHECK(serial.violations.size() == parallel.violations.size());
}

TEST_CASE("witness identity") {
  const WitnessIdentity one = witness_identity(1);
  CHECK(one.m == 5);
  CHECK(one.closed_form == QuadRat(QuadInt{58, 39}, 36));
  CHECK(one.lhs == one.closed_form);
  CHECK(one.equal);
  CHECK(one.exceeds_interval_max);
  CHECK(to_float(one.closed_form) == doctest::Approx(3.14318).epsilon(1e-5));
  for (int n = 2; n <= 12; ++n) {
    const WitnessIdentity w = witness_identity(n);
    CHECK(w.equal);
    CHECK(w.exceeds_interval_max);
  }
}

TEST_CASE("step gap identity") {
  CHECK(step_gap_k_lo(1) == 2);
  CHECK(step_gap_k_hi(1) == 3);
  CHECK(step_gap_k_lo(2) == 5);
  CHECK(step_gap_k_hi(2) == 12);

  const StepGap g = step_gap(2, 5);
  CHECK(g.expected == QuadRat(QuadInt{-10, -7}, 27));  // -sqrt2 (sqrt2+1)^3 / 27
  CHECK(g.equal);
  CHECK(g.negative);
  CHECK(g.magnitude_below_one);
  CHECK(to_float(g.gap) == doctest::Approx(-0.73702).epsilon(1e-4));

  // Independent of k across each strip.
  for (int n = 1; n <= 5; ++n) {
    const StepGap first = step_gap(n, step_gap_k_lo(n));
    for (Int k = step_gap_k_lo(n); k <= step_gap_k_hi(n); k += 3)
      CHECK(step_gap(n, k).gap == first.gap);
    CHECK(step_gap(n, step_gap_k_hi(n)).gap == first.gap);
    CHECK(first.equal);
    CHECK(first.negative);
    CHECK(first.magnitude_below_one);
  }

  CHECK(to_float(abs(step_gap(1, 2).gap)) == doctest::Approx(0.91582).epsilon(1e-4));

  CHECK_THROWS_AS(step_gap(2, Int(3)), std::invalid_argument);
  CHECK_THROWS_AS(step_gap(2, Int(4)), std::invalid_argument);
  CHECK_THROWS_AS(step_gap(2, Int(13)), std::invalid_argument);
  CHECK_THROWS_AS(step_gap(0, Int(1)), std::invalid_argument);
}

TEST_CASE("power-law gap") {
  // Exactly zero at breakpoints, up to float rounding relative to the
  // breakpoint scale (sqrt2+1)^n.
  for (int n = 1; n <= 12; ++n) {
    const double scale = to_float(QuadRat(pow(kSilver, static_cast<unsigned>(n))));
    CHECK(std::abs(power_law_gap(breakpoint(n).x)) <= 1e-9 * scale);
  }
  CHECK(power_law_gap(Rational(2)) < 0.0);
  CHECK(power_law_gap(Rational(2)) == doctest::Approx(-0.0577).epsilon(2e-2));
  CHECK_THROWS_AS(power_law_gap(Rational(0)), std::invalid_argument);

  const GridScan grid = power_law_grid(Rational(8, 5), Rational(100), 200, 2);
  CHECK(grid.samples.size() == 200);
  CHECK(grid.max_gap <= 1e-9);
  CHECK(grid.samples.front().x == doctest::Approx(1.6));
  CHECK(grid.samples.back().x == doctest::Approx(100.0));
}

TEST_CASE("ratio of sequence to envelope at witnesses") {
  const auto rows = envelope_ratio_scan(1, 20);
  REQUIRE(rows.size() == 20);
  CHECK(rows[0].m == 5);
  CHECK(rows[0].ratio == doctest::Approx(0.95445).epsilon(1e-4));
  double previous = 0;
  for (const auto& row : rows) {
    CHECK(row.ratio < 1.0);
    CHECK(row.ratio > previous);
    previous = row.ratio;
  }
  CHECK(std::abs(rows[11].ratio - 1.0) < 1e-5);  // n = 12
}
