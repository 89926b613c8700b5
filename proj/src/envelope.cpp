#include "silverstern/envelope.hpp"

#include "silverstern/errors.hpp"
#include "silverstern/parallel.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace silverstern::env {

namespace mp = boost::multiprecision;

namespace {

Int pow3(unsigned n) { return mp::pow(Int(3), n); }

}  // namespace

Breakpoint breakpoint(int n) {
  if (n < 0) throw std::invalid_argument("breakpoint: negative index");
  if (n == 0) return {0, Rational(0), QuadRat{}};
  return {n, Rational(pow3(static_cast<unsigned>(n)), Int(2)),
          QuadRat(pow(kSilver, static_cast<unsigned>(n)), 2)};
}

Segment segment(int n) {
  if (n < 0) throw std::invalid_argument("segment: negative index");
  if (n == 0)
    return {0, QuadRat(kSilver, 3), QuadRat{}, Rational(0), Rational(3, 2)};
  const QuadInt p = pow(kSilver, static_cast<unsigned>(n));
  const Int p3 = pow3(static_cast<unsigned>(n));
  return {n,
          QuadRat(mul_sqrt2(p), 2 * p3),
          QuadRat(p * QuadInt(2, -1), 4),
          Rational(p3, Int(2)),
          Rational(3 * p3, Int(2))};
}

Segment segment_of(const Rational& x) {
  if (x < 0) throw std::invalid_argument("segment_of: negative argument");
  int n = 0;
  Int p3 = 3;
  while (x > Rational(p3, Int(2))) {
    p3 *= 3;
    ++n;
  }
  return segment(n);
}

QuadRat value(const Rational& x) {
  const Segment s = segment_of(x);
  return s.slope * QuadRat(x) + s.intercept;
}

int floor_log3(const Int& m) {
  if (m < 1) throw std::invalid_argument("floor_log3: argument must be >= 1");
  int t = 0;
  Int p = 3;
  while (p <= m) {
    p *= 3;
    ++t;
  }
  return t;
}

BoundReport check_log_bound(const Int& lo, const Int& hi, BoundCoeff coeff, int workers) {
  if (lo < 2)
    throw std::invalid_argument(
        "check_log_bound: range must start at m >= 2 (the bound fails at m = 1)");
  if (hi < lo) throw std::invalid_argument("check_log_bound: empty range");
  if (hi > Int(std::numeric_limits<std::uint64_t>::max()))
    throw BudgetError("check_log_bound: range end does not fit in 64 bits");

  const auto lo64 = lo.convert_to<std::uint64_t>();
  const auto hi64 = hi.convert_to<std::uint64_t>();
  auto chunk = [&](std::uint64_t clo, std::uint64_t chi) {
    std::vector<BoundViolation> found;
    for (std::uint64_t m = clo; m <= chi; ++m) {
      const Int mi(m);
      const QuadRat lhs(seq::northshield(mi));
      const int t = floor_log3(mi);
      const QuadInt correction =
          coeff == BoundCoeff::silver ? QuadInt(t, t) : QuadInt(t, 0);
      QuadRat rhs = value(Rational(mi)) + QuadRat(correction);
      if (lhs > rhs) found.push_back({mi, lhs, std::move(rhs)});
    }
    return found;
  };

  BoundReport report{lo, hi, coeff, {}};
  for (auto& part :
       detail::chunked<std::vector<BoundViolation>>(lo64, hi64, workers, chunk))
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
  return report;
}

WitnessIdentity witness_identity(int n) {
  if (n < 1) throw std::invalid_argument("witness_identity: n must be >= 1");
  const auto e = static_cast<unsigned>(n + 1);
  const Int p3 = pow3(e);
  const Int m = (p3 + 1) / 2;
  const QuadInt p = pow(kSilver, e);

  WitnessIdentity out;
  out.n = n;
  out.m = m;
  out.lhs = value(Rational(m));
  // (sqrt2/(4*3^(n+1)) + 1/2)(sqrt2+1)^(n+1) over the common denominator.
  out.closed_form = QuadRat(mul_sqrt2(p) + p * (2 * p3), 4 * p3);
  out.equal = out.lhs == out.closed_form;
  const QuadRat with_log = out.closed_form + QuadRat(QuadInt(Int(n + 1), 0));
  out.exceeds_interval_max =
      with_log > QuadRat(seq::interval_max_closed_form(n + 1).max_value);
  return out;
}

Int step_gap_k_lo(int n) {
  if (n < 1) throw std::invalid_argument("step_gap: n must be >= 1");
  return (pow3(static_cast<unsigned>(n)) + 1) / 2;
}

Int step_gap_k_hi(int n) {
  if (n < 1) throw std::invalid_argument("step_gap: n must be >= 1");
  return (pow3(static_cast<unsigned>(n + 1)) - 3) / 2;
}

StepGap step_gap(int n, const Int& k) {
  const Int k_lo = step_gap_k_lo(n);
  const Int k_hi = step_gap_k_hi(n);
  if (k < k_lo || k > k_hi)
    throw std::invalid_argument("step_gap: k = " + k.str() +
                                " outside the aligned strip [" + k_lo.str() + ", " +
                                k_hi.str() + "] for n = " + std::to_string(n));

  StepGap out;
  out.n = n;
  out.k = k;
  out.gap = value(Rational(3 * k + 1)) - QuadRat(kSilver) * value(Rational(k + 1));
  const QuadInt p = pow(kSilver, static_cast<unsigned>(n + 1));
  out.expected = QuadRat(-mul_sqrt2(p), pow3(static_cast<unsigned>(n + 1)));
  out.equal = out.gap == out.expected;
  out.magnitude_below_one = abs(out.gap) < QuadRat(QuadInt(1, 0));
  out.negative = sign(out.gap) < 0;
  return out;
}

double power_law_gap(const Rational& x) {
  if (x <= 0) throw std::invalid_argument("power_law_gap: argument must be positive");
  return 2.0 * to_float(value(x)) -
         std::pow(2.0 * x.convert_to<double>(), seq::silver_exponent());
}

GridScan power_law_grid(const Rational& lo, const Rational& hi, int count, int workers) {
  if (count < 2) throw std::invalid_argument("power_law_grid: need at least 2 points");
  if (lo <= 0 || hi <= lo)
    throw std::invalid_argument("power_law_grid: need 0 < lo < hi");

  const Rational step = (hi - lo) / (count - 1);
  struct Chunk {
    double max = -std::numeric_limits<double>::infinity();
    std::vector<GapSample> samples;
  };
  auto body = [&](std::uint64_t ilo, std::uint64_t ihi) {
    Chunk local;
    for (std::uint64_t i = ilo; i <= ihi; ++i) {
      const Rational x = lo + Rational(i) * step;
      const double g = power_law_gap(x);
      local.samples.push_back({x.convert_to<double>(), g});
      if (g > local.max) local.max = g;
    }
    return local;
  };

  GridScan scan;
  scan.lo = lo;
  scan.hi = hi;
  scan.count = count;
  scan.max_gap = -std::numeric_limits<double>::infinity();
  for (auto& part : detail::chunked<Chunk>(0, static_cast<std::uint64_t>(count) - 1,
                                           workers, body)) {
    if (part.max > scan.max_gap) scan.max_gap = part.max;
    scan.samples.insert(scan.samples.end(), part.samples.begin(), part.samples.end());
  }
  return scan;
}

std::vector<EnvelopeRatio> envelope_ratio_scan(int n_lo, int n_hi) {
  if (n_lo < 1 || n_lo > n_hi)
    throw std::invalid_argument("envelope_ratio_scan: need 1 <= n_lo <= n_hi");
  std::vector<EnvelopeRatio> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    const Int m = seq::witness_index(n);
    const QuadRat b(seq::interval_max_closed_form(n + 1).max_value);
    // Both sides are positive, so the quotient of the two float embeddings
    // carries full double precision.
    out.push_back({n, m, to_float(b) / to_float(value(Rational(m)))});
  }
  return out;
}

}  // namespace silverstern::env
