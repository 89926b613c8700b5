#pragma once

#include "silverstern/quadfield.hpp"
#include "silverstern/sequences.hpp"

#include <vector>

namespace silverstern::env {

// The upper envelope of the northshield sequence: the piecewise-linear
// function through (0, 0) and the points (3^n/2, (sqrt2+1)^n/2) for n >= 1.
// Every value at a rational argument is computed exactly in Q(sqrt(2));
// only the power-law comparison below resorts to doubles.

struct Breakpoint {
  int n = 0;
  Rational x;   ///< 3^n / 2 (0 for n = 0)
  QuadRat y;    ///< (sqrt2+1)^n / 2 (0 for n = 0)
};

Breakpoint breakpoint(int n);

/// Linear piece number n of the envelope.  Piece 0 joins (0,0) to the first
/// breakpoint; piece n >= 1 covers [3^n/2, 3^(n+1)/2] with slope
/// (sqrt2/2)((sqrt2+1)/3)^n and intercept (sqrt2+1)^n (2-sqrt2)/4.
struct Segment {
  int index = 0;
  QuadRat slope;
  QuadRat intercept;
  Rational lo;
  Rational hi;
};

Segment segment(int n);

/// The unique segment whose domain contains x (>= 0); at a shared breakpoint
/// the left segment is returned (both give the same value there).
Segment segment_of(const Rational& x);

/// Exact envelope value at a rational x >= 0.
QuadRat value(const Rational& x);

/// Largest t with 3^t <= m, by integer comparison (never float logs).
int floor_log3(const Int& m);

/// Coefficient applied to floor_log3 in the upper-bound check: the silver
/// ratio sqrt2+1, or plain 1.
enum class BoundCoeff { silver, unit };

struct BoundViolation {
  Int m;
  QuadRat lhs;  ///< b(m)
  QuadRat rhs;  ///< value(m) + coeff * floor_log3(m)
};

struct BoundReport {
  Int lo;
  Int hi;
  BoundCoeff coeff = BoundCoeff::silver;
  std::vector<BoundViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// Exact check of b(m) <= value(m) + coeff * floor_log3(m) for every
/// m in [lo, hi], lo >= 2 (the bound fails at m = 1).  Violations are
/// reported in index order regardless of worker count.
BoundReport check_log_bound(const Int& lo, const Int& hi,
                            BoundCoeff coeff = BoundCoeff::silver, int workers = 1);

/// At the witness index m = (3^(n+1)+1)/2 the envelope equals
/// (sqrt2/(4*3^(n+1)) + 1/2)(sqrt2+1)^(n+1) exactly, and that value plus
/// n+1 strictly exceeds the interval maximum of b on [3^n, 3^(n+1)].
struct WitnessIdentity {
  int n = 0;
  Int m;
  QuadRat lhs;          ///< value(m)
  QuadRat closed_form;
  bool equal = false;
  bool exceeds_interval_max = false;
};

WitnessIdentity witness_identity(int n);

/// Difference value(3k+1) - (sqrt2+1)*value(k+1) across one envelope step.
/// On the aligned strip k in [(3^n+1)/2, (3^(n+1)-3)/2] the arguments fall
/// on consecutive segments (n+1 and n), the intercepts cancel, and the gap
/// equals -sqrt2((sqrt2+1)/3)^(n+1) independently of k: negative, and of
/// magnitude below 1 for n >= 1.
struct StepGap {
  int n = 0;
  Int k;
  QuadRat gap;
  QuadRat expected;
  bool equal = false;
  bool magnitude_below_one = false;
  bool negative = false;
};

Int step_gap_k_lo(int n);
Int step_gap_k_hi(int n);
StepGap step_gap(int n, const Int& k);

/// 2*value(x) - (2x)^silver_exponent() in double precision.  Zero at the
/// breakpoints, strictly negative between them for x > 3/2.
double power_law_gap(const Rational& x);

struct GapSample {
  double x = 0;
  double gap = 0;
};

struct GridScan {
  Rational lo;
  Rational hi;
  int count = 0;
  double max_gap = 0;
  std::vector<GapSample> samples;
};

/// power_law_gap on `count` equally spaced exact rational points of
/// [lo, hi] (endpoints included).
GridScan power_law_grid(const Rational& lo, const Rational& hi, int count,
                        int workers = 1);

/// Exact ratio b(m)/value(m) at the witness indices m = (3^(n+1)+1)/2 for
/// n in [n_lo, n_hi]; increases strictly toward 1.
struct EnvelopeRatio {
  int n = 0;
  Int m;
  double ratio = 0;
};

std::vector<EnvelopeRatio> envelope_ratio_scan(int n_lo, int n_hi);

}  // namespace silverstern::env
