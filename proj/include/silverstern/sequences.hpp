#pragma once

#include "silverstern/quadfield.hpp"

#include <cstdint>
#include <vector>

namespace silverstern::seq {

/// log base 3 of sqrt(2)+1, the growth exponent of the running maximum of
/// the northshield sequence.
double silver_exponent();

/// log base 2 of the golden ratio, the growth exponent of the running
/// maximum of the stern sequence.
double golden_exponent();

/// Stern's diatomic sequence: a(0)=0, a(1)=1, a(2n)=a(n),
/// a(2n+1)=a(n)+a(n+1).  Evaluated in O(log n) by descending the binary
/// digits of n while carrying the pair (a(m), a(m+1)).
std::uint64_t stern(std::uint64_t n);
Int stern(const Int& n);

/// Northshield's Z[sqrt(2)] analogue: b(0)=0, b(1)=1, b(3n)=b(n),
/// b(3n+1)=sqrt2*b(n)+b(n+1), b(3n+2)=b(n)+sqrt2*b(n+1).  Evaluated in
/// O(log n) by descending the ternary digits of n with the pair
/// (b(m), b(m+1)); exact for any index size.
QuadInt northshield(const Int& n);

/// Maximum of b over the interval [3^(n-1), 3^n], with the least index
/// attaining it.
struct IntervalMax {
  int n = 0;
  QuadInt max_value;
  Int first_argmax;
};

inline constexpr int kDefaultIntervalCap = 9;

/// Exhaustive exact scan of [3^(n-1), 3^n].  Refuses n beyond `cap`.
IntervalMax interval_max_bruteforce(int n, int cap = kDefaultIntervalCap);

/// Closed form: the maximum is ((sqrt2+1)^n + (sqrt2-1)^n)/2 (an integer for
/// even n, an integer multiple of sqrt2 for odd n), first attained at
/// (3^n + 1)/2.
IntervalMax interval_max_closed_form(int n);

struct RatioSample {
  std::uint64_t index = 0;
  double ratio = 0;
};

struct RatioScan {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  double exponent = 0;
  double running_max = 0;
  std::uint64_t argmax = 0;  ///< least index attaining running_max
  std::vector<RatioSample> samples;
};

inline constexpr std::uint64_t kDefaultNorthshieldCap = 19683;        // 3^9
inline constexpr std::uint64_t kDefaultSternCap = std::uint64_t{1} << 20;

/// Running maximum of 2*b(m) / (2m)^silver_exponent() over [lo, hi],
/// 2 <= lo <= hi <= cap.  Records every `decimation`-th sample (0 = none).
/// The scan partitions across `workers` threads (0 = hardware concurrency)
/// with a deterministic least-index tie-break.
RatioScan ratio_scan_northshield(std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t decimation = 1, int workers = 1,
                                 std::uint64_t cap = kDefaultNorthshieldCap);

/// Running maximum of a(m) / m^golden_exponent() over [lo, hi].
RatioScan ratio_scan_stern(std::uint64_t lo, std::uint64_t hi,
                           std::uint64_t decimation = 1, int workers = 1,
                           std::uint64_t cap = kDefaultSternCap);

/// (3^(n+1) + 1)/2, the least index where b attains its maximum over
/// [3^n, 3^(n+1)].
Int witness_index(int n);

/// Ratio 2*b(m)/(2m)^silver_exponent() at m = witness_index(n), with b taken
/// from the interval-maximum closed form; no scan, so n up to ~40 is cheap.
double witness_ratio(int n);

}  // namespace silverstern::seq
