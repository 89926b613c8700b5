#include "silverstern/sequences.hpp"

#include "silverstern/errors.hpp"
#include "silverstern/parallel.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace silverstern::seq {

namespace mp = boost::multiprecision;

double silver_exponent() {
  static const double value = std::log(std::sqrt(2.0) + 1.0) / std::log(3.0);
  return value;
}

double golden_exponent() {
  static const double value = std::log((1.0 + std::sqrt(5.0)) / 2.0) / std::log(2.0);
  return value;
}

std::uint64_t stern(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t lo = 0, hi = 1;  // (a(prefix), a(prefix+1))
  for (int i = std::bit_width(n) - 1; i >= 0; --i) {
    if ((n >> i) & 1u)
      lo += hi;  // prefix -> 2*prefix + 1
    else
      hi += lo;  // prefix -> 2*prefix
  }
  return lo;
}

Int stern(const Int& n) {
  if (n < 0) throw std::invalid_argument("stern: negative index");
  if (n == 0) return 0;
  Int lo = 0, hi = 1;
  for (int i = static_cast<int>(mp::msb(n)); i >= 0; --i) {
    if (mp::bit_test(n, i))
      lo += hi;
    else
      hi += lo;
  }
  return lo;
}

QuadInt northshield(const Int& n) {
  if (n < 0) throw std::invalid_argument("northshield: negative index");
  std::vector<int> digits;  // ternary, least significant first
  for (Int m = n; m > 0; m /= 3) digits.push_back((m % 3).convert_to<int>());
  QuadInt lo{0, 0}, hi{1, 0};  // (b(prefix), b(prefix+1))
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    switch (*it) {
      case 0:
        hi = mul_sqrt2(lo) + hi;
        break;
      case 1: {
        QuadInt next_lo = mul_sqrt2(lo) + hi;
        hi = lo + mul_sqrt2(hi);
        lo = std::move(next_lo);
        break;
      }
      default:
        lo = lo + mul_sqrt2(hi);
        break;
    }
  }
  return lo;
}

IntervalMax interval_max_bruteforce(int n, int cap) {
  if (n < 1) throw std::invalid_argument("interval_max_bruteforce: n must be >= 1");
  if (n > cap)
    throw BudgetError("interval_max_bruteforce: n = " + std::to_string(n) +
                      " exceeds the brute-force cap " + std::to_string(cap));
  const Int lo = mp::pow(Int(3), static_cast<unsigned>(n - 1));
  const Int hi = lo * 3;
  IntervalMax out{n, QuadInt{0, 0}, lo};
  for (Int m = lo; m <= hi; ++m) {
    QuadInt v = northshield(m);
    if (v > out.max_value) {  // strict, so ties keep the least index
      out.max_value = std::move(v);
      out.first_argmax = m;
    }
  }
  return out;
}

IntervalMax interval_max_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("interval_max_closed_form: n must be >= 1");
  const QuadInt p = pow(kSilver, static_cast<unsigned>(n));
  QuadInt max_value = (n % 2 == 0) ? QuadInt{p.a, 0} : QuadInt{0, p.b};
  Int argmax = (mp::pow(Int(3), static_cast<unsigned>(n)) + 1) / 2;
  return {n, std::move(max_value), std::move(argmax)};
}

namespace {

struct ChunkMax {
  double max = -1.0;
  std::uint64_t argmax = 0;
  std::vector<RatioSample> samples;
};

template <class RatioFn>
RatioScan run_ratio_scan(std::uint64_t lo, std::uint64_t hi, std::uint64_t decimation,
                         int workers, std::uint64_t cap, double exponent, RatioFn ratio,
                         const char* name) {
  if (lo < 2 || lo > hi)
    throw std::invalid_argument(std::string(name) + ": need 2 <= lo <= hi");
  if (hi > cap)
    throw BudgetError(std::string(name) + ": hi = " + std::to_string(hi) +
                      " exceeds the scan cap " + std::to_string(cap));

  auto chunk = [&](std::uint64_t clo, std::uint64_t chi) {
    ChunkMax local;
    for (std::uint64_t m = clo; m <= chi; ++m) {
      const double r = ratio(m);
      if (r > local.max) {
        local.max = r;
        local.argmax = m;
      }
      if (decimation > 0 && (m - lo) % decimation == 0) local.samples.push_back({m, r});
    }
    return local;
  };

  RatioScan scan;
  scan.lo = lo;
  scan.hi = hi;
  scan.exponent = exponent;
  scan.running_max = -1.0;
  for (const ChunkMax& part : detail::chunked<ChunkMax>(lo, hi, workers, chunk)) {
    if (part.max > scan.running_max) {  // strict: least index wins ties
      scan.running_max = part.max;
      scan.argmax = part.argmax;
    }
    scan.samples.insert(scan.samples.end(), part.samples.begin(), part.samples.end());
  }
  return scan;
}

}  // namespace

RatioScan ratio_scan_northshield(std::uint64_t lo, std::uint64_t hi, std::uint64_t decimation,
                                 int workers, std::uint64_t cap) {
  const double alpha = silver_exponent();
  return run_ratio_scan(
      lo, hi, decimation, workers, cap, alpha,
      [alpha](std::uint64_t m) {
        return 2.0 * to_float(northshield(Int(m))) /
               std::pow(2.0 * static_cast<double>(m), alpha);
      },
      "ratio_scan_northshield");
}

RatioScan ratio_scan_stern(std::uint64_t lo, std::uint64_t hi, std::uint64_t decimation,
                           int workers, std::uint64_t cap) {
  const double beta = golden_exponent();
  return run_ratio_scan(
      lo, hi, decimation, workers, cap, beta,
      [beta](std::uint64_t m) {
        return static_cast<double>(stern(m)) / std::pow(static_cast<double>(m), beta);
      },
      "ratio_scan_stern");
}

Int witness_index(int n) {
  if (n < 1) throw std::invalid_argument("witness_index: n must be >= 1");
  return (mp::pow(Int(3), static_cast<unsigned>(n + 1)) + 1) / 2;
}

double witness_ratio(int n) {
  const IntervalMax im = interval_max_closed_form(n + 1);
  const double b = to_float(im.max_value);
  const double m = im.first_argmax.convert_to<double>();
  return 2.0 * b / std::pow(2.0 * m, silver_exponent());
}

}  // namespace silverstern::seq
