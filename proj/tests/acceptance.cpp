// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures.  Heavy scans use all cores; every tolerance is pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "silverstern/envelope.hpp"
#include "silverstern/jsr.hpp"
#include "silverstern/linrep.hpp"
#include "silverstern/quadfield.hpp"
#include "silverstern/sequences.hpp"

namespace ss = silverstern;
using ss::Int;
using ss::QuadInt;
using ss::QuadRat;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, double seconds) {
  std::printf("[%2d] %s  %s (%.2fs)\n", id, ok ? "PASS" : "FAIL", what.c_str(), seconds);
  if (!ok) ++failures;
}

template <class Fn>
void criterion(int id, const std::string& what, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(id, ok, detail.empty() ? what : what + " — " + detail, seconds);
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

int main() {
  criterion(1, "b(2..9) match the reference values exactly and to 3 decimals",
            [](std::string&) {
              const std::vector<QuadInt> expected = {
                  {0, 1}, {1, 0}, {0, 2}, {3, 0}, {0, 1}, {3, 0}, {0, 2}, {1, 0}};
              const std::vector<double> decimals = {1.414, 1.0, 2.828, 3.0,
                                                    1.414, 3.0, 2.828, 1.0};
              bool ok = true;
              for (int m = 2; m <= 9; ++m) {
                const QuadInt v = ss::seq::northshield(m);
                ok = ok && v == expected[static_cast<std::size_t>(m - 2)];
                ok = ok && round3(ss::to_float(v)) ==
                               decimals[static_cast<std::size_t>(m - 2)];
              }
              return ok;
            });

  criterion(2, "interval maxima: scan = closed form for n <= 9, closed form to n = 40",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 9; ++n) {
                const auto brute = ss::seq::interval_max_bruteforce(n);
                const auto closed = ss::seq::interval_max_closed_form(n);
                if (brute.max_value != closed.max_value ||
                    brute.first_argmax != closed.first_argmax) {
                  ok = false;
                  detail = "scan and closed form disagree at n = " + std::to_string(n);
                }
              }
              for (int n = 1; n <= 40; ++n) {
                const auto closed = ss::seq::interval_max_closed_form(n);
                if (ss::seq::northshield(closed.first_argmax) != closed.max_value) {
                  ok = false;
                  detail = "closed form mismatches b at n = " + std::to_string(n);
                }
              }
              return ok;
            });

  criterion(3, "upper bound b(m) <= envelope(m) + (sqrt2+1)*floor(log3 m) on [2, 3^9]",
            [](std::string& detail) {
              const auto report =
                  ss::env::check_log_bound(2, 19683, ss::env::BoundCoeff::silver, 0);
              detail = std::to_string(report.violations.size()) + " violations";
              return report.pass();
            });

  criterion(4, "witness identity holds exactly and exceeds the interval maximum, n = 1..12",
            [](std::string&) {
              bool ok = true;
              for (int n = 1; n <= 12; ++n) {
                const auto w = ss::env::witness_identity(n);
                ok = ok && w.equal && w.exceeds_interval_max;
              }
              return ok;
            });

  criterion(5,
            "step gap equals -sqrt2((sqrt2+1)/3)^(n+1) exactly, k-independent, "
            "|gap| < 1 (sign negative, not the positive unit interval)",
            [](std::string& detail) {
              std::mt19937_64 rng(20240801u);
              bool ok = true;
              bool all_negative = true;
              for (int n = 1; n <= 10; ++n) {
                const Int k_lo = ss::env::step_gap_k_lo(n);
                const Int k_hi = ss::env::step_gap_k_hi(n);
                const auto span = (k_hi - k_lo).convert_to<std::uint64_t>() + 1;
                const QuadRat reference = ss::env::step_gap(n, k_lo).gap;
                for (int s = 0; s < 20; ++s) {
                  const Int k = k_lo + Int(rng() % span);
                  const auto g = ss::env::step_gap(n, k);
                  ok = ok && g.equal && g.magnitude_below_one && g.gap == reference;
                  all_negative = all_negative && g.negative;
                }
              }
              detail = all_negative ? "every gap is negative, magnitude below 1"
                                    : "unexpected positive gap";
              return ok && all_negative;
            });

  criterion(6, "power-law gap: 0 at breakpoints n = 1..12 (1e-9 relative), "
               "<= 1e-9 on a 10^4-point grid over [1.6, 3^10/2]",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 12; ++n) {
                const double gap = ss::env::power_law_gap(ss::env::breakpoint(n).x);
                const double scale =
                    ss::to_float(QuadRat(ss::pow(ss::kSilver, static_cast<unsigned>(n))));
                ok = ok && std::abs(gap) <= 1e-9 * scale;
              }
              const auto grid = ss::env::power_law_grid(
                  ss::Rational(8, 5), ss::Rational(Int(59049), Int(2)), 10000, 0);
              detail = "max grid gap " + std::to_string(grid.max_gap);
              return ok && grid.max_gap <= 1e-9;
            });

  criterion(7, "running max of 2b(m)/(2m)^alpha on [3^8, 3^12] within [1-1e-4, 1+0.02]; "
               "witness ratios reach 1 to 1e-5 (n=11) and 1e-8 (n=19)",
            [](std::string& detail) {
              const auto scan =
                  ss::seq::ratio_scan_northshield(6561, 531441, 0, 0, 531441);
              detail = "running max " + std::to_string(scan.running_max) + " at m=" +
                       std::to_string(scan.argmax);
              const bool in_bracket =
                  scan.running_max >= 1.0 - 1e-4 && scan.running_max <= 1.0 + 0.02;
              const bool witnesses = std::abs(ss::seq::witness_ratio(11) - 1.0) < 1e-5 &&
                                     std::abs(ss::seq::witness_ratio(19) - 1.0) < 1e-8;
              return in_bracket && witnesses;
            });

  criterion(8, "running max of a(n)/n^(log2 phi) on [2^16, 2^20] within [0.9580, 0.9595]",
            [](std::string& detail) {
              const auto scan = ss::seq::ratio_scan_stern(
                  std::uint64_t{1} << 16, std::uint64_t{1} << 20, 0, 0,
                  std::uint64_t{1} << 20);
              detail = "running max " + std::to_string(scan.running_max) + " at m=" +
                       std::to_string(scan.argmax);
              return scan.running_max >= 0.9580 && scan.running_max <= 0.9595;
            });

  criterion(9, "linear representations reproduce both sequences exactly "
               "(northshield to 3^7, stern to 2^12)",
            [](std::string& detail) {
              const auto ns = ss::linrep::verify_rep(
                  ss::linrep::builtin_northshield_rep(),
                  [](const Int& n) { return QuadRat(ss::seq::northshield(n)); }, 2187);
              const auto st = ss::linrep::verify_rep(
                  ss::linrep::builtin_stern_rep(),
                  [](const Int& n) { return QuadRat(QuadInt(ss::seq::stern(n), 0)); },
                  4096);
              if (ns) detail = "northshield mismatch at n = " + ns->n.str();
              if (st) detail = "stern mismatch at n = " + st->n.str();
              return !ns && !st;
            });

  criterion(10, "joint spectral radii: northshield bounds meet at sqrt2+1 (len 1, "
                "certified); stern lower = phi at len 2 with witness [0 1]; "
                "stern upper at len 16 within [phi, 1.65]",
            [](std::string& detail) {
              const double silver = std::sqrt(2.0) + 1.0;
              const double phi = (1.0 + std::sqrt(5.0)) / 2.0;

              const auto ns_set = ss::jsr::matrix_set(ss::linrep::builtin_northshield_rep());
              const auto ns = ss::jsr::bounds(ns_set, 1, 1);
              const auto cert = ss::jsr::finiteness_check(ns_set, ns.lower_witness, ns, 1e-9);
              const bool ns_ok = std::abs(ns.lower - silver) <= 1e-9 &&
                                 std::abs(ns.upper - silver) <= 1e-9 &&
                                 ns.lower_witness == std::vector<int>{1} && cert.certified;

              const auto st_set = ss::jsr::matrix_set(ss::linrep::builtin_stern_rep());
              const auto lower = ss::jsr::lower_bound(st_set, 2);
              const double b16 = ss::jsr::upper_bound(st_set, 16);
              const bool st_ok = std::abs(lower.value - phi) <= 1e-9 &&
                                 lower.witness == std::vector<int>{0, 1} &&
                                 b16 >= phi && b16 <= 1.65;
              detail = "stern upper(16) = " + std::to_string(b16);
              return ns_ok && st_ok;
            });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
