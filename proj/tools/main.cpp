// silverstern: exact analysis of Stern-type digital sequences over Z[sqrt(2)].
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 cap/budget exceeded.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "silverstern/envelope.hpp"
#include "silverstern/errors.hpp"
#include "silverstern/io.hpp"
#include "silverstern/jsr.hpp"
#include "silverstern/linrep.hpp"
#include "silverstern/quadfield.hpp"
#include "silverstern/sequences.hpp"

namespace ss = silverstern;
using ss::Int;
using ss::Rational;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 3;

Int parse_int(const std::string& text, const std::string& what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw ss::ParseError(what + ": '" + text + "' is not an integer");
  }
}

// Accepts "p", "p/q", and decimal forms like "1.6", all exactly.
Rational parse_rational(const std::string& text, const std::string& what) {
  const auto bad = [&] { return ss::ParseError(what + ": '" + text + "' is not a rational"); };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Int num = parse_int(text.substr(0, slash), what);
    const Int den = parse_int(text.substr(slash + 1), what);
    if (den == 0) throw bad();
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
      throw bad();
    const bool negative = !whole.empty() && whole[0] == '-';
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Int num = parse_int(whole.empty() || whole == "-" ? whole + "0" : whole, what) * den;
    const Int tail(frac);
    num += negative ? -tail : tail;
    return Rational(num, den);
  }
  return Rational(parse_int(text, what));
}

std::uint64_t to_u64(const Int& v, const std::string& what) {
  if (v < 0 || v > Int(std::numeric_limits<std::uint64_t>::max()))
    throw ss::ParseError(what + ": out of range");
  return v.convert_to<std::uint64_t>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ss::ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << payload;
}

struct OutputOptions {
  std::string format = "text";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opts.path, "Write output to a file instead of stdout");
}

std::string float3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// ---------------------------------------------------------------------------
// eval

struct EvalOptions {
  std::string seq;
  std::string index;
};

int run_eval(const EvalOptions& opt) {
  const Int n = parse_int(opt.index, "n");
  if (n < 0) throw ss::ParseError("n: must be nonnegative");
  if (opt.seq == "stern") {
    std::cout << ss::seq::stern(n).str() << "\n";
    return kExitPass;
  }
  ss::QuadRat v;
  if (opt.seq == "northshield")
    v = ss::QuadRat(ss::seq::northshield(n));
  else
    v = ss::linrep::eval(ss::linrep::load_rep(read_file(opt.seq)), n);
  std::cout << ss::to_string(v) << " (" << float3(ss::to_float(v)) << ")\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// scan

struct ScanOptions {
  std::string seq;
  std::string lo, hi;
  std::uint64_t decimation = 1;
  std::uint64_t cap = 0;  // 0: per-sequence default
  int workers = 0;
  OutputOptions output;
};

int run_scan(const ScanOptions& opt) {
  const std::uint64_t lo = to_u64(parse_int(opt.lo, "lo"), "lo");
  const std::uint64_t hi = to_u64(parse_int(opt.hi, "hi"), "hi");
  ss::seq::RatioScan scan;
  if (opt.seq == "northshield") {
    const std::uint64_t cap = opt.cap ? opt.cap : ss::seq::kDefaultNorthshieldCap;
    scan = ss::seq::ratio_scan_northshield(lo, hi, opt.decimation, opt.workers, cap);
  } else if (opt.seq == "stern") {
    const std::uint64_t cap = opt.cap ? opt.cap : ss::seq::kDefaultSternCap;
    scan = ss::seq::ratio_scan_stern(lo, hi, opt.decimation, opt.workers, cap);
  } else {
    throw ss::ParseError("scan: sequence must be 'stern' or 'northshield'");
  }

  const std::string summary = "running max " + ss::format_float(scan.running_max) +
                              " at m=" + std::to_string(scan.argmax) + " over [" +
                              std::to_string(scan.lo) + ", " + std::to_string(scan.hi) +
                              "] exponent " + ss::format_float(scan.exponent) + "\n";
  if (opt.output.format == "csv") {
    write_output(opt.output.path, ss::csv(scan));
    std::cerr << summary;
  } else if (opt.output.format == "json") {
    write_output(opt.output.path, ss::json_of(scan).dump(2) + "\n");
  } else {
    write_output(opt.output.path, summary);
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string check;
  std::string lo = "2";
  std::string hi = "19683";  // 3^9
  std::string coeff = "silver";
  int n_lo = 1;
  int n_hi = 0;  // 0: per-check default
  int grid = 10000;
  std::string x_lo = "1.6";
  std::string x_hi = "59049/2";  // 3^10 / 2
  int samples = 20;
  std::uint64_t seed = 20240801;
  double tol = 1e-5;
  int workers = 0;
  OutputOptions output;
};

int verify_bound(const VerifyOptions& opt) {
  const Int lo = parse_int(opt.lo, "lo");
  const Int hi = parse_int(opt.hi, "hi");
  std::vector<ss::env::BoundCoeff> coeffs;
  if (opt.coeff == "silver" || opt.coeff == "both")
    coeffs.push_back(ss::env::BoundCoeff::silver);
  if (opt.coeff == "unit" || opt.coeff == "both")
    coeffs.push_back(ss::env::BoundCoeff::unit);
  if (coeffs.empty()) throw ss::ParseError("coeff: must be silver, unit, or both");

  bool ok = true;
  std::string text_out;
  ss::json json_out = ss::json::array();
  std::string csv_out;
  for (const auto coeff : coeffs) {
    const auto report = ss::env::check_log_bound(lo, hi, coeff, opt.workers);
    ok = ok && report.pass();
    text_out += ss::text(report);
    json_out.push_back(ss::json_of(report));
    csv_out += ss::csv(report);
  }
  if (opt.output.format == "json")
    write_output(opt.output.path, json_out.dump(2) + "\n");
  else if (opt.output.format == "csv")
    write_output(opt.output.path, csv_out);
  else
    write_output(opt.output.path, text_out);
  return ok ? kExitPass : kExitFail;
}

int verify_ratio_limit(const VerifyOptions& opt) {
  const int n_hi = opt.n_hi ? opt.n_hi : 20;
  bool ok = true;
  std::ostringstream out;
  ss::json identities = ss::json::array();
  for (int n = opt.n_lo; n <= n_hi; ++n) {
    const auto w = ss::env::witness_identity(n);
    ok = ok && w.equal && w.exceeds_interval_max;
    identities.push_back(ss::json_of(w));
    out << "n=" << n << " witness m=" << w.m.str() << ": closed form "
        << (w.equal ? "matches exactly" : "MISMATCH") << ", exceeds interval max: "
        << (w.exceeds_interval_max ? "yes" : "NO") << "\n";
  }

  const auto rows = ss::env::envelope_ratio_scan(opt.n_lo, n_hi);
  ss::json ratios = ss::json::array();
  double previous = 0.0;
  bool monotone = true;
  for (const auto& row : rows) {
    monotone = monotone && row.ratio > previous && row.ratio < 1.0;
    previous = row.ratio;
    ratios.push_back({{"n", row.n},
                      {"m", ss::json_of(row.m)},
                      {"ratio", row.ratio},
                      {"witness_ratio", ss::seq::witness_ratio(row.n)}});
    out << "n=" << row.n << " b/envelope " << ss::format_float(row.ratio)
        << "  scaled-power ratio " << ss::format_float(ss::seq::witness_ratio(row.n))
        << "\n";
  }
  const double final_gap = 1.0 - rows.back().ratio;
  const bool close = final_gap < opt.tol;
  ok = ok && monotone && close;
  out << "ratios increase toward 1: " << (monotone ? "yes" : "NO") << "; final gap "
      << ss::format_float(final_gap) << (close ? " < " : " >= ")
      << ss::format_float(opt.tol) << "\n"
      << (ok ? "pass" : "FAIL") << "\n";

  if (opt.output.format == "json") {
    ss::json doc{{"identities", std::move(identities)},
                 {"ratios", std::move(ratios)},
                 {"monotone", monotone},
                 {"final_gap", final_gap},
                 {"pass", ok}};
    write_output(opt.output.path, doc.dump(2) + "\n");
  } else {
    write_output(opt.output.path, out.str());
  }
  return ok ? kExitPass : kExitFail;
}

int verify_power_law(const VerifyOptions& opt) {
  const int n_hi = opt.n_hi ? opt.n_hi : 12;
  bool ok = true;
  std::ostringstream out;
  ss::json breakpoints = ss::json::array();
  for (int n = opt.n_lo; n <= n_hi; ++n) {
    const auto bp = ss::env::breakpoint(n);
    const double gap = ss::env::power_law_gap(bp.x);
    const double scale = ss::to_float(ss::QuadRat(ss::pow(ss::kSilver, static_cast<unsigned>(n))));
    const bool good = std::abs(gap) <= 1e-9 * scale;
    ok = ok && good;
    breakpoints.push_back({{"n", n}, {"gap", gap}, {"pass", good}});
    out << "breakpoint n=" << n << ": gap " << ss::format_float(gap)
        << (good ? "" : "  EXCEEDS TOLERANCE") << "\n";
  }

  const Rational x_lo = parse_rational(opt.x_lo, "x-lo");
  const Rational x_hi = parse_rational(opt.x_hi, "x-hi");
  const auto grid = ss::env::power_law_grid(x_lo, x_hi, opt.grid, opt.workers);
  const bool grid_ok = grid.max_gap <= 1e-9;
  ok = ok && grid_ok;
  out << "grid of " << grid.count << " points on [" << ss::format_float(ss::to_float(ss::QuadRat(x_lo)))
      << ", " << ss::format_float(ss::to_float(ss::QuadRat(x_hi))) << "]: max gap "
      << ss::format_float(grid.max_gap) << (grid_ok ? " <= 1e-09" : " EXCEEDS 1e-09")
      << "\n"
      << (ok ? "pass" : "FAIL") << "\n";

  if (opt.output.format == "csv") {
    write_output(opt.output.path, ss::csv(grid));
    std::cerr << (ok ? "pass\n" : "FAIL\n");
  } else if (opt.output.format == "json") {
    ss::json doc{{"breakpoints", std::move(breakpoints)},
                 {"grid", ss::json_of(grid)},
                 {"pass", ok}};
    write_output(opt.output.path, doc.dump(2) + "\n");
  } else {
    write_output(opt.output.path, out.str());
  }
  return ok ? kExitPass : kExitFail;
}

int verify_step_gap(const VerifyOptions& opt) {
  const int n_hi = opt.n_hi ? opt.n_hi : 10;
  std::mt19937_64 rng(opt.seed);
  bool ok = true;
  std::ostringstream out;
  ss::json checks = ss::json::array();
  for (int n = opt.n_lo; n <= n_hi; ++n) {
    const Int k_lo = ss::env::step_gap_k_lo(n);
    const Int k_hi = ss::env::step_gap_k_hi(n);
    const std::uint64_t span = (k_hi - k_lo).convert_to<std::uint64_t>() + 1;
    bool all_equal = true, first = true;
    ss::QuadRat gap;
    for (int s = 0; s < opt.samples; ++s) {
      const Int k = k_lo + Int(rng() % span);
      const auto g = ss::env::step_gap(n, k);
      ok = ok && g.equal && g.magnitude_below_one && g.negative;
      all_equal = all_equal && g.equal;
      if (first) {
        gap = g.gap;
        first = false;
      } else {
        all_equal = all_equal && g.gap == gap;
      }
      checks.push_back(ss::json_of(g));
    }
    out << "n=" << n << ": gap " << ss::to_string(gap) << " ("
        << ss::format_float(ss::to_float(gap)) << "), " << opt.samples
        << " sampled k in [" << k_lo.str() << ", " << k_hi.str() << "]"
        << (all_equal ? ", k-independent" : ", VARIES WITH k") << "\n";
    ok = ok && all_equal;
  }
  out << "note: the gap is negative with magnitude below 1; a positive value in "
         "(0,1) would have the wrong sign\n"
      << (ok ? "pass" : "FAIL") << "\n";

  if (opt.output.format == "json") {
    ss::json doc{{"checks", std::move(checks)},
                 {"sign_note",
                  "gap is negative with magnitude below 1 on every strip"},
                 {"pass", ok}};
    write_output(opt.output.path, doc.dump(2) + "\n");
  } else {
    write_output(opt.output.path, out.str());
  }
  return ok ? kExitPass : kExitFail;
}

int verify_table(const VerifyOptions& opt) {
  // Reference values for m = 2..9 in both coefficient variants, plus the
  // linear extension of the first sloped piece for comparison.
  std::ostringstream out;
  ss::json rows = ss::json::array();
  bool ok = true;
  const ss::env::Segment first = ss::env::segment(1);
  out << "m    b(m)      envelope+log3    envelope+silver*log3    segment-1 "
         "extension+log3\n";
  for (int m = 2; m <= 9; ++m) {
    const ss::QuadRat b(ss::seq::northshield(m));
    const int t = ss::env::floor_log3(m);
    const ss::QuadRat h = ss::env::value(Rational(m));
    const ss::QuadRat unit = h + ss::QuadRat(ss::QuadInt(t, 0));
    const ss::QuadRat silver = h + ss::QuadRat(ss::QuadInt(t, t));
    const ss::QuadRat extension =
        first.slope * ss::QuadRat(ss::QuadInt(m, 0)) + first.intercept +
        ss::QuadRat(ss::QuadInt(t, 0));
    ok = ok && b <= unit && b <= silver;
    out << m << "    " << float3(ss::to_float(b)) << "     " << float3(ss::to_float(unit))
        << "            " << float3(ss::to_float(silver)) << "                  "
        << float3(ss::to_float(extension)) << "\n";
    rows.push_back({{"m", m},
                    {"b", ss::json_of(b)},
                    {"bound_unit", ss::json_of(unit)},
                    {"bound_silver", ss::json_of(silver)},
                    {"segment1_extension", ss::json_of(extension)},
                    {"holds_unit", b <= unit},
                    {"holds_silver", b <= silver}});
  }
  out << "note: for m >= 5 the segment-1 extension differs from the envelope "
         "(4.199 vs 4.143 at m=5); the envelope through the breakpoints is the "
         "definition used everywhere here\n";
  out << "both coefficient variants hold on [2, 9]: " << (ok ? "yes" : "NO") << "\n"
      << (ok ? "pass" : "FAIL") << "\n";

  if (opt.output.format == "json") {
    ss::json doc{{"rows", std::move(rows)},
                 {"note",
                  "for m >= 5 the segment-1 extension differs from the envelope"},
                 {"pass", ok}};
    write_output(opt.output.path, doc.dump(2) + "\n");
  } else {
    write_output(opt.output.path, out.str());
  }
  return ok ? kExitPass : kExitFail;
}

int run_verify(const VerifyOptions& opt) {
  if (opt.check == "2.2" || opt.check == "bound") return verify_bound(opt);
  if (opt.check == "2.3" || opt.check == "ratio") return verify_ratio_limit(opt);
  if (opt.check == "2.4" || opt.check == "power") return verify_power_law(opt);
  if (opt.check == "eq2.4" || opt.check == "gap") return verify_step_gap(opt);
  if (opt.check == "table1" || opt.check == "table") return verify_table(opt);
  throw ss::ParseError("verify: unknown check '" + opt.check +
                       "' (expected 2.2, 2.3, 2.4, eq2.4, or table1)");
}

// ---------------------------------------------------------------------------
// max

struct MaxOptions {
  int n_lo = 1;
  int n_hi = 1;
  std::string mode = "both";
  int cap = ss::seq::kDefaultIntervalCap;
  OutputOptions output;
};

int run_max(const MaxOptions& opt) {
  if (opt.n_lo < 1 || opt.n_lo > opt.n_hi)
    throw ss::ParseError("max: need 1 <= n_lo <= n_hi");
  std::vector<ss::IntervalRow> rows;
  bool agree = true;
  for (int n = opt.n_lo; n <= opt.n_hi; ++n) {
    ss::IntervalRow row;
    if (opt.mode == "brute" || opt.mode == "both")
      row.brute = ss::seq::interval_max_bruteforce(n, opt.cap);
    if (opt.mode == "closed" || opt.mode == "both")
      row.closed = ss::seq::interval_max_closed_form(n);
    if (opt.mode == "both") {
      row.agree = row.brute.max_value == row.closed.max_value &&
                  row.brute.first_argmax == row.closed.first_argmax;
      agree = agree && row.agree;
    }
    rows.push_back(std::move(row));
  }
  if (opt.output.format == "csv")
    write_output(opt.output.path, ss::csv(rows));
  else if (opt.output.format == "json")
    write_output(opt.output.path, ss::json_of(rows).dump(2) + "\n");
  else
    write_output(opt.output.path, ss::text(rows));
  return agree ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// jsr

struct JsrOptions {
  std::string set;
  int lower_len = 1;
  int upper_len = 1;
  std::uint64_t budget = ss::jsr::kDefaultLeafBudget;
  double tol = 1e-9;
  bool table = false;
  OutputOptions output;
};

ss::jsr::MatrixSet load_matrix_set(const std::string& name) {
  if (name == "stern") return ss::jsr::matrix_set(ss::linrep::builtin_stern_rep());
  if (name == "northshield")
    return ss::jsr::matrix_set(ss::linrep::builtin_northshield_rep());
  return ss::jsr::matrix_set(ss::linrep::load_rep(read_file(name)));
}

int run_jsr(const JsrOptions& opt) {
  const ss::jsr::MatrixSet set = load_matrix_set(opt.set);
  const ss::jsr::Bounds bounds =
      ss::jsr::bounds(set, opt.lower_len, opt.upper_len, opt.budget);
  const ss::jsr::FinitenessReport certificate =
      ss::jsr::finiteness_check(set, bounds.lower_witness, bounds, opt.tol);

  std::vector<std::pair<int, double>> table;
  if (opt.table)
    for (int len = 1; len <= opt.upper_len; ++len)
      table.emplace_back(len, ss::jsr::upper_bound(set, len, opt.budget, bounds.lower));

  if (opt.output.format == "json") {
    ss::json doc{{"bounds", ss::json_of(bounds)},
                 {"finiteness", ss::json_of(certificate)}};
    if (opt.table) {
      ss::json rows = ss::json::array();
      for (const auto& [len, upper] : table) rows.push_back({{"len", len}, {"upper", upper}});
      doc["convergence"] = std::move(rows);
    }
    write_output(opt.output.path, doc.dump(2) + "\n");
    return kExitPass;
  }
  if (opt.output.format == "csv") {
    write_output(opt.output.path,
                 opt.table ? ss::csv_convergence(table)
                           : "lower,upper,lower_witness,lower_len,upper_len\n" +
                                 ss::format_float(bounds.lower) + "," +
                                 ss::format_float(bounds.upper) + "," +
                                 ss::format_word(bounds.lower_witness) + "," +
                                 std::to_string(bounds.lower_len) + "," +
                                 std::to_string(bounds.upper_len) + "\n");
    return kExitPass;
  }
  std::ostringstream out;
  out << "lower bound " << ss::format_float(bounds.lower) << " with witness "
      << ss::format_word(bounds.lower_witness) << " (words up to length "
      << bounds.lower_len << ")\n"
      << "upper bound " << ss::format_float(bounds.upper) << " (all words of length "
      << bounds.upper_len << ")\n"
      << "finiteness witness " << ss::format_word(certificate.word) << ": radius root "
      << ss::format_float(certificate.radius_root) << ", gap to upper bound "
      << ss::format_float(certificate.gap_to_upper)
      << (certificate.certified ? " (certified within " : " (not certified at ")
      << ss::format_float(certificate.tolerance) << ")\n";
  if (opt.table) out << ss::csv_convergence(table);
  write_output(opt.output.path, out.str());
  return kExitPass;
}

// ---------------------------------------------------------------------------
// rep

struct RepOptions {
  std::string path;
  std::string oracle = "self";
  std::string limit = "1000";
  OutputOptions output;
};

int run_rep(const RepOptions& opt) {
  const ss::linrep::LinRep rep = ss::linrep::load_rep(read_file(opt.path));
  const Int limit = parse_int(opt.limit, "limit");

  std::optional<ss::linrep::Mismatch> mismatch;
  if (opt.oracle == "stern") {
    mismatch = ss::linrep::verify_rep(
        rep, [](const Int& n) { return ss::QuadRat(ss::QuadInt(ss::seq::stern(n), 0)); },
        limit);
  } else if (opt.oracle == "northshield") {
    mismatch = ss::linrep::verify_rep(
        rep, [](const Int& n) { return ss::QuadRat(ss::seq::northshield(n)); }, limit);
  } else if (opt.oracle == "self") {
    // Round-trip through the serialized form, then evaluate both copies.
    const ss::linrep::LinRep reloaded = ss::linrep::load_rep(ss::linrep::rep_to_json(rep));
    mismatch = ss::linrep::verify_rep(
        reloaded, [&](const Int& n) { return ss::linrep::eval(rep, n); }, limit);
  } else {
    throw ss::ParseError("rep: oracle must be self, stern, or northshield");
  }

  std::ostringstream out;
  out << "base " << rep.base << ", dimension " << rep.dim << "\n";
  if (mismatch) {
    out << "mismatch at n = " << mismatch->n.str() << ": representation gives "
        << ss::to_string(mismatch->got) << ", oracle gives "
        << ss::to_string(mismatch->expected) << "\n";
  } else {
    out << "pass: matches the '" << opt.oracle << "' oracle for all n < " << limit.str()
        << "\n";
  }
  if (opt.output.format == "json") {
    ss::json doc{{"base", rep.base}, {"dim", rep.dim}, {"oracle", opt.oracle},
                 {"limit", ss::json_of(limit)}, {"pass", !mismatch}};
    if (mismatch)
      doc["mismatch"] = {{"n", ss::json_of(mismatch->n)},
                         {"got", ss::json_of(mismatch->got)},
                         {"expected", ss::json_of(mismatch->expected)}};
    write_output(opt.output.path, doc.dump(2) + "\n");
  } else {
    write_output(opt.output.path, out.str());
  }
  return mismatch ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of Stern-type digital sequences over Z[√2]"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a sequence term exactly");
  eval_cmd->add_option("seq", eval_opt.seq,
                       "stern, northshield, or a representation JSON file")
      ->required();
  eval_cmd->add_option("n", eval_opt.index, "Index to evaluate")->required();

  ScanOptions scan_opt;
  auto* scan_cmd = app.add_subcommand("scan", "Scan the normalized growth ratio");
  scan_cmd->add_option("seq", scan_opt.seq, "stern or northshield")->required();
  scan_cmd->add_option("lo", scan_opt.lo, "Scan start (>= 2)")->required();
  scan_cmd->add_option("hi", scan_opt.hi, "Scan end (inclusive)")->required();
  scan_cmd->add_option("--decimation", scan_opt.decimation,
                       "Keep every Nth sample (0 = none)");
  scan_cmd->add_option("--cap", scan_opt.cap, "Scan cap override");
  scan_cmd->add_option("--workers", scan_opt.workers, "Worker threads (0 = all cores)");
  add_output_options(scan_cmd, scan_opt.output);

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification harness");
  verify_cmd->add_option("check", verify_opt.check, "2.2, 2.3, 2.4, eq2.4, or table1")
      ->required();
  verify_cmd->add_option("--lo", verify_opt.lo, "Range start (check 2.2)");
  verify_cmd->add_option("--hi", verify_opt.hi, "Range end (check 2.2)");
  verify_cmd->add_option("--coeff", verify_opt.coeff,
                         "Bound coefficient: silver, unit, or both (check 2.2)")
      ->check(CLI::IsMember({"silver", "unit", "both"}));
  verify_cmd->add_option("--n-lo", verify_opt.n_lo, "First index");
  verify_cmd->add_option("--n-hi", verify_opt.n_hi, "Last index (0 = default)");
  verify_cmd->add_option("--grid", verify_opt.grid, "Grid point count (check 2.4)");
  verify_cmd->add_option("--x-lo", verify_opt.x_lo, "Grid start (check 2.4)");
  verify_cmd->add_option("--x-hi", verify_opt.x_hi, "Grid end (check 2.4)");
  verify_cmd->add_option("--samples", verify_opt.samples,
                         "Random k values per strip (check eq2.4)");
  verify_cmd->add_option("--seed", verify_opt.seed, "Seed for sampled k (check eq2.4)");
  verify_cmd->add_option("--tol", verify_opt.tol, "Closeness tolerance (check 2.3)");
  verify_cmd->add_option("--workers", verify_opt.workers, "Worker threads (0 = all cores)");
  add_output_options(verify_cmd, verify_opt.output);

  MaxOptions max_opt;
  auto* max_cmd = app.add_subcommand("max", "Interval maxima of the northshield sequence");
  max_cmd->add_option("n_lo", max_opt.n_lo, "First interval exponent")->required();
  max_cmd->add_option("n_hi", max_opt.n_hi, "Last interval exponent")->required();
  max_cmd->add_option("mode", max_opt.mode, "brute, closed, or both")
      ->check(CLI::IsMember({"brute", "closed", "both"}));
  max_cmd->add_option("--cap", max_opt.cap, "Brute-force exponent cap");
  add_output_options(max_cmd, max_opt.output);

  JsrOptions jsr_opt;
  auto* jsr_cmd = app.add_subcommand("jsr", "Joint-spectral-radius bounds");
  jsr_cmd->add_option("set", jsr_opt.set,
                      "stern, northshield, or a representation JSON file")
      ->required();
  jsr_cmd->add_option("lower_len", jsr_opt.lower_len, "Max word length for the lower bound")
      ->required();
  jsr_cmd->add_option("upper_len", jsr_opt.upper_len, "Word length for the upper bound")
      ->required();
  jsr_cmd->add_option("--cap", jsr_opt.budget, "Leaf-product budget");
  jsr_cmd->add_option("--tol", jsr_opt.tol, "Certificate tolerance");
  jsr_cmd->add_flag("--table", jsr_opt.table, "Emit the upper-bound convergence table");
  add_output_options(jsr_cmd, jsr_opt.output);

  RepOptions rep_opt;
  auto* rep_cmd = app.add_subcommand("rep", "Load and verify a representation file");
  rep_cmd->add_option("path", rep_opt.path, "Representation JSON file")->required();
  rep_cmd->add_option("--oracle", rep_opt.oracle, "self, stern, or northshield");
  rep_cmd->add_option("--limit", rep_opt.limit, "Verify indices n < limit");
  add_output_options(rep_cmd, rep_opt.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_opt);
    if (scan_cmd->parsed()) return run_scan(scan_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
    if (max_cmd->parsed()) return run_max(max_opt);
    if (jsr_cmd->parsed()) return run_jsr(jsr_opt);
    if (rep_cmd->parsed()) return run_rep(rep_opt);
  } catch (const ss::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ss::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 2;
}
