#include "silverstern/io.hpp"

#include <sstream>

namespace silverstern {

std::string csv(const seq::RatioScan& scan) {
  std::string out = "index,ratio\n";
  for (const auto& s : scan.samples)
    out += std::to_string(s.index) + "," + format_float(s.ratio) + "\n";
  return out;
}

json json_of(const seq::RatioScan& scan) {
  json samples = json::array();
  for (const auto& s : scan.samples) samples.push_back({{"index", s.index}, {"ratio", s.ratio}});
  return json{{"lo", scan.lo},
              {"hi", scan.hi},
              {"exponent", scan.exponent},
              {"running_max", scan.running_max},
              {"argmax", scan.argmax},
              {"samples", std::move(samples)}};
}

namespace {

const seq::IntervalMax& row_source(const IntervalRow& row) {
  return row.closed.n != 0 ? row.closed : row.brute;
}

}  // namespace

std::string csv(const std::vector<IntervalRow>& rows) {
  std::string out = "n,max_a,max_b,argmax\n";
  for (const auto& row : rows) {
    const auto& r = row_source(row);
    out += std::to_string(r.n) + "," + r.max_value.a.str() + "," + r.max_value.b.str() +
           "," + r.first_argmax.str() + "\n";
  }
  return out;
}

json json_of(const std::vector<IntervalRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    const auto& r = row_source(row);
    json entry{{"n", r.n},
               {"max", json_of(r.max_value)},
               {"max_float", to_float(r.max_value)},
               {"argmax", json_of(r.first_argmax)}};
    if (row.brute.n != 0 && row.closed.n != 0) entry["agree"] = row.agree;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string text(const std::vector<IntervalRow>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    const auto& r = row_source(row);
    out << r.n << "  max " << to_string(r.max_value) << " (" << format_float(to_float(r.max_value))
        << ") at m = " << r.first_argmax.str();
    if (row.brute.n != 0 && row.closed.n != 0)
      out << (row.agree ? "  [scan and closed form agree]"
                        : "  [scan and closed form DISAGREE]");
    out << "\n";
  }
  return out.str();
}

std::string csv(const env::GridScan& scan) {
  std::string out = "x,gap\n";
  for (const auto& s : scan.samples)
    out += format_float(s.x) + "," + format_float(s.gap) + "\n";
  return out;
}

json json_of(const env::GridScan& scan) {
  json samples = json::array();
  for (const auto& s : scan.samples) samples.push_back({{"x", s.x}, {"gap", s.gap}});
  return json{{"lo", scan.lo.convert_to<double>()},
              {"hi", scan.hi.convert_to<double>()},
              {"count", scan.count},
              {"max_gap", scan.max_gap},
              {"samples", std::move(samples)}};
}

namespace {

const char* coeff_name(env::BoundCoeff c) {
  return c == env::BoundCoeff::silver ? "silver" : "unit";
}

const char* coeff_display(env::BoundCoeff c) {
  return c == env::BoundCoeff::silver ? "(√2+1)" : "1";
}

}  // namespace

json json_of(const env::BoundReport& report) {
  json violations = json::array();
  std::size_t shown = 0;
  for (const auto& v : report.violations) {
    if (shown++ == 100) break;  // first 100 carry the exact values
    violations.push_back(
        {{"m", json_of(v.m)}, {"lhs", json_of(v.lhs)}, {"rhs", json_of(v.rhs)}});
  }
  return json{{"lo", json_of(report.lo)},
              {"hi", json_of(report.hi)},
              {"coefficient", coeff_name(report.coeff)},
              {"violation_count", report.violations.size()},
              {"violations", std::move(violations)},
              {"pass", report.pass()}};
}

std::string text(const env::BoundReport& report) {
  std::ostringstream out;
  out << "bound check on [" << report.lo.str() << ", " << report.hi.str()
      << "] with coefficient " << coeff_display(report.coeff) << ": ";
  if (report.pass()) {
    out << "pass (0 violations)\n";
    return out.str();
  }
  out << report.violations.size() << " violation(s)\n";
  std::size_t shown = 0;
  for (const auto& v : report.violations) {
    if (shown++ == 100) {
      out << "  ...\n";
      break;
    }
    out << "  m = " << v.m.str() << ": b(m) = " << to_string(v.lhs) << " > "
        << to_string(v.rhs) << "\n";
  }
  return out.str();
}

std::string csv(const env::BoundReport& report) {
  std::string out = "m,lhs,rhs\n";
  for (const auto& v : report.violations)
    out += v.m.str() + "," + to_string(v.lhs) + "," + to_string(v.rhs) + "\n";
  return out;
}

json json_of(const env::WitnessIdentity& w) {
  return json{{"n", w.n},
              {"m", json_of(w.m)},
              {"value", json_of(w.lhs)},
              {"closed_form", json_of(w.closed_form)},
              {"equal", w.equal},
              {"exceeds_interval_max", w.exceeds_interval_max}};
}

json json_of(const env::StepGap& g) {
  return json{{"n", g.n},
              {"k", json_of(g.k)},
              {"gap", json_of(g.gap)},
              {"expected", json_of(g.expected)},
              {"equal", g.equal},
              {"magnitude_below_one", g.magnitude_below_one},
              {"negative", g.negative}};
}

json json_of(const jsr::Bounds& b) {
  return json{{"lower", b.lower},
              {"upper", b.upper},
              {"lower_witness", b.lower_witness},
              {"lower_len", b.lower_len},
              {"upper_len", b.upper_len}};
}

json json_of(const jsr::FinitenessReport& r) {
  return json{{"word", r.word},
              {"radius_root", r.radius_root},
              {"bounds", json_of(r.bounds)},
              {"gap_to_upper", r.gap_to_upper},
              {"certified", r.certified},
              {"tolerance", r.tolerance}};
}

std::string csv_convergence(const std::vector<std::pair<int, double>>& table) {
  std::string out = "len,upper\n";
  for (const auto& [len, upper] : table)
    out += std::to_string(len) + "," + format_float(upper) + "\n";
  return out;
}

std::string format_word(const std::vector<int>& word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(word[i]);
  }
  return out + "]";
}

}  // namespace silverstern
