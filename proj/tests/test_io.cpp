#include "silverstern/io.hpp"

#include <doctest.h>

#include "oracles.hpp"
#include "silverstern/errors.hpp"

using namespace silverstern;

TEST_CASE("integer json representation") {
  CHECK(json_of(Int(42)) == json(42));
  CHECK(json_of(Int(-7)) == json(-7));
  const Int wide = Int("123456789012345678901234567890");
  const json j = json_of(wide);
  CHECK(j.is_string());
  CHECK(int_from_json(j, "x") == wide);
  CHECK(int_from_json(json(42), "x") == 42);
  CHECK_THROWS_AS(int_from_json(json(1.5), "x"), ParseError);
  CHECK_THROWS_AS(int_from_json(json("12x"), "x"), ParseError);
}

TEST_CASE("quadrat json representation") {
  const QuadRat q(QuadInt{41, 29}, 2);
  const json j = json_of(q);
  CHECK(j["num"] == json::array({41, 29}));
  CHECK(j["den"] == 2);
  CHECK(quadrat_from_json(j, "q") == q);
  CHECK(quadrat_from_json(json(7), "q") == QuadRat(QuadInt{7, 0}));
  CHECK(quadrat_from_json(json::array({0, 1}), "q") == QuadRat(kSqrt2));
  CHECK(quadrat_from_json(json::parse(R"({"num": [3]})"), "q") == QuadRat(QuadInt{3, 0}));
  CHECK_THROWS_AS(quadrat_from_json(json::parse(R"({"den": 2})"), "q"), ParseError);
  CHECK_THROWS_AS(quadrat_from_json(json::parse(R"({"num": [1], "den": -2})"), "q"),
                  ParseError);
  CHECK_THROWS_AS(quadrat_from_json(json(true), "q"), ParseError);
}

TEST_CASE("ratio scan rendering") {
  const auto scan = seq::ratio_scan_northshield(5, 9, 2);
  const std::string text = csv(scan);
  CHECK(text.substr(0, 12) == "index,ratio\n");
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 samples
  CHECK(csv(scan) == text);  // byte-for-byte deterministic

  const json j = json_of(scan);
  CHECK(j["lo"] == 5);
  CHECK(j["hi"] == 9);
  CHECK(j["argmax"] == 5);
  CHECK(j["samples"].size() == 3);
}

TEST_CASE("interval table rendering") {
  std::vector<IntervalRow> rows;
  for (int n = 1; n <= 5; ++n) {
    IntervalRow row;
    row.closed = seq::interval_max_closed_form(n);
    rows.push_back(std::move(row));
  }
  CHECK(csv(rows) ==
        "n,max_a,max_b,argmax\n"
        "1,0,1,2\n"
        "2,3,0,5\n"
        "3,0,5,14\n"
        "4,17,0,41\n"
        "5,0,29,122\n");
  const json j = json_of(rows);
  CHECK(j.size() == 5);
  CHECK(j[4]["argmax"] == 122);
}

TEST_CASE("bound report rendering") {
  env::BoundReport pass{2, 9, env::BoundCoeff::silver, {}};
  CHECK(text(pass) == "bound check on [2, 9] with coefficient (√2+1): pass (0 violations)\n");
  CHECK(json_of(pass)["pass"] == true);

  env::BoundReport fail{2, 9, env::BoundCoeff::unit, {}};
  fail.violations.push_back({Int(4), QuadRat(QuadInt{0, 2}), QuadRat(QuadInt{1, 1}, 2)});
  const json j = json_of(fail);
  CHECK(j["pass"] == false);
  CHECK(j["violation_count"] == 1);
  CHECK(j["violations"][0]["m"] == 4);
  CHECK(text(fail).find("m = 4") != std::string::npos);
  CHECK(csv(fail) == "m,lhs,rhs\n4,2√2,(1 + √2)/2\n");
}

TEST_CASE("jsr rendering") {
  jsr::Bounds b{1.0, 2.0, {0, 1}, 2, 4};
  const json j = json_of(b);
  CHECK(j["lower"] == 1.0);
  CHECK(j["lower_witness"] == json::array({0, 1}));
  CHECK(format_word({0, 1}) == "[0 1]");
  CHECK(format_word({}) == "[]");
  CHECK(csv_convergence({{1, 2.0}, {2, 1.5}}) == "len,upper\n1,2\n2,1.5\n");
}

TEST_CASE("float formatting is stable") {
  CHECK(format_float(0.5) == "0.5");
  CHECK(format_float(2.0) == "2");
  CHECK(format_float(1.0 / 3.0) == "0.333333333333");
}
