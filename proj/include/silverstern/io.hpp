#pragma once

#include "silverstern/envelope.hpp"
#include "silverstern/json_values.hpp"
#include "silverstern/jsr.hpp"
#include "silverstern/linrep.hpp"
#include "silverstern/sequences.hpp"

#include <string>
#include <utility>
#include <vector>

namespace silverstern {

// CSV emitters produce a header row and "\n" line endings with %.12g float
// formatting, byte-for-byte deterministic for fixed inputs.

std::string csv(const seq::RatioScan& scan);
json json_of(const seq::RatioScan& scan);

struct IntervalRow {
  seq::IntervalMax brute;   // n = 0 when not computed
  seq::IntervalMax closed;  // n = 0 when not computed
  bool agree = true;
};

std::string csv(const std::vector<IntervalRow>& rows);
json json_of(const std::vector<IntervalRow>& rows);
std::string text(const std::vector<IntervalRow>& rows);

std::string csv(const env::GridScan& scan);
json json_of(const env::GridScan& scan);

json json_of(const env::BoundReport& report);
std::string text(const env::BoundReport& report);
std::string csv(const env::BoundReport& report);

json json_of(const env::WitnessIdentity& w);
json json_of(const env::StepGap& g);

json json_of(const jsr::Bounds& b);
json json_of(const jsr::FinitenessReport& r);
std::string csv_convergence(const std::vector<std::pair<int, double>>& table);

std::string format_word(const std::vector<int>& word);

}  // namespace silverstern
