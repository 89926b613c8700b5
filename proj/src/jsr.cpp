#include "silverstern/jsr.hpp"

#include "silverstern/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace silverstern::jsr {

namespace mp = boost::multiprecision;
using linrep::QMatrix;

namespace {

std::vector<double> shadow_of(const QMatrix& m) {
  std::vector<double> out(m.entries.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = to_float(m.entries[i]);
  return out;
}

double inf_norm(const std::vector<double>& m, int d) {
  double best = 0;
  for (int i = 0; i < d; ++i) {
    double row = 0;
    for (int j = 0; j < d; ++j) row += std::abs(m[static_cast<std::size_t>(i) * d + j]);
    if (row > best) best = row;
  }
  return best;
}

std::vector<double> mul(const std::vector<double>& x, const std::vector<double>& y, int d) {
  std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const double v = x[static_cast<std::size_t>(i) * d + k];
      if (v == 0) continue;
      for (int j = 0; j < d; ++j)
        out[static_cast<std::size_t>(i) * d + j] += v * y[static_cast<std::size_t>(k) * d + j];
    }
  return out;
}

std::vector<double> float_identity(int d) {
  std::vector<double> out(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i) * d + i] = 1.0;
  return out;
}

void check_budget(int k, int len, std::uint64_t budget, const char* name) {
  Int leaves = mp::pow(Int(k), static_cast<unsigned>(len));
  if (leaves > Int(budget))
    throw BudgetError(std::string(name) + ": " + std::to_string(k) + "^" +
                      std::to_string(len) + " = " + leaves.str() +
                      " words exceeds the budget " + std::to_string(budget));
}

}  // namespace

MatrixSet::MatrixSet(std::vector<QMatrix> matrices) {
  if (matrices.empty()) throw std::invalid_argument("MatrixSet: empty set");
  dim = matrices.front().dim;
  for (const QMatrix& m : matrices)
    if (m.dim != dim) throw std::invalid_argument("MatrixSet: mixed dimensions");
  exact = std::move(matrices);
  shadow.reserve(exact.size());
  for (const QMatrix& m : exact) shadow.push_back(shadow_of(m));
}

MatrixSet matrix_set(const linrep::LinRep& rep) { return MatrixSet(rep.matrices); }

QMatrix word_product(const MatrixSet& set, std::span<const int> word) {
  QMatrix product = QMatrix::identity(set.dim);
  for (int d : word) {
    if (d < 0 || d >= set.size())
      throw std::invalid_argument("word_product: digit " + std::to_string(d) +
                                  " out of range for a set of " +
                                  std::to_string(set.size()) + " matrices");
    product = product * set.exact[static_cast<std::size_t>(d)];
  }
  return product;
}

double spectral_radius(const QMatrix& m) {
  if (m.dim == 1) return std::abs(to_float(m.at(0, 0)));
  if (m.dim == 2) {
    const double t = to_float(m.at(0, 0) + m.at(1, 1));
    const double det = to_float(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));
    const double disc = t * t - 4.0 * det;
    if (disc >= 0) {
      const double r = std::sqrt(disc);
      return std::max(std::abs(t + r), std::abs(t - r)) / 2.0;
    }
    return std::sqrt(std::abs(det));  // conjugate pair: |lambda|^2 = det
  }
  return spectral_radius_float(shadow_of(m), m.dim);
}

double spectral_radius_float(std::vector<double> m, int dim) {
  // ||M^(2^j)||^(1/2^j) converges to the spectral radius for any
  // submultiplicative norm; square with rescaling until the log estimate
  // settles.
  double norm = inf_norm(m, dim);
  if (norm == 0) return 0;
  for (auto& e : m) e /= norm;
  double log_scale = std::log(norm);  // M^(2^j) = exp(log_scale) * m, ||m|| = 1
  double estimate = log_scale;
  for (int j = 1; j <= 80; ++j) {
    m = mul(m, m, dim);
    const double nb = inf_norm(m, dim);
    if (nb == 0) return 0;
    for (auto& e : m) e /= nb;
    log_scale = 2.0 * log_scale + std::log(nb);
    const double next = log_scale / std::ldexp(1.0, j);
    // Plateaus in the first few squarings are common (nilpotent blocks sit
    // at norm 1 until they vanish), so insist on a minimum power first.
    if (j >= 8 &&
        std::abs(next - estimate) <= 1e-12 * std::max(1.0, std::abs(next)))
      return std::exp(next);
    estimate = next;
  }
  throw std::runtime_error("spectral_radius: iteration cap exceeded");
}

LowerBound lower_bound(const MatrixSet& set, int max_len, std::uint64_t budget) {
  if (max_len < 1) throw std::invalid_argument("lower_bound: max_len must be >= 1");
  check_budget(set.size(), max_len, budget, "jsr lower bound");

  LowerBound best{-1.0, {}};
  std::vector<int> word;
  // Depth-first in lexicographic order, so keeping the first achiever
  // within the tie tolerance yields the lexicographically least witness.
  auto dfs = [&](auto&& self, const QMatrix& product, int depth) -> void {
    for (int d = 0; d < set.size(); ++d) {
      word.push_back(d);
      QMatrix p = product * set.exact[static_cast<std::size_t>(d)];
      const double v =
          std::pow(spectral_radius(p), 1.0 / static_cast<double>(word.size()));
      if (v > best.value + kTieTolerance) best = {v, word};
      if (depth + 1 < max_len) self(self, p, depth + 1);
      word.pop_back();
    }
  };
  dfs(dfs, QMatrix::identity(set.dim), 0);
  return best;
}

double upper_bound(const MatrixSet& set, int len, std::uint64_t budget, double prune_below) {
  if (len < 1) throw std::invalid_argument("upper_bound: len must be >= 1");
  check_budget(set.size(), len, budget, "jsr upper bound");

  double factor_norm_max = 0;
  for (const auto& m : set.shadow)
    factor_norm_max = std::max(factor_norm_max, inf_norm(m, set.dim));
  const bool prune = prune_below > 0;
  // A subtree can only be skipped when even ||partial|| * Nmax^remaining
  // falls short of the known lower bound, which some surviving word must
  // reach; the reported maximum is unchanged.
  const double cut = prune ? std::pow(prune_below * (1.0 - 1e-9), len) : 0.0;

  double best_norm = 0;
  auto dfs = [&](auto&& self, const std::vector<double>& partial, int depth) -> void {
    if (depth == len) {
      best_norm = std::max(best_norm, inf_norm(partial, set.dim));
      return;
    }
    for (const auto& m : set.shadow) {
      std::vector<double> child = mul(partial, m, set.dim);
      if (prune && inf_norm(child, set.dim) *
                           std::pow(factor_norm_max, len - depth - 1) <
                       cut)
        continue;
      self(self, child, depth + 1);
    }
  };
  dfs(dfs, float_identity(set.dim), 0);
  return std::pow(best_norm, 1.0 / static_cast<double>(len));
}

Bounds bounds(const MatrixSet& set, int lower_len, int upper_len, std::uint64_t budget) {
  LowerBound lb = lower_bound(set, lower_len, budget);
  const double ub = upper_bound(set, upper_len, budget, lb.value);
  return {lb.value, ub, std::move(lb.witness), lower_len, upper_len};
}

FinitenessReport finiteness_check(const MatrixSet& set, std::span<const int> word,
                                  const Bounds& bounds, double tolerance) {
  if (word.empty()) throw std::invalid_argument("finiteness_check: empty word");
  const QMatrix p = word_product(set, word);
  FinitenessReport report;
  report.word.assign(word.begin(), word.end());
  report.radius_root =
      std::pow(spectral_radius(p), 1.0 / static_cast<double>(word.size()));
  report.bounds = bounds;
  report.gap_to_upper = bounds.upper - report.radius_root;
  report.tolerance = tolerance;
  report.certified = std::abs(report.gap_to_upper) <= tolerance;
  return report;
}

}  // namespace silverstern::jsr
