#pragma once

#include "silverstern/linrep.hpp"
#include "silverstern/quadfield.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace silverstern::jsr {

/// Finite set of square matrices over Q(sqrt(2)).  Exact entries drive word
/// products; per-matrix double shadows drive norm enumeration.
struct MatrixSet {
  int dim = 0;
  std::vector<linrep::QMatrix> exact;
  std::vector<std::vector<double>> shadow;  // row-major doubles

  explicit MatrixSet(std::vector<linrep::QMatrix> matrices);

  int size() const { return static_cast<int>(exact.size()); }
};

MatrixSet matrix_set(const linrep::LinRep& rep);

/// Exact product M_{w0} M_{w1} ... in word order; identity for the empty
/// word.  Digits must be < size().
linrep::QMatrix word_product(const MatrixSet& set, std::span<const int> word);

/// Spectral radius.  For dim 2 this is the closed form from the exact trace
/// and determinant, floated at the last step; for larger matrices the norm
/// of repeated squares (an approximation converging from above, documented
/// as such) with relative tolerance 1e-12 and an iteration cap.
double spectral_radius(const linrep::QMatrix& m);
double spectral_radius_float(std::vector<double> m, int dim);

inline constexpr std::uint64_t kDefaultLeafBudget = std::uint64_t{1} << 20;
inline constexpr double kTieTolerance = 1e-12;

struct LowerBound {
  double value = 0;
  std::vector<int> witness;
};

/// max rho(product)^(1/len) over all nonempty words of length <= max_len;
/// a valid lower bound for the joint spectral radius.  Ties within
/// kTieTolerance resolve to the lexicographically least word.  Refuses
/// size()^max_len beyond `budget`.
LowerBound lower_bound(const MatrixSet& set, int max_len,
                       std::uint64_t budget = kDefaultLeafBudget);

/// max ||product||_inf^(1/len) over all words of exactly length len; by
/// submultiplicativity a valid upper bound for every len.  When
/// `prune_below` carries a known lower bound for the joint spectral radius,
/// subtrees whose best possible final norm cannot reach it are skipped
/// (this never changes the returned maximum).
double upper_bound(const MatrixSet& set, int len,
                   std::uint64_t budget = kDefaultLeafBudget,
                   double prune_below = 0.0);

struct Bounds {
  double lower = 0;
  double upper = 0;
  std::vector<int> lower_witness;
  int lower_len = 0;
  int upper_len = 0;
};

Bounds bounds(const MatrixSet& set, int lower_len, int upper_len,
              std::uint64_t budget = kDefaultLeafBudget);

/// Certificate-style report (not a proof): how close rho(word)^(1/len)
/// comes to the upper bound.
struct FinitenessReport {
  std::vector<int> word;
  double radius_root = 0;  ///< rho(product)^(1/len)
  Bounds bounds;
  double gap_to_upper = 0;
  bool certified = false;
  double tolerance = 0;
};

FinitenessReport finiteness_check(const MatrixSet& set, std::span<const int> word,
                                  const Bounds& bounds, double tolerance);

}  // namespace silverstern::jsr
