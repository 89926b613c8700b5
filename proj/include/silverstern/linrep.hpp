#pragma once

#include "silverstern/quadfield.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace silverstern::linrep {

/// Square matrix over Q(sqrt(2)) with canonical entries, row-major.
struct QMatrix {
  int dim = 0;
  std::vector<QuadRat> entries;

  QMatrix() = default;
  explicit QMatrix(int d) : dim(d), entries(static_cast<std::size_t>(d) * d) {}

  static QMatrix identity(int d);

  QuadRat& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
  const QuadRat& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * dim + j];
  }

  bool operator==(const QMatrix&) const = default;
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);

std::vector<QuadRat> mul_row(const std::vector<QuadRat>& row, const QMatrix& m);
QuadRat dot(const std::vector<QuadRat>& x, const std::vector<QuadRat>& y);

/// Base-k linear representation: f(n) = w * M_{i0} M_{i1} ... M_{is} * v,
/// where i0 ... is are the base-k digits of n least significant first and
/// the product is taken left to right in digit order (empty product for
/// n = 0, giving w * v).
struct LinRep {
  int base = 0;
  int dim = 0;
  std::vector<QuadRat> w;
  std::vector<QuadRat> v;
  std::vector<QMatrix> matrices;

  bool operator==(const LinRep&) const = default;
};

/// Base-k digits of n, least significant first; empty for n = 0.
std::vector<int> digits_lsb_first(const Int& n, int base);

QuadRat eval(const LinRep& rep, const Int& n);

/// Representation of the stern sequence: A0 = [[1,1],[0,1]],
/// A1 = [[1,0],[1,1]].  Under the digit/product convention above the
/// selector pair w = [1 0], v = [1 0] reproduces a different sequence;
/// the verified selectors are w = [0 1], v = [1 0].
LinRep builtin_stern_rep();

/// Representation of the northshield sequence: w = [1 0], v = [0 1],
/// B0 = [[1,0],[sqrt2,1]], B1 = [[sqrt2,1],[1,sqrt2]], B2 = [[1,sqrt2],[0,1]].
LinRep builtin_northshield_rep();

struct Mismatch {
  Int n;
  QuadRat got;
  QuadRat expected;
};

/// Exact comparison of eval(rep, n) against oracle(n) for all n < limit;
/// returns the least mismatching index, or nothing on a clean pass.
std::optional<Mismatch> verify_rep(const LinRep& rep,
                                   const std::function<QuadRat(const Int&)>& oracle,
                                   const Int& limit);

/// Parses and validates the JSON document format described in the README:
/// {"base": k, "dim": d, "w": [entry...], "v": [entry...],
///  "matrices": [d x d nested arrays...]} where an entry is an integer or
/// {"num": [a, b], "den": d} with b and den optional.  Throws ParseError
/// naming the offending field.
LinRep load_rep(const std::string& json_text);

/// Serializes in the full entry form; load_rep(rep_to_json(r)) == r.
std::string rep_to_json(const LinRep& rep, bool pretty = false);

}  // namespace silverstern::linrep
