#include "silverstern/linrep.hpp"

#include "silverstern/errors.hpp"
#include "silverstern/json_values.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace silverstern::linrep {

QMatrix QMatrix::identity(int d) {
  QMatrix m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = QuadRat(QuadInt(1, 0));
  return m;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix out(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) {
      QuadRat sum;
      for (int k = 0; k < x.dim; ++k) sum = sum + x.at(i, k) * y.at(k, j);
      out.at(i, j) = std::move(sum);
    }
  return out;
}

std::vector<QuadRat> mul_row(const std::vector<QuadRat>& row, const QMatrix& m) {
  if (static_cast<int>(row.size()) != m.dim)
    throw std::invalid_argument("mul_row: dimension mismatch");
  std::vector<QuadRat> out(row.size());
  for (int j = 0; j < m.dim; ++j) {
    QuadRat sum;
    for (int i = 0; i < m.dim; ++i) sum = sum + row[static_cast<std::size_t>(i)] * m.at(i, j);
    out[static_cast<std::size_t>(j)] = std::move(sum);
  }
  return out;
}

QuadRat dot(const std::vector<QuadRat>& x, const std::vector<QuadRat>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  QuadRat sum;
  for (std::size_t i = 0; i < x.size(); ++i) sum = sum + x[i] * y[i];
  return sum;
}

std::vector<int> digits_lsb_first(const Int& n, int base) {
  if (base < 2) throw std::invalid_argument("digits_lsb_first: base must be >= 2");
  if (n < 0) throw std::invalid_argument("digits_lsb_first: negative argument");
  std::vector<int> digits;
  for (Int m = n; m > 0; m /= base) digits.push_back((m % base).convert_to<int>());
  return digits;
}

QuadRat eval(const LinRep& rep, const Int& n) {
  std::vector<QuadRat> row = rep.w;
  for (int d : digits_lsb_first(n, rep.base)) row = mul_row(row, rep.matrices[static_cast<std::size_t>(d)]);
  return dot(row, rep.v);
}

namespace {

QuadRat qr(int a, int b = 0) { return QuadRat(QuadInt(a, b)); }

QMatrix matrix2(QuadRat e00, QuadRat e01, QuadRat e10, QuadRat e11) {
  QMatrix m(2);
  m.at(0, 0) = std::move(e00);
  m.at(0, 1) = std::move(e01);
  m.at(1, 0) = std::move(e10);
  m.at(1, 1) = std::move(e11);
  return m;
}

}  // namespace

LinRep builtin_stern_rep() {
  LinRep rep;
  rep.base = 2;
  rep.dim = 2;
  rep.w = {qr(0), qr(1)};
  rep.v = {qr(1), qr(0)};
  rep.matrices = {matrix2(qr(1), qr(1), qr(0), qr(1)),
                  matrix2(qr(1), qr(0), qr(1), qr(1))};
  return rep;
}

LinRep builtin_northshield_rep() {
  LinRep rep;
  rep.base = 3;
  rep.dim = 2;
  rep.w = {qr(1), qr(0)};
  rep.v = {qr(0), qr(1)};
  rep.matrices = {matrix2(qr(1), qr(0), qr(0, 1), qr(1)),
                  matrix2(qr(0, 1), qr(1), qr(1), qr(0, 1)),
                  matrix2(qr(1), qr(0, 1), qr(0), qr(1))};
  return rep;
}

std::optional<Mismatch> verify_rep(const LinRep& rep,
                                   const std::function<QuadRat(const Int&)>& oracle,
                                   const Int& limit) {
  if (limit < 1) throw std::invalid_argument("verify_rep: limit must be >= 1");
  for (Int n = 0; n < limit; ++n) {
    QuadRat got = eval(rep, n);
    QuadRat expected = oracle(n);
    if (got != expected) return Mismatch{n, std::move(got), std::move(expected)};
  }
  return std::nullopt;
}

namespace {

int require_small_int(const json& j, const std::string& field, int lo, int hi) {
  const Int v = int_from_json(j, field);
  if (v < lo || v > hi)
    throw ParseError(field + ": must be an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return v.convert_to<int>();
}

std::vector<QuadRat> vector_from_json(const json& j, int dim, const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(field + ": expected an array of dim = " + std::to_string(dim) +
                     " entries");
  std::vector<QuadRat> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(quadrat_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

QMatrix matrix_from_json(const json& j, int dim, const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(field + ": expected a " + std::to_string(dim) + " x " +
                     std::to_string(dim) + " array");
  QMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError(row_field + ": expected a row of " + std::to_string(dim) +
                       " entries");
    for (int k = 0; k < dim; ++k)
      m.at(i, k) = quadrat_from_json(row[static_cast<std::size_t>(k)],
                                     row_field + "[" + std::to_string(k) + "]");
  }
  return m;
}

}  // namespace

LinRep load_rep(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  for (const char* field : {"base", "dim", "w", "v", "matrices"})
    if (!doc.contains(field)) throw ParseError(std::string(field) + ": required");

  LinRep rep;
  rep.base = require_small_int(doc.at("base"), "base", 2, 64);
  rep.dim = require_small_int(doc.at("dim"), "dim", 1, 64);
  rep.w = vector_from_json(doc.at("w"), rep.dim, "w");
  rep.v = vector_from_json(doc.at("v"), rep.dim, "v");

  const json& mats = doc.at("matrices");
  if (!mats.is_array() || static_cast<int>(mats.size()) != rep.base)
    throw ParseError("matrices: expected base = " + std::to_string(rep.base) +
                     " matrices");
  rep.matrices.reserve(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i)
    rep.matrices.push_back(
        matrix_from_json(mats[i], rep.dim, "matrices[" + std::to_string(i) + "]"));
  return rep;
}

std::string rep_to_json(const LinRep& rep, bool pretty) {
  json doc;
  doc["base"] = rep.base;
  doc["dim"] = rep.dim;
  auto vec = [](const std::vector<QuadRat>& v) {
    json out = json::array();
    for (const QuadRat& e : v) out.push_back(json_of(e));
    return out;
  };
  doc["w"] = vec(rep.w);
  doc["v"] = vec(rep.v);
  json mats = json::array();
  for (const QMatrix& m : rep.matrices) {
    json rows = json::array();
    for (int i = 0; i < m.dim; ++i) {
      json row = json::array();
      for (int j = 0; j < m.dim; ++j) row.push_back(json_of(m.at(i, j)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  doc["matrices"] = std::move(mats);
  return pretty ? doc.dump(2) : doc.dump();
}

}  // namespace silverstern::linrep
