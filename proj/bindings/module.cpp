#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "silverstern/envelope.hpp"
#include "silverstern/errors.hpp"
#include "silverstern/jsr.hpp"
#include "silverstern/linrep.hpp"
#include "silverstern/quadfield.hpp"
#include "silverstern/sequences.hpp"

namespace py = pybind11;
namespace ss = silverstern;

namespace pybind11::detail {

// Arbitrary-precision integers cross the boundary as Python ints via their
// decimal form, exactly in both directions.
template <>
struct type_caster<ss::Int> {
  PYBIND11_TYPE_CASTER(ss::Int, const_name("int"));

  bool load(handle src, bool) {
    PyObject* index = PyNumber_Index(src.ptr());
    if (!index) {
      PyErr_Clear();
      return false;
    }
    py::object owner = py::reinterpret_steal<py::object>(index);
    value = ss::Int(py::cast<std::string>(py::str(owner)));
    return true;
  }

  static handle cast(const ss::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

// Rationals accept anything exposing integral numerator/denominator
// (Python ints and fractions.Fraction) and come back as Fraction.
template <>
struct type_caster<ss::Rational> {
  PYBIND11_TYPE_CASTER(ss::Rational, const_name("Fraction"));

  bool load(handle src, bool convert) {
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    make_caster<ss::Int> num, den;
    if (!num.load(src.attr("numerator"), convert) ||
        !den.load(src.attr("denominator"), convert))
      return false;
    value = ss::Rational(cast_op<ss::Int>(num), cast_op<ss::Int>(den));
    return true;
  }

  static handle cast(const ss::Rational& v, return_value_policy policy, handle parent) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        make_caster<ss::Int>::cast(numerator(v), policy, parent));
    py::object den = py::reinterpret_steal<py::object>(
        make_caster<ss::Int>::cast(denominator(v), policy, parent));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

int ordering_to_int(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  if (o == std::strong_ordering::greater) return 1;
  return 0;
}

ss::QuadRat oracle_result(const py::object& value) {
  if (py::isinstance<ss::QuadRat>(value)) return value.cast<ss::QuadRat>();
  if (py::isinstance<ss::QuadInt>(value)) return ss::QuadRat(value.cast<ss::QuadInt>());
  return ss::QuadRat(ss::QuadInt(value.cast<ss::Int>(), 0));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of Stern-type digital sequences over Z[sqrt(2)]";

  py::register_exception<ss::BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<ss::ParseError>(m, "RepParseError", PyExc_ValueError);

  py::class_<ss::QuadInt>(m, "QuadInt", "Exact a + b*sqrt(2) with integer a, b")
      .def(py::init<ss::Int, ss::Int>(), py::arg("a"), py::arg("b") = ss::Int(0))
      .def_readonly("a", &ss::QuadInt::a)
      .def_readonly("b", &ss::QuadInt::b)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__lt__", [](const ss::QuadInt& x, const ss::QuadInt& y) { return x < y; })
      .def("__le__", [](const ss::QuadInt& x, const ss::QuadInt& y) { return x <= y; })
      .def("__gt__", [](const ss::QuadInt& x, const ss::QuadInt& y) { return x > y; })
      .def("__ge__", [](const ss::QuadInt& x, const ss::QuadInt& y) { return x >= y; })
      .def("__pow__", [](const ss::QuadInt& x, unsigned n) { return ss::pow(x, n); })
      .def("__float__", [](const ss::QuadInt& x) { return ss::to_float(x); })
      .def("__repr__", [](const ss::QuadInt& x) { return ss::to_string(x); })
      .def("conj", [](const ss::QuadInt& x) { return ss::conj(x); })
      .def("sign", [](const ss::QuadInt& x) { return ss::sign(x); })
      .def("field_norm", [](const ss::QuadInt& x) { return ss::field_norm(x); });

  py::class_<ss::QuadRat>(m, "QuadRat",
                          "Exact (a + b*sqrt(2))/den in canonical lowest terms")
      .def(py::init<ss::QuadInt, ss::Int>(), py::arg("num"), py::arg("den") = ss::Int(1))
      .def(py::init<const ss::Rational&>())
      .def_readonly("num", &ss::QuadRat::num)
      .def_readonly("den", &ss::QuadRat::den)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def("__lt__", [](const ss::QuadRat& x, const ss::QuadRat& y) { return x < y; })
      .def("__le__", [](const ss::QuadRat& x, const ss::QuadRat& y) { return x <= y; })
      .def("__gt__", [](const ss::QuadRat& x, const ss::QuadRat& y) { return x > y; })
      .def("__ge__", [](const ss::QuadRat& x, const ss::QuadRat& y) { return x >= y; })
      .def("__float__", [](const ss::QuadRat& x) { return ss::to_float(x); })
      .def("__repr__", [](const ss::QuadRat& x) { return ss::to_string(x); })
      .def("sign", [](const ss::QuadRat& x) { return ss::sign(x); })
      .def("cmp", [](const ss::QuadRat& x, const ss::QuadRat& y) {
        return ordering_to_int(x <=> y);
      });

  // sequences ---------------------------------------------------------------
  m.def("silver_exponent", &ss::seq::silver_exponent);
  m.def("golden_exponent", &ss::seq::golden_exponent);
  m.def("stern", [](const ss::Int& n) { return ss::seq::stern(n); }, py::arg("n"));
  m.def("northshield", &ss::seq::northshield, py::arg("n"));

  py::class_<ss::seq::IntervalMax>(m, "IntervalMax")
      .def_readonly("n", &ss::seq::IntervalMax::n)
      .def_readonly("max_value", &ss::seq::IntervalMax::max_value)
      .def_readonly("first_argmax", &ss::seq::IntervalMax::first_argmax);
  m.def("interval_max_bruteforce", &ss::seq::interval_max_bruteforce, py::arg("n"),
        py::arg("cap") = ss::seq::kDefaultIntervalCap);
  m.def("interval_max_closed_form", &ss::seq::interval_max_closed_form, py::arg("n"));

  py::class_<ss::seq::RatioSample>(m, "RatioSample")
      .def_readonly("index", &ss::seq::RatioSample::index)
      .def_readonly("ratio", &ss::seq::RatioSample::ratio);
  py::class_<ss::seq::RatioScan>(m, "RatioScan")
      .def_readonly("lo", &ss::seq::RatioScan::lo)
      .def_readonly("hi", &ss::seq::RatioScan::hi)
      .def_readonly("exponent", &ss::seq::RatioScan::exponent)
      .def_readonly("running_max", &ss::seq::RatioScan::running_max)
      .def_readonly("argmax", &ss::seq::RatioScan::argmax)
      .def_readonly("samples", &ss::seq::RatioScan::samples);
  m.def("ratio_scan_northshield", &ss::seq::ratio_scan_northshield, py::arg("lo"),
        py::arg("hi"), py::arg("decimation") = 1, py::arg("workers") = 1,
        py::arg("cap") = ss::seq::kDefaultNorthshieldCap,
        py::call_guard<py::gil_scoped_release>());
  m.def("ratio_scan_stern", &ss::seq::ratio_scan_stern, py::arg("lo"), py::arg("hi"),
        py::arg("decimation") = 1, py::arg("workers") = 1,
        py::arg("cap") = ss::seq::kDefaultSternCap,
        py::call_guard<py::gil_scoped_release>());
  m.def("witness_index", &ss::seq::witness_index, py::arg("n"));
  m.def("witness_ratio", &ss::seq::witness_ratio, py::arg("n"));

  // envelope ----------------------------------------------------------------
  py::class_<ss::env::Breakpoint>(m, "Breakpoint")
      .def_readonly("n", &ss::env::Breakpoint::n)
      .def_readonly("x", &ss::env::Breakpoint::x)
      .def_readonly("y", &ss::env::Breakpoint::y);
  py::class_<ss::env::Segment>(m, "Segment")
      .def_readonly("index", &ss::env::Segment::index)
      .def_readonly("slope", &ss::env::Segment::slope)
      .def_readonly("intercept", &ss::env::Segment::intercept)
      .def_readonly("lo", &ss::env::Segment::lo)
      .def_readonly("hi", &ss::env::Segment::hi);
  m.def("envelope_breakpoint", &ss::env::breakpoint, py::arg("n"));
  m.def("envelope_segment", &ss::env::segment, py::arg("n"));
  m.def("envelope_segment_of", &ss::env::segment_of, py::arg("x"));
  m.def("envelope_value", &ss::env::value, py::arg("x"));
  m.def("floor_log3", &ss::env::floor_log3, py::arg("m"));

  py::enum_<ss::env::BoundCoeff>(m, "BoundCoeff")
      .value("silver", ss::env::BoundCoeff::silver)
      .value("unit", ss::env::BoundCoeff::unit);
  py::class_<ss::env::BoundViolation>(m, "BoundViolation")
      .def_readonly("m", &ss::env::BoundViolation::m)
      .def_readonly("lhs", &ss::env::BoundViolation::lhs)
      .def_readonly("rhs", &ss::env::BoundViolation::rhs);
  py::class_<ss::env::BoundReport>(m, "BoundReport")
      .def_readonly("lo", &ss::env::BoundReport::lo)
      .def_readonly("hi", &ss::env::BoundReport::hi)
      .def_readonly("violations", &ss::env::BoundReport::violations)
      .def("passed", &ss::env::BoundReport::pass);
  m.def("check_log_bound", &ss::env::check_log_bound, py::arg("lo"), py::arg("hi"),
        py::arg("coeff") = ss::env::BoundCoeff::silver, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

  py::class_<ss::env::WitnessIdentity>(m, "WitnessIdentity")
      .def_readonly("n", &ss::env::WitnessIdentity::n)
      .def_readonly("m", &ss::env::WitnessIdentity::m)
      .def_readonly("lhs", &ss::env::WitnessIdentity::lhs)
      .def_readonly("closed_form", &ss::env::WitnessIdentity::closed_form)
      .def_readonly("equal", &ss::env::WitnessIdentity::equal)
      .def_readonly("exceeds_interval_max", &ss::env::WitnessIdentity::exceeds_interval_max);
  m.def("witness_identity", &ss::env::witness_identity, py::arg("n"));

  py::class_<ss::env::StepGap>(m, "StepGap")
      .def_readonly("n", &ss::env::StepGap::n)
      .def_readonly("k", &ss::env::StepGap::k)
      .def_readonly("gap", &ss::env::StepGap::gap)
      .def_readonly("expected", &ss::env::StepGap::expected)
      .def_readonly("equal", &ss::env::StepGap::equal)
      .def_readonly("magnitude_below_one", &ss::env::StepGap::magnitude_below_one)
      .def_readonly("negative", &ss::env::StepGap::negative);
  m.def("step_gap", &ss::env::step_gap, py::arg("n"), py::arg("k"));
  m.def("step_gap_strip", [](int n) {
    return py::make_tuple(ss::env::step_gap_k_lo(n), ss::env::step_gap_k_hi(n));
  });

  m.def("power_law_gap", &ss::env::power_law_gap, py::arg("x"));
  py::class_<ss::env::GapSample>(m, "GapSample")
      .def_readonly("x", &ss::env::GapSample::x)
      .def_readonly("gap", &ss::env::GapSample::gap);
  py::class_<ss::env::GridScan>(m, "GridScan")
      .def_readonly("count", &ss::env::GridScan::count)
      .def_readonly("max_gap", &ss::env::GridScan::max_gap)
      .def_readonly("samples", &ss::env::GridScan::samples);
  m.def("power_law_grid", &ss::env::power_law_grid, py::arg("lo"), py::arg("hi"),
        py::arg("count"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

  py::class_<ss::env::EnvelopeRatio>(m, "EnvelopeRatio")
      .def_readonly("n", &ss::env::EnvelopeRatio::n)
      .def_readonly("m", &ss::env::EnvelopeRatio::m)
      .def_readonly("ratio", &ss::env::EnvelopeRatio::ratio);
  m.def("envelope_ratio_scan", &ss::env::envelope_ratio_scan, py::arg("n_lo"),
        py::arg("n_hi"));

  // linear representations ----------------------------------------------------
  py::class_<ss::linrep::QMatrix>(m, "QMatrix")
      .def(py::init<int>(), py::arg("dim"))
      .def_static("identity", &ss::linrep::QMatrix::identity, py::arg("dim"))
      .def_readonly("dim", &ss::linrep::QMatrix::dim)
      .def("at", [](const ss::linrep::QMatrix& m, int i, int j) { return m.at(i, j); })
      .def("set",
           [](ss::linrep::QMatrix& m, int i, int j, const ss::QuadRat& v) {
             m.at(i, j) = v;
           })
      .def(py::self * py::self)
      .def(py::self == py::self);

  py::class_<ss::linrep::LinRep>(m, "LinRep")
      .def_readonly("base", &ss::linrep::LinRep::base)
      .def_readonly("dim", &ss::linrep::LinRep::dim)
      .def_readonly("w", &ss::linrep::LinRep::w)
      .def_readonly("v", &ss::linrep::LinRep::v)
      .def_readonly("matrices", &ss::linrep::LinRep::matrices)
      .def(py::self == py::self);

  m.def("digits_lsb_first", &ss::linrep::digits_lsb_first, py::arg("n"), py::arg("base"));
  m.def("eval_rep", &ss::linrep::eval, py::arg("rep"), py::arg("n"));
  m.def("builtin_stern_rep", &ss::linrep::builtin_stern_rep);
  m.def("builtin_northshield_rep", &ss::linrep::builtin_northshield_rep);
  m.def("load_rep", &ss::linrep::load_rep, py::arg("json_text"));
  m.def("rep_to_json", &ss::linrep::rep_to_json, py::arg("rep"), py::arg("pretty") = false);

  py::class_<ss::linrep::Mismatch>(m, "Mismatch")
      .def_readonly("n", &ss::linrep::Mismatch::n)
      .def_readonly("got", &ss::linrep::Mismatch::got)
      .def_readonly("expected", &ss::linrep::Mismatch::expected);
  m.def(
      "verify_rep",
      [](const ss::linrep::LinRep& rep, const py::object& oracle, const ss::Int& limit) {
        return ss::linrep::verify_rep(
            rep, [&oracle](const ss::Int& n) { return oracle_result(oracle(n)); }, limit);
      },
      py::arg("rep"), py::arg("oracle"), py::arg("limit"),
      "Compare eval_rep(rep, n) against oracle(n) for n < limit; returns the "
      "first Mismatch or None");

  // joint spectral radius -----------------------------------------------------
  py::class_<ss::jsr::MatrixSet>(m, "MatrixSet")
      .def(py::init<std::vector<ss::linrep::QMatrix>>(), py::arg("matrices"))
      .def_readonly("dim", &ss::jsr::MatrixSet::dim)
      .def("size", &ss::jsr::MatrixSet::size);
  m.def("matrix_set", &ss::jsr::matrix_set, py::arg("rep"));
  m.def("word_product",
        [](const ss::jsr::MatrixSet& set, const std::vector<int>& word) {
          return ss::jsr::word_product(set, word);
        },
        py::arg("set"), py::arg("word"));
  m.def("spectral_radius",
        [](const ss::linrep::QMatrix& matrix) { return ss::jsr::spectral_radius(matrix); },
        py::arg("matrix"));

  py::class_<ss::jsr::LowerBound>(m, "LowerBound")
      .def_readonly("value", &ss::jsr::LowerBound::value)
      .def_readonly("witness", &ss::jsr::LowerBound::witness);
  py::class_<ss::jsr::Bounds>(m, "JsrBounds")
      .def_readonly("lower", &ss::jsr::Bounds::lower)
      .def_readonly("upper", &ss::jsr::Bounds::upper)
      .def_readonly("lower_witness", &ss::jsr::Bounds::lower_witness)
      .def_readonly("lower_len", &ss::jsr::Bounds::lower_len)
      .def_readonly("upper_len", &ss::jsr::Bounds::upper_len);
  m.def("jsr_lower_bound", &ss::jsr::lower_bound, py::arg("set"), py::arg("max_len"),
        py::arg("budget") = ss::jsr::kDefaultLeafBudget);
  m.def("jsr_upper_bound", &ss::jsr::upper_bound, py::arg("set"), py::arg("len"),
        py::arg("budget") = ss::jsr::kDefaultLeafBudget, py::arg("prune_below") = 0.0);
  m.def("jsr_bounds", &ss::jsr::bounds, py::arg("set"), py::arg("lower_len"),
        py::arg("upper_len"), py::arg("budget") = ss::jsr::kDefaultLeafBudget);

  py::class_<ss::jsr::FinitenessReport>(m, "FinitenessReport")
      .def_readonly("word", &ss::jsr::FinitenessReport::word)
      .def_readonly("radius_root", &ss::jsr::FinitenessReport::radius_root)
      .def_readonly("gap_to_upper", &ss::jsr::FinitenessReport::gap_to_upper)
      .def_readonly("certified", &ss::jsr::FinitenessReport::certified)
      .def_readonly("tolerance", &ss::jsr::FinitenessReport::tolerance);
  m.def("finiteness_check",
        [](const ss::jsr::MatrixSet& set, const std::vector<int>& word,
           const ss::jsr::Bounds& bounds, double tolerance) {
          return ss::jsr::finiteness_check(set, word, bounds, tolerance);
        },
        py::arg("set"), py::arg("word"), py::arg("bounds"), py::arg("tolerance") = 1e-9);
}
