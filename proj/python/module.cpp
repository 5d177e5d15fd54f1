#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <Python.h>

#include "plrs/error.hpp"
#include "plrs/families.hpp"
#include "plrs/hunt.hpp"
#include "plrs/report.hpp"
#include "plrs/seqcore.hpp"
#include "plrs/verdicts.hpp"
#include "plrs/zeck.hpp"

namespace py = pybind11;
using namespace plrs;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

CoefficientVector vec(const std::vector<std::int64_t>& raw) { return CoefficientVector::validate(raw); }

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::list to_py_list(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

AnalysisConfig config_for(std::size_t horizon, bool family_rules) {
  AnalysisConfig c;
  c.horizon = horizon;
  c.use_family_rules = family_rules;
  return c;
}

}  // namespace

PYBIND11_MODULE(_plrs, m) {
  m.doc() = "Completeness of positive linear recurrence sequences";
  m.attr("__version__") = std::string(kToolVersion);

  static py::exception<Error> base_exc(m, "PlrsError", PyExc_ValueError);
  static py::exception<CapError> cap_exc(m, "CapError", base_exc.ptr());
  static py::exception<ConjectureViolation> violation_exc(m, "ConjectureViolation", base_exc.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapError& e) {
      PyErr_SetString(cap_exc.ptr(), e.what());
    } catch (const ConjectureViolation& e) {
      PyErr_SetString(violation_exc.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base_exc.ptr(), e.what());
    }
  });

  m.def("validate_coefficients", [](const std::vector<std::int64_t>& raw) {
    const auto cv = vec(raw);
    return std::vector<std::uint64_t>(cv.values().begin(), cv.values().end());
  });
  m.def("terms", [](const std::vector<std::int64_t>& c, std::size_t n) {
    return to_py_list(terms_prefix(vec(c), n));
  }, py::arg("coefficients"), py::arg("count"));
  m.def("term", [](const std::vector<std::int64_t>& c, std::size_t n) { return to_py(term(vec(c), n)); });
  m.def("brown_gap", [](const std::vector<std::int64_t>& c, std::size_t n) {
    return to_py(brown_gap(vec(c), n));
  });
  m.def("brown_scan", [](const std::vector<std::int64_t>& c, std::size_t horizon) {
    const auto s = brown_scan(vec(c), horizon);
    return py::make_tuple(s.first_failure ? py::object(py::int_(*s.first_failure)) : py::none(),
                          to_py_list(s.gaps));
  });
  m.def("weak_window_check", [](const std::vector<std::int64_t>& c) { return weak_window_check(vec(c)); });
  m.def("classify", [](const std::vector<std::int64_t>& c, std::size_t horizon, bool family_rules) {
    return json_to_py(verdict_json(classify(vec(c), config_for(horizon, family_rules))));
  }, py::arg("coefficients"), py::arg("horizon") = 0, py::arg("family_rules") = true);
  m.def("is_complete_up_to", [](const std::vector<std::int64_t>& c, std::size_t cap) {
    const auto r = is_complete_up_to(vec(c), cap);
    return py::make_tuple(r.complete, r.smallest_missing ? py::object(py::int_(*r.smallest_missing)) : py::none());
  });

  m.def("is_legal", [](const std::vector<std::int64_t>& c, const std::vector<std::uint64_t>& digits) {
    return is_legal(vec(c), DigitString{digits});
  });
  m.def("value_of", [](const std::vector<std::int64_t>& c, const std::vector<std::uint64_t>& digits) {
    return to_py(value_of(vec(c), DigitString{digits}));
  });
  m.def("legal_decompose", [](const std::vector<std::int64_t>& c, const py::int_& n) {
    return legal_decompose(vec(c), from_py(n)).digits;
  });
  m.def("enumerate_legal", [](const std::vector<std::int64_t>& c, const py::int_& n, std::uint64_t cap) {
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& s : enumerate_legal(vec(c), from_py(n), cap)) out.push_back(std::move(s.digits));
    return out;
  }, py::arg("coefficients"), py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("distinct_decompose", [](const std::vector<std::int64_t>& c, std::uint64_t n) -> py::object {
    const auto d = distinct_decompose(vec(c), n);
    if (!d) return py::none();
    return py::cast(d->indices);
  });

  m.def("fib", [](std::size_t n) { return to_py(fib(n)); });
  m.def("max_n_single_one", [](std::uint64_t k) { return max_n_single_one(k).max_n; });
  m.def("max_n_double_one", [](std::uint64_t k) { return max_n_double_one(k).max_n; });
  m.def("max_n_g_ones", [](std::uint64_t g, std::uint64_t k) -> py::object {
    const auto b = max_n_g_ones(g, k);
    if (!b) return py::none();
    return py::int_(b->max_n);
  });
  m.def("corollary_shift_bound", [](std::size_t L, std::size_t i) { return corollary_shift_bound(L, i).max_n; });
  m.def("empirical_max_n", [](const std::vector<std::uint64_t>& prefix, bool family_rules) {
    const auto r = empirical_max_n(prefix, config_for(0, family_rules));
    py::dict d;
    d["max_n"] = r.max_n;
    d["proven_max_n"] = r.proven_max_n;
    d["provenance"] = r.provenance;
    return d;
  }, py::arg("prefix"), py::arg("family_rules") = true);
  m.def("figure_table", [](std::uint64_t k_lo, std::uint64_t k_hi, std::uint64_t g_lo, std::uint64_t g_hi,
                           unsigned jobs) {
    return json_to_py(figure_json(figure1_table({k_lo, k_hi}, {g_lo, g_hi}, {}, jobs)));
  }, py::arg("k_lo"), py::arg("k_hi"), py::arg("g_lo"), py::arg("g_hi"), py::arg("jobs") = 1);

  m.def("census", [](std::size_t L, unsigned jobs) {
    CensusOptions opts;
    opts.jobs = jobs;
    opts.keep_entries = false;
    CensusReport r;
    {
      py::gil_scoped_release release;
      r = first_failure_census(L, opts);
    }
    return json_to_py(census_json(r, false));
  }, py::arg("L"), py::arg("jobs") = 1);
  m.def("check_fail_at_2l_minus_1", &check_fail_at_2l_minus_1);
}
