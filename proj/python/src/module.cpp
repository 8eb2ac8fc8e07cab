#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wci/basket.hpp"
#include "wci/classify.hpp"
#include "wci/report_json.hpp"
#include "wci/screen.hpp"
#include "wci/series.hpp"

namespace py = pybind11;

namespace {

// Coefficients leave as decimal strings so arbitrary precision survives.
std::vector<std::string> coefficients(const wci::TruncatedSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.bound() + 1);
  for (const wci::Integer& c : s.coefficients()) {
    out.push_back(c.str());
  }
  return out;
}

wci::TruncatedSeries from_coefficients(const std::vector<std::string>& coeffs) {
  std::vector<wci::Integer> values;
  values.reserve(coeffs.size());
  for (const std::string& c : coeffs) {
    values.emplace_back(c);
  }
  return wci::TruncatedSeries(std::move(values));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted complete intersection threefolds: screens, series and classification.";

  py::register_exception<wci::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<wci::PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<wci::BasketInconsistency>(m, "BasketInconsistency", PyExc_RuntimeError);

  py::class_<wci::Candidate>(m, "Candidate")
      .def(py::init([](std::vector<long> weights, std::vector<long> degrees) {
             return wci::Candidate::normalize(std::move(weights), std::move(degrees));
           }),
           py::arg("weights"), py::arg("degrees"))
      .def_static("parse", [](const std::string& text) { return wci::parse_candidate(text); })
      .def_property_readonly("weights", &wci::Candidate::weights)
      .def_property_readonly("degrees", &wci::Candidate::degrees)
      .def_property_readonly("codim", &wci::Candidate::codim)
      .def_property_readonly("dim", &wci::Candidate::dim)
      .def_property_readonly("amplitude", &wci::Candidate::amplitude)
      .def("label", &wci::Candidate::label)
      .def("__str__", &wci::Candidate::to_text)
      .def("__repr__", [](const wci::Candidate& c) { return "Candidate('" + c.to_text() + "')"; })
      .def("__eq__", [](const wci::Candidate& x, const wci::Candidate& y) { return x == y; })
      .def("__hash__", [](const wci::Candidate& c) { return py::hash(py::str(c.to_text())); });

  m.def("_screen_json", [](const wci::Candidate& c) { return wci::to_json(wci::necessary_screen(c)).dump(); });

  m.def("_series", [](const wci::Candidate& c, std::size_t bound) {
    return coefficients(wci::series_from_candidate(c, bound));
  });
  m.def("_basket_series", [](const std::string& basket, long chi, long chi2, int alpha, std::size_t bound) {
    return coefficients(wci::series_from_formal_basket({wci::parse_basket(basket), chi, chi2}, alpha, bound));
  });
  m.def("_table_method", [](const std::vector<std::string>& coeffs) {
    return wci::to_json(wci::table_method(from_coefficients(coeffs))).dump();
  });

  m.def("_k3", [](const std::string& basket, long chi, long chi2) {
    return wci::to_string(wci::k3({wci::parse_basket(basket), chi, chi2}));
  });
  m.def("_chi_m", [](const std::string& basket, long chi, long chi2, long mult) {
    return wci::to_string(wci::chi_m({wci::parse_basket(basket), chi, chi2}, mult));
  });
  m.def("_initial_basket", [](const std::string& basket) {
    return wci::format_basket(wci::initial_basket(wci::parse_basket(basket)));
  });

  m.def(
      "_classify",
      [](int alpha, std::optional<long> bound, bool full, std::set<long> codims, std::optional<std::string> tuple,
         unsigned jobs) {
        wci::ClassifyConfig config;
        if (bound) {
          config.m_override = bound;
        }
        config.full = full;
        config.codims = std::move(codims);
        if (tuple) {
          config.only_tuple = wci::parse_tuple(*tuple);
        }
        config.jobs = jobs;
        wci::RunReport report;
        {
          py::gil_scoped_release release;
          report = wci::classify(alpha, config);
        }
        return wci::to_json(report).dump();
      },
      py::arg("alpha"), py::arg("bound") = py::none(), py::arg("full") = false, py::arg("codims") = std::set<long>{},
      py::arg("tuple") = py::none(), py::arg("jobs") = 1u);
}
