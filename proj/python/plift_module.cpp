// Copyright 2026 The plift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings: codes, degree sets, decoding, experiments and analyses.
// Elements are canonical indices; reports come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plift/analysis.hpp"
#include "plift/decode.hpp"
#include "plift/io.hpp"

namespace py = pybind11;

namespace plift {
namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<Elem>> rows_of(const Matrix& m) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

std::shared_ptr<MonomialCode> make_code(const std::string& kind, int q, int m, int k) {
  if (!prime_power(q)) throw std::invalid_argument("q must be a prime power");
  return std::make_shared<MonomialCode>(parse_code_kind(kind), make_field(q), m, k);
}

CorrectionConfig config(int s, double delta, std::uint64_t seed, bool unit_weights) {
  CorrectionConfig cfg;
  cfg.s = s;
  cfg.delta = delta;
  cfg.seed = seed;
  cfg.unit_weights = unit_weights;
  return cfg;
}

}  // namespace
}  // namespace plift

PYBIND11_MODULE(plift, mod) {
  using namespace plift;
  mod.doc() = "Affine and projective lifted Reed-Solomon codes";

  py::class_<FiniteField, std::shared_ptr<FiniteField>>(mod, "Field")
      .def(py::init([](int q) {
             if (!prime_power(q)) throw std::invalid_argument("q must be a prime power");
             return std::const_pointer_cast<FiniteField>(make_field(q));
           }),
           py::arg("q"))
      .def_property_readonly("order", &FiniteField::order)
      .def_property_readonly("characteristic", &FiniteField::characteristic)
      .def_property_readonly("primitive", &FiniteField::primitive)
      .def("add", &FiniteField::add)
      .def("sub", &FiniteField::sub)
      .def("mul", &FiniteField::mul)
      .def("inv", &FiniteField::inv)
      .def("pow", &FiniteField::pow)
      .def("format", &FiniteField::format)
      .def("parse", &FiniteField::parse);

  py::class_<MonomialCode, std::shared_ptr<MonomialCode>>(mod, "Code")
      .def(py::init(&make_code), py::arg("kind"), py::arg("q"), py::arg("m"),
           py::arg("k"))
      .def_property_readonly("kind", [](const MonomialCode& c) { return to_string(c.kind()); })
      .def_property_readonly("q", &MonomialCode::q)
      .def_property_readonly("m", &MonomialCode::m)
      .def_property_readonly("k", &MonomialCode::k)
      .def_property_readonly("v", &MonomialCode::v)
      .def_property_readonly("dim", &MonomialCode::dim)
      .def_property_readonly("length", &MonomialCode::length)
      .def_property_readonly("degrees",
                             [](const MonomialCode& c) { return c.degrees().tuples; })
      .def_property_readonly("points",
                             [](const MonomialCode& c) { return c.support().points(); })
      .def_property_readonly("generator",
                             [](const MonomialCode& c) { return rows_of(c.generator()); })
      .def("descriptor",
           [](const MonomialCode& c) { return to_python(to_json(c.descriptor())); })
      .def("encode",
           [](const MonomialCode& c, const std::vector<Elem>& msg) { return c.encode(msg); })
      .def("contains",
           [](const MonomialCode& c, const std::vector<Elem>& word) {
             if (word.size() != c.length())
               throw std::invalid_argument("word length differs from code length");
             return c.linear().row_space().contains(word);
           })
      .def("index_of",
           [](const MonomialCode& c, const std::string& text) {
             return c.support().parse(text);
           })
      .def("format_point",
           [](const MonomialCode& c, std::size_t i) { return c.support().format(i); });

  mod.def("adeg", [](int m, int k, int q) { return adeg(m, k, q).tuples; },
          py::arg("m"), py::arg("k"), py::arg("q"));
  mod.def("pdeg", [](int m, int k, int q) { return pdeg(m, k, q).tuples; },
          py::arg("m"), py::arg("k"), py::arg("q"));

  mod.def("prs_decode",
          [](int q, const std::vector<Symbol>& y, int k) {
            return prs_decode(make_field(q), y, k);
          },
          py::arg("q"), py::arg("y"), py::arg("k"),
          "Error-and-erasure decoding in PRS_q(k); None entries are erasures.");

  mod.def("local_correct",
          [](const MonomialCode& c, const std::vector<Symbol>& word, std::size_t point,
             int s, std::uint64_t seed, bool unit_weights) {
            if (word.size() != c.length())
              throw std::invalid_argument("word length differs from code length");
            if (point >= c.length()) throw std::invalid_argument("point out of range");
            const CorrectionConfig cfg = config(s, 0.0, seed, unit_weights);
            validate(cfg, c);
            Rng rng = substream(seed, 0);
            return local_correct([&](std::size_t i) { return word[i]; }, point, c, cfg, rng);
          },
          py::arg("code"), py::arg("word"), py::arg("point"), py::arg("s"),
          py::arg("seed"), py::arg("unit_weights") = false);

  mod.def("experiment",
          [](const MonomialCode& c, int s, double delta, std::uint64_t trials,
             std::uint64_t seed, bool unit_weights) {
            const CorrectionConfig cfg = config(s, delta, seed, unit_weights);
            validate(cfg, c);
            return to_python(to_json(mc_experiment(c, cfg, trials)));
          },
          py::arg("code"), py::arg("s"), py::arg("delta"), py::arg("trials"),
          py::arg("seed"), py::arg("unit_weights") = false);

  mod.def("success_lower_bound", &success_lower_bound);
  mod.def("delta_max", &delta_max);

  mod.def("rate_table_csv",
          [](int q, int m, const std::string& mode, std::optional<int> k_min,
             std::optional<int> k_max) {
            const RateMode rm = parse_rate_mode(mode);
            return rate_table_csv(rate_table(q, m, rm, k_min, k_max), rm);
          },
          py::arg("q"), py::arg("m"), py::arg("mode") = "both",
          py::arg("k_min") = py::none(), py::arg("k_max") = py::none());

  mod.def("information_set",
          [](const MonomialCode& c, std::optional<std::uint64_t> seed) {
            std::optional<Rng> rng;
            if (seed) rng = substream(*seed, 0);
            return to_python(to_json(information_set(c, rng ? &*rng : nullptr), c.support()));
          },
          py::arg("code"), py::arg("seed") = py::none());

  mod.def("qc_certificate",
          [](const MonomialCode& c) -> py::object {
            const auto cert = qc_certificate(c);
            if (!cert) return py::none();
            return to_python(to_json(*cert));
          },
          py::arg("code"));

  mod.def("distance_report",
          [](const MonomialCode& c, bool exact) {
            return to_python(to_json(distance_report(c, exact)));
          },
          py::arg("code"), py::arg("exact") = false);

  mod.def("design_dual_check",
          [](int q, int m) { return to_python(to_json(design_dual_check(make_field(q), m))); },
          py::arg("q"), py::arg("m"));

  mod.def("shorten_puncture_check",
          [](int q, int m, int k) {
            return to_python(to_json(shorten_puncture_check(make_field(q), m, k)));
          },
          py::arg("q"), py::arg("m"), py::arg("k"));
}
