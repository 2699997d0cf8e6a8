// Copyright 2023 The Authors.
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "matcor/analytics.hpp"
#include "matcor/certificates.hpp"
#include "matcor/constructions.hpp"
#include "matcor/correlation.hpp"
#include "matcor/errors.hpp"
#include "matcor/io.hpp"

namespace py = pybind11;
using namespace matcor;

namespace {

py::object to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_py(const BigRational& v) {
  return py::module_::import("fractions").attr("Fraction")(v.get_str());
}

template <typename T>
py::list to_py_list(const std::vector<T>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::list to_py_matrix(const RationalSquare& a) {
  py::list out;
  for (const auto& row : a) out.append(to_py_list(row));
  return out;
}

// Accepts ints, floats, strings like "3/2" and Fractions; None means unit.
std::vector<BigRational> weights_arg(const py::object& w, int n) {
  if (w.is_none()) return unit_weights(n);
  auto fraction = py::module_::import("fractions").attr("Fraction");
  std::vector<BigRational> out;
  for (auto item : w) {
    out.push_back(parse_rational(py::str(fraction(item)).cast<std::string>()));
  }
  validate_weights(out, n);
  return out;
}

SubsetMask mask_arg(const std::vector<int>& elements) { return SubsetMask::from_elements(elements); }

EnumerationOptions opts(int workers) {
  EnumerationOptions o;
  o.workers = workers;
  return o;
}

py::dict partition_dict(const WeightedPartitionSums& s) {
  py::dict d;
  d["i"] = s.i;
  d["j"] = s.j;
  d["d"] = s.d;
  d["s_both"] = to_py(s.s_both);
  d["s_i_only"] = to_py(s.s_i_only);
  d["s_j_only"] = to_py(s.s_j_only);
  d["s_neither"] = to_py(s.s_neither);
  return d;
}

py::dict counts_dict(const BasisPartitionCounts& c) {
  py::dict d;
  d["i"] = c.i;
  d["j"] = c.j;
  d["d"] = c.d;
  d["s_both"] = to_py(c.s_both);
  d["s_i_only"] = to_py(c.s_i_only);
  d["s_j_only"] = to_py(c.s_j_only);
  d["s_neither"] = to_py(c.s_neither);
  return d;
}

py::dict report_dict(const CorrelationReport& r) {
  py::dict d = partition_dict(r.sums);
  d["ratio"] = r.ratio ? to_py(*r.ratio) : py::none();
  d["bound"] = to_py(r.bound);
  d["satisfied"] = r.satisfied;
  d["free_pair"] = r.free_pair;
  return d;
}

py::dict matrix_dict(const CertificateMatrix& m) {
  py::dict d;
  d["kind"] = to_string(m.kind);
  d["d"] = m.d;
  d["entries"] = to_py_matrix(m.entries);
  d["signature"] = py::make_tuple(m.signature.plus, m.signature.minus, m.signature.zero);
  d["det"] = to_py(m.det);
  return d;
}

py::dict entry_dict(const CatalogEntry& e) {
  py::dict d;
  d["name"] = e.name;
  d["matroid"] = e.matroid;
  d["i"] = e.i;
  d["j"] = e.j;
  d["expected"] = e.expected ? py::object(counts_dict(*e.expected)) : py::none();
  d["provenance"] = e.provenance;
  d["notes"] = e.notes;
  return d;
}

py::tuple elements_tuple(const SubsetMask& s) { return py::cast(s.elements()); }

}  // namespace

PYBIND11_MODULE(_matcor, m) {
  m.doc() = "Exact matroid correlation toolkit";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CertificateError>(m, "CertificateError", base.ptr());

  py::class_<Matroid>(m, "Matroid")
      .def_static("uniform", &Matroid::uniform, py::arg("r"), py::arg("n"))
      .def_static("linear_gfp",
                  [](std::uint32_t p, int rows, const std::vector<std::vector<std::int64_t>>& cols) {
                    return Matroid::linear_gfp(PrimeFieldMatrix(p, rows, cols));
                  },
                  py::arg("p"), py::arg("rows"), py::arg("columns"))
      .def_static("graphic", &Matroid::graphic, py::arg("vertices"), py::arg("edges"))
      .def_static("transversal", &Matroid::transversal, py::arg("n"), py::arg("sets"))
      .def_static("paving", &Matroid::paving, py::arg("n"), py::arg("d"), py::arg("forbidden"))
      .def_static("from_json",
                  [](const std::string& text) {
                    nlohmann::json doc;
                    try {
                      doc = nlohmann::json::parse(text);
                    } catch (const nlohmann::json::exception& e) {
                      throw InputError(std::string("malformed JSON: ") + e.what());
                    }
                    return matroid_from_json(doc);
                  })
      .def("to_json", [](const Matroid& self) { return matroid_to_json(self).dump(); })
      .def_property_readonly("size", &Matroid::size)
      .def_property_readonly("kind", &Matroid::kind)
      .def("rank", [](const Matroid& self, std::optional<std::vector<int>> s) {
             return s ? self.rank(mask_arg(*s)) : self.rank();
           }, py::arg("elements") = py::none())
      .def("is_independent", [](const Matroid& self, const std::vector<int>& s) {
             return self.is_independent(mask_arg(s));
           })
      .def("closure", [](const Matroid& self, const std::vector<int>& s) {
             return self.closure(mask_arg(s)).elements();
           })
      .def("element_status", [](const Matroid& self, int e) { return to_string(self.element_status(e)); })
      .def("dual", &Matroid::dual)
      .def("delete", [](const Matroid& self, const std::vector<int>& s) {
             return self.delete_elements(mask_arg(s));
           })
      .def("contract", [](const Matroid& self, const std::vector<int>& s) {
             return self.contract(mask_arg(s));
           })
      .def("truncate", &Matroid::truncate)
      .def("free_extend", &Matroid::free_extend)
      .def("parallel", &Matroid::parallel, py::arg("element"), py::arg("copies"))
      .def("direct_sum", &Matroid::direct_sum)
      .def("__len__", &Matroid::size)
      .def("__repr__", [](const Matroid& self) {
        return "<Matroid " + self.kind() + " n=" + std::to_string(self.size()) +
               " rank=" + std::to_string(self.rank()) + ">";
      });

  m.def("catalog_names", &catalog_names);
  m.def("catalog_entry", [](const std::string& name) { return entry_dict(catalog_entry(name)); });
  m.def("spike", [](int p, int d, bool rational) { return entry_dict(spike(p, d, rational)); },
        py::arg("p"), py::arg("d"), py::arg("rational") = false);
  m.def("spike_closed_form", [](int p, int d) { return counts_dict(spike_closed_form(p, d)); });
  m.def("spike_ratio", [](int d) { return to_py(spike_ratio(d)); });
  m.def("transversal_family", [](int mm, int d) { return entry_dict(transversal_family(mm, d)); });
  m.def("transversal_closed_form", [](int mm, int d) { return counts_dict(transversal_closed_form(mm, d)); });
  m.def("golay_self_check", [](std::size_t sample, std::uint64_t seed) {
          auto r = golay_self_check(sample, seed);
          py::dict d;
          d["octads"] = r.octads;
          d["through_point"] = py::make_tuple(r.through_point_min, r.through_point_max);
          d["through_pair"] = py::make_tuple(r.through_pair_min, r.through_pair_max);
          d["intersections_ok"] = r.intersections_ok;
          d["five_subsets_checked"] = r.five_subsets_checked;
          d["five_subsets_bad"] = r.five_subsets_bad;
          d["steiner_blocks"] = r.steiner_blocks;
          return d;
        },
        py::arg("sample") = 0, py::arg("seed") = 0xC0FFEE);

  m.def("bases", [](const Matroid& mat, int workers) {
          py::list out;
          for (const auto& b : enumerate_bases(mat, opts(workers))) out.append(elements_tuple(b));
          return out;
        },
        py::arg("matroid"), py::arg("workers") = 1);
  m.def("independence_profile", [](const Matroid& mat, int workers) {
          return to_py_list(independence_profile(mat, opts(workers)).counts);
        },
        py::arg("matroid"), py::arg("workers") = 1);
  m.def("weighted_profile", [](const Matroid& mat, py::object w, int workers) {
          return to_py_list(weighted_profile(mat, weights_arg(w, mat.size()), opts(workers)));
        },
        py::arg("matroid"), py::arg("weights") = py::none(), py::arg("workers") = 1);
  m.def("basis_partition", [](const Matroid& mat, int i, int j, int workers) {
          return counts_dict(basis_partition(mat, i, j, opts(workers)));
        },
        py::arg("matroid"), py::arg("i"), py::arg("j"), py::arg("workers") = 1);
  m.def("weighted_partition", [](const Matroid& mat, int i, int j, py::object w, int workers) {
          return partition_dict(weighted_partition(mat, i, j, weights_arg(w, mat.size()), opts(workers)));
        },
        py::arg("matroid"), py::arg("i"), py::arg("j"), py::arg("weights") = py::none(),
        py::arg("workers") = 1);

  m.def("correlation_ratio", [](const Matroid& mat, int i, int j, py::object w, int workers) {
          auto r = correlation_ratio(mat, i, j, weights_arg(w, mat.size()), opts(workers));
          return r ? to_py(*r) : py::none();
        },
        py::arg("matroid"), py::arg("i"), py::arg("j"), py::arg("weights") = py::none(),
        py::arg("workers") = 1);
  m.def("check_theorem1", [](const Matroid& mat, int i, int j, py::object w, int workers) {
          return report_dict(check_theorem1(mat, i, j, weights_arg(w, mat.size()), opts(workers)));
        },
        py::arg("matroid"), py::arg("i"), py::arg("j"), py::arg("weights") = py::none(),
        py::arg("workers") = 1);
  m.def("check_theorem2", [](const Matroid& mat, int i, int j, py::object w, int workers) {
          return report_dict(check_theorem2(mat, i, j, weights_arg(w, mat.size()), opts(workers)));
        },
        py::arg("matroid"), py::arg("i"), py::arg("j"), py::arg("weights") = py::none(),
        py::arg("workers") = 1);
  m.def("eligible_elements", &eligible_elements);
  m.def("alpha_lower_bound",
        [](const Matroid& mat, const std::string& strategy, int levels, double tol, int max_iter,
           int workers) {
          AlphaOptions a;
          a.strategy = parse_strategy(strategy);
          a.levels = levels;
          a.tol = tol;
          a.max_iter = max_iter;
          auto est = alpha_lower_bound(mat, a, opts(workers));
          py::dict d;
          d["best_ratio"] = to_py(est.best_ratio);
          d["weights"] = to_py_list(est.weights);
          d["i"] = est.i;
          d["j"] = est.j;
          d["strategy"] = est.strategy;
          d["evaluations"] = est.evaluations;
          return d;
        },
        py::arg("matroid"), py::arg("strategy") = "unit", py::arg("levels") = 4,
        py::arg("tol") = 1e-6, py::arg("max_iter") = 50, py::arg("workers") = 1);

  m.def("certify", [](const Matroid& mat, int i, int j, py::object w, int workers) {
          auto r = certify(mat, i, j, weights_arg(w, mat.size()), opts(workers));
          py::dict d;
          d["hij"] = matrix_dict(r.hij);
          d["h0"] = matrix_dict(r.h0);
          d["passed"] = r.passed();
          return d;
        },
        py::arg("matroid"), py::arg("i"), py::arg("j"), py::arg("weights") = py::none(),
        py::arg("workers") = 1);
  m.def("eigen_signature", [](const std::vector<std::vector<py::object>>& rows) {
          auto fraction = py::module_::import("fractions").attr("Fraction");
          RationalSquare a;
          for (const auto& row : rows) {
            a.emplace_back();
            for (const auto& x : row) {
              a.back().push_back(parse_rational(py::str(fraction(x)).cast<std::string>()));
            }
          }
          auto s = eigen_signature(a);
          return py::make_tuple(s.plus, s.minus, s.zero);
        });

  m.def("mason_check", [](const Matroid& mat, int workers) {
          auto r = mason_check(independence_profile(mat, opts(workers)), mat.size());
          py::list out;
          for (const auto& rec : r.records) {
            py::dict d;
            d["k"] = rec.k;
            d["holds_1"] = rec.holds_1;
            d["holds_2"] = rec.holds_2;
            d["holds_3"] = rec.holds_3;
            d["margin_2"] = to_py(rec.margin_2);
            out.append(d);
          }
          return out;
        },
        py::arg("matroid"), py::arg("workers") = 1);
  m.def("entropy_report", [](const Matroid& mat, int workers) {
          auto r = entropy_report(mat, opts(workers));
          py::dict d;
          d["d"] = r.d;
          d["distribution"] = to_py_list(r.distribution);
          d["mean"] = to_py(r.mean);
          d["entropy"] = r.entropy;
          d["poisson"] = r.poisson;
          d["upper_bound"] = r.upper_bound;
          d["lower_chain"] = r.lower_chain ? py::object(py::float_(*r.lower_chain)) : py::none();
          d["argmax"] = r.concentration.k;
          d["max_prob"] = to_py(r.concentration.p);
          d["concentration"] = r.concentration.holds;
          d["poisson_ok"] = r.poisson_ok;
          d["upper_ok"] = r.upper_ok;
          return d;
        },
        py::arg("matroid"), py::arg("workers") = 1);
  m.def("poisson_entropy", &poisson_entropy);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
