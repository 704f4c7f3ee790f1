#include "powershift/pell.hpp"
#include "powershift/power_search.hpp"
#include "powershift/shift_square.hpp"
#include "powershift/square_products.hpp"
#include "powershift/syndetic.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace powershift;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    const auto text = py::str(src).cast<std::string>();
    value.set_str(text, 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    const std::string text = v.get_str(10);
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

py::tuple pair(const Integer& first, const Integer& second) {
  return py::make_tuple(first, second);
}

py::list witnesses(const std::vector<Witness>& ws) {
  py::list out;
  for (const auto& w : ws) out.append(pair(w.x, w.y));
  return out;
}

py::dict outcome_dict(const PairOutcome& o) {
  py::dict d;
  d["a"] = o.source;
  d["status"] = to_string(o.status);
  if (o.pair) {
    d["branch"] = to_string(o.pair->branch);
    d["base"] = o.pair->base;
    d["ratio_root"] = o.pair->ratio_root;
    d["product"] = o.pair->product;
  }
  if (o.solution) d["witness"] = pair(o.solution->x, o.solution->y);
  if (o.b) d["b"] = *o.b;
  d["member"] = o.family_index + 1;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Pell-based solution families for a x^2 + k = (a + k) y^2";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> base_error(m, "PowerShiftError", PyExc_ValueError);
  static py::exception<SquareInput> square_input(m, "SquareInput", base_error.ptr());
  static py::exception<SquareD> square_d(m, "SquareD", base_error.ptr());
  static py::exception<MismatchedD> mismatched(m, "MismatchedD", base_error.ptr());
  static py::exception<IngestionError> ingestion(m, "IngestionError", base_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SquareInput& e) {
      square_input(e.what());
    } catch (const SquareD& e) {
      square_d(e.what());
    } catch (const MismatchedD& e) {
      mismatched(e.what());
    } catch (const IngestionError& e) {
      ingestion(e.what());
    } catch (const Error& e) {
      base_error(e.what());
    }
  });

  m.def("isqrt", &isqrt, py::arg("n"));
  m.def("is_perfect_square", &is_perfect_square, py::arg("n"),
        "Square root of n, or None.");
  m.def("squarefree_decompose",
        [](const Integer& n) {
          const auto parts = squarefree_decompose(n);
          return pair(parts.square_root, parts.squarefree);
        },
        py::arg("n"), "(b, c) with n = b^2 c and c squarefree.");
  m.def("divisors", &divisors, py::arg("n"));
  m.def("gcd", [](const Integer& a, const Integer& b) { return powershift::gcd(a, b); },
        py::arg("a"), py::arg("b"));

  m.def("continued_fraction_sqrt",
        [](const Integer& d) {
          auto cf = continued_fraction_sqrt(d);
          return py::make_tuple(cf.a0, cf.period);
        },
        py::arg("d"), "(a0, period) of the expansion of sqrt(d).");
  m.def("fundamental_solution",
        [](const Integer& d) {
          const auto s = fundamental_solution(d);
          return pair(s.u, s.v);
        },
        py::arg("d"));
  m.def("pell_solutions",
        [](const Integer& d, std::size_t count) {
          py::list out;
          for (const auto& s : pell_solutions(d, count)) out.append(pair(s.u, s.v));
          return out;
        },
        py::arg("d"), py::arg("count"));

  m.def("witness_from_pell",
        [](const Integer& a, const Integer& k, const Integer& u, const Integer& v) {
          const ShiftInstance inst(a, k);
          const auto w = witness_from_pell(inst, {inst.d(), u, v});
          return pair(w.x, w.y);
        },
        py::arg("a"), py::arg("k"), py::arg("u"), py::arg("v"));
  m.def("witness_family",
        [](const Integer& a, const Integer& k, std::size_t count) {
          return witnesses(witness_family(ShiftInstance(a, k), count));
        },
        py::arg("a"), py::arg("k"), py::arg("count"));
  m.def("verify_witness",
        [](const Integer& a, const Integer& k, const Integer& x, const Integer& y) {
          return verify_witness(ShiftInstance(a, k), {x, y});
        },
        py::arg("a"), py::arg("k"), py::arg("x"), py::arg("y"));
  m.def("patil_witness",
        [](const Integer& a) {
          const auto w = patil_witness(a);
          return pair(w.x, w.y);
        },
        py::arg("a"));
  m.def("norm_form_solutions",
        [](const Integer& a, const Integer& k, std::size_t count) {
          py::list out;
          for (const auto& s : norm_form_solutions(ShiftInstance(a, k), count)) {
            out.append(pair(s.z, s.x));
          }
          return out;
        },
        py::arg("a"), py::arg("k"), py::arg("count"), "(z, x) pairs after the base point.");

  m.def("enumerate_square_products",
        [](const Integer& k) {
          py::list out;
          for (const auto& c : enumerate_square_products(k)) {
            py::dict d;
            d["a"] = c.a;
            d["b"] = c.b;
            d["c"] = c.c;
            d["t"] = c.t;
            d["ell"] = c.ell;
            d["root"] = c.root();
            out.append(d);
          }
          return out;
        },
        py::arg("k"));
  m.def("is_square_product", &is_square_product, py::arg("a"), py::arg("k"));

  m.def("find_geometric_pairs",
        [](std::vector<Integer> elements, const Integer& gap_bound, const Integer& horizon,
           const Integer& k, std::size_t tries) {
          const SyndeticSample s{std::move(elements), gap_bound, horizon};
          const auto report = verify_sample(s);
          if (!report.valid()) throw IngestionError(report.violations.front().detail);
          py::list out;
          for (const auto& o : find_geometric_pairs(s, k, tries)) out.append(outcome_dict(o));
          return out;
        },
        py::arg("elements"), py::arg("gap_bound"), py::arg("horizon"), py::arg("k"),
        py::arg("tries") = 1);
  m.def("verify_hitting",
        [](std::vector<Integer> elements, const Integer& horizon, const Integer& k) {
          return verify_hitting({std::move(elements), 1, horizon}, k);
        },
        py::arg("elements"), py::arg("horizon"), py::arg("k"));

  m.def("gcd_obstruction",
        [](const Integer& a, const Integer& k, const Integer& ell) {
          return gcd_obstruction({a, k, ell, 2, 2, 1, 1});
        },
        py::arg("a"), py::arg("k"), py::arg("ell"));
  m.def("search_solutions",
        [](const Integer& a, const Integer& k, const Integer& ell, unsigned long m,
           unsigned long n, const Integer& x_bound, const Integer& y_bound, bool nontrivial,
           unsigned workers) {
          const PowerEquationQuery q{a, k, ell, m, n, x_bound, y_bound, nontrivial ? 2 : 1};
          SearchResult r;
          {
            py::gil_scoped_release release;
            r = search_solutions(q, {workers});
          }
          py::list sols;
          for (const auto& s : r.solutions) sols.append(pair(s.x, s.y));
          py::dict d;
          d["solutions"] = sols;
          d["exhausted"] = r.exhausted;
          d["obstructed"] = r.obstructed;
          return d;
        },
        py::arg("a"), py::arg("k"), py::arg("ell"), py::arg("m") = 2, py::arg("n") = 2,
        py::arg("x_bound") = 100, py::arg("y_bound") = 100, py::arg("nontrivial") = false,
        py::arg("workers") = 1);
  m.def("survey",
        [](std::pair<Integer, Integer> a, std::pair<Integer, Integer> k,
           std::pair<Integer, Integer> ell, unsigned long m, unsigned long n,
           const Integer& bound, bool nontrivial, unsigned workers) {
          const SurveyGrid grid{{a.first, a.second}, {k.first, k.second},
                                {ell.first, ell.second}, m, n, bound, bound,
                                nontrivial ? 2 : 1};
          std::vector<SurveyRow> rows;
          {
            py::gil_scoped_release release;
            rows = survey(grid, {workers});
          }
          py::list out;
          for (const auto& r : rows) {
            py::dict d;
            d["a"] = r.a;
            d["k"] = r.k;
            d["ell"] = r.ell;
            d["m"] = r.m;
            d["n"] = r.n;
            d["count"] = r.count;
            d["obstructed"] = r.obstructed;
            d["exhausted"] = r.exhausted;
            out.append(d);
          }
          return out;
        },
        py::arg("a"), py::arg("k"), py::arg("ell"), py::arg("m") = 2, py::arg("n") = 2,
        py::arg("bound") = 100, py::arg("nontrivial") = false, py::arg("workers") = 1,
        "Solution counts per (a, k, ell) cell; ranges are inclusive (lo, hi) pairs.");
}
