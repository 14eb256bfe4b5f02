// Python bindings. Formulas cross the boundary as opaque handles or as text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dlpa/error.hpp"
#include "dlpa/measures.hpp"
#include "dlpa/parser.hpp"
#include "dlpa/random.hpp"
#include "dlpa/reductions.hpp"
#include "dlpa/semantics.hpp"
#include "dlpa/solver.hpp"

namespace py = pybind11;
using namespace dlpa;

namespace {

Valuation to_valuation(const std::vector<std::string>& names) {
  AtomSet atoms;
  for (const auto& n : names) atoms.insert(Atom(n));
  return Valuation(std::move(atoms));
}

std::vector<std::string> names_of(const AtomSet& atoms) {
  std::vector<std::string> out;
  for (const Atom& a : atoms) out.push_back(a.name());
  return out;
}

Algorithm to_algorithm(const std::string& s) {
  if (s == "auto") return Algorithm::Auto;
  if (s == "star-free") return Algorithm::StarFree;
  if (s == "full") return Algorithm::Full;
  throw py::value_error("algorithm must be 'auto', 'star-free' or 'full'");
}

SolverOptions to_options(bool shuffle, std::uint64_t seed) {
  SolverOptions o;
  if (shuffle) o.picker = PickerMode::Shuffled;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_dlpa, m) {
  m.doc() = "DL-PA model checking and satisfiability by tableaux";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InfeasibleSizeError>(m, "InfeasibleSizeError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse_formula(text); }), py::arg("text"))
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return std::hash<std::string>{}(render(f)); })
      .def("__len__", [](const Formula& f) { return length(f); })
      .def_property_readonly("star_free", [](const Formula& f) { return is_star_free(f); })
      .def_property_readonly("vocabulary", [](const Formula& f) { return names_of(vocabulary(f)); });
  py::implicitly_convertible<std::string, Formula>();

  py::class_<SolverStats>(m, "Stats")
      .def_readonly("rule_applications", &SolverStats::rule_applications)
      .def_readonly("calls", &SolverStats::calls)
      .def_readonly("max_labels_per_call", &SolverStats::max_labels_per_call)
      .def_readonly("max_formulas_per_call", &SolverStats::max_formulas_per_call)
      .def_readonly("max_depth", &SolverStats::max_depth)
      .def_readonly("pre_states", &SolverStats::pre_states)
      .def_readonly("cache_size", &SolverStats::cache_size)
      .def_readonly("max_formulas_per_label", &SolverStats::max_formulas_per_label);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("answer", &Verdict::answer)
      .def_readonly("stats", &Verdict::stats)
      .def_property_readonly("trace",
                             [](const Verdict& v) -> std::optional<std::string> {
                               if (!v.trace) return std::nullopt;
                               return v.trace->serialize();
                             })
      .def("__bool__", [](const Verdict& v) { return v.answer; });

  m.def("parse", [](const std::string& text) { return parse_formula(text); }, py::arg("text"));
  m.def("eval", [](const std::vector<std::string>& model, const Formula& f) {
    return eval(to_valuation(model), f);
  }, py::arg("model"), py::arg("formula"));
  m.def("model_check",
        [](const std::vector<std::string>& model, const Formula& f, const std::string& algorithm,
           bool shuffle, std::uint64_t seed) {
          return model_check(to_valuation(model), f, to_algorithm(algorithm),
                             to_options(shuffle, seed));
        },
        py::arg("model"), py::arg("formula"), py::arg("algorithm") = "auto",
        py::arg("shuffle") = false, py::arg("seed") = 0);
  m.def("sat",
        [](const Formula& f, const std::string& algorithm) { return sat(f, to_algorithm(algorithm)); },
        py::arg("formula"), py::arg("algorithm") = "auto");
  m.def("valid",
        [](const Formula& f, const std::string& algorithm) {
          return valid(f, to_algorithm(algorithm));
        },
        py::arg("formula"), py::arg("algorithm") = "auto");
  m.def("replay",
        [](const std::vector<std::string>& model, const Formula& f, const std::string& trace) {
          return replay(to_valuation(model), f, trace);
        },
        py::arg("model"), py::arg("formula"), py::arg("trace"));
  m.def("oracle_sat", [](const Formula& f, std::size_t cap) { return oracle_sat(f, cap); },
        py::arg("formula"), py::arg("cap") = kDefaultOracleCap);
  m.def("oracle_valid", [](const Formula& f, std::size_t cap) { return oracle_valid(f, cap); },
        py::arg("formula"), py::arg("cap") = kDefaultOracleCap);
  m.def("sat_to_mc", [](const Formula& f) {
    const McInstance mc = sat_to_mc(f);
    return py::make_tuple(names_of(mc.model.atoms()), mc.formula);
  }, py::arg("formula"));
  m.def("mc_to_sat", [](const std::vector<std::string>& model, const Formula& f) {
    return mc_to_sat(to_valuation(model), f);
  }, py::arg("model"), py::arg("formula"));
  m.def("translate_pdl", [](const Formula& f) { return emit_pdl_embedding(f).text(); },
        py::arg("formula"));

  m.def("random_formulas",
        [](std::uint64_t seed, std::size_t count, std::size_t max_atoms, std::size_t max_len,
           double star_probability) {
          GeneratorConfig c;
          c.max_atoms = max_atoms;
          c.max_len = max_len;
          c.star_probability = star_probability;
          FormulaGenerator gen(seed, c);
          std::vector<Formula> out;
          for (std::size_t i = 0; i < count; ++i) out.push_back(gen.formula());
          return out;
        },
        py::arg("seed"), py::arg("count"), py::arg("max_atoms") = 3, py::arg("max_len") = 20,
        py::arg("star_probability") = 0.0);
}
