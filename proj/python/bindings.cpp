#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "flcalc/corpus.hpp"
#include "flcalc/search.hpp"
#include "flcalc/syntax.hpp"
#include "flcalc/translate.hpp"

namespace py = pybind11;
using namespace flcalc;

namespace {

auto toSequent(const py::handle& h) -> Sequent {
  if (py::isinstance<py::str>(h))
    return parseSequent(h.cast<std::string>());
  return h.cast<Sequent>();
}

auto toFormula(const py::handle& h) -> Formula {
  if (py::isinstance<py::str>(h))
    return parseFormula(h.cast<std::string>());
  return h.cast<Formula>();
}

auto toProof(const py::handle& h) -> ProofTree {
  if (py::isinstance<py::str>(h))
    return parseProof(h.cast<std::string>());
  return h.cast<ProofTree>();
}

auto toSystem(const py::handle& h) -> System {
  if (py::isinstance<py::str>(h))
    return parseSystem(h.cast<std::string>());
  return h.cast<System>();
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sequent calculi FL and FL': checking, search, translation";

  py::register_exception<SourceError>(m, "SourceError", PyExc_ValueError);
  py::register_exception<TranslationError>(m, "TranslationError", PyExc_RuntimeError);
  py::register_exception<CorpusError>(m, "CorpusError", PyExc_RuntimeError);
  py::register_exception<UnknownRule>(m, "UnknownRule", PyExc_ValueError);

  py::enum_<System>(m, "System").value("FL", System::FL).value("FLPrime", System::FLPrime);
  py::enum_<SearchStatus>(m, "SearchStatus")
      .value("Provable", SearchStatus::Provable)
      .value("Unprovable", SearchStatus::Unprovable)
      .value("ResourceExceeded", SearchStatus::ResourceExceeded);
  py::enum_<CurryStrategy>(m, "CurryStrategy")
      .value("Tensor", CurryStrategy::Tensor)
      .value("Curried", CurryStrategy::Curried);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& s) { return parseFormula(s); }))
      .def_property_readonly("size", &Formula::size)
      .def(py::self == py::self)
      .def("__lt__", [](const Formula& a, const Formula& b) { return a < b; })
      .def("__hash__", &Formula::hash)
      .def("__str__", &printFormula)
      .def("__repr__", [](const Formula& f) { return "Formula('" + printFormula(f) + "')"; })
      .def("latex", &latexFormula)
      .def("sigma", [](const Formula& f) { return applySymbolMap(SymbolMap::sigma(), f); });

  py::class_<Sequent>(m, "Sequent")
      .def(py::init([](const std::string& s) { return parseSequent(s); }))
      .def_readonly("antecedent", &Sequent::antecedent)
      .def_readonly("succedent", &Sequent::succedent)
      .def_property_readonly("size", &Sequent::size)
      .def(py::self == py::self)
      .def("__hash__", &Sequent::hash)
      .def("__str__", &printSequent)
      .def("__repr__", [](const Sequent& s) { return "Sequent('" + printSequent(s) + "')"; })
      .def("latex", &latexSequent)
      .def("sigma", [](const Sequent& s) { return applySymbolMap(SymbolMap::sigma(), s); })
      .def("subformulas", &subformulaClosure);

  py::class_<ProofTree>(m, "ProofTree")
      .def(py::init([](const std::string& s) { return parseProof(s); }))
      .def_readonly("rule", &ProofTree::rule)
      .def_readonly("conclusion", &ProofTree::conclusion)
      .def_readonly("premises", &ProofTree::premises)
      .def_property_readonly("node_count", &ProofTree::nodeCount)
      .def_property_readonly("height", &ProofTree::height)
      .def("count_rule", &ProofTree::countRule)
      .def(py::self == py::self)
      .def("__str__", &printProof)
      .def("to_json", &printProofJson, py::arg("indent") = 2)
      .def_static("from_json", &parseProofJson)
      .def("latex", &emitLatex);

  py::class_<CheckReport>(m, "CheckReport")
      .def_property_readonly("accepted", &CheckReport::accepted)
      .def_readonly("path", &CheckReport::path)
      .def_readonly("message", &CheckReport::message)
      .def_readonly("offending", &CheckReport::offending)
      .def_property_readonly("reason", [](const CheckReport& r) { return std::string(rejectReasonText(r.reason)); })
      .def("__bool__", &CheckReport::accepted);

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("status", &SearchOutcome::status)
      .def_readonly("witness", &SearchOutcome::witness)
      .def_readonly("limit", &SearchOutcome::limit)
      .def_property_readonly("provable", &SearchOutcome::provable);

  py::class_<TranslationTrace>(m, "TranslationTrace")
      .def_readonly("output", &TranslationTrace::output)
      .def_readonly("cuts_introduced", &TranslationTrace::cutsIntroduced);

  m.def("parse_formula", &parseFormula);
  m.def("parse_sequent", &parseSequent);
  m.def("parse_proof", &parseProof);

  m.def("check_proof", [](py::handle sys, py::handle p) { return checkProof(toSystem(sys), toProof(p)); },
        py::arg("system"), py::arg("proof"));

  m.def("premise_candidates",
        [](py::handle sys, const std::string& rule, py::handle c) {
          return premiseCandidates(toSystem(sys), rule, toSequent(c));
        },
        py::arg("system"), py::arg("rule"), py::arg("conclusion"));

  m.def("decide_cut_free", [](py::handle sys, py::handle goal) { return decideCutFree(toSystem(sys), toSequent(goal)); },
        py::arg("system"), py::arg("goal"));

  m.def("search_with_cuts",
        [](py::handle sys, py::handle goal, const py::iterable& pool, std::size_t depth) {
          CutBudget budget{{}, depth};
          for (auto f : pool)
            budget.pool.push_back(toFormula(f));
          py::gil_scoped_release release;
          return searchWithCuts(toSystem(sys), toSequent(goal), budget);
        },
        py::arg("system"), py::arg("goal"), py::arg("pool"), py::arg("depth"));

  m.def("translate_to_flprime",
        [](py::handle p, CurryStrategy strategy, bool literal) {
          return translateToFLPrime(toProof(p), TranslateOptions{strategy, literal});
        },
        py::arg("proof"), py::arg("strategy") = CurryStrategy::Tensor, py::arg("literal") = false);

  m.def("embed_to_fl", [](py::handle p) { return embedToFL(toProof(p)); }, py::arg("proof"));

  m.def("curry_context",
        [](const py::iterable& ctx, py::handle goal, CurryStrategy strategy) {
          FormulaList list;
          for (auto f : ctx)
            list.push_back(toFormula(f));
          std::optional<Formula> g;
          if (!goal.is_none())
            g = toFormula(goal);
          return curryContext(list, g, strategy);
        },
        py::arg("context"), py::arg("goal"), py::arg("strategy") = CurryStrategy::Tensor);

  m.def("run_corpus",
        [](const std::filesystem::path& dir) {
          const auto report = runCorpus(dir);
          std::ostringstream out;
          printReport(report, out);
          return py::make_tuple(report.ok(), out.str());
        },
        py::arg("directory"));
}
