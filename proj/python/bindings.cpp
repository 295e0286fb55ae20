#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pst/defstore.hpp"
#include "pst/dzfc_json.hpp"
#include "pst/expand.hpp"
#include "pst/lexicon.hpp"
#include "pst/metrics.hpp"
#include "pst/nl.hpp"
#include "pst/parser.hpp"
#include "pst/render.hpp"

namespace py = pybind11;
using namespace pst;

namespace {

// A definition store that grows as PST text is loaded. JSON results are
// returned as strings and decoded on the Python side.
class Corpus {
 public:
  // Returns the errors as (label, line, column, message) tuples; definitions
  // that parse and translate are kept.
  std::vector<std::tuple<std::string, int, int, std::string>> load(const std::string& text) {
    std::vector<std::tuple<std::string, int, int, std::string>> errors;
    auto parsed = parse_corpus(text, store_.symbols());
    for (const auto& e : parsed.errors) errors.emplace_back(e.label, e.pos.line, e.pos.column, e.message);
    for (std::size_t i = 0; i < parsed.definitions.size(); ++i) {
      try {
        store_.add(parsed.definitions[i], parsed.sources[i]);
      } catch (const PstError& e) {
        errors.emplace_back(parsed.definitions[i].label, 0, 0, e.what());
      }
    }
    return errors;
  }

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (const auto& s : store_.order()) {
      if (!store_.at(s).builtin) out.push_back(s);
    }
    return out;
  }

  std::string label(const std::string& id) const { return node(id).label; }
  std::string translate(const std::string& id) const { return dz::to_string(*dz::axiom_formula(node(id).axiom)); }
  std::string dzfc_json(const std::string& id) const { return dz::to_json(node(id).axiom).dump(); }
  std::string dzfc_latex(const std::string& id) const { return render_latex(node(id).axiom); }

  std::string pst_latex(const std::string& id) const {
    const auto& n = node(id);
    if (!n.pst) throw PstError("'" + id + "' is built in");
    return render_latex(*n.pst, store_.symbols());
  }

  std::string render_nl(const std::string& id, const std::string& lexicon_text) const {
    const auto& n = node(id);
    if (!n.pst) throw PstError("'" + id + "' is built in");
    return pst::render_nl(*n.pst, with_defaults(parse_lexicon(lexicon_text)), store_.symbols());
  }

  std::string expand(const std::string& id, const std::string& mode, std::int64_t budget) const {
    const auto opts = mode_is_partial(mode) ? ExpandOptions::partial(store_, budget) : ExpandOptions::full(budget);
    return dz::to_string(*pst::expand(definiens_formula(node(id)), store_, opts));
  }

  std::tuple<std::int64_t, std::int64_t, std::int64_t> profile(const std::string& id, const std::string& mode) const {
    auto prof = mode_is_partial(mode) ? Profiler::partial(store_) : Profiler::full(store_);
    const auto m = prof.definiens(node(id).symbol);
    return {m.length, m.depth, m.alt_depth};
  }

  std::tuple<std::int64_t, std::int64_t> dag(const std::string& id) const {
    const auto d = dag_of(store_, node(id).symbol);
    return {static_cast<std::int64_t>(dag_size(d)), dag_depth(d)};
  }

  std::vector<std::string> deps(const std::string& id) const { return node(id).deps; }
  std::string stats() const { return corpus_report(store_).to_json().dump(); }
  std::string store_json() const { return store_.to_json().dump(); }

 private:
  const DefNode& node(const std::string& id) const {
    const DefNode* n = store_.find_id(id);
    if (!n) throw UnknownDefinition(id);
    return *n;
  }

  static bool mode_is_partial(const std::string& mode) {
    if (mode == "full") return false;
    if (mode == "partial") return true;
    throw std::invalid_argument("mode must be 'full' or 'partial'");
  }

  DefStore store_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "PST parsing, DZFC translation, expansion metrics and rendering";

  auto base = py::register_exception<PstError>(m, "PstError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<UnknownDefinition>(m, "UnknownDefinition", base.ptr());
  py::register_exception<LexiconError>(m, "LexiconError", base.ptr());
  py::register_exception<RenderError>(m, "RenderError", base.ptr());

  m.attr("COUNT_CAP") = kCountCap;

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def("load", &Corpus::load, py::arg("text"))
      .def("symbols", &Corpus::symbols)
      .def("label", &Corpus::label, py::arg("id"))
      .def("translate", &Corpus::translate, py::arg("id"))
      .def("dzfc_json", &Corpus::dzfc_json, py::arg("id"))
      .def("dzfc_latex", &Corpus::dzfc_latex, py::arg("id"))
      .def("pst_latex", &Corpus::pst_latex, py::arg("id"))
      .def("render_nl", &Corpus::render_nl, py::arg("id"), py::arg("lexicon"))
      .def("expand", &Corpus::expand, py::arg("id"), py::arg("mode") = "full", py::arg("budget") = kCountCap)
      .def("profile", &Corpus::profile, py::arg("id"), py::arg("mode") = "full")
      .def("dag", &Corpus::dag, py::arg("id"))
      .def("deps", &Corpus::deps, py::arg("id"))
      .def("stats", &Corpus::stats)
      .def("store_json", &Corpus::store_json);

  m.def(
      "parse_lexicon",
      [](const std::string& text) {
        std::map<std::string, std::map<std::string, std::string>> out;
        const Lexicon lex = parse_lexicon(text);
        for (const auto& [name, e] : lex.entries()) out[name] = e.clauses;
        return out;
      },
      py::arg("text"), "Entries of a lexicon file as {name: {clause: template}}.");
}
