// Command-line driver: parse, translate, expand, stats, render, serve.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pst/api.hpp"
#include "pst/defstore.hpp"
#include "pst/dzfc_json.hpp"
#include "pst/expand.hpp"
#include "pst/lexicon.hpp"
#include "pst/metrics.hpp"
#include "pst/nl.hpp"
#include "pst/parser.hpp"
#include "pst/render.hpp"
#include "pst/server.hpp"
#include "pst/translator.hpp"

using namespace pst;

namespace {

constexpr int kOk = 0;
constexpr int kDefinitionError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> libs;
  std::string format;
  bool nl = false;
  std::string mode = "full";
  bool alternating = false;
  std::int64_t budget = 1'000'000;
  std::string lexicon;
  std::string store;
  std::string symbol;
  int port = kDefaultPort;
  std::string host = "127.0.0.1";
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Definitions loaded from the inputs, after any library files.
struct Session {
  DefStore store;
  std::vector<std::string> emitted;  // symbols from the inputs, in input order
  int errors = 0;

  void diagnose(const std::string& label, const std::string& message) {
    ++errors;
    std::cerr << (label.empty() ? "" : label + ": ") << message << "\n";
  }

  // Parse errors are reported first, then translation errors in input order.
  void load(const std::string& path, bool emit) {
    auto parsed = parse_corpus(read_file(path), store.symbols());
    for (const auto& e : parsed.errors) diagnose(e.label, path + ": " + e.message);
    for (std::size_t i = 0; i < parsed.definitions.size(); ++i) {
      const auto& d = parsed.definitions[i];
      try {
        store.add(d, parsed.sources[i]);
        if (emit) emitted.push_back(d.symbol);
      } catch (const PstError& e) {
        diagnose(d.label, e.what());
      }
    }
  }
};

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("--format " + c.format + " is not available for " + c.command + " (use " + list + ")");
}

std::optional<Lexicon> load_lexicon(const Config& c) {
  std::string path = c.lexicon;
  if (path.empty()) {
    if (const char* env = std::getenv("PST_LEXICON_PATH")) path = env;
  }
  if (path.empty()) return std::nullopt;
  return with_defaults(parse_lexicon(read_file(path)));
}

std::vector<std::string> selected(const Session& s, const Config& c) {
  if (c.symbol.empty()) return s.emitted;
  const DefNode* n = s.store.find_id(c.symbol);
  if (!n) throw UsageError("no definition '" + c.symbol + "'");
  return {n->symbol};
}

void cmd_parse(Session& s, const Config& c, std::ostream& out) {
  require_format(c, {"text", "latex", "json"});
  nlohmann::json list = nlohmann::json::array();
  for (const auto& sym : s.emitted) {
    const auto& n = s.store.at(sym);
    if (c.format == "json") {
      list.push_back({{"label", n.label},
                      {"symbol", n.symbol},
                      {"kind", n.kind == DefKind::Function ? "function" : "relation"},
                      {"infix", n.infix},
                      {"arity", n.arity},
                      {"params", n.pst->params},
                      {"clauses", n.pst->clauses.size()},
                      {"canonical", render_pst(*n.pst, s.store.symbols())}});
    } else {
      out << render(*n.pst, s.store.symbols(), c.format == "latex" ? PstStyle::Latex : PstStyle::Source) << "\n\n";
    }
  }
  if (c.format == "json") out << nlohmann::json{{"definitions", list}}.dump(2) << "\n";
}

void cmd_translate(Session& s, const Config& c, std::ostream& out) {
  require_format(c, {"latex", "text", "json"});
  if (c.format == "json") {
    out << s.store.to_json().dump(2) << "\n";
    return;
  }
  for (const auto& sym : s.emitted) {
    const auto& n = s.store.at(sym);
    if (c.format == "latex") {
      out << "% " << n.label << "\n$" << render_latex(n.axiom) << "$\n\n";
    } else {
      out << n.label << ": " << dz::to_string(*dz::axiom_formula(n.axiom)) << "\n";
    }
  }
}

void cmd_expand(Session& s, const Config& c, std::ostream& out) {
  require_format(c, {"text", "latex", "json"});
  if (c.mode != "full" && c.mode != "partial") throw UsageError("--mode must be full or partial");
  const bool partial = c.mode == "partial";
  const auto opts = partial ? ExpandOptions::partial(s.store, c.budget) : ExpandOptions::full(c.budget);
  auto profiler = partial ? Profiler::partial(s.store) : Profiler::full(s.store);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& sym : selected(s, c)) {
    const auto& n = s.store.at(sym);
    try {
      const auto e = expand(definiens_formula(n), s.store, opts);
      const auto len = dz::symbol_length(*e);
      const auto depth = quantifier_depth(*e, c.alternating);
      const char* depth_name = c.alternating ? "alternating depth" : "depth";
      if (c.format == "json") {
        list.push_back({{"label", n.label},
                        {"symbol", n.symbol},
                        {"mode", c.mode},
                        {"length", len},
                        {"depth", quantifier_depth(*e, false)},
                        {"alt_depth", quantifier_depth(*e, true)},
                        {"formula", dz::to_json(*e)}});
      } else if (c.format == "latex") {
        out << "% " << n.label << ": length " << len << ", " << depth_name << " " << depth << "\n$"
            << render_latex(*e) << "$\n\n";
      } else {
        out << n.label << ": length " << len << ", " << depth_name << " " << depth << "\n"
            << dz::to_string(*e) << "\n\n";
      }
    } catch (const BudgetExceeded& e) {
      const auto m = profiler.definiens(sym);
      s.diagnose(n.label, std::string(e.what()) + "; full size would be " + std::to_string(m.length) +
                              " symbols, depth " + std::to_string(m.depth) + ", alternating depth " +
                              std::to_string(m.alt_depth));
    }
  }
  if (c.format == "json") out << nlohmann::json{{"expansions", list}}.dump(2) << "\n";
}

void cmd_stats(Session& s, const Config& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const auto report = corpus_report(s.store);
  if (c.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
}

void cmd_render(Session& s, const Config& c, std::ostream& out) {
  require_format(c, {"latex", "nl", "text"});
  std::optional<Lexicon> lex;
  if (c.format == "nl") {
    lex = load_lexicon(c);
    if (!lex) lex = default_lexicon();
  }
  for (const auto& sym : selected(s, c)) {
    const auto& n = s.store.at(sym);
    if (!n.pst) continue;
    if (c.format == "nl") {
      try {
        out << render_nl(*n.pst, *lex, s.store.symbols()) << "\n\n";
      } catch (const RenderError& e) {
        s.diagnose(n.label, e.what());
      }
    } else {
      out << render(*n.pst, s.store.symbols(), c.format == "latex" ? PstStyle::Latex : PstStyle::Source) << "\n\n";
    }
  }
}

int cmd_serve(Session& s, const Config& c) {
  DefStore store = c.store.empty() ? s.store : DefStore::from_json(nlohmann::json::parse(read_file(c.store)));
  if (!c.store.empty()) {
    // Inputs given alongside a store file are added on top of it.
    Session extra;
    extra.store = std::move(store);
    for (const auto& f : c.libs) extra.load(f, false);
    for (const auto& f : c.inputs) extra.load(f, true);
    s.errors += extra.errors;
    store = std::move(extra.store);
  }
  Api api(std::move(store), load_lexicon(c));
  const bool ok = serve(api, c.host, c.port, [](int port) {
    std::cerr << "serving on port " << port << "\n";
  });
  if (!ok) {
    std::cerr << "cannot listen on port " << c.port << "\n";
    return kUsageError;
  }
  return kOk;
}

int run(Config& c) {
  const std::map<std::string, std::string> default_format = {
      {"parse", "text"}, {"translate", "latex"}, {"expand", "text"}, {"stats", "text"}, {"render", "latex"}};
  if (c.nl) {
    if (c.command != "render") throw UsageError("--nl is only available for render");
    if (!c.format.empty() && c.format != "nl") throw UsageError("--nl conflicts with --format " + c.format);
    c.format = "nl";
  }
  if (c.format.empty() && default_format.count(c.command)) c.format = default_format.at(c.command);

  Session s;
  if (c.command != "serve" || c.store.empty()) {
    for (const auto& f : c.libs) s.load(f, false);
    for (const auto& f : c.inputs) s.load(f, true);
  }

  std::ostringstream buffer;
  if (c.command == "parse") cmd_parse(s, c, buffer);
  else if (c.command == "translate") cmd_translate(s, c, buffer);
  else if (c.command == "expand") cmd_expand(s, c, buffer);
  else if (c.command == "stats") cmd_stats(s, c, buffer);
  else if (c.command == "render") cmd_render(s, c, buffer);
  else if (c.command == "serve") {
    const int code = cmd_serve(s, c);
    return code != kOk ? code : (s.errors ? kDefinitionError : kOk);
  }

  if (c.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + c.out);
    f << buffer.str();
  }
  return s.errors ? kDefinitionError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"PST toolchain: parse, translate, expand, measure and render definitions"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool needs_inputs) {
    auto* in = sub->add_option("inputs", c.inputs, "PST files")->check(CLI::ExistingFile);
    if (needs_inputs) in->required();
    sub->add_option("--lib", c.libs, "PST files loaded first and not echoed")->check(CLI::ExistingFile);
    sub->add_option("--out", c.out, "write output to this path");
  };
  auto* parse = app.add_subcommand("parse", "validate and echo definitions");
  common(parse, false);
  parse->add_option("--format", c.format, "text | latex | json");

  auto* translate = app.add_subcommand("translate", "emit DZFC translations");
  common(translate, true);
  translate->add_option("--format", c.format, "latex | text | json (json is the full store)");

  auto* expand = app.add_subcommand("expand", "expand definientia");
  common(expand, true);
  expand->add_option("--format", c.format, "text | latex | json");
  expand->add_option("--mode", c.mode, "full | partial")->check(CLI::IsMember({"full", "partial"}));
  expand->add_flag("--alternating", c.alternating, "report alternating depth");
  expand->add_option("--budget", c.budget, "symbol budget")->check(CLI::PositiveNumber);
  expand->add_option("--symbol", c.symbol, "expand only this label or symbol");

  auto* stats = app.add_subcommand("stats", "quantifier depth and DAG report");
  common(stats, true);
  stats->add_option("--format", c.format, "text | json");

  auto* render = app.add_subcommand("render", "render definitions in LaTeX or English");
  common(render, true);
  render->add_option("--format", c.format, "latex | text | nl");
  render->add_flag("--nl", c.nl, "same as --format nl");
  render->add_option("--lexicon", c.lexicon, "lexicon file (default $PST_LEXICON_PATH)")->check(CLI::ExistingFile);
  render->add_option("--symbol", c.symbol, "render only this label or symbol");

  auto* servecmd = app.add_subcommand("serve", "HTTP API over a definition store");
  common(servecmd, false);
  servecmd->add_option("--store", c.store, "store JSON from `translate --format json`")->check(CLI::ExistingFile);
  servecmd->add_option("--lexicon", c.lexicon, "lexicon file (default $PST_LEXICON_PATH)")->check(CLI::ExistingFile);
  servecmd->add_option("--port", c.port, "port (0 picks a free one)")->check(CLI::Range(0, 65535));
  servecmd->add_option("--host", c.host, "address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

  try {
    return run(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const LexiconError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDefinitionError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDefinitionError;
  }
}
