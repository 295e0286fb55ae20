#include "pst/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "pst/earley.hpp"

namespace pst {

namespace {

using earley::GSym;
using earley::N;
using earley::ParseNode;
using earley::T;

enum Tag {
  kPass,
  kClausesOne, kClausesMore,
  kClauseIf, kClauseOtherwise, kClausePlain,
  kHeadPrefix, kHeadBracket, kHeadInfix, kHeadConst,
  kBodySimeq, kBodyIff, kBodyUndef,
  kVarListOne, kVarListMore,
  kIff, kImp, kOr, kAnd, kNot, kQuantified,
  kQPrefix, kQPrefixBounded,
  kParenFormula,
  kRelApp, kRel0, kChainTwo, kChainMore,
  kMulti, kSimeq, kUp, kDown, kSetRel,
  kArgsOne, kArgsMore,
  kInfixApp,
  kVar, kFun0, kFunK, kSetApp, kParenTerm, kTuple, kEmptySet, kFinSet,
  kSetBuilder, kSetBuilderFixed, kSetBuilderBounded, kSetBuilderBoundedFixed,
  kLambda, kLambdaBounded,
  kIota, kIotaBounded, kIotaTupleBounded,
  kIotaPatVar, kIotaPatTuple,
};

enum class Start { Definition, Term, Formula };

std::string ifun_terminal(int level) { return "IFUN@" + std::to_string(level); }

std::unique_ptr<earley::Grammar> build_grammar(const std::vector<int>& levels, Start start) {
  auto g = std::make_unique<earley::Grammar>();
  auto t = [&](const char* name) { return T(g->terminal(name)); };
  auto n = [&](const char* name) { return N(g->nonterminal(name)); };

  const GSym start_sym = n("Start");
  g->set_start(start_sym.id);
  const GSym clauses = n("Clauses"), clause = n("Clause"), head = n("Head"), body = n("Body");
  const GSym varlist = n("VarList"), formula = n("Formula"), iff = n("Iff"), imp = n("Imp"), disj = n("Or"),
             conj = n("And"), unary = n("Unary"), qprefix = n("QPrefix"), atom = n("Atom"), chain = n("Chain"),
             args = n("Args"), term = n("Term"), primary = n("Primary"), setapp = n("SetApp"),
             apphead = n("AppHead"), iotapat = n("IotaPat");

  const GSym VAR = t("VAR"), FUNK = t("FUNK"), FUN0 = t("FUN0"), REL = t("REL"), REL0 = t("REL0"),
             IREL = t("IREL"), DEFSYM = t("DEFSYM"), SIMEQ = t("\\simeq");
  const GSym LP = t("("), RP = t(")"), LB = t("["), RB = t("]"), LC = t("{"), RC = t("}"), LA = t("<"),
             RA = t(">"), COMMA = t(","), COLON = t(":"), DOT = t("."), BANG = t("!");
  const GSym IF = t("If"), THEN = t("then"), OTHERWISE = t("Otherwise"), FIXED = t("fixed");
  const GSym AND = t("\\wedge"), OR = t("\\vee"), NOT = t("\\neg"), IMP = t("\\rightarrow"), IFF = t("\\iff"),
             ALL = t("\\forall"), EX = t("\\exists"), LAMBDA = t("\\lambda"), UP = t("\\uparrow"),
             DOWN = t("\\downarrow");
  t("NUMBER");
  t("KEYWORD");

  switch (start) {
    case Start::Definition: g->rule(start_sym.id, {clauses}, kPass); break;
    case Start::Term: g->rule(start_sym.id, {term}, kPass); break;
    case Start::Formula: g->rule(start_sym.id, {formula}, kPass); break;
  }

  g->rule(clauses.id, {clause}, kClausesOne);
  g->rule(clauses.id, {clauses, clause}, kClausesMore);
  g->rule(clause.id, {IF, formula, THEN, head, body, DOT}, kClauseIf);
  g->rule(clause.id, {OTHERWISE, head, body, DOT}, kClauseOtherwise);
  g->rule(clause.id, {head, body, DOT}, kClausePlain);
  g->rule(head.id, {DEFSYM, LP, varlist, RP}, kHeadPrefix);
  g->rule(head.id, {DEFSYM, LB, varlist, RB}, kHeadBracket);
  g->rule(head.id, {VAR, DEFSYM, VAR}, kHeadInfix);
  g->rule(head.id, {DEFSYM}, kHeadConst);
  g->rule(body.id, {SIMEQ, term}, kBodySimeq);
  g->rule(body.id, {IFF, formula}, kBodyIff);
  g->rule(body.id, {UP}, kBodyUndef);
  g->rule(varlist.id, {VAR}, kVarListOne);
  g->rule(varlist.id, {varlist, COMMA, VAR}, kVarListMore);

  g->rule(formula.id, {iff}, kPass);
  g->rule(iff.id, {imp, IFF, imp}, kIff);
  g->rule(iff.id, {imp}, kPass);
  g->rule(imp.id, {disj, IMP, imp}, kImp);
  g->rule(imp.id, {disj}, kPass);
  g->rule(disj.id, {disj, OR, conj}, kOr);
  g->rule(disj.id, {conj}, kPass);
  g->rule(conj.id, {conj, AND, unary}, kAnd);
  g->rule(conj.id, {unary}, kPass);
  g->rule(unary.id, {NOT, unary}, kNot);
  g->rule(unary.id, {qprefix, unary}, kQuantified);
  g->rule(unary.id, {atom}, kPass);
  for (GSym q : {ALL, EX}) {
    g->rule(qprefix.id, {LP, q, varlist, RP}, kQPrefix);
    g->rule(qprefix.id, {LP, q, varlist, IREL, term, RP}, kQPrefixBounded);
  }
  g->rule(atom.id, {LP, formula, RP}, kParenFormula);
  g->rule(atom.id, {REL, LB, args, RB}, kRelApp);
  g->rule(atom.id, {REL0}, kRel0);
  g->rule(atom.id, {chain}, kPass);
  g->rule(atom.id, {term, COMMA, args, IREL, term}, kMulti);
  g->rule(atom.id, {term, SIMEQ, term}, kSimeq);
  g->rule(atom.id, {term, UP}, kUp);
  g->rule(atom.id, {term, DOWN}, kDown);
  g->rule(atom.id, {term, VAR, term}, kSetRel);
  g->rule(chain.id, {term, IREL, term}, kChainTwo);
  g->rule(chain.id, {chain, IREL, term}, kChainMore);
  g->rule(args.id, {term}, kArgsOne);
  g->rule(args.id, {args, COMMA, term}, kArgsMore);

  // One nonterminal per precedence level, loosest first.
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const GSym level = N(g->nonterminal("Level" + std::to_string(levels[i])));
    const GSym op = T(g->terminal(ifun_terminal(levels[i])));
    if (i == 0) g->rule(term.id, {level}, kPass);
    const GSym tighter = (i + 1 < levels.size()) ? N(g->nonterminal("Level" + std::to_string(levels[i + 1])))
                                                 : primary;
    g->rule(level.id, {level, op, tighter}, kInfixApp);
    g->rule(level.id, {tighter}, kPass);
  }
  if (levels.empty()) g->rule(term.id, {primary}, kPass);

  g->rule(primary.id, {VAR}, kVar);
  g->rule(primary.id, {FUN0}, kFun0);
  g->rule(primary.id, {FUNK, LP, args, RP}, kFunK);
  g->rule(primary.id, {setapp}, kPass);
  g->rule(primary.id, {LP, term, RP}, kParenTerm);
  g->rule(primary.id, {LA, term, COMMA, args, RA}, kTuple);
  g->rule(primary.id, {LC, RC}, kEmptySet);
  g->rule(primary.id, {LC, args, RC}, kFinSet);
  g->rule(primary.id, {LC, term, COLON, formula, RC}, kSetBuilder);
  g->rule(primary.id, {LC, term, COLON, formula, COMMA, varlist, FIXED, RC}, kSetBuilderFixed);
  g->rule(primary.id, {LC, VAR, IREL, term, COLON, formula, RC}, kSetBuilderBounded);
  g->rule(primary.id, {LC, VAR, IREL, term, COLON, formula, COMMA, varlist, FIXED, RC}, kSetBuilderBoundedFixed);
  g->rule(primary.id, {LP, LAMBDA, VAR, RP, LP, term, RP}, kLambda);
  g->rule(primary.id, {LP, LAMBDA, VAR, IREL, term, RP, LP, term, RP}, kLambdaBounded);
  g->rule(primary.id, {LP, BANG, iotapat, RP, LP, formula, RP}, kIota);
  g->rule(primary.id, {LP, BANG, VAR, IREL, term, RP, LP, formula, RP}, kIotaBounded);
  g->rule(primary.id, {LP, BANG, LA, VAR, COMMA, varlist, RA, IREL, term, RP, LP, formula, RP},
          kIotaTupleBounded);
  g->rule(iotapat.id, {VAR}, kIotaPatVar);
  g->rule(iotapat.id, {LA, VAR, COMMA, varlist, RA}, kIotaPatTuple);
  g->rule(setapp.id, {apphead, LP, args, RP}, kSetApp);
  g->rule(apphead.id, {VAR}, kVar);
  g->rule(apphead.id, {FUN0}, kFun0);
  g->rule(apphead.id, {setapp}, kPass);
  g->rule(apphead.id, {LP, term, RP}, kParenTerm);
  return g;
}

const earley::Grammar& grammar_for(const std::vector<int>& levels, Start start) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, Start>, std::unique_ptr<earley::Grammar>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{levels, start}];
  if (!slot) slot = build_grammar(levels, start);
  return *slot;
}

thread_local std::size_t g_last_items = 0;

// ---------------------------------------------------------------------------
// Token classification

std::string strip_primes(std::string s) {
  while (!s.empty() && s.back() == '\'') s.pop_back();
  return s;
}

bool is_greek(const std::string& cmd) {
  static const char* names[] = {"alpha", "beta",  "gamma", "delta", "epsilon", "varepsilon", "zeta",  "eta",
                                "theta", "vartheta", "iota", "kappa", "mu", "nu", "xi", "pi", "rho",
                                "sigma", "tau", "upsilon", "phi", "varphi", "chi", "psi", "omega", "Gamma",
                                "Delta", "Theta", "Lambda", "Xi", "Pi", "Sigma", "Upsilon", "Phi", "Psi",
                                "Omega"};
  for (const char* n : names) {
    if (cmd == std::string("\\") + n) return true;
  }
  return false;
}

bool is_variable_font(const std::string& cmd) {
  return cmd.rfind("\\mathscr{", 0) == 0 || cmd.rfind("\\mathcal{", 0) == 0 || cmd.rfind("\\mathfrak{", 0) == 0;
}

enum class Lexical { Variable, Function, Relation, Unknown };

Lexical lexical_class(const Token& tok) {
  std::string base = strip_primes(tok.kind == TokenKind::SubscriptedSymbol ? tok.base : tok.value);
  if (base.empty()) return Lexical::Unknown;
  if (base[0] == '\\') return (is_variable_font(base) || is_greek(base)) ? Lexical::Variable : Lexical::Unknown;
  if (!std::isalpha(static_cast<unsigned char>(base[0]))) return Lexical::Unknown;
  int upper = 0, lower = 0;
  for (char c : base) {
    if (std::isupper(static_cast<unsigned char>(c))) ++upper;
    if (std::islower(static_cast<unsigned char>(c))) ++lower;
  }
  if (base.size() >= 2 && lower == 0 && upper >= 2) return Lexical::Relation;
  if (base.size() >= 2 && std::isupper(static_cast<unsigned char>(base[0])) && lower > 0) return Lexical::Function;
  return Lexical::Variable;
}

class Classifier {
 public:
  Classifier(const earley::Grammar& g, const SymbolTable& symbols, std::string defsym)
      : g_(g), symbols_(symbols), defsym_(std::move(defsym)) {}

  std::vector<int> run(const std::vector<Token>& toks) const {
    std::vector<int> out;
    out.reserve(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const Token* next = i + 1 < toks.size() ? &toks[i + 1] : nullptr;
      out.push_back(term(classify(toks[i], next)));
    }
    return out;
  }

 private:
  int term(const std::string& name) const {
    const int id = g_.find_terminal(name);
    return id >= 0 ? id : g_.find_terminal("KEYWORD");
  }

  std::string classify(const Token& tok, const Token* next) const {
    switch (tok.kind) {
      case TokenKind::Punctuation:
        return tok.value == "=" ? "IREL" : tok.value;
      case TokenKind::Number:
        return "NUMBER";
      case TokenKind::Keyword:
        return tok.value;
      default:
        break;
    }
    if (!defsym_.empty() && tok.value == defsym_) return "DEFSYM";
    if (const SymbolInfo* info = symbols_.find(tok.value)) {
      if (info->kind == DefKind::Function) {
        if (info->infix) {
          if (!info->precedence) throw UnknownSymbolError(tok.value, tok.pos);
          return ifun_terminal(*info->precedence);
        }
        return info->arity == 0 ? "FUN0" : "FUNK";
      }
      if (info->infix) return "IREL";
      return info->arity == 0 ? "REL0" : "REL";
    }
    switch (lexical_class(tok)) {
      case Lexical::Variable: return "VAR";
      case Lexical::Relation: return "REL";
      case Lexical::Function: return (next && next->value == "(" && next->kind == TokenKind::Punctuation) ? "FUNK" : "FUN0";
      case Lexical::Unknown: break;
    }
    throw UnknownSymbolError(tok.value, tok.pos);
  }

  const earley::Grammar& g_;
  const SymbolTable& symbols_;
  std::string defsym_;
};

// ---------------------------------------------------------------------------
// Tree to AST

struct Head {
  std::vector<std::string> params;
  int form = kHeadConst;
  SourcePos pos;
};

class Builder {
 public:
  explicit Builder(const std::vector<Token>& toks) : toks_(toks) {}

  const Token& tok(const ParseNode& n, std::size_t i) const { return toks_[n.children[i].token]; }
  static const ParseNode& sub(const ParseNode& n, std::size_t i) { return *n.children[i].node; }

  const ParseNode& unwrap(const ParseNode& n) const {
    const ParseNode* p = &n;
    while (p->tag == kPass) p = p->children[0].node.get();
    return *p;
  }

  std::vector<std::string> varlist(const ParseNode& raw) const {
    std::vector<std::string> out;
    const ParseNode* n = &raw;
    while (n->tag == kVarListMore) {
      out.push_back(tok(*n, 2).value);
      n = &sub(*n, 0);
    }
    out.push_back(tok(*n, 0).value);
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<PstTermPtr> args(const ParseNode& raw) const {
    std::vector<PstTermPtr> out;
    const ParseNode* n = &raw;
    while (n->tag == kArgsMore) {
      out.push_back(term(sub(*n, 2)));
      n = &sub(*n, 0);
    }
    out.push_back(term(sub(*n, 0)));
    std::reverse(out.begin(), out.end());
    return out;
  }

  PstTermPtr term(const ParseNode& raw) const {
    const ParseNode& n = unwrap(raw);
    switch (n.tag) {
      case kInfixApp: return pt::infix(tok(n, 1).value, term(sub(n, 0)), term(sub(n, 2)));
      case kVar: return pt::var(tok(n, 0).value);
      case kFun0: return pt::fun(tok(n, 0).value);
      case kFunK: return pt::fun(tok(n, 0).value, args(sub(n, 2)));
      case kSetApp: return pt::setapp(term(sub(n, 0)), args(sub(n, 2)));
      case kParenTerm: return term(sub(n, 1));
      case kTuple: {
        auto rest = args(sub(n, 3));
        rest.insert(rest.begin(), term(sub(n, 1)));
        return pt::tuple(std::move(rest));
      }
      case kEmptySet: return pt::finite_set({});
      case kFinSet: return pt::finite_set(args(sub(n, 1)));
      case kSetBuilder: return pt::set_builder(term(sub(n, 1)), std::nullopt, formula(sub(n, 3)));
      case kSetBuilderFixed:
        return pt::set_builder(term(sub(n, 1)), std::nullopt, formula(sub(n, 3)), varlist(sub(n, 5)));
      case kSetBuilderBounded:
        return pt::set_builder(pt::var(tok(n, 1).value), Bound{tok(n, 2).value, term(sub(n, 3))},
                               formula(sub(n, 5)));
      case kSetBuilderBoundedFixed:
        return pt::set_builder(pt::var(tok(n, 1).value), Bound{tok(n, 2).value, term(sub(n, 3))},
                               formula(sub(n, 5)), varlist(sub(n, 7)));
      case kLambda: return pt::lambda(tok(n, 2).value, std::nullopt, term(sub(n, 5)));
      case kLambdaBounded:
        return pt::lambda(tok(n, 2).value, Bound{tok(n, 3).value, term(sub(n, 4))}, term(sub(n, 7)));
      case kIota: {
        const ParseNode& pat = sub(n, 2);
        if (pat.tag == kIotaPatVar) return pt::iota({tok(pat, 0).value}, false, std::nullopt, formula(sub(n, 5)));
        auto vars = varlist(sub(pat, 3));
        vars.insert(vars.begin(), tok(pat, 1).value);
        return pt::iota(std::move(vars), true, std::nullopt, formula(sub(n, 5)));
      }
      case kIotaBounded:
        return pt::iota({tok(n, 2).value}, false, Bound{tok(n, 3).value, term(sub(n, 4))}, formula(sub(n, 7)));
      case kIotaTupleBounded: {
        auto vars = varlist(sub(n, 5));
        vars.insert(vars.begin(), tok(n, 3).value);
        return pt::iota(std::move(vars), true, Bound{tok(n, 7).value, term(sub(n, 8))}, formula(sub(n, 11)));
      }
      default: break;
    }
    throw std::logic_error("unexpected term node");
  }

  PstFormulaPtr formula(const ParseNode& raw) const {
    const ParseNode& n = unwrap(raw);
    switch (n.tag) {
      case kIff: return pt::binary(Connective::Iff, formula(sub(n, 0)), formula(sub(n, 2)));
      case kImp: return pt::binary(Connective::Implies, formula(sub(n, 0)), formula(sub(n, 2)));
      case kOr: return pt::binary(Connective::Or, formula(sub(n, 0)), formula(sub(n, 2)));
      case kAnd: return pt::binary(Connective::And, formula(sub(n, 0)), formula(sub(n, 2)));
      case kNot: return pt::neg(formula(sub(n, 1)));
      case kQuantified: {
        const ParseNode& q = sub(n, 0);
        const Quantifier kind = tok(q, 1).value == "\\forall" ? Quantifier::Forall : Quantifier::Exists;
        std::optional<Bound> bound;
        if (q.tag == kQPrefixBounded) bound = Bound{tok(q, 3).value, term(sub(q, 4))};
        auto vars = varlist(sub(q, 2));
        check_distinct(vars, tok(q, 0).pos);
        return pt::quant(kind, std::move(vars), std::move(bound), formula(sub(n, 1)));
      }
      case kParenFormula: return formula(sub(n, 1));
      case kRelApp: return pt::rel(tok(n, 0).value, args(sub(n, 2)));
      case kRel0: return pt::rel(tok(n, 0).value, {});
      case kChainTwo:
      case kChainMore: {
        std::vector<PstTermPtr> terms;
        std::vector<std::string> rels;
        const ParseNode* c = &n;
        while (c->tag == kChainMore) {
          terms.push_back(term(sub(*c, 2)));
          rels.push_back(tok(*c, 1).value);
          c = &sub(*c, 0);
        }
        terms.push_back(term(sub(*c, 2)));
        rels.push_back(tok(*c, 1).value);
        terms.push_back(term(sub(*c, 0)));
        std::reverse(terms.begin(), terms.end());
        std::reverse(rels.begin(), rels.end());
        return pt::chain(std::move(terms), std::move(rels));
      }
      case kMulti: {
        auto rest = args(sub(n, 2));
        rest.insert(rest.begin(), term(sub(n, 0)));
        return pt::multi(std::move(rest), tok(n, 3).value, term(sub(n, 4)));
      }
      case kSimeq: return pt::pequal(term(sub(n, 0)), term(sub(n, 2)));
      case kUp: return pt::undefined(term(sub(n, 0)));
      case kDown: return pt::defined(term(sub(n, 0)));
      case kSetRel: return pt::setrel(pt::var(tok(n, 1).value), term(sub(n, 0)), term(sub(n, 2)));
      default: break;
    }
    throw std::logic_error("unexpected formula node");
  }

  Head head(const ParseNode& n) const {
    Head h;
    h.form = n.tag;
    switch (n.tag) {
      case kHeadPrefix:
      case kHeadBracket:
        h.params = varlist(sub(n, 2));
        h.pos = tok(n, 0).pos;
        break;
      case kHeadInfix:
        h.params = {tok(n, 0).value, tok(n, 2).value};
        h.pos = tok(n, 1).pos;
        break;
      default:
        h.pos = tok(n, 0).pos;
        break;
    }
    return h;
  }

  void clauses(const ParseNode& raw, PstDefinition& def) const {
    std::vector<const ParseNode*> list;
    const ParseNode* n = &unwrap(raw);
    while (n->tag == kClausesMore) {
      list.push_back(&sub(*n, 1));
      n = &sub(*n, 0);
    }
    list.push_back(&sub(*n, 0));
    std::reverse(list.begin(), list.end());

    bool params_set = false;
    for (const ParseNode* c : list) {
      Clause clause;
      std::size_t head_idx = 0;
      if (c->tag == kClauseIf) {
        clause.guard = formula(sub(*c, 1));
        head_idx = 3;
      } else if (c->tag == kClauseOtherwise) {
        clause.otherwise = true;
        head_idx = 1;
      }
      const Head h = head(sub(*c, head_idx));
      check_head(def, h);
      if (!params_set) {
        def.params = h.params;
        params_set = true;
      } else if (h.params != def.params) {
        throw ParseError("clause head parameters differ from the first clause", h.pos);
      }
      const ParseNode& b = sub(*c, head_idx + 1);
      if (b.tag == kBodySimeq) {
        if (def.kind != DefKind::Function) throw ParseError("relation defined with \\simeq", h.pos);
        clause.body = term(sub(b, 1));
      } else if (b.tag == kBodyIff) {
        if (def.kind != DefKind::Relation) throw ParseError("function defined with \\iff", h.pos);
        clause.body = formula(sub(b, 1));
      } else {
        if (def.kind != DefKind::Function) throw ParseError("relations cannot be undefined", h.pos);
        clause.body = UndefinedBody{};
      }
      if (!clause.guard && !clause.otherwise && list.size() > 1) clause.otherwise = true;
      def.clauses.push_back(std::move(clause));
    }
    for (std::size_t i = 0; i < def.clauses.size(); ++i) {
      if (!def.clauses[i].guard && i + 1 != def.clauses.size()) {
        throw ParseError("only the last clause may be unguarded", {});
      }
    }
  }

  void check_head(const PstDefinition& def, const Head& h) const {
    int expected = kHeadConst;
    if (def.infix) {
      expected = kHeadInfix;
    } else if (def.arity > 0) {
      expected = def.kind == DefKind::Function ? kHeadPrefix : kHeadBracket;
    }
    if (h.form != expected) throw ParseError("definition head does not match its header", h.pos);
    if (static_cast<int>(h.params.size()) != def.arity) {
      throw ParseError("head has " + std::to_string(h.params.size()) + " parameters, header declares " +
                           std::to_string(def.arity),
                       h.pos);
    }
    check_distinct(h.params, h.pos);
  }

  static void check_distinct(const std::vector<std::string>& vars, SourcePos pos) {
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("binder names must be distinct", pos);
    }
  }

 private:
  const std::vector<Token>& toks_;
};

void check_iota_patterns(const PstTerm& t);

template <class Node>
std::unique_ptr<ParseNode> run_earley(const earley::Grammar& g, const std::vector<Token>& toks,
                                      const std::vector<int>& input, SourcePos end_pos) {
  auto outcome = earley::parse(g, input);
  g_last_items = outcome.item_count;
  if (!outcome.tree) {
    const auto& f = outcome.failure;
    const SourcePos pos = f.position < toks.size() ? toks[f.position].pos : end_pos;
    const std::string what =
        f.position < toks.size() ? "unexpected '" + toks[f.position].text + "'" : "unexpected end of input";
    throw ParseError(what, pos, f.expected);
  }
  if (outcome.ambiguous) {
    throw AmbiguityError("ambiguous input: more than one parse survives precedence resolution",
                         {earley::to_sexpr(g, *outcome.tree), earley::to_sexpr(g, *outcome.alternative)});
  }
  return std::move(outcome.tree);
}

SourcePos end_of(const std::vector<Token>& toks) {
  if (toks.empty()) return {1, 1};
  SourcePos p = toks.back().pos;
  p.column += static_cast<int>(toks.back().text.size());
  return p;
}

}  // namespace

std::size_t last_earley_item_count() { return g_last_items; }

PstDefinition parse_definition(const std::vector<Token>& tokens, const SymbolTable& symbols) {
  PstDefinition def;
  std::size_t i = 0;
  auto at_end = [&] { return i >= tokens.size(); };
  auto expect = [&](bool ok, const char* what) {
    if (!ok) {
      throw ParseError(std::string("malformed definition header: expected ") + what,
                       at_end() ? end_of(tokens) : tokens[i].pos);
    }
  };

  expect(!at_end() && tokens[i].value == "DEFINITION", "DEFINITION");
  ++i;
  while (!at_end() && tokens[i].value != ":") def.label += tokens[i++].text;
  expect(!def.label.empty() && !at_end(), "label followed by ':'");
  ++i;
  expect(!at_end(), "arity or 'Infix'");
  const std::string& form = tokens[i].value;
  if (form == "Infix") {
    def.infix = true;
    def.arity = 2;
  } else if (tokens[i].kind == TokenKind::Keyword && form.size() > 4 && form.substr(form.size() - 4) == "-ary") {
    def.arity = std::stoi(form.substr(0, form.size() - 4));
  } else {
    expect(false, "'<k>-ary' or 'Infix'");
  }
  ++i;
  expect(!at_end() && (tokens[i].value == "function" || tokens[i].value == "relation"), "'function' or 'relation'");
  def.kind = tokens[i].value == "function" ? DefKind::Function : DefKind::Relation;
  ++i;
  expect(!at_end(), "defined symbol");
  def.symbol = tokens[i].value;
  ++i;
  expect(!at_end() && tokens[i].value == ".", "'.' after the defined symbol");
  ++i;

  std::size_t end = tokens.size();
  if (end >= i + 3 && tokens[end - 3].value == "Precedence" && tokens[end - 1].value == ".") {
    expect(tokens[end - 2].kind == TokenKind::Number, "precedence number");
    def.precedence = std::stoi(tokens[end - 2].value);
    end -= 3;
  }
  if (def.infix && def.kind == DefKind::Function && !def.precedence) {
    throw ParseError("infix function " + def.symbol + " needs a Precedence", tokens[0].pos);
  }

  std::vector<Token> body(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                          tokens.begin() + static_cast<std::ptrdiff_t>(end));
  if (body.empty()) throw ParseError("definition has no clauses", end_of(tokens));

  const auto& g = grammar_for(symbols.precedence_levels(), Start::Definition);
  const auto input = Classifier(g, symbols, def.symbol).run(body);
  const auto tree = run_earley<PstDefinition>(g, body, input, end_of(tokens));
  Builder(body).clauses(*tree, def);
  for (const auto& c : def.clauses) {
    if (auto* t = std::get_if<PstTermPtr>(&c.body)) check_iota_patterns(**t);
  }
  return def;
}

namespace {

void check_iota_patterns(const PstTerm& t) {
  if (const auto* io = std::get_if<PstTerm::Iota>(&t.node)) {
    std::vector<std::string> sorted = io->pattern;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("iota tuple pattern repeats a variable", {});
    }
  }
}

template <class R>
R parse_expression(std::string_view source, const SymbolTable& symbols, Start start) {
  const auto toks = tokenize(source);
  const auto& g = grammar_for(symbols.precedence_levels(), start);
  const auto input = Classifier(g, symbols, "").run(toks);
  const auto tree = run_earley<R>(g, toks, input, end_of(toks));
  Builder b(toks);
  if constexpr (std::is_same_v<R, PstTermPtr>) {
    return b.term(*tree);
  } else {
    return b.formula(*tree);
  }
}

}  // namespace

PstTermPtr parse_term(std::string_view source, const SymbolTable& symbols) {
  return parse_expression<PstTermPtr>(source, symbols, Start::Term);
}

PstFormulaPtr parse_formula(std::string_view source, const SymbolTable& symbols) {
  return parse_expression<PstFormulaPtr>(source, symbols, Start::Formula);
}

CorpusParse parse_corpus(std::string_view source, SymbolTable symbols) {
  CorpusParse out;
  std::vector<Token> toks;
  try {
    toks = tokenize(source);
  } catch (const LexError& e) {
    out.errors.push_back({"", e.pos(), e.what()});
    out.symbols = std::move(symbols);
    return out;
  }

  // Role annotations: `% protected-role: union`, attached by offset.
  std::vector<std::pair<std::size_t, std::string>> roles;
  for (std::size_t pos = 0; pos < source.size();) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    std::string_view line = source.substr(pos, eol - pos);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] == '%') {
      const auto k = line.find("protected-role:");
      if (k != std::string_view::npos) {
        std::string role(line.substr(k + 15));
        role.erase(0, role.find_first_not_of(" \t"));
        role.erase(role.find_last_not_of(" \t\r") + 1);
        roles.emplace_back(pos, role);
      }
    }
    pos = eol + 1;
  }

  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == TokenKind::Keyword && toks[i].value == "DEFINITION") starts.push_back(i);
  }
  if (!starts.empty() && starts.front() != 0) {
    out.errors.push_back({"", toks.front().pos, "text before the first DEFINITION"});
  } else if (starts.empty() && !toks.empty()) {
    out.errors.push_back({"", toks.front().pos, "no DEFINITION block found"});
  }

  std::size_t prev_offset = 0;
  for (std::size_t b = 0; b < starts.size(); ++b) {
    const std::size_t from = starts[b];
    const std::size_t to = b + 1 < starts.size() ? starts[b + 1] : toks.size();
    std::vector<Token> block(toks.begin() + static_cast<std::ptrdiff_t>(from),
                             toks.begin() + static_cast<std::ptrdiff_t>(to));
    std::string label;
    for (std::size_t k = 1; k < block.size() && block[k].value != ":"; ++k) label += block[k].text;
    try {
      PstDefinition def = parse_definition(block, symbols);
      for (const auto& [off, role] : roles) {
        if (off >= prev_offset && off < block.front().offset) def.roles.push_back(role);
      }
      if (symbols.contains(def.symbol)) {
        throw ParseError("symbol " + def.symbol + " is already defined", block.front().pos);
      }
      symbols.add(symbol_info(def));
      const std::size_t end_off = block.back().offset + block.back().text.size();
      out.sources.emplace_back(source.substr(block.front().offset, end_off - block.front().offset));
      out.definitions.push_back(std::move(def));
    } catch (const LexError& e) {
      out.errors.push_back({label, e.pos(), e.what()});
    } catch (const ParseError& e) {
      out.errors.push_back({label, e.pos(), e.what()});
    } catch (const UnknownSymbolError& e) {
      out.errors.push_back({label, e.pos(), e.what()});
    } catch (const PstError& e) {
      out.errors.push_back({label, block.front().pos, e.what()});
    }
    prev_offset = block.back().offset + block.back().text.size();
  }
  out.symbols = std::move(symbols);
  return out;
}

}  // namespace pst
