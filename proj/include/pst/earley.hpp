#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace pst::earley {

struct GSym {
  int id = 0;
  bool terminal = false;
};

inline GSym T(int id) { return {id, true}; }
inline GSym N(int id) { return {id, false}; }

struct Rule {
  int lhs = 0;
  std::vector<GSym> rhs;  // never empty: the grammar has no epsilon rules
  int tag = 0;
};

class Grammar {
 public:
  int terminal(const std::string& name);
  int nonterminal(const std::string& name);
  void rule(int lhs, std::vector<GSym> rhs, int tag);
  void set_start(int nonterminal) { start_ = nonterminal; }

  int start() const { return start_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<int>& rules_for(int nonterminal) const { return by_lhs_[nonterminal]; }
  const std::string& terminal_name(int id) const { return terminals_[id]; }
  const std::string& nonterminal_name(int id) const { return nonterminals_[id]; }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }
  int nonterminal_count() const { return static_cast<int>(nonterminals_.size()); }
  int find_terminal(const std::string& name) const;

 private:
  std::vector<std::string> terminals_;
  std::vector<std::string> nonterminals_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_lhs_;
  int start_ = 0;
};

struct ParseNode;

struct Child {
  std::size_t token = 0;              // valid when node is null
  std::unique_ptr<ParseNode> node;    // subtree for a nonterminal
};

struct ParseNode {
  int rule = 0;
  int tag = 0;
  std::vector<Child> children;
};

struct Failure {
  std::size_t position = 0;  // index of the offending token (== input size at end of input)
  std::vector<std::string> expected;
};

struct Outcome {
  std::unique_ptr<ParseNode> tree;       // first derivation, when recognized
  std::unique_ptr<ParseNode> alternative;  // a second distinct derivation, when ambiguous
  bool ambiguous = false;
  Failure failure;                       // filled when tree is null
  std::size_t item_count = 0;
};

// Earley recognizer with derivation links between items. The links form a
// shared packed forest: an item reachable by more than one derivation keeps
// every link, so ambiguity is detected by counting derivations of the final
// item and two distinct trees can be extracted for diagnostics.
Outcome parse(const Grammar& grammar, const std::vector<int>& input);

std::string to_sexpr(const Grammar& grammar, const ParseNode& node);

}  // namespace pst::earley
