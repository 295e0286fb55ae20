#include "pst/earley.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace pst::earley {

int Grammar::terminal(const std::string& name) {
  if (int id = find_terminal(name); id >= 0) return id;
  terminals_.push_back(name);
  return static_cast<int>(terminals_.size()) - 1;
}

int Grammar::find_terminal(const std::string& name) const {
  auto it = std::find(terminals_.begin(), terminals_.end(), name);
  return it == terminals_.end() ? -1 : static_cast<int>(it - terminals_.begin());
}

int Grammar::nonterminal(const std::string& name) {
  auto it = std::find(nonterminals_.begin(), nonterminals_.end(), name);
  if (it != nonterminals_.end()) return static_cast<int>(it - nonterminals_.begin());
  nonterminals_.push_back(name);
  by_lhs_.emplace_back();
  return static_cast<int>(nonterminals_.size()) - 1;
}

void Grammar::rule(int lhs, std::vector<GSym> rhs, int tag) {
  if (rhs.empty()) throw std::logic_error("epsilon rules are not supported");
  by_lhs_[lhs].push_back(static_cast<int>(rules_.size()));
  rules_.push_back({lhs, std::move(rhs), tag});
}

namespace {

struct ItemRef {
  int set = -1;
  int index = -1;
  bool operator==(const ItemRef& o) const { return set == o.set && index == o.index; }
};

struct Link {
  ItemRef prev;   // same rule, dot - 1
  ItemRef child;  // completed child item; child.index < 0 means the token at child.set
  bool operator==(const Link& o) const { return prev == o.prev && child == o.child; }
};

struct Item {
  int rule;
  int dot;
  int origin;
  std::vector<Link> links;
};

struct ItemSet {
  std::vector<Item> items;
  std::unordered_map<std::uint64_t, int> index;
  std::unordered_map<int, std::vector<int>> waiting;  // nonterminal after dot -> items
  std::vector<bool> predicted;
};

std::uint64_t key(int rule, int dot, int origin) {
  return (static_cast<std::uint64_t>(rule) << 40) ^ (static_cast<std::uint64_t>(dot) << 32) ^
         static_cast<std::uint32_t>(origin);
}

class Engine {
 public:
  Engine(const Grammar& g, const std::vector<int>& input) : g_(g), input_(input), sets_(input.size() + 1) {
    for (auto& s : sets_) s.predicted.assign(g.nonterminal_count(), false);
  }

  Outcome run() {
    Outcome out;
    predict(0, g_.start());
    for (std::size_t j = 0; j <= input_.size(); ++j) {
      auto& set = sets_[j];
      for (std::size_t k = 0; k < set.items.size(); ++k) {
        const Item item = set.items[k];  // copy: the vector may grow
        const auto& rule = g_.rules()[item.rule];
        if (item.dot == static_cast<int>(rule.rhs.size())) {
          complete(static_cast<int>(j), static_cast<int>(k));
          continue;
        }
        const GSym next = rule.rhs[item.dot];
        if (next.terminal) {
          if (j < input_.size() && input_[j] == next.id) {
            add(static_cast<int>(j) + 1, item.rule, item.dot + 1, item.origin,
                Link{{static_cast<int>(j), static_cast<int>(k)}, {static_cast<int>(j), -1}});
          }
        } else {
          predict(static_cast<int>(j), next.id);
        }
      }
      out.item_count += set.items.size();
      if (j < input_.size() && sets_[j + 1].items.empty()) {
        out.failure = {j, expected_at(j)};
        return out;
      }
    }

    const int last = static_cast<int>(input_.size());
    ItemRef root;
    for (int i = 0; i < static_cast<int>(sets_[last].items.size()); ++i) {
      const Item& it = sets_[last].items[i];
      const auto& rule = g_.rules()[it.rule];
      if (it.origin == 0 && rule.lhs == g_.start() && it.dot == static_cast<int>(rule.rhs.size())) {
        root = {last, i};
        break;
      }
    }
    if (root.index < 0) {
      out.failure = {input_.size(), expected_at(input_.size())};
      return out;
    }
    out.ambiguous = has_ambiguity(root);
    out.tree = build(root, nullptr);
    if (out.ambiguous) {
      bool pending = true;
      out.alternative = build(root, &pending);
    }
    return out;
  }

 private:
  void predict(int j, int nonterminal) {
    auto& set = sets_[j];
    if (set.predicted[nonterminal]) return;
    set.predicted[nonterminal] = true;
    for (int r : g_.rules_for(nonterminal)) add(j, r, 0, j, std::nullopt);
  }

  void add(int j, int rule, int dot, int origin, std::optional<Link> link) {
    auto& set = sets_[j];
    const auto k = key(rule, dot, origin);
    auto it = set.index.find(k);
    if (it != set.index.end()) {
      if (link) {
        auto& links = set.items[it->second].links;
        if (std::find(links.begin(), links.end(), *link) == links.end()) links.push_back(*link);
      }
      return;
    }
    const int idx = static_cast<int>(set.items.size());
    set.index.emplace(k, idx);
    Item item{rule, dot, origin, {}};
    if (link) item.links.push_back(*link);
    const auto& rhs = g_.rules()[rule].rhs;
    if (dot < static_cast<int>(rhs.size()) && !rhs[dot].terminal) set.waiting[rhs[dot].id].push_back(idx);
    set.items.push_back(std::move(item));
  }

  void complete(int j, int k) {
    const Item& done = sets_[j].items[k];
    const int lhs = g_.rules()[done.rule].lhs;
    const int origin = done.origin;
    auto& from = sets_[origin];
    auto w = from.waiting.find(lhs);
    if (w == from.waiting.end()) return;
    const std::vector<int> waiting = w->second;
    for (int p : waiting) {
      const Item& parent = from.items[p];
      add(j, parent.rule, parent.dot + 1, parent.origin, Link{{origin, p}, {j, k}});
    }
  }

  std::vector<std::string> expected_at(std::size_t j) const {
    std::set<std::string> names;
    for (const auto& item : sets_[j].items) {
      const auto& rhs = g_.rules()[item.rule].rhs;
      if (item.dot < static_cast<int>(rhs.size()) && rhs[item.dot].terminal) {
        names.insert(g_.terminal_name(rhs[item.dot].id));
      }
    }
    return {names.begin(), names.end()};
  }

  const Item& at(ItemRef r) const { return sets_[r.set].items[r.index]; }

  bool has_ambiguity(ItemRef root) const {
    std::set<std::pair<int, int>> seen;
    std::vector<ItemRef> stack{root};
    while (!stack.empty()) {
      const ItemRef r = stack.back();
      stack.pop_back();
      if (!seen.insert({r.set, r.index}).second) continue;
      const Item& item = at(r);
      if (item.links.size() > 1) return true;
      for (const auto& l : item.links) {
        stack.push_back(l.prev);
        if (l.child.index >= 0) stack.push_back(l.child);
      }
    }
    return false;
  }

  // Builds the derivation tree of a completed item. When `diverge` points to
  // true, the first item with several derivations takes its second link.
  std::unique_ptr<ParseNode> build(ItemRef ref, bool* diverge) const {
    const Item& item = at(ref);
    auto node = std::make_unique<ParseNode>();
    node->rule = item.rule;
    node->tag = g_.rules()[item.rule].tag;
    std::vector<Child> reversed;
    ItemRef cur = ref;
    while (at(cur).dot > 0) {
      const Item& c = at(cur);
      std::size_t choice = 0;
      if (diverge && *diverge && c.links.size() > 1) {
        choice = 1;
        *diverge = false;
      }
      const Link& l = c.links[choice];
      Child child;
      if (l.child.index < 0) {
        child.token = static_cast<std::size_t>(l.child.set);
      } else {
        child.node = build(l.child, diverge);
      }
      reversed.push_back(std::move(child));
      cur = l.prev;
    }
    node->children.reserve(reversed.size());
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) node->children.push_back(std::move(*it));
    return node;
  }

  const Grammar& g_;
  const std::vector<int>& input_;
  std::vector<ItemSet> sets_;
};

}  // namespace

Outcome parse(const Grammar& grammar, const std::vector<int>& input) { return Engine(grammar, input).run(); }

std::string to_sexpr(const Grammar& grammar, const ParseNode& node) {
  const auto& rule = grammar.rules()[node.rule];
  std::string s = "(" + grammar.nonterminal_name(rule.lhs);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    s += " ";
    if (node.children[i].node) {
      s += to_sexpr(grammar, *node.children[i].node);
    } else {
      s += grammar.terminal_name(rule.rhs[i].id);
    }
  }
  return s + ")";
}

}  // namespace pst::earley
