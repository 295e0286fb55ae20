#include "pst/lexicon.hpp"

#include <algorithm>
#include <cctype>

namespace pst {

std::optional<std::string> LexEntry::get(const std::string& key) const {
  auto it = clauses.find(key);
  if (it == clauses.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

void Lexicon::add(LexEntry entry) {
  if (entries_.count(entry.name)) throw DuplicateEntry(entry.name, entry.line);
  entries_.emplace(entry.name, std::move(entry));
}

void Lexicon::put(LexEntry entry) { entries_[entry.name] = std::move(entry); }

const LexEntry* Lexicon::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& lexicon_keys() {
  static const std::vector<std::string> keys = {"symb", "nsym", "word", "reln", "negn", "plur", "nplu", "prep"};
  return keys;
}

namespace {

bool is_key(std::string_view k) {
  const auto& keys = lexicon_keys();
  return std::find(keys.begin(), keys.end(), k) != keys.end();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// `NAME:3@` or `NAME:infix@`, alone on its line.
bool parse_header(std::string_view line, LexEntry& out) {
  line = trim(line);
  if (line.size() < 3 || line.back() != '@' || line[line.size() - 2] == '@') return false;
  line.remove_suffix(1);
  const auto colon = line.rfind(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  const std::string_view spec = line.substr(colon + 1);
  if (spec == "infix") {
    out.infix = true;
    out.arity = 2;
  } else if (!spec.empty() && std::all_of(spec.begin(), spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    out.arity = std::stoi(std::string(spec));
  } else {
    return false;
  }
  out.name = std::string(line.substr(0, colon));
  return true;
}

class LexiconParser {
 public:
  explicit LexiconParser(std::string_view src) {
    std::size_t start = 0;
    while (start <= src.size()) {
      const auto nl = src.find('\n', start);
      const auto end = nl == std::string_view::npos ? src.size() : nl;
      std::string_view line = src.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }

  Lexicon run() {
    Lexicon lex;
    std::size_t i = 0;
    while (i < lines_.size()) {
      const std::string_view t = trim(lines_[i]);
      if (t.empty() || t.front() == '%') {
        ++i;
        continue;
      }
      LexEntry entry;
      entry.line = static_cast<int>(i) + 1;
      if (!parse_header(t, entry)) throw LexiconSyntaxError("expected an entry header NAME:arity@", entry.line);
      i = clauses(i + 1, entry);
      if (entry.clauses.empty()) throw LexiconSyntaxError("entry '" + entry.name + "' has no clauses", entry.line);
      lex.add(std::move(entry));
    }
    return lex;
  }

 private:
  // Key of a line that starts a clause, or empty.
  static std::string_view clause_key(std::string_view line) {
    line = trim(line);
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) return {};
    const std::string_view k = line.substr(0, colon);
    if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return std::islower(static_cast<unsigned char>(c)); })) {
      return {};
    }
    return k;
  }

  bool starts_clause(std::size_t i) const { return i < lines_.size() && is_key(clause_key(lines_[i])); }
  bool starts_entry(std::size_t i) const {
    LexEntry scratch;
    return i < lines_.size() && !starts_clause(i) && parse_header(lines_[i], scratch);
  }

  // Reads clauses starting at line i; returns the first line after the entry.
  std::size_t clauses(std::size_t i, LexEntry& entry) {
    while (i < lines_.size()) {
      const std::string_view lead = trim(lines_[i]);
      if (lead.empty()) {
        ++i;
        continue;
      }
      if (lead == "@" || lead == "@@") return i + 1;
      if (starts_entry(i)) return i;
      const int lineno = static_cast<int>(i) + 1;
      // Several clauses may share a line: `symb:..@ word:..@@`.
      std::string_view rest = lead;
      for (;;) {
        const std::string_view key = clause_key(rest);
        if (key.empty()) throw LexiconSyntaxError("expected a clause key:template@", lineno);
        if (!is_key(key)) throw LexiconSyntaxError("unknown clause key '" + std::string(key) + "'", lineno);
        if (entry.clauses.count(std::string(key))) {
          throw LexiconSyntaxError("clause '" + std::string(key) + "' given twice", lineno);
        }
        rest.remove_prefix(key.size() + 1);
        const auto at = rest.find('@');
        if (at == std::string_view::npos) {
          // Unterminated: the clause may continue on following lines until
          // the next clause, entry, or blank line.
          std::string value(rest);
          ++i;
          while (i < lines_.size() && !starts_clause(i) && !starts_entry(i) && !trim(lines_[i]).empty() &&
                 trim(lines_[i]) != "@@") {
            value += " " + std::string(trim(lines_[i]));
            ++i;
          }
          entry.clauses[std::string(key)] = std::string(trim(value));
          break;
        }
        entry.clauses[std::string(key)] = std::string(rest.substr(0, at));
        rest.remove_prefix(at + 1);
        if (!rest.empty() && rest.front() == '@') {
          if (!trim(rest.substr(1)).empty()) throw LexiconSyntaxError("text after end of entry", lineno);
          return i + 1;
        }
        rest = trim(rest);
        if (rest.empty()) {
          ++i;
          break;
        }
      }
    }
    return i;
  }

  std::vector<std::string_view> lines_;
};

const char* kDefaultLexicon = R"(\in:infix@
  symb:#0 $\in$ #1@
  nsym:#0 $\not\in$ #1@
  reln:#0 is in #1@
  negn:#0 is not in #1@
  prep:#0 in #1@@
=:infix@
  symb:#0 $=$ #1@
  nsym:#0 $\neq$ #1@
  reln:#0 is equal to #1@
  negn:#0 is not equal to #1@@
\simeq:infix@
  symb:#0 $\simeq$ #1@@
\subseteq:infix@
  symb:#0 $\subseteq$ #1@
  nsym:#0 $\not\subseteq$ #1@
  reln:#0 is a subset of #1@
  negn:#0 is not a subset of #1@@
\supseteq:infix@
  symb:#0 $\supseteq$ #1@
  nsym:#0 $\not\supseteq$ #1@
  reln:#0 is a superset of #1@
  negn:#0 is not a superset of #1@@
\cup:infix@
  symb:#0 $\cup$ #1@
  word:#0 union #1@@
\cap:infix@
  symb:#0 $\cap$ #1@
  word:#0 intersected with #1@@
\backslash:infix@
  symb:#0 $\backslash$ #1@
  word:#0 minus #1@@
\wp:1@
  symb:$\wp(#^0)$@
  word:the power set of #0@@
\emptyset:0@
  symb:$\emptyset$@
  word:the empty set@@
\varpi_{0}:2@
  symb:$(#^0,#^1)$@
  word:the ordered pair of #0 and #1@@
)";

}  // namespace

Lexicon parse_lexicon(std::string_view source) { return LexiconParser(source).run(); }

const Lexicon& default_lexicon() {
  static const Lexicon lex = parse_lexicon(kDefaultLexicon);
  return lex;
}

Lexicon with_defaults(const Lexicon& user) {
  Lexicon out = default_lexicon();
  for (const auto& [name, e] : user.entries()) out.put(e);
  return out;
}

}  // namespace pst
