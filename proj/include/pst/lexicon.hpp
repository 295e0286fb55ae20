#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pst/errors.hpp"

namespace pst {

// Natural-language data for one symbol. Templates use #i for argument i in
// the surrounding mode and #^i for argument i forced into math.
struct LexEntry {
  std::string name;
  bool infix = false;
  int arity = 0;  // 2 for infix entries
  std::map<std::string, std::string> clauses;
  int line = 0;

  // The clause text, or nullopt when absent or empty.
  std::optional<std::string> get(const std::string& key) const;
};

class Lexicon {
 public:
  // Throws DuplicateEntry.
  void add(LexEntry entry);
  // Adds or replaces.
  void put(LexEntry entry);
  const LexEntry* find(const std::string& name) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, LexEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, LexEntry> entries_;
};

// Clause keys accepted in entries.
const std::vector<std::string>& lexicon_keys();

// Entries are `NAME:arity@` or `NAME:infix@` followed by `key:template@`
// clauses; `@@` ends the entry. A clause without its `@` ends at the line
// break before the next clause, and an entry without `@@` ends at the next
// header or at end of input. Throws LexiconSyntaxError or DuplicateEntry.
Lexicon parse_lexicon(std::string_view source);

// Entries for the base relations and the usual set operations.
const Lexicon& default_lexicon();

// Defaults overlaid with the user's entries.
Lexicon with_defaults(const Lexicon& user);

}  // namespace pst
