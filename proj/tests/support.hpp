#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pst/defstore.hpp"
#include "pst/parser.hpp"

namespace pst::testing {

inline std::string source_path(const std::string& relative) { return std::string(PST_SOURCE_DIR) + "/" + relative; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses and registers every definition of the given files, in order.
// Parse errors are fatal here.
inline void load_into(DefStore& store, const std::vector<std::string>& relative_paths) {
  for (const auto& rel : relative_paths) {
    auto parsed = parse_corpus(slurp(source_path(rel)), store.symbols());
    if (!parsed.errors.empty()) {
      throw std::runtime_error(rel + ": " + parsed.errors.front().label + ": " + parsed.errors.front().message);
    }
    for (std::size_t i = 0; i < parsed.definitions.size(); ++i) store.add(parsed.definitions[i], parsed.sources[i]);
  }
}

inline const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> files = {"corpus/foundations.pst", "corpus/appendixA.pst",
                                                 "corpus/topology.pst"};
  return files;
}

inline DefStore corpus_store() {
  DefStore store;
  load_into(store, corpus_files());
  return store;
}

// Collapses runs of whitespace to one space and trims the ends.
inline std::string squash(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
      space = !out.empty();
    } else {
      if (space) out += ' ';
      out += c;
      space = false;
    }
  }
  return out;
}

}  // namespace pst::testing
