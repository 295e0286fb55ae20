#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pst {

struct SourcePos {
  int line = 0;
  int column = 0;
};

std::string to_string(const SourcePos& pos);

// Base class for every diagnostic raised by the toolchain. `label` is the
// definition label (e.g. "FS.2.58") when the error can be attributed to one.
class PstError : public std::runtime_error {
 public:
  explicit PstError(const std::string& what, std::string label = {})
      : std::runtime_error(what), label_(std::move(label)) {}

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  std::string label_;
};

class LexError : public PstError {
 public:
  LexError(const std::string& msg, SourcePos pos)
      : PstError(to_string(pos) + ": " + msg), pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class ParseError : public PstError {
 public:
  ParseError(const std::string& msg, SourcePos pos, std::vector<std::string> expected = {});
  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

class AmbiguityError : public PstError {
 public:
  AmbiguityError(const std::string& msg, std::vector<std::string> parses)
      : PstError(msg), parses_(std::move(parses)) {}
  const std::vector<std::string>& parses() const { return parses_; }

 private:
  std::vector<std::string> parses_;
};

class UnknownSymbolError : public PstError {
 public:
  UnknownSymbolError(const std::string& symbol, SourcePos pos)
      : PstError(to_string(pos) + ": unknown symbol '" + symbol + "'"), symbol_(symbol), pos_(pos) {}
  const std::string& symbol() const { return symbol_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string symbol_;
  SourcePos pos_;
};

class TranslationError : public PstError {
 public:
  using PstError::PstError;
};

class UnregisteredSymbol : public TranslationError {
 public:
  explicit UnregisteredSymbol(const std::string& symbol)
      : TranslationError("unregistered symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

class FixedVarNotFree : public TranslationError {
 public:
  explicit FixedVarNotFree(const std::string& var)
      : TranslationError("fixed variable '" + var + "' does not occur in the set-builder"), var_(var) {}
  const std::string& var() const { return var_; }

 private:
  std::string var_;
};

class DefStoreError : public PstError {
 public:
  using PstError::PstError;
};

class DuplicateSymbol : public DefStoreError {
 public:
  explicit DuplicateSymbol(const std::string& symbol)
      : DefStoreError("symbol '" + symbol + "' is already defined") {}
};

class ForwardReference : public DefStoreError {
 public:
  explicit ForwardReference(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

class UnknownDefinition : public DefStoreError {
 public:
  explicit UnknownDefinition(const std::string& symbol)
      : DefStoreError("unknown definition '" + symbol + "'") {}
};

class BudgetExceeded : public PstError {
 public:
  explicit BudgetExceeded(long long count)
      : PstError("expansion exceeded the symbol budget (" + std::to_string(count) + " symbols)"),
        count_(count) {}
  long long count() const { return count_; }

 private:
  long long count_;
};

class LexiconError : public PstError {
 public:
  LexiconError(const std::string& msg, int line)
      : PstError("lexicon line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class LexiconSyntaxError : public LexiconError {
 public:
  using LexiconError::LexiconError;
};

class DuplicateEntry : public LexiconError {
 public:
  DuplicateEntry(const std::string& name, int line) : LexiconError("duplicate entry '" + name + "'", line) {}
};

class RenderError : public PstError {
 public:
  using PstError::PstError;
};

class MissingLexiconEntry : public RenderError {
 public:
  explicit MissingLexiconEntry(std::vector<std::string> symbols);
  const std::vector<std::string>& symbols() const { return symbols_; }

 private:
  std::vector<std::string> symbols_;
};

class TemplateArityMismatch : public RenderError {
 public:
  using RenderError::RenderError;
};

}  // namespace pst
