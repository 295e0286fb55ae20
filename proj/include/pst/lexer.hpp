#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pst/errors.hpp"

namespace pst {

enum class TokenKind {
  Identifier,        // plain names and operator runs such as `/` or `+`
  BackslashCommand,  // `\in`, `\wp`, `\mathbb{R}`, `\mathscr{T}'`
  SubscriptedSymbol, // `\approx_{C}`, `1_{N}`, `x_0`
  Punctuation,       // ( ) [ ] { } < > , : . ! =
  Number,
  Keyword,           // DEFINITION If then Otherwise fixed Precedence Infix `2-ary` and logical commands
};

const char* to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Identifier;
  std::string text;   // exact source slice
  std::string value;  // normalized spelling used for symbol lookup
  std::string base;   // subscripted symbols only
  std::string subscript;
  SourcePos pos;
  std::size_t offset = 0;
};

// Tokenizes PST source. Comment lines (`%` to end of line) and `$` math
// delimiters are skipped; LaTeX presentation wrappers produced by the LaTeX
// renderer (`\mathop{\mathtt{..}}`, `\lbrace`, `\seq{..}`, ...) are unwrapped
// so rendered output can be parsed again.
std::vector<Token> tokenize(std::string_view source);

// Rebuilds text from tokens, restoring the whitespace between them from the
// original source offsets.
std::string reassemble(std::string_view source, const std::vector<Token>& tokens);

bool is_logical_keyword(std::string_view value);

}  // namespace pst
