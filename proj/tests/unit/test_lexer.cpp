#include <doctest.h>

#include "pst/lexer.hpp"

using namespace pst;

namespace {

std::vector<std::string> values(std::string_view src) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(src)) out.push_back(t.value);
  return out;
}

}  // namespace

TEST_CASE("rendered LaTeX wrappers unwrap to plain tokens") {
  CHECK(values("$\\mathop{\\mathtt{FCN}}[f] \\leftrightarrow f = \\lbrace \\seq{x,y} : x_0 \\rbrace$") ==
        std::vector<std::string>{"FCN", "[", "f", "]", "\\iff", "f", "=", "{", "<", "x", ",", "y", ">", ":", "x_{0}", "}"});
}

TEST_CASE("token kinds and positions") {
  const auto toks = tokenize("% comment line\n2-ary \\mathscr{T}' 1_{N} 12");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0].kind == TokenKind::Keyword);
  CHECK(toks[0].pos.line == 2);
  CHECK(toks[0].pos.column == 1);
  CHECK(toks[1].kind == TokenKind::BackslashCommand);
  CHECK(toks[1].value == "\\mathscr{T}'");
  CHECK(toks[2].kind == TokenKind::SubscriptedSymbol);
  CHECK(toks[2].base == "1");
  CHECK(toks[2].subscript == "N");
  CHECK(toks[3].kind == TokenKind::Number);
}

TEST_CASE("subscripts normalize to braced form") {
  CHECK(values("x_0 x_{0}") == std::vector<std::string>{"x_{0}", "x_{0}"});
}

TEST_CASE("reassemble keeps the original spacing") {
  const std::string src = "f =  {<x,y> : f(x) = y}";
  CHECK(reassemble(src, tokenize(src)) == src);
}

TEST_CASE("empty input has no tokens") { CHECK(tokenize("").empty()); }
