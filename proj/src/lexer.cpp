#include "pst/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

namespace pst {

std::string to_string(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

ParseError::ParseError(const std::string& msg, SourcePos pos, std::vector<std::string> expected)
    : PstError([&] {
        std::string s = to_string(pos) + ": " + msg;
        if (!expected.empty()) {
          s += " (expected one of:";
          for (const auto& e : expected) s += " " + e;
          s += ")";
        }
        return s;
      }()),
      pos_(pos),
      expected_(std::move(expected)) {}

ForwardReference::ForwardReference(std::vector<std::string> missing)
    : DefStoreError([&] {
        std::string s = "forward reference to undefined symbol(s):";
        for (const auto& m : missing) s += " " + m;
        return s;
      }()),
      missing_(std::move(missing)) {}

MissingLexiconEntry::MissingLexiconEntry(std::vector<std::string> symbols)
    : RenderError([&] {
        std::string s = "no lexicon entry for:";
        for (const auto& m : symbols) s += " " + m;
        return s;
      }()),
      symbols_(std::move(symbols)) {}

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::BackslashCommand: return "backslash-command";
    case TokenKind::SubscriptedSymbol: return "subscripted-symbol";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Number: return "number";
    case TokenKind::Keyword: return "keyword";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string_view, std::string_view>& logical_commands() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"\\wedge", "\\wedge"},       {"\\land", "\\wedge"},     {"\\vee", "\\vee"},
      {"\\lor", "\\vee"},           {"\\neg", "\\neg"},        {"\\lnot", "\\neg"},
      {"\\rightarrow", "\\rightarrow"}, {"\\to", "\\rightarrow"}, {"\\implies", "\\rightarrow"},
      {"\\iff", "\\iff"},           {"\\leftrightarrow", "\\iff"}, {"\\forall", "\\forall"},
      {"\\exists", "\\exists"},     {"\\lambda", "\\lambda"},  {"\\uparrow", "\\uparrow"},
      {"\\downarrow", "\\downarrow"}, {"\\simeq", "\\simeq"},
  };
  return table;
}

bool is_word_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 9> words = {
      "DEFINITION", "If", "then", "Otherwise", "fixed", "Precedence", "Infix", "function", "relation"};
  return std::find(words.begin(), words.end(), w) != words.end();
}

bool is_spacing_command(std::string_view c) {
  static constexpr std::array<std::string_view, 9> cmds = {
      "\\,", "\\;", "\\!", "\\ ", "\\quad", "\\qquad", "\\hfil", "\\break", "\\noindent"};
  return std::find(cmds.begin(), cmds.end(), c) != cmds.end();
}

bool is_font_command(std::string_view c) {
  static constexpr std::array<std::string_view, 6> cmds = {
      "\\mathscr", "\\mathcal", "\\mathbb", "\\mathfrak", "\\mathbf", "\\mathsf"};
  return std::find(cmds.begin(), cmds.end(), c) != cmds.end();
}

bool is_transparent_command(std::string_view c) {
  static constexpr std::array<std::string_view, 7> cmds = {
      "\\mathop", "\\mathtt", "\\mathord", "\\mathrel", "\\mathrm", "\\mbox", "\\text"};
  return std::find(cmds.begin(), cmds.end(), c) != cmds.end();
}

bool is_operator_char(char c) {
  return c == '+' || c == '-' || c == '*' || c == '/' || c == '|' || c == '^' || c == '~';
}

enum class Frame { Group, Transparent, Seq };

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == '\n') {
        advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (c == '$') {
        advance();
      } else if (c == '\\') {
        backslash();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        identifier();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        number();
      } else if (c == '{') {
        const auto start = mark();
        advance();
        frames_.push_back({Frame::Group, start.pos});
        emit(TokenKind::Punctuation, start, "{");
      } else if (c == '}') {
        close_brace(mark(), 1);
      } else if ((c == '<' || c == '>') && peek(1) == '_') {
        const auto start = mark();
        advance();
        finish_symbol(start, TokenKind::Identifier, std::string(1, c));
      } else if (std::string_view("()[],:.!=<>").find(c) != std::string_view::npos) {
        const auto start = mark();
        advance();
        emit(TokenKind::Punctuation, start, std::string(1, c));
      } else if (is_operator_char(c)) {
        const auto start = mark();
        advance();
        finish_symbol(start, TokenKind::Identifier, std::string(1, c));
      } else {
        throw LexError(std::string("illegal character '") + c + "'", cur_pos());
      }
    }
    if (!frames_.empty()) throw LexError("unterminated brace group", frames_.back().opened);
    return std::move(out_);
  }

 private:
  struct Mark {
    std::size_t offset;
    SourcePos pos;
  };
  struct OpenFrame {
    Frame kind;
    SourcePos opened;
  };

  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }
  SourcePos cur_pos() const { return {line_, col_}; }
  Mark mark() const { return {i_, cur_pos()}; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void emit(TokenKind kind, const Mark& start, std::string value, std::string base = {},
            std::string subscript = {}) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(start.offset, i_ - start.offset));
    t.value = std::move(value);
    t.base = std::move(base);
    t.subscript = std::move(subscript);
    t.pos = start.pos;
    t.offset = start.offset;
    out_.push_back(std::move(t));
  }

  std::string read_primes() {
    std::string p;
    while (peek() == '\'') {
      p += '\'';
      advance();
    }
    return p;
  }

  // Reads a balanced `{...}` group starting at the current `{` and returns its
  // inner text.
  std::string read_group() {
    const auto open = cur_pos();
    advance();  // '{'
    int depth = 1;
    const std::size_t begin = i_;
    while (i_ < src_.size()) {
      if (src_[i_] == '{') ++depth;
      if (src_[i_] == '}' && --depth == 0) break;
      advance();
    }
    if (i_ >= src_.size()) throw LexError("unterminated brace group", open);
    std::string inner(src_.substr(begin, i_ - begin));
    advance();  // '}'
    return inner;
  }

  static std::string trim(std::string s) {
    auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
  }

  // After a symbol base has been consumed: optional subscript, then primes.
  void finish_symbol(const Mark& start, TokenKind kind, std::string base) {
    base += read_primes();
    if (peek() == '_') {
      advance();
      std::string sub;
      if (peek() == '{') {
        sub = trim(read_group());
      } else if (std::isalnum(static_cast<unsigned char>(peek()))) {
        sub = std::string(1, peek());
        advance();
      } else {
        throw LexError("malformed subscript", cur_pos());
      }
      const std::string primes = read_primes();
      emit(TokenKind::SubscriptedSymbol, start, base + "_{" + sub + "}" + primes, base, sub);
      return;
    }
    emit(kind, start, base);
  }

  void identifier() {
    const auto start = mark();
    std::string word;
    while (std::isalnum(static_cast<unsigned char>(peek()))) {
      word += peek();
      advance();
    }
    if (is_word_keyword(word) && peek() != '_' && peek() != '\'') {
      emit(TokenKind::Keyword, start, word);
      return;
    }
    finish_symbol(start, TokenKind::Identifier, word);
  }

  void number() {
    const auto start = mark();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (src_.substr(i_, 4) == "-ary") {
      for (int k = 0; k < 4; ++k) advance();
      emit(TokenKind::Keyword, start, digits + "-ary");
      return;
    }
    if (peek() == '_') {
      finish_symbol(start, TokenKind::Number, digits);
      return;
    }
    emit(TokenKind::Number, start, digits);
  }

  void close_brace(const Mark& start, std::size_t width) {
    if (frames_.empty()) throw LexError("unbalanced '}'", start.pos);
    const Frame f = frames_.back().kind;
    frames_.pop_back();
    for (std::size_t k = 0; k < width; ++k) advance();
    if (f == Frame::Group) emit(TokenKind::Punctuation, start, "}");
    if (f == Frame::Seq) emit(TokenKind::Punctuation, start, ">");
  }

  void backslash() {
    const auto start = mark();
    advance();  // '\'
    std::string name = "\\";
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      while (std::isalpha(static_cast<unsigned char>(peek()))) {
        name += peek();
        advance();
      }
    } else if (i_ < src_.size()) {
      name += peek();
      advance();
    } else {
      throw LexError("dangling backslash", start.pos);
    }

    if (is_spacing_command(name)) return;
    if (name == "\\{" || name == "\\lbrace") {
      frames_.push_back({Frame::Group, start.pos});
      emit(TokenKind::Punctuation, start, "{");
      return;
    }
    if (name == "\\}" || name == "\\rbrace") {
      if (frames_.empty()) throw LexError("unbalanced '}'", start.pos);
      frames_.pop_back();
      emit(TokenKind::Punctuation, start, "}");
      return;
    }
    if (name == "\\langle") return emit(TokenKind::Punctuation, start, "<");
    if (name == "\\rangle") return emit(TokenKind::Punctuation, start, ">");
    if ((name == "\\seq" || name == "\\set") && peek() == '{') {
      advance();
      frames_.push_back({name == "\\seq" ? Frame::Seq : Frame::Group, start.pos});
      emit(TokenKind::Punctuation, start, name == "\\seq" ? "<" : "{");
      return;
    }
    if (is_transparent_command(name) && peek() == '{') {
      advance();
      frames_.push_back({Frame::Transparent, start.pos});
      return;
    }
    if (is_font_command(name)) {
      if (peek() != '{') throw LexError("expected '{' after " + name, cur_pos());
      name += "{" + trim(read_group()) + "}";
      finish_symbol(start, TokenKind::BackslashCommand, name);
      return;
    }
    const auto& logic = logical_commands();
    if (auto it = logic.find(name); it != logic.end() && peek() != '_') {
      emit(TokenKind::Keyword, start, std::string(it->second));
      return;
    }
    finish_symbol(start, TokenKind::BackslashCommand, name);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<OpenFrame> frames_;
  std::vector<Token> out_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::string reassemble(std::string_view source, const std::vector<Token>& tokens) {
  std::string out;
  std::size_t prev_end = 0;
  for (const auto& t : tokens) {
    if (t.offset > prev_end) out += source.substr(prev_end, t.offset - prev_end);
    out += t.text;
    prev_end = t.offset + t.text.size();
  }
  if (prev_end < source.size()) out += source.substr(prev_end);
  return out;
}

bool is_logical_keyword(std::string_view value) {
  for (const auto& [k, v] : logical_commands()) {
    if (v == value) return true;
  }
  return false;
}

}  // namespace pst
