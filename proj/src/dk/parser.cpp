#include <cctype>

#include "lpm/dk/syntax.hpp"

namespace lpm::dk {

namespace {

enum class Tok {
  Ident,   // plain identifier
  QIdent,  // mod.id
  Type,
  Def,
  Assert,
  Colon,
  Dot,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  FatArrow,  // =>
  Arrow,     // ->
  Defeq,     // :=
  Rewrite,   // -->
  Comment,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Position begin;
  Position end;
};

std::string token_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::QIdent: return "qualified identifier";
    case Tok::Type: return "'Type'";
    case Tok::Def: return "'def'";
    case Tok::Assert: return "'#ASSERT'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::FatArrow: return "'=>'";
    case Tok::Arrow: return "'->'";
    case Tok::Defeq: return "':='";
    case Tok::Rewrite: return "'-->'";
    case Tok::Comment: return "comment";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool id_rest(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Position start = pos();
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", start, start});
        return out;
      }
      char c = src_[i_];
      if (c == '(' && peek(1) == ';') {
        out.push_back(comment(start));
        continue;
      }
      if (id_start(c)) {
        out.push_back(identifier(start));
        continue;
      }
      if (c == '#') {
        advance();
        std::string word;
        while (i_ < src_.size() && id_rest(src_[i_])) word += advance();
        if (word != "ASSERT") throw SyntaxError(start, {"'#ASSERT'"}, "'#" + word + "'");
        out.push_back({Tok::Assert, "#ASSERT", start, pos()});
        continue;
      }
      out.push_back(punct(start));
    }
  }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;

  Position pos() const { return {line_, col_}; }
  char peek(std::size_t k) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  char advance() {
    char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t' || src_[i_] == '\n' || src_[i_] == '\r')) advance();
  }

  Token comment(Position start) {
    advance();
    advance();
    std::size_t body_begin = i_;
    int depth = 1;
    while (i_ < src_.size()) {
      if (src_[i_] == '(' && peek(1) == ';') {
        ++depth;
        advance();
        advance();
      } else if (src_[i_] == ';' && peek(1) == ')') {
        if (--depth == 0) {
          std::string text(src_.substr(body_begin, i_ - body_begin));
          advance();
          advance();
          return {Tok::Comment, text, start, pos()};
        }
        advance();
        advance();
      } else {
        advance();
      }
    }
    throw SyntaxError(pos(), {"';)'"}, "end of input inside comment");
  }

  Token identifier(Position start) {
    std::string text;
    while (i_ < src_.size() && id_rest(src_[i_])) text += advance();
    if (text == "Type") return {Tok::Type, text, start, pos()};
    if (text == "def") return {Tok::Def, text, start, pos()};
    if (peek(0) == '.' && id_start(peek(1))) {
      text += advance();
      std::string rest;
      while (i_ < src_.size() && id_rest(src_[i_])) rest += advance();
      if (rest == "Type" || rest == "def") throw SyntaxError(start, {"qualified identifier"}, "'" + text + rest + "'");
      return {Tok::QIdent, text + rest, start, pos()};
    }
    return {Tok::Ident, text, start, pos()};
  }

  Token punct(Position start) {
    auto make = [&](Tok k, int len) {
      std::string text(src_.substr(i_, len));
      for (int j = 0; j < len; ++j) advance();
      return Token{k, text, start, pos()};
    };
    char c = src_[i_];
    switch (c) {
      case ':':
        return peek(1) == '=' ? make(Tok::Defeq, 2) : make(Tok::Colon, 1);
      case '.': return make(Tok::Dot, 1);
      case '(': return make(Tok::LParen, 1);
      case ')': return make(Tok::RParen, 1);
      case '[': return make(Tok::LBrack, 1);
      case ']': return make(Tok::RBrack, 1);
      case ',': return make(Tok::Comma, 1);
      case '=':
        if (peek(1) == '>') return make(Tok::FatArrow, 2);
        break;
      case '-':
        if (peek(1) == '-' && peek(2) == '>') return make(Tok::Rewrite, 3);
        if (peek(1) == '>') return make(Tok::Arrow, 2);
        break;
      default:
        break;
    }
    std::string shown = static_cast<unsigned char>(c) < 0x80 ? std::string("'") + c + "'" : "non-ASCII character";
    throw SyntaxError(start, {"token"}, shown);
  }
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Entry> file() {
    std::vector<Entry> out;
    for (;;) {
      if (toks_[i_].kind == Tok::Comment) {
        const Token& t = toks_[i_++];
        out.push_back(Entry{Comment{t.text}, Span{t.begin, t.end}});
        continue;
      }
      if (toks_[i_].kind == Tok::End) return out;
      out.push_back(entry());
    }
  }

  ExprPtr lone_term() {
    ExprPtr e = term();
    expect(Tok::End);
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;

  void skip_comments() {
    while (toks_[i_].kind == Tok::Comment) ++i_;
  }

  const Token& peek() {
    skip_comments();
    return toks_[i_];
  }

  const Token& peek2() {
    skip_comments();
    std::size_t j = i_ + 1;
    while (toks_[j].kind == Tok::Comment) ++j;
    return toks_[j];
  }

  Token take() {
    skip_comments();
    Token t = toks_[i_];
    if (t.kind != Tok::End) ++i_;
    return t;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.begin, std::move(expected), found);
  }

  Token expect(Tok k) {
    if (peek().kind != k) fail({token_name(k)});
    return take();
  }

  Entry entry() {
    const Token& first = peek();
    Position begin = first.begin;
    switch (first.kind) {
      case Tok::Ident: {
        std::string name = take().text;
        expect(Tok::Colon);
        ExprPtr ty = term();
        Token end = expect(Tok::Dot);
        return Entry{Decl{name, ty}, Span{begin, end.end}};
      }
      case Tok::Def: {
        take();
        std::string name = expect(Tok::Ident).text;
        expect(Tok::Colon);
        ExprPtr ty = term();
        expect(Tok::Defeq);
        ExprPtr body = term();
        Token end = expect(Tok::Dot);
        return Entry{Def{name, ty, body}, Span{begin, end.end}};
      }
      case Tok::LBrack: {
        take();
        std::vector<Binding> ctx;
        if (peek().kind != Tok::RBrack) {
          for (;;) {
            std::string name = expect(Tok::Ident).text;
            expect(Tok::Colon);
            ctx.push_back(Binding{name, term()});
            if (peek().kind == Tok::Comma) {
              take();
              continue;
            }
            if (peek().kind != Tok::RBrack) fail({"','", "']'"});
            break;
          }
        }
        expect(Tok::RBrack);
        ExprPtr lhs = term();
        expect(Tok::Rewrite);
        ExprPtr rhs = term();
        Token end = expect(Tok::Dot);
        return Entry{RuleEntry{std::move(ctx), lhs, rhs}, Span{begin, end.end}};
      }
      case Tok::Assert: {
        take();
        ExprPtr t = arrow_term();
        expect(Tok::Colon);
        ExprPtr ty = term();
        Token end = expect(Tok::Dot);
        return Entry{Assert{t, ty}, Span{begin, end.end}};
      }
      default:
        fail({"identifier", "'def'", "'['", "'#ASSERT'"});
    }
  }

  bool atom_start(Tok k) const {
    return k == Tok::Ident || k == Tok::QIdent || k == Tok::Type || k == Tok::LParen;
  }

  ExprPtr term() {
    if (peek().kind == Tok::Ident && peek2().kind == Tok::Colon) {
      Token name = take();
      take();
      ExprPtr dom = application();
      if (peek().kind == Tok::Arrow) {
        take();
        ExprPtr body = term();
        return pi(name.text, dom, body, Span{name.begin, body->span.end});
      }
      if (peek().kind == Tok::FatArrow) {
        take();
        ExprPtr body = term();
        return lam(name.text, dom, body, Span{name.begin, body->span.end});
      }
      fail({"'->'", "'=>'"});
    }
    ExprPtr a = application();
    if (peek().kind == Tok::Arrow) {
      take();
      ExprPtr b = term();
      return arrow(a, b, Span{a->span.begin, b->span.end});
    }
    return a;
  }

  // Arrow-level term without a leading binder, as in #ASSERT t : A.
  ExprPtr arrow_term() {
    ExprPtr a = application();
    if (peek().kind == Tok::Arrow) {
      take();
      ExprPtr b = arrow_term();
      return arrow(a, b, Span{a->span.begin, b->span.end});
    }
    return a;
  }

  ExprPtr application() {
    ExprPtr e = atom();
    while (atom_start(peek().kind)) {
      ExprPtr a = atom();
      e = app(e, a, Span{e->span.begin, a->span.end});
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
      case Tok::QIdent: {
        Token tok = take();
        return ident(tok.text, Span{tok.begin, tok.end});
      }
      case Tok::Type: {
        Token tok = take();
        return type_sort(Span{tok.begin, tok.end});
      }
      case Tok::LParen: {
        take();
        ExprPtr e = term();
        expect(Tok::RParen);
        return e;
      }
      default:
        fail({"identifier", "'Type'", "'('"});
    }
  }
};

}  // namespace

std::vector<Entry> parse_file(std::string_view text) { return Parser(Lexer(text).run()).file(); }

ExprPtr parse_term(std::string_view text) { return Parser(Lexer(text).run()).lone_term(); }

}  // namespace lpm::dk
