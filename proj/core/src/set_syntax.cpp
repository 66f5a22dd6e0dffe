#include "set_syntax.hpp"

#include <cctype>
#include <map>
#include <set>

#include "hyperset/error.hpp"

namespace hyperset::syntax {
namespace {

enum class Tok { kLBrace, kRBrace, kComma, kSemi, kEquals, kName, kLet, kPlaceholder, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kName: return "name '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (i_ >= text_.size()) return {Tok::kEnd, "", line, column};
    const char c = text_[i_];
    auto single = [&](Tok kind) {
      advance();
      return Token{kind, std::string(1, c), line, column};
    };
    switch (c) {
      case '{': return single(Tok::kLBrace);
      case '}': return single(Tok::kRBrace);
      case ',': return single(Tok::kComma);
      case ';': return single(Tok::kSemi);
      case '=': return single(Tok::kEquals);
      default: break;
    }
    if (c == '@') {
      advance();
      if (i_ < text_.size() && text_[i_] == 'I' &&
          (i_ + 1 >= text_.size() || !is_name_char(text_[i_ + 1]))) {
        advance();
        return {Tok::kPlaceholder, "@I", line, column};
      }
      throw ParseError("expected '@I'", line, column);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (i_ < text_.size() && is_name_char(text_[i_])) {
        name.push_back(text_[i_]);
        advance();
      }
      return {name == "let" ? Tok::kLet : Tok::kName, name, line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : lexer_(text), options_(options) {
    tok_ = lexer_.next();
  }

  Program program() {
    Program p;
    while (tok_.kind == Tok::kLet) {
      take();
      const Token name = expect(Tok::kName, "a name after 'let'");
      expect(Tok::kEquals, "'='");
      SetExpr value = set();
      expect(Tok::kSemi, "';' after let binding");
      p.lets.push_back({name.text, std::move(value), name.line, name.column});
    }
    if (tok_.kind != Tok::kEnd) p.result = set();
    if (tok_.kind != Tok::kEnd) {
      throw ParseError("unexpected " + describe(tok_) + " after set expression", tok_.line,
                       tok_.column);
    }
    if (options_.require_result && !p.result) {
      throw ParseError("expected a set expression", tok_.line, tok_.column);
    }
    return p;
  }

 private:
  SetExpr set() {
    SetExpr e;
    e.line = tok_.line;
    e.column = tok_.column;
    switch (tok_.kind) {
      case Tok::kName:
        e.kind = SetExpr::Kind::kName;
        e.name = take().text;
        return e;
      case Tok::kPlaceholder:
        if (!options_.allow_placeholder) {
          throw ParseError("placeholder '@I' is not allowed here", tok_.line, tok_.column);
        }
        take();
        e.kind = SetExpr::Kind::kPlaceholder;
        return e;
      case Tok::kLBrace:
        take();
        e.kind = SetExpr::Kind::kBraces;
        if (tok_.kind == Tok::kRBrace) {
          take();
          return e;
        }
        e.items.push_back(set());
        while (tok_.kind == Tok::kComma) {
          take();
          e.items.push_back(set());
        }
        expect(Tok::kRBrace, "',' or '}'");
        return e;
      default:
        throw ParseError("expected a set but found " + describe(tok_), tok_.line, tok_.column);
    }
  }

  Token take() {
    Token t = std::move(tok_);
    tok_ = lexer_.next();
    return t;
  }

  Token expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind) {
      throw ParseError("expected " + what + " but found " + describe(tok_), tok_.line, tok_.column);
    }
    return take();
  }

  Lexer lexer_;
  ParseOptions options_;
  Token tok_;
};

class Lowerer {
 public:
  explicit Lowerer(const Program& p) : program_(p) {
    for (const auto& let : p.lets) {
      if (!lets_.emplace(let.name, &let).second) {
        throw ParseError("name '" + let.name + "' is bound more than once", let.line, let.column);
      }
    }
  }

  Lowered run() {
    Lowered out;
    for (const auto& let : program_.lets) {
      out.declared.push_back(let.name);
      const SetExpr& target = resolve_alias(let);
      if (target.kind == SetExpr::Kind::kPlaceholder) {
        throw ParseError("placeholder cannot be bound by 'let'", target.line, target.column);
      }
      out.system.bind(let.name, terms_of(target.items));
    }
    if (program_.result) {
      const SetExpr& r = *program_.result;
      if (r.kind == SetExpr::Kind::kName) {
        check_bound(r);
        out.result = r.name;
      } else if (r.kind == SetExpr::Kind::kBraces) {
        out.result = fresh();
        pending_.push_back({*out.result, terms_of(r.items)});
      }
    }
    for (auto& [name, terms] : pending_) out.system.bind(name, std::move(terms));
    return out;
  }

 private:
  const SetExpr& resolve_alias(const LetBinding& let) {
    std::set<std::string> seen{let.name};
    const SetExpr* e = &let.value;
    while (e->kind == SetExpr::Kind::kName) {
      check_bound(*e);
      if (!seen.insert(e->name).second) {
        throw ParseError("circular alias through '" + e->name + "'", let.line, let.column);
      }
      e = &lets_.at(e->name)->value;
    }
    return *e;
  }

  void check_bound(const SetExpr& e) const {
    if (!lets_.count(e.name)) throw ParseError("unbound name '" + e.name + "'", e.line, e.column);
  }

  std::vector<SetTerm> terms_of(const std::vector<SetExpr>& items) {
    std::vector<SetTerm> terms;
    for (const auto& item : items) {
      switch (item.kind) {
        case SetExpr::Kind::kName:
          check_bound(item);
          terms.push_back(SetTerm::variable(item.name));
          break;
        case SetExpr::Kind::kBraces: {
          std::string v = fresh();
          auto inner = terms_of(item.items);
          pending_.push_back({v, std::move(inner)});
          terms.push_back(SetTerm::variable(std::move(v)));
          break;
        }
        case SetExpr::Kind::kPlaceholder:
          throw ParseError("placeholder '@I' cannot appear in an equation", item.line, item.column);
      }
    }
    return terms;
  }

  std::string fresh() {
    std::string name;
    do {
      name = "_" + std::to_string(++counter_);
    } while (lets_.count(name));
    return name;
  }

  const Program& program_;
  std::map<std::string, const LetBinding*> lets_;
  std::vector<std::pair<std::string, std::vector<SetTerm>>> pending_;
  std::size_t counter_ = 0;
};

}  // namespace

Program parse(std::string_view text, ParseOptions options) {
  return Parser(text, options).program();
}

Lowered lower(const Program& program) { return Lowerer(program).run(); }

bool contains_placeholder(const SetExpr& e) {
  if (e.kind == SetExpr::Kind::kPlaceholder) return true;
  for (const auto& item : e.items) {
    if (contains_placeholder(item)) return true;
  }
  return false;
}

}  // namespace hyperset::syntax
