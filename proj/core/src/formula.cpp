#include "hyperset/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "hyperset/error.hpp"

namespace hyperset {

Formula Formula::make(Kind kind, std::string lhs, std::string rhs, const Formula* left,
                      const Formula* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  if (left) node->left = std::make_shared<const Formula>(*left);
  if (right) node->right = std::make_shared<const Formula>(*right);
  return Formula(std::move(node));
}

Formula Formula::member(std::string element, std::string set) {
  return make(Kind::kMember, std::move(element), std::move(set), nullptr, nullptr);
}
Formula Formula::equal(std::string lhs, std::string rhs) {
  return make(Kind::kEqual, std::move(lhs), std::move(rhs), nullptr, nullptr);
}
Formula Formula::negation(Formula f) { return make(Kind::kNot, {}, {}, &f, nullptr); }
Formula Formula::conjunction(Formula l, Formula r) { return make(Kind::kAnd, {}, {}, &l, &r); }
Formula Formula::disjunction(Formula l, Formula r) { return make(Kind::kOr, {}, {}, &l, &r); }
Formula Formula::implication(Formula l, Formula r) { return make(Kind::kImplies, {}, {}, &l, &r); }
Formula Formula::equivalence(Formula l, Formula r) { return make(Kind::kIff, {}, {}, &l, &r); }
Formula Formula::forall(std::string v, Formula body) {
  return make(Kind::kForall, std::move(v), {}, &body, nullptr);
}
Formula Formula::exists(std::string v, Formula body) {
  return make(Kind::kExists, std::move(v), {}, &body, nullptr);
}

namespace {

enum class Tok { kName, kIn, kEq, kNot, kAnd, kOr, kImp, kIff, kForall, kExists, kDot, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance(1);
    const std::size_t line = line_, column = column_;
    if (i_ >= text_.size()) return {Tok::kEnd, "", line, column};
    auto sym = [&](Tok kind, std::size_t len) {
      Token t{kind, std::string(text_.substr(i_, len)), line, column};
      advance(len);
      return t;
    };
    const std::string_view rest = text_.substr(i_);
    if (rest.starts_with("<->")) return sym(Tok::kIff, 3);
    if (rest.starts_with("->")) return sym(Tok::kImp, 2);
    switch (rest.front()) {
      case '~': return sym(Tok::kNot, 1);
      case '&': return sym(Tok::kAnd, 1);
      case '|': return sym(Tok::kOr, 1);
      case '=': return sym(Tok::kEq, 1);
      case '.': return sym(Tok::kDot, 1);
      case '(': return sym(Tok::kLParen, 1);
      case ')': return sym(Tok::kRParen, 1);
      default: break;
    }
    const char c = rest.front();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 0;
      while (len < rest.size() &&
             (std::isalnum(static_cast<unsigned char>(rest[len])) || rest[len] == '_')) {
        ++len;
      }
      const std::string_view word = rest.substr(0, len);
      Tok kind = Tok::kName;
      if (word == "in") kind = Tok::kIn;
      else if (word == "forall") kind = Tok::kForall;
      else if (word == "exists") kind = Tok::kExists;
      return sym(kind, len);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i_) {
      if (text_[i_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
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
  explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

  Formula parse() {
    Formula f = formula();
    if (tok_.kind != Tok::kEnd) fail("unexpected '" + tok_.text + "'");
    return f;
  }

 private:
  Formula formula() {
    if (tok_.kind == Tok::kForall || tok_.kind == Tok::kExists) return quantifier();
    return iff();
  }

  Formula quantifier() {
    const bool universal = take().kind == Tok::kForall;
    if (tok_.kind != Tok::kName) fail("expected a variable after quantifier");
    std::string v = take().text;
    expect(Tok::kDot, "'.' after quantified variable");
    Formula body = formula();
    return universal ? Formula::forall(std::move(v), std::move(body))
                     : Formula::exists(std::move(v), std::move(body));
  }

  Formula iff() {
    Formula f = implication();
    while (tok_.kind == Tok::kIff) {
      take();
      f = Formula::equivalence(std::move(f), implication());
    }
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (tok_.kind == Tok::kImp) {
      take();
      return Formula::implication(std::move(f), implication());
    }
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (tok_.kind == Tok::kOr) {
      take();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (tok_.kind == Tok::kAnd) {
      take();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (tok_.kind) {
      case Tok::kNot:
        take();
        return Formula::negation(unary());
      case Tok::kForall:
      case Tok::kExists:
        return quantifier();
      case Tok::kLParen: {
        take();
        Formula f = formula();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kName: {
        std::string lhs = take().text;
        if (tok_.kind != Tok::kIn && tok_.kind != Tok::kEq) fail("expected 'in' or '='");
        const bool membership = take().kind == Tok::kIn;
        if (tok_.kind != Tok::kName) fail("expected a name");
        std::string rhs = take().text;
        return membership ? Formula::member(std::move(lhs), std::move(rhs))
                          : Formula::equal(std::move(lhs), std::move(rhs));
      }
      case Tok::kEnd:
        fail("unexpected end of formula");
      default:
        fail("unexpected '" + tok_.text + "'");
    }
  }

  Token take() {
    Token t = std::move(tok_);
    tok_ = lexer_.next();
    return t;
  }

  void expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind) fail("expected " + what);
    take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, tok_.line, tok_.column);
  }

  Lexer lexer_;
  Token tok_;
};

void collect_names(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.lhs());
    out.insert(f.rhs());
  } else if (f.is_quantifier()) {
    out.insert(f.lhs());
    collect_names(f.body(), out);
  } else if (f.kind() == Formula::Kind::kNot) {
    collect_names(f.body(), out);
  } else {
    collect_names(f.left(), out);
    collect_names(f.right(), out);
  }
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto note = [&](const std::string& name) {
    if (std::find(bound.begin(), bound.end(), name) == bound.end()) out.insert(name);
  };
  if (f.is_atom()) {
    note(f.lhs());
    note(f.rhs());
  } else if (f.is_quantifier()) {
    bound.push_back(f.lhs());
    collect_free(f.body(), bound, out);
    bound.pop_back();
  } else if (f.kind() == Formula::Kind::kNot) {
    collect_free(f.body(), bound, out);
  } else {
    collect_free(f.left(), bound, out);
    collect_free(f.right(), bound, out);
  }
}

class Renamer {
 public:
  explicit Renamer(const Formula& f) : claimed_(free_vars(f)) { collect_names(f, all_); }

  Formula apply(const Formula& f, std::map<std::string, std::string>& scope) {
    auto lookup = [&](const std::string& n) {
      auto it = scope.find(n);
      return it == scope.end() ? n : it->second;
    };
    switch (f.kind()) {
      case Formula::Kind::kMember: return Formula::member(lookup(f.lhs()), lookup(f.rhs()));
      case Formula::Kind::kEqual: return Formula::equal(lookup(f.lhs()), lookup(f.rhs()));
      case Formula::Kind::kNot: return Formula::negation(apply(f.body(), scope));
      case Formula::Kind::kAnd:
        return Formula::conjunction(apply(f.left(), scope), apply(f.right(), scope));
      case Formula::Kind::kOr:
        return Formula::disjunction(apply(f.left(), scope), apply(f.right(), scope));
      case Formula::Kind::kImplies:
        return Formula::implication(apply(f.left(), scope), apply(f.right(), scope));
      case Formula::Kind::kIff:
        return Formula::equivalence(apply(f.left(), scope), apply(f.right(), scope));
      case Formula::Kind::kForall:
      case Formula::Kind::kExists: {
        const std::string& v = f.lhs();
        std::string fresh = v;
        for (std::size_t k = 1; claimed_.count(fresh) || (fresh != v && all_.count(fresh)); ++k) {
          fresh = v + "_" + std::to_string(k);
        }
        claimed_.insert(fresh);
        auto saved = scope.find(v) == scope.end() ? std::nullopt : std::optional(scope[v]);
        scope[v] = fresh;
        Formula body = apply(f.body(), scope);
        if (saved) scope[v] = *saved;
        else scope.erase(v);
        return f.kind() == Formula::Kind::kForall ? Formula::forall(fresh, std::move(body))
                                                  : Formula::exists(fresh, std::move(body));
      }
    }
    return f;
  }

 private:
  std::set<std::string> claimed_;
  std::set<std::string> all_;
};

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kIff: return 1;
    case Formula::Kind::kImplies: return 2;
    case Formula::Kind::kOr: return 3;
    case Formula::Kind::kAnd: return 4;
    default: return 5;
  }
}

// `tail` is true when nothing follows f in the enclosing text, so an
// unparenthesized quantifier cannot capture more than its body.
void print(const Formula& f, bool tail, std::string& out) {
  auto wrapped = [&](const Formula& g, bool parens, bool g_tail) {
    if (parens) out += "(";
    print(g, parens || g_tail, out);
    if (parens) out += ")";
  };
  switch (f.kind()) {
    case Formula::Kind::kMember:
      out += f.lhs() + " in " + f.rhs();
      return;
    case Formula::Kind::kEqual:
      out += f.lhs() + " = " + f.rhs();
      return;
    case Formula::Kind::kNot:
      out += "~";
      wrapped(f.body(), f.body().kind() != Formula::Kind::kNot, tail);
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out += f.kind() == Formula::Kind::kForall ? "forall " : "exists ";
      out += f.lhs() + ". ";
      print(f.body(), true, out);
      return;
    default:
      break;
  }
  const int p = precedence(f);
  const char* op = f.kind() == Formula::Kind::kAnd       ? " & "
                   : f.kind() == Formula::Kind::kOr      ? " | "
                   : f.kind() == Formula::Kind::kImplies ? " -> "
                                                         : " <-> ";
  const bool right_assoc = f.kind() == Formula::Kind::kImplies;
  const Formula& l = f.left();
  const Formula& r = f.right();
  const bool l_parens = l.is_quantifier() || (right_assoc ? precedence(l) <= p : precedence(l) < p);
  const bool r_parens = (r.is_quantifier() && !tail) ||
                        (right_assoc ? precedence(r) < p : precedence(r) <= p);
  wrapped(l, l_parens, false);
  out += op;
  wrapped(r, r_parens, tail);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Formula raw = Parser(text).parse();
  std::map<std::string, std::string> scope;
  return Renamer(raw).apply(raw, scope);
}

std::set<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, true, out);
  return out;
}

std::string ordinal_formula_text(std::string_view var) {
  const std::string x(var);
  return "(forall y. (y in " + x + " -> forall z. (z in y -> z in " + x + "))) & " +
         "(forall y. (y in " + x + " -> forall z. (z in " + x + " -> (y in z | y = z | z in y)))) & " +
         "(forall y. (y in " + x + " -> forall z. (z in y -> exists w. (w in y & " +
         "forall v. (v in w -> ~(v in y))))))";
}

}  // namespace hyperset
