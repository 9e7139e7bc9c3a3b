#include "dglift/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dglift/error.hpp"
#include "format_util.hpp"

namespace dglift {

const ProblemDescription::NamedModule* ProblemDescription::find_module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

const ProblemDescription::NamedAlgebra* ProblemDescription::find_algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a.name == name) return &a;
  return nullptr;
}

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, Newline, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Newline: return "end of line";
    case Token::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

[[noreturn]] void syntax_error(const Token& at, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, msg + " at column " + std::to_string(at.col), at.line);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Newlines inside brackets are whitespace, so statements can span lines.
std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1, depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      if (depth == 0) out.push_back({Token::Newline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Token::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Int, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("=<>[](),:|*+-/^").find(c) != std::string_view::npos) {
      if (c == '(' || c == '[' || c == '<') ++depth;
      if ((c == ')' || c == ']' || c == '>') && depth > 0) --depth;
      out.push_back({Token::Punct, std::string(1, c), line, col});
      advance(1);
    } else {
      Token t{Token::Punct, std::string(1, c), line, col};
      syntax_error(t, "unexpected character");
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

// Result of evaluating an expression: an algebra element, or a module
// element when the expression mentions a basis label.
struct Value {
  bool is_module = false;
  AlgebraElement alg;
  ModuleElement mod;
  explicit Value(AlgebraElement a) : alg(std::move(a)), mod(alg.algebra()) {}
  explicit Value(ModuleElement m) : is_module(true), alg(m.algebra()), mod(std::move(m)) {}
};

struct Label {
  std::string name;
  int hdeg;
};

struct Scope {
  AlgebraPtr alg;
  std::vector<Label> labels;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_punct(char c) const { return peek().kind == Token::Punct && peek().text[0] == c; }
  bool accept(char c) {
    if (!at_punct(c)) return false;
    ++pos_;
    return true;
  }
  Token expect(char c) {
    if (!at_punct(c)) syntax_error(peek(), std::string("expected '") + c + "' but found " + describe(peek()));
    return next();
  }
  Token expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) syntax_error(peek(), "expected " + what + " but found " + describe(peek()));
    return next();
  }
  void expect_keyword(const std::string& kw) {
    if (peek().kind != Token::Ident || peek().text != kw)
      syntax_error(peek(), "expected '" + kw + "' but found " + describe(peek()));
    next();
  }
  long expect_int() {
    const bool neg = accept('-');
    if (peek().kind != Token::Int) syntax_error(peek(), "expected an integer but found " + describe(peek()));
    const Token t = next();
    if (t.text.size() > 9) syntax_error(t, "integer too large");
    const long v = std::stol(t.text);
    return neg ? -v : v;
  }
  void expect_end_of_statement() {
    if (peek().kind == Token::Newline || peek().kind == Token::End) return;
    syntax_error(peek(), "expected end of statement but found " + describe(peek()));
  }
  void skip_newlines() {
    while (peek().kind == Token::Newline) next();
  }
  bool done() const { return peek().kind == Token::End; }

  // name:hdeg or name:hdeg:wdeg
  struct Decl {
    Token name;
    long hdeg = 0;
    std::optional<long> wdeg;
  };
  Decl parse_decl(const std::string& what) {
    Decl d;
    d.name = expect_ident(what);
    expect(':');
    d.hdeg = expect_int();
    if (accept(':')) d.wdeg = expect_int();
    return d;
  }

  RingPtr parse_ring_desc() {
    const Token f = expect_ident("a field (QQ or FF(p))");
    RingSpec spec;
    if (f.text == "QQ") {
      spec.field = GroundField::rationals();
    } else if (f.text == "FF") {
      expect('(');
      const Token at = peek();
      const long p = expect_int();
      expect(')');
      if (p < 2) throw Error(ErrorKind::InvalidField, "FF(" + std::to_string(p) + ") is not a prime field", at.line);
      spec.field = GroundField::prime(static_cast<std::uint32_t>(p));
    } else {
      syntax_error(f, "expected QQ or FF(p) but found " + describe(f));
    }
    if (!accept('[')) return build_base_ring(spec);
    do {
      const Decl d = parse_decl("a generator name");
      if (d.wdeg) syntax_error(d.name, "ring generators take a single degree");
      spec.generators.push_back({d.name.text, static_cast<int>(d.hdeg)});
    } while (accept(','));
    expect(']');
    if (accept('/')) {
      const RingPtr free = build_base_ring(spec);
      Scope scope{make_skeleton(free, {}), {}};
      expect('(');
      do {
        const Token at = peek();
        const AlgebraElement rel = expect_algebra(parse_expr(scope), at);
        if (rel.terms().size() != 1)
          throw Error(ErrorKind::NonMonomialRelation, "relation " + rel.to_string() + " is not a monomial", at.line);
        spec.relations.push_back(rel.terms().begin()->first.r.exps);
      } while (accept(','));
      expect(')');
    }
    return build_base_ring(spec);
  }

  Value parse_expr(const Scope& s) {
    const Token start = peek();
    std::optional<Value> acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    while (true) {
      const Token at = peek();
      Value t = parse_term(s);
      if (negate) t = neg(t);
      acc = acc ? add(*acc, t, at) : t;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        break;
    }
    return *acc;
  }

  static AlgebraElement expect_algebra(const Value& v, const Token& at) {
    if (v.is_module) syntax_error(at, "basis elements are not allowed here");
    return v.alg;
  }

 private:
  static Value neg(const Value& v) { return v.is_module ? Value(-v.mod) : Value(-v.alg); }

  static Value add(const Value& a, const Value& b, const Token& at) {
    if (a.is_module == b.is_module) return a.is_module ? Value(a.mod + b.mod) : Value(a.alg + b.alg);
    const Value& m = a.is_module ? a : b;
    const Value& r = a.is_module ? b : a;
    if (!r.alg.is_zero()) syntax_error(at, "every term must contain exactly one basis element");
    return m;
  }

  static Value mul(const Value& a, const Value& b, const Scope& s, const Token& at) {
    if (a.is_module && b.is_module) syntax_error(at, "product of two basis elements");
    if (!a.is_module && !b.is_module) return Value(a.alg * b.alg);
    if (a.is_module) return Value(a.mod * b.alg);
    // b·(e_λ c) = (-1)^{|b||e_λ|} e_λ (b c)
    const FreeDGAlgebra& alg = *s.alg;
    ModTerms out;
    for (const auto& [mk, mc] : b.mod.terms())
      for (const auto& [ak, ac] : a.alg.terms()) {
        auto r = alg.ring()->multiply(ak.r, mk.r);
        auto m = alg.multiply(ak.m, mk.m);
        if (!r || !m) continue;
        Scalar c = m->coeff * ac * mc;
        if ((ak.m.hdeg * s.labels[mk.label].hdeg) % 2) c = -c;
        out.add(ModKey{mk.label, m->m, *r}, c);
      }
    return Value(ModuleElement(s.alg, std::move(out)));
  }

  Value parse_term(const Scope& s) {
    Value acc = parse_factor(s);
    while (at_punct('*')) {
      const Token at = next();
      acc = mul(acc, parse_factor(s), s, at);
    }
    return acc;
  }

  Value parse_factor(const Scope& s) {
    const Token at = peek();
    std::optional<std::size_t> variable;
    Value base = parse_atom(s, variable);
    if (!accept('^')) return base;
    if (base.is_module) syntax_error(at, "basis elements cannot be raised to a power");
    if (accept('(')) {
      const long n = expect_int();
      expect(')');
      if (!variable) syntax_error(at, "divided powers apply to algebra variables only");
      if (n < 0) syntax_error(at, "negative exponent");
      return Value(AlgebraElement::variable(s.alg, *variable, static_cast<std::uint32_t>(n)));
    }
    const long n = expect_int();
    if (n < 0) syntax_error(at, "negative exponent");
    AlgebraElement out = AlgebraElement::one(s.alg);
    for (long i = 0; i < n; ++i) out = out * base.alg;
    return Value(out);
  }

  Value parse_atom(const Scope& s, std::optional<std::size_t>& variable) {
    const Token t = peek();
    const GroundField f = s.alg->field();
    if (t.kind == Token::Int) {
      next();
      const mpz_class num(t.text);
      Scalar c = f.from_mpz(num);
      if (accept('/')) {
        const Token dt = peek();
        if (dt.kind != Token::Int) syntax_error(dt, "expected a denominator but found " + describe(dt));
        next();
        try {
          c = f.from_fraction(num, mpz_class(dt.text));
        } catch (const Error& e) {
          throw Error(e.kind(), e.what(), dt.line);
        }
      }
      return Value(c * AlgebraElement::one(s.alg));
    }
    if (t.kind == Token::Ident) {
      next();
      for (std::size_t i = 0; i < s.labels.size(); ++i)
        if (s.labels[i].name == t.text) return Value(ModuleElement::basis_times(i, AlgebraElement::one(s.alg)));
      if (auto i = s.alg->find_variable(t.text)) {
        variable = *i;
        return Value(AlgebraElement::variable(s.alg, *i));
      }
      if (auto g = s.alg->ring()->find_generator(t.text))
        return Value(AlgebraElement::from_ring(s.alg, RingElement::generator(s.alg->ring(), *g)));
      throw Error(ErrorKind::UndeclaredName, "undeclared name '" + t.text + "'", t.line);
    }
    if (accept('(')) {
      Value v = parse_expr(s);
      expect(')');
      return v;
    }
    syntax_error(t, "expected an expression but found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Differential list "dA = expr, dB = expr" for the declared names.
template <class OnDiff>
void parse_differentials(Parser& p, const std::vector<std::string>& names, OnDiff on_diff) {
  std::set<std::string> seen;
  do {
    const Token lhs = p.expect_ident("a differential such as dX");
    const std::string name = lhs.text.substr(1);
    if (lhs.text.size() < 2 || lhs.text[0] != 'd')
      syntax_error(lhs, "expected a differential such as dX but found " + describe(lhs));
    std::size_t index = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) index = i;
    if (index == names.size()) throw Error(ErrorKind::UndeclaredName, "undeclared name '" + name + "'", lhs.line);
    if (!seen.insert(name).second)
      throw Error(ErrorKind::DuplicateName, "differential of '" + name + "' given twice", lhs.line);
    p.expect('=');
    on_diff(index, lhs);
  } while (p.accept(','));
}

// Rethrows construction errors with the line of the statement.
template <class F>
auto at_line(int line, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.line() != 0) throw;
    throw Error(e.kind(), e.what(), line);
  }
}

}  // namespace

ProblemDescription parse_problem(std::string_view text) {
  Parser p(text);
  ProblemDescription out;
  std::set<std::string> names;
  auto declare = [&](const Token& t) {
    if (!names.insert(t.text).second) throw Error(ErrorKind::DuplicateName, "'" + t.text + "' is already declared", t.line);
  };

  p.skip_newlines();
  while (!p.done()) {
    const Token kw = p.expect_ident("'ring', 'algebra' or 'module'");
    const int line = kw.line;
    if (kw.text == "ring") {
      const Token name = p.expect_ident("a ring name");
      declare(name);
      p.expect('=');
      RingPtr r = at_line(line, [&] { return p.parse_ring_desc(); });
      out.rings.push_back({name.text, std::move(r)});
    } else if (kw.text == "algebra") {
      const Token name = p.expect_ident("an algebra name");
      declare(name);
      p.expect('=');
      const Token rname = p.expect_ident("a ring name");
      const ProblemDescription::NamedRing* ring = nullptr;
      for (const auto& r : out.rings)
        if (r.name == rname.text) ring = &r;
      if (!ring) throw Error(ErrorKind::UndeclaredName, "undeclared ring '" + rname.text + "'", rname.line);
      p.expect('<');
      std::vector<VariableSpec> specs;
      std::vector<std::pair<std::string, int>> degrees;
      std::vector<std::string> var_names;
      if (!p.at_punct('|') && !p.at_punct('>')) {
        do {
          const auto d = p.parse_decl("a variable name");
          specs.push_back({d.name.text, static_cast<int>(d.hdeg),
                           d.wdeg ? std::optional<int>(static_cast<int>(*d.wdeg)) : std::nullopt, {}});
          degrees.emplace_back(d.name.text, static_cast<int>(d.hdeg));
          var_names.push_back(d.name.text);
        } while (p.accept(','));
      }
      const AlgebraPtr skeleton = at_line(line, [&] { return make_skeleton(ring->ring, degrees); });
      if (p.accept('|')) {
        Scope scope{skeleton, {}};
        parse_differentials(p, var_names, [&](std::size_t i, const Token&) {
          const Token at = p.peek();
          specs[i].differential = Parser::expect_algebra(p.parse_expr(scope), at).terms();
        });
      }
      p.expect('>');
      AlgebraPtr alg = at_line(line, [&] { return build_algebra(ring->ring, specs); });
      out.algebras.push_back({name.text, rname.text, std::move(alg)});
    } else if (kw.text == "module") {
      const Token name = p.expect_ident("a module name");
      declare(name);
      p.expect_keyword("over");
      const Token aname = p.expect_ident("an algebra name");
      const ProblemDescription::NamedAlgebra* a = out.find_algebra(aname.text);
      if (!a) throw Error(ErrorKind::UndeclaredName, "undeclared algebra '" + aname.text + "'", aname.line);
      const AlgebraPtr& alg = a->algebra;
      p.expect('=');
      p.expect('<');
      ModuleSpec spec;
      Scope scope{alg, {}};
      std::vector<std::string> labels;
      if (!p.at_punct('|') && !p.at_punct('>')) {
        do {
          const auto d = p.parse_decl("a basis label");
          const std::string& l = d.name.text;
          if (alg->find_variable(l) || alg->ring()->find_generator(l) ||
              std::find(labels.begin(), labels.end(), l) != labels.end())
            throw Error(ErrorKind::DuplicateName, "basis label '" + l + "' is already in use", d.name.line);
          spec.basis.push_back({l, static_cast<int>(d.hdeg),
                                d.wdeg ? std::optional<int>(static_cast<int>(*d.wdeg)) : std::nullopt});
          scope.labels.push_back({l, static_cast<int>(d.hdeg)});
          labels.push_back(l);
        } while (p.accept(','));
      }
      spec.differentials.assign(labels.size(), ModuleElement(alg));
      if (p.accept('|')) {
        parse_differentials(p, labels, [&](std::size_t i, const Token&) {
          const Token at = p.peek();
          Value v = p.parse_expr(scope);
          if (!v.is_module && !v.alg.is_zero())
            syntax_error(at, "every term of d" + labels[i] + " must contain exactly one basis element");
          spec.differentials[i] = v.is_module ? v.mod : ModuleElement(alg);
        });
      }
      p.expect('>');
      ModulePtr m = at_line(line, [&] { return build_module(alg, spec); });
      out.modules.push_back({name.text, aname.text, std::move(m)});
    } else {
      syntax_error(kw, "expected 'ring', 'algebra' or 'module' but found " + describe(kw));
    }
    p.expect_end_of_statement();
    p.skip_newlines();
  }
  return out;
}

std::string print_problem(const ProblemDescription& p) {
  std::string out;
  for (const auto& r : p.rings) out += "ring " + r.name + " = " + r.ring->description() + "\n";
  for (const auto& a : p.algebras) {
    const FreeDGAlgebra& alg = *a.algebra;
    std::vector<std::string> decls, diffs;
    for (std::size_t i = 0; i < alg.num_variables(); ++i) {
      const Variable& v = alg.variables()[i];
      decls.push_back(v.name + ":" + std::to_string(v.hdeg) + ":" + std::to_string(v.wdeg));
      const AlgTerms d = alg.differential(alg.variable_power(i));
      if (!d.is_zero()) diffs.push_back("d" + v.name + " = " + alg.terms_to_string(d));
    }
    out += "algebra " + a.name + " = " + a.ring + "<" + detail::join(decls, ", ");
    if (!diffs.empty()) out += " | " + detail::join(diffs, ", ");
    out += ">\n";
  }
  for (const auto& m : p.modules) {
    const SemifreeModule& n = *m.module;
    std::vector<std::string> decls, diffs;
    for (std::size_t i = 0; i < n.rank(); ++i) {
      const BasisElement& e = n.basis()[i];
      decls.push_back(e.label + ":" + std::to_string(e.hdeg) + ":" + std::to_string(e.wdeg));
      const ModuleElement d = n.boundary_of_basis(i);
      if (!d.is_zero()) diffs.push_back("d" + e.label + " = " + n.to_string(d));
    }
    out += "module " + m.name + " over " + m.algebra + " = <" + detail::join(decls, ", ");
    if (!diffs.empty()) out += " | " + detail::join(diffs, ", ");
    out += ">\n";
  }
  return out;
}

RingPtr parse_ring(std::string_view text) {
  Parser p(text);
  RingPtr r = at_line(1, [&] { return p.parse_ring_desc(); });
  p.expect_end_of_statement();
  if (!p.done()) syntax_error(p.peek(), "unexpected " + describe(p.peek()));
  return r;
}

AlgebraElement parse_algebra_element(const AlgebraPtr& alg, std::string_view text) {
  Parser p(text);
  Scope scope{alg, {}};
  const Token at = p.peek();
  AlgebraElement v = Parser::expect_algebra(p.parse_expr(scope), at);
  p.expect_end_of_statement();
  if (!p.done()) syntax_error(p.peek(), "unexpected " + describe(p.peek()));
  return v;
}

}  // namespace dglift
