#include "leibniz/text.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace leibniz {

const ExactLaw& ParsedLaw::exact() const {
  if (!is_exact()) throw PreconditionFailed("law has the free parameter " + variable);
  return std::get<ExactLaw>(law);
}

const FormalLaw& ParsedLaw::formal() const {
  if (is_exact()) throw PreconditionFailed("law has no free parameter");
  return std::get<FormalLaw>(law);
}

namespace {

enum class Tok { Number, Ident, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t p = 0;
  while (p < line.size()) {
    const char c = line[p];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    const std::size_t start = p;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
      out.push_back({Tok::Number, std::string(line.substr(start, p - start)), start + 1});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (p < line.size() && (std::isalnum(static_cast<unsigned char>(line[p])) || line[p] == '_')) ++p;
      out.push_back({Tok::Ident, std::string(line.substr(start, p - start)), start + 1});
    } else if (std::string_view("+-*/^()=").find(c) != std::string_view::npos) {
      ++p;
      out.push_back({Tok::Punct, std::string(1, c), start + 1});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, start + 1);
    }
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

// e<digits> names a basis vector; returns the 0-based index.
std::optional<std::size_t> basis_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'e') return std::nullopt;
  for (std::size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
  if (name.size() > 9) return std::size_t(-1);
  const std::size_t v = std::stoul(name.substr(1));
  if (v == 0) return std::size_t(-1);
  return v - 1;
}

// Either a scalar or a vector in the span of the basis, both over Q(i)(var).
struct Value {
  bool is_vector = false;
  RationalFunction scalar;
  Vector<RationalFunction> vec;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t dim,
             const std::map<std::string, RationalFunction, std::less<>>& symbols)
      : toks_(std::move(tokens)), line_(line_no), dim_(dim), symbols_(symbols) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& what, const Token& at) const { throw ParseError(what, line_, at.column); }
  [[noreturn]] void fail(const std::string& what) const { fail(what, peek()); }

  bool accept(std::string_view punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'" + found());
  }
  std::string found() const {
    return at_end() ? ", found end of line" : ", found '" + peek().text + "'";
  }

  std::size_t expect_basis() {
    const Token t = peek();
    if (t.kind != Tok::Ident || !basis_index(t.text)) fail("expected a basis vector e1..e" + std::to_string(dim_) + found());
    ++pos_;
    const std::size_t k = *basis_index(t.text);
    if (k >= dim_) fail("basis index " + t.text + " out of range for dim " + std::to_string(dim_), t);
    return k;
  }

  long expect_integer() {
    bool negative = accept("-");
    const Token t = peek();
    if (t.kind != Tok::Number) fail("expected an integer exponent" + found());
    ++pos_;
    if (t.text.size() > 6) fail("exponent too large", t);
    const long v = std::stol(t.text);
    return negative ? -v : v;
  }

  Value expression() {
    Value acc = term();
    while (true) {
      const Token op = peek();
      if (accept("+")) {
        acc = combine(acc, term(), op, false);
      } else if (accept("-")) {
        acc = combine(acc, term(), op, true);
      } else {
        return acc;
      }
    }
  }

 private:
  Value combine(Value a, const Value& b, const Token& op, bool subtract) const {
    // A literal zero scalar may stand next to vectors ("= 0").
    if (a.is_vector != b.is_vector) {
      const Value& s = a.is_vector ? b : a;
      if (!s.scalar.is_zero()) fail("cannot add a scalar and a vector", op);
      if (!b.is_vector) return a;
      a = zero_vector();
    }
    if (!a.is_vector) {
      a.scalar = subtract ? a.scalar - b.scalar : a.scalar + b.scalar;
      return a;
    }
    for (std::size_t k = 0; k < dim_; ++k) a.vec[k] = subtract ? a.vec[k] - b.vec[k] : a.vec[k] + b.vec[k];
    return a;
  }

  Value zero_vector() const { return {true, {}, Vector<RationalFunction>(dim_)}; }

  Value term() {
    Value acc = unary();
    while (true) {
      const Token op = peek();
      if (accept("*")) {
        Value rhs = unary();
        if (acc.is_vector && rhs.is_vector) fail("product of two basis vectors in a coefficient", op);
        if (!acc.is_vector && !rhs.is_vector) {
          acc.scalar *= rhs.scalar;
        } else {
          const RationalFunction s = acc.is_vector ? rhs.scalar : acc.scalar;
          Value v = acc.is_vector ? std::move(acc) : std::move(rhs);
          for (auto& x : v.vec) x *= s;
          acc = std::move(v);
        }
      } else if (accept("/")) {
        Value rhs = unary();
        if (rhs.is_vector) fail("division by a basis vector", op);
        if (rhs.scalar.is_zero()) fail("division by zero", op);
        if (acc.is_vector) {
          for (auto& x : acc.vec) x /= rhs.scalar;
        } else {
          acc.scalar /= rhs.scalar;
        }
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept("-")) {
      Value v = unary();
      if (v.is_vector) {
        for (auto& x : v.vec) x = -x;
      } else {
        v.scalar = -v.scalar;
      }
      return v;
    }
    if (accept("+")) return unary();
    Value base = primary();
    const Token op = peek();
    if (accept("^")) {
      if (base.is_vector) fail("power of a basis vector", op);
      const Token at = peek();
      const long e = expect_integer();
      if (e < 0 && base.scalar.is_zero()) fail("negative power of zero", at);
      RationalFunction b = e < 0 ? base.scalar.inverse() : base.scalar;
      RationalFunction r = RationalFunction::one();
      for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
      base.scalar = r;
    }
    return base;
  }

  Value primary() {
    const Token t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return {false, RationalFunction(GaussianRational(Rational(mpz_class(t.text)))), {}};
    }
    if (accept("(")) {
      Value v = expression();
      expect(")");
      return v;
    }
    if (t.kind == Tok::Ident) {
      if (basis_index(t.text)) {
        const std::size_t k = expect_basis();
        Value v = zero_vector();
        v.vec[k] = RationalFunction::one();
        return v;
      }
      ++pos_;
      if (t.text == "i") return {false, RationalFunction(GaussianRational::i()), {}};
      auto it = symbols_.find(t.text);
      if (it == symbols_.end()) fail("unknown name '" + t.text + "'", t);
      return {false, it->second, {}};
    }
    fail("expected a number, name or '('" + found());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t dim_;
  const std::map<std::string, RationalFunction, std::less<>>& symbols_;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    auto toks = tokenize(line, number);
    if (toks.size() > 1) out.push_back({number, std::move(toks)});
    start = end + 1;
  }
  return out;
}

bool is_keyword(const Token& t, std::string_view word) { return t.kind == Tok::Ident && t.text == word; }

std::size_t parse_dim(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty input, expected 'dim N'", 1, 1);
  const auto& first = lines.front();
  const auto& t = first.tokens;
  if (!is_keyword(t[0], "dim")) throw ParseError("expected 'dim N' first", first.number, t[0].column);
  if (t[1].kind != Tok::Number) throw ParseError("expected a dimension after 'dim'", first.number, t[1].column);
  if (t[1].text.size() > 4) throw ParseError("dimension too large", first.number, t[1].column);
  const std::size_t n = std::stoul(t[1].text);
  if (n == 0) throw ParseError("dimension must be positive", first.number, t[1].column);
  if (t[2].kind != Tok::End) throw ParseError("unexpected '" + t[2].text + "' after dimension", first.number, t[2].column);
  return n;
}

// Name from a `param NAME` line.
Token parse_param(const Line& line) {
  const auto& t = line.tokens;
  if (t[1].kind != Tok::Ident) throw ParseError("expected a parameter name", line.number, t[1].column);
  if (t[1].text == "i" || t[1].text == "dim" || t[1].text == "param" || basis_index(t[1].text))
    throw ParseError("reserved name '" + t[1].text + "'", line.number, t[1].column);
  if (t[2].kind != Tok::End) throw ParseError("unexpected '" + t[2].text + "'", line.number, t[2].column);
  return t[1];
}

GaussianRational constant_of(const RationalFunction& r) {
  if (!r.is_constant()) throw InternalError("constant expected");
  return r.constant_value();
}

}  // namespace

ParsedLaw parse_algebra(std::string_view text, const Bindings& bindings) {
  const auto lines = split_lines(text);
  const std::size_t n = parse_dim(lines);
  std::map<std::string, RationalFunction, std::less<>> symbols;
  std::string variable;
  FormalLaw law(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (is_keyword(line.tokens[0], "param")) {
      const Token name = parse_param(line);
      if (symbols.count(name.text)) throw ParseError("parameter '" + name.text + "' declared twice", line.number, name.column);
      if (auto it = bindings.find(name.text); it != bindings.end()) {
        symbols.emplace(name.text, RationalFunction(it->second));
      } else {
        if (!variable.empty())
          throw ParseError("parameters '" + variable + "' and '" + name.text +
                               "' are both unbound; bind all but one with --set",
                           line.number, name.column);
        variable = name.text;
        symbols.emplace(name.text, RationalFunction::variable());
      }
      continue;
    }
    if (is_keyword(line.tokens[0], "dim")) throw ParseError("'dim' may appear only once", line.number, line.tokens[0].column);
    LineParser p(line.tokens, line.number, n, symbols);
    const Token lhs = p.peek();
    const std::size_t i = p.expect_basis();
    p.expect("*");
    const std::size_t j = p.expect_basis();
    p.expect("=");
    if (!seen.insert({i, j}).second)
      throw ParseError("product e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " given twice",
                       line.number, lhs.column);
    const Token rhs = p.peek();
    Value v = p.expression();
    if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "'");
    if (!v.is_vector) {
      if (!v.scalar.is_zero()) p.fail("right-hand side must be a combination of basis vectors", rhs);
      continue;
    }
    law.set_product(i, j, v.vec);
  }

  for (const auto& [name, value] : bindings) {
    if (!symbols.count(name)) throw InvalidArgument("--set names an undeclared parameter '" + name + "'");
  }
  if (variable.empty()) return {map_constants<GaussianRational>(law, constant_of), ""};
  return {std::move(law), variable};
}

ExactLaw parse_exact_algebra(std::string_view text, const Bindings& bindings) {
  ParsedLaw parsed = parse_algebra(text, bindings);
  if (!parsed.is_exact()) throw InvalidArgument("parameter '" + parsed.variable + "' is unbound; give it with --set");
  return std::get<ExactLaw>(std::move(parsed.law));
}

ContractionFamily parse_family(std::string_view text) {
  const auto lines = split_lines(text);
  const std::size_t n = parse_dim(lines);
  std::map<std::string, RationalFunction, std::less<>> symbols;
  std::string variable = "t";
  bool declared = false;
  std::vector<std::optional<Vector<RationalFunction>>> columns(n);
  std::size_t last_line = lines.front().number;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    last_line = line.number;
    if (is_keyword(line.tokens[0], "param")) {
      const Token name = parse_param(line);
      if (declared) throw ParseError("a family takes a single parameter", line.number, name.column);
      if (li != 1) throw ParseError("'param' must precede the columns", line.number, line.tokens[0].column);
      declared = true;
      variable = name.text;
      continue;
    }
    if (symbols.empty()) symbols.emplace(variable, RationalFunction::variable());
    LineParser p(line.tokens, line.number, n, symbols);
    const Token head = p.next();
    if (head.kind != Tok::Ident || basis_index(head.text))
      p.fail("expected a column line such as 'f(e1) = ...'", head);
    p.expect("(");
    const Token col = p.peek();
    const std::size_t j = p.expect_basis();
    p.expect(")");
    p.expect("=");
    if (columns[j]) throw ParseError("column " + col.text + " given twice", line.number, col.column);
    const Token rhs = p.peek();
    Value v = p.expression();
    if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "'");
    if (!v.is_vector) p.fail("right-hand side must be a combination of basis vectors", rhs);
    columns[j] = std::move(v.vec);
  }

  std::vector<Vector<RationalFunction>> cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (!columns[j]) throw ParseError("missing column for e" + std::to_string(j + 1), last_line, 1);
    cols.push_back(*columns[j]);
  }
  return ContractionFamily(Matrix<RationalFunction>::from_columns(cols));
}

GaussianRational parse_scalar(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) throw ParseError("scalar must fit on one line", 1, 1);
  std::map<std::string, RationalFunction, std::less<>> none;
  LineParser p(tokenize(text, 1), 1, 0, none);
  if (p.at_end()) p.fail("empty scalar");
  Value v = p.expression();
  if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "'");
  if (v.is_vector) p.fail("expected a scalar");
  return v.scalar.constant_value();
}

namespace {

// True when s cannot be followed by "*eK" as is: a sum or difference at the
// top level, after an optional leading sign.
bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && (c == ' ' || ((c == '+' || c == '-') && k > 0))) return true;
  }
  return false;
}

// c*eK with c printed by `coef`; empty when c is zero.
std::string combination(const std::vector<std::string>& coefs) {
  std::string out;
  for (std::size_t k = 0; k < coefs.size(); ++k) {
    const std::string& s = coefs[k];
    if (s == "0") continue;
    const std::string e = "e" + std::to_string(k + 1);
    std::string term;
    if (s == "1") term = e;
    else if (s == "-1") term = "-" + e;
    else if (!needs_parens(s)) term = s + "*" + e;
    else term = "(" + s + ")*" + e;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

template <class F, class Str>
std::string print_products(const AlgebraLaw<F>& law, Str&& str) {
  std::string out;
  const std::size_t n = law.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::string> coefs;
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        coefs.push_back(str(law(i, j, k)));
        any = any || !law(i, j, k).is_zero();
      }
      if (!any) continue;
      out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " + combination(coefs) + "\n";
    }
  return out;
}

}  // namespace

std::string print_algebra(const ExactLaw& law) {
  return "dim " + std::to_string(law.dim()) + "\n" +
         print_products(law, [](const GaussianRational& z) { return to_string(z); });
}

std::string print_algebra(const FormalLaw& law, std::string_view variable) {
  return "dim " + std::to_string(law.dim()) + "\nparam " + std::string(variable) + "\n" +
         print_products(law, [&](const RationalFunction& r) { return to_string(r, variable); });
}

std::string print_family(const ContractionFamily& family, std::string_view variable) {
  const std::size_t n = family.dim();
  std::string out = "dim " + std::to_string(n) + "\nparam " + std::string(variable) + "\n";
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::string> coefs;
    for (std::size_t k = 0; k < n; ++k) coefs.push_back(to_string(family.matrix()(k, j), variable));
    out += "f(e" + std::to_string(j + 1) + ") = " + combination(coefs) + "\n";
  }
  return out;
}

}  // namespace leibniz
