#include "eqres/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

#include "eqres/error.hpp"

namespace eqres {

namespace {

// Sparse, not necessarily homogeneous, expression in main variables.
using Expr = std::map<Exponents, Coefficient, std::greater<>>;

void accumulate(Expr& into, const Exponents& e, const Coefficient& c) {
  auto [it, inserted] = into.try_emplace(e);
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

Expr expr_add(Expr a, const Expr& b, int sign) {
  for (const auto& [e, c] : b) accumulate(a, e, sign > 0 ? c : -c);
  return a;
}

Expr expr_mul(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) accumulate(out, ea + eb, ca * cb);
  return out;
}

Expr expr_constant(const Coefficient& c) {
  Expr e;
  if (!c.is_zero()) e.emplace(Exponents{}, c);
  return e;
}

enum class Tok { End, Integer, Ident, Plus, Minus, Star, Caret, LParen, RParen };

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }
  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    cur_ = Token{Tok::End, {}, pos_};
    if (pos_ >= s_.size()) return;
    const char c = s_[pos_];
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      cur_ = Token{Tok::Integer, s_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      cur_ = Token{Tok::Ident, s_.substr(start, pos_ - start), start};
      return;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    ++pos_;
    cur_ = Token{kind, s_.substr(start, 1), start};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : lex_(text), ctx_(ctx) {}

  Expr parse() {
    if (lex_.peek().kind == Tok::End) throw ParseError("empty expression", lex_.peek().offset);
    Expr e = expr();
    if (lex_.peek().kind != Tok::End) unexpected(lex_.peek());
    return e;
  }

 private:
  [[noreturn]] void unexpected(const Token& t) {
    switch (t.kind) {
      case Tok::Integer:
      case Tok::Ident:
      case Tok::LParen:
        throw ParseError("implicit multiplication is not allowed; expected operator before '" +
                             std::string(t.text) + "'",
                         t.offset);
      case Tok::End: throw ParseError("unexpected end of input", t.offset);
      default: throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
    }
  }

  Expr expr() {
    Expr acc = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      int sign = lex_.next().kind == Tok::Plus ? 1 : -1;
      acc = expr_add(std::move(acc), term(), sign);
    }
    return acc;
  }

  Expr term() {
    Expr acc = unary();
    while (lex_.peek().kind == Tok::Star) {
      lex_.next();
      acc = expr_mul(acc, unary());
    }
    return acc;
  }

  Expr unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Minus) {
      lex_.next();
      return expr_add(Expr{}, unary(), -1);
    }
    if (t.kind == Tok::Plus) throw ParseError("unary '+' is not allowed", t.offset);
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (lex_.peek().kind != Tok::Caret) return base;
    lex_.next();
    Token exp = lex_.next();
    if (exp.kind != Tok::Integer)
      throw ParseError("exponent must be a nonnegative integer literal", exp.offset);
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(exp.text.data(), exp.text.data() + exp.text.size(), k);
    if (ec != std::errc{} || k > 4096) throw ParseError("exponent out of range", exp.offset);
    Expr result = expr_constant(1);
    for (unsigned i = 0; i < k; ++i) result = expr_mul(result, base);
    if (lex_.peek().kind == Tok::Caret) throw ParseError("chained '^' is ambiguous; use parentheses", lex_.peek().offset);
    return result;
  }

  Expr primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Integer: return expr_constant(Integer(std::string(t.text)));
      case Tok::Ident: return identifier(t);
      case Tok::LParen: {
        Expr e = expr();
        Token close = lex_.next();
        if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.offset);
        return e;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.offset);
      default: throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
    }
  }

  Expr identifier(const Token& t) {
    if (auto idx = ctx_.ring.index_of(t.text)) return expr_constant(Coefficient::variable(*idx));
    const auto& prefix = ctx_.variable_prefix;
    if (t.text.size() > prefix.size() && t.text.substr(0, prefix.size()) == prefix) {
      auto digits = t.text.substr(prefix.size());
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
        if (k < 1 || k > ctx_.ambient)
          throw ParseError("variable '" + std::string(t.text) + "' out of range 1.." +
                               std::to_string(ctx_.ambient),
                           t.offset);
        Expr e;
        e.emplace(Exponents::unit(k - 1), Coefficient(1));
        return e;
      }
    }
    throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.offset);
  }

  Lexer lex_;
  const ParseContext& ctx_;
};

Polynomial to_polynomial(const Expr& e, std::size_t ambient, int degree) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [ex, c] : e) {
    if (static_cast<int>(ex.total_degree()) != degree)
      throw InvalidArgument("inhomogeneous input: term of degree " + std::to_string(ex.total_degree()) +
                            " in a polynomial declared of degree " + std::to_string(degree));
    terms.emplace_back(ex, c);
  }
  return Polynomial::from_terms(ambient, degree, std::move(terms));
}

std::string print_parameter_monomial(const Exponents& e, const ParameterRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < e.used(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < ring.size() ? ring.name(i) : "p" + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string print_variable_monomial(const Exponents& e, std::string_view prefix) {
  std::string out;
  for (std::size_t i = 0; i < e.used(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += std::string(prefix) + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

// Appends a signed term "coef*mono" with the separator conventions of the
// printer. `body` is the unsigned product of non-integer factors.
void append_term(std::string& out, const Integer& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  Integer a = abs(c);
  if (body.empty())
    out += a.get_str();
  else if (a == 1)
    out += body;
  else
    out += a.get_str() + "*" + body;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const ParseContext& ctx, int degree) {
  return to_polynomial(Parser(text, ctx).parse(), ctx.ambient, degree);
}

Polynomial parse_poly(std::string_view text, const ParseContext& ctx) {
  Expr e = Parser(text, ctx).parse();
  int degree = e.empty() ? 0 : static_cast<int>(e.begin()->first.total_degree());
  return to_polynomial(e, ctx.ambient, degree);
}

Coefficient parse_coefficient(std::string_view text, const ParameterRing& ring) {
  ParseContext ctx;
  ctx.ring = ring;
  return parse_poly(text, ctx, 0).coefficient(Exponents{});
}

std::string print_coefficient(const Coefficient& c, const ParameterRing& ring) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : c.terms()) append_term(out, v, print_parameter_monomial(e, ring));
  return out;
}

std::string print_poly(const Polynomial& p, const ParameterRing& ring, std::string_view prefix) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = print_variable_monomial(e, prefix);
    if (mono.empty()) {
      // Degree-0 polynomial: a single constant term.
      if (!out.empty()) out += " + ";
      out += print_coefficient(c, ring);
    } else if (c.term_count() == 1) {
      const auto& [ce, cv] = c.leading_term();
      std::string params = print_parameter_monomial(ce, ring);
      append_term(out, cv, params.empty() ? mono : params + "*" + mono);
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + print_coefficient(c, ring) + ")*" + mono;
    }
  }
  return out;
}

SystemFile parse_system(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> lines;  // content, byte offset
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(std::string(line), pos);
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError("missing header line 'n=<int> d=<int> params=<list>'", 0);

  SystemFile sys;
  bool have_n = false, have_d = false;
  std::vector<std::string> params;
  {
    std::istringstream header(lines[0].first);
    std::string field;
    while (header >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos) throw ParseError("malformed header field '" + field + "'", lines[0].second);
      std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      auto as_int = [&](const std::string& v) {
        int out = 0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size())
          throw ParseError("header field '" + key + "' is not an integer", lines[0].second);
        return out;
      };
      if (key == "n") {
        sys.n = as_int(value);
        have_n = true;
      } else if (key == "d") {
        sys.d = as_int(value);
        have_d = true;
      } else if (key == "params") {
        std::size_t start = 0;
        while (start < value.size()) {
          std::size_t comma = value.find(',', start);
          if (comma == std::string::npos) comma = value.size();
          std::string name = value.substr(start, comma - start);
          if (name.empty()) throw ParseError("empty parameter name in header", lines[0].second);
          params.push_back(name);
          start = comma + 1;
        }
      } else {
        throw ParseError("unknown header field '" + key + "'", lines[0].second);
      }
    }
  }
  if (!have_n || !have_d) throw ParseError("header must declare n and d", lines[0].second);
  if (sys.n < 1) throw InvalidArgument("n must be at least 1");
  if (sys.d < 1) throw InvalidArgument("d must be at least 1");
  sys.ring = ParameterRing(params);
  if (lines.size() - 1 != static_cast<std::size_t>(sys.n))
    throw ParseError("expected " + std::to_string(sys.n) + " polynomial lines, found " +
                         std::to_string(lines.size() - 1),
                     lines.back().second);
  ParseContext ctx{static_cast<std::size_t>(sys.n), sys.ring, "x"};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      sys.polys.push_back(parse_poly(lines[i].first, ctx, sys.d));
    } catch (const ParseError& e) {
      const auto line_number = std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(lines[i].second), '\n') + 1;
      throw ParseError("line " + std::to_string(line_number) + ": " + e.message(), lines[i].second + e.offset());
    }
  }
  return sys;
}

std::string print_system(const SystemFile& system) {
  std::string out = "n=" + std::to_string(system.n) + " d=" + std::to_string(system.d) + " params=";
  for (std::size_t i = 0; i < system.ring.size(); ++i) {
    if (i) out += ',';
    out += system.ring.name(i);
  }
  out += '\n';
  for (const auto& p : system.polys) out += print_poly(p, system.ring) + '\n';
  return out;
}

std::string emit_factored_json(const FactoredResultant& f, const ParameterRing& ring) {
  nlohmann::ordered_json j;
  j["prefactor"] = print_coefficient(f.prefactor, ring);
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& factor : f.factors) {
    nlohmann::ordered_json item;
    item["expr"] = print_coefficient(factor.value, ring);
    if (factor.multiplicity.fits_slong_p())
      item["multiplicity"] = factor.multiplicity.get_si();
    else
      item["multiplicity"] = factor.multiplicity.get_str();
    j["factors"].push_back(std::move(item));
  }
  return j.dump();
}

}  // namespace eqres
