#include "eqres/discriminant.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "eqres/error.hpp"
#include "eqres/parser.hpp"
#include "eqres/resultant.hpp"

namespace eqres {

namespace {

void check_sizes(int n, int d) {
  if (n < 2 || d < 2) throw InvalidArgument("symmetric polynomial needs n >= 2 and d >= 2");
  if (n > static_cast<int>(Exponents::kCapacity)) throw InvalidArgument("too many variables");
}

}  // namespace

Polynomial elementary(int p, int n) {
  if (p < 0 || n < 1) throw InvalidArgument("elementary: need p >= 0 and n >= 1");
  const auto ambient = static_cast<std::size_t>(n);
  if (p > n) return Polynomial::zero(ambient, p);
  // Subsets of size p as exponent vectors.
  std::vector<Polynomial::Term> terms;
  std::vector<int> pick(p);
  for (int i = 0; i < p; ++i) pick[i] = i;
  while (true) {
    Exponents e;
    for (int v : pick) e.set(static_cast<std::size_t>(v), 1);
    terms.emplace_back(e, Coefficient(1));
    int i = p - 1;
    while (i >= 0 && pick[i] == n - p + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Polynomial::from_terms(ambient, p, std::move(terms));
}

Polynomial expand_elementary(const Partition& lambda, int n) {
  Polynomial out = Polynomial::constant(static_cast<std::size_t>(n), 1);
  for (int part : lambda.parts()) out = mul(out, elementary(part, n));
  return out;
}

Polynomial elementary_partial(int j, int i, int n) {
  if (j < 1) throw InvalidArgument("elementary_partial: need j >= 1");
  const auto ambient = static_cast<std::size_t>(n);
  Polynomial x = Polynomial::variable(ambient, static_cast<std::size_t>(i));
  Polynomial out = Polynomial::zero(ambient, j - 1);
  for (int r = 0; r < j; ++r) {
    Polynomial term = mul(pow(x, static_cast<unsigned>(r)), elementary(j - 1 - r, n));
    out = r % 2 == 0 ? add(out, term) : sub(out, term);
  }
  return out;
}

std::vector<Partition> symmetric_basis(int n, int d) {
  std::vector<Partition> out;
  for (auto& lambda : partitions(d))
    if (lambda[0] <= n) out.push_back(std::move(lambda));
  return out;
}

SymmetricPoly SymmetricPoly::make(int n, int d, std::vector<std::pair<Partition, Coefficient>> coeffs,
                                  ParameterRing ring) {
  check_sizes(n, d);
  SymmetricPoly f;
  f.n = n;
  f.d = d;
  f.ring = std::move(ring);
  for (const auto& lambda : symmetric_basis(n, d)) f.coeffs.emplace_back(lambda, Coefficient(0));
  for (auto& [lambda, c] : coeffs) {
    auto it = std::find_if(f.coeffs.begin(), f.coeffs.end(), [&](const auto& kv) { return kv.first == lambda; });
    if (it == f.coeffs.end())
      throw InvalidArgument("e_" + lambda.to_string() + " is not a basis element for n=" + std::to_string(n) +
                            ", d=" + std::to_string(d));
    it->second = std::move(c);
  }
  return f;
}

SymmetricPoly SymmetricPoly::generic(int n, int d) {
  check_sizes(n, d);
  std::vector<std::pair<Partition, Coefficient>> coeffs;
  std::vector<std::string> names;
  for (const auto& lambda : symmetric_basis(n, d)) {
    coeffs.emplace_back(lambda, Coefficient::variable(names.size()));
    names.push_back("c" + lambda.compact());
  }
  return make(n, d, std::move(coeffs), ParameterRing(std::move(names)));
}

const Coefficient& SymmetricPoly::coefficient(const Partition& lambda) const {
  for (const auto& [mu, c] : coeffs)
    if (mu == lambda) return c;
  throw InvalidArgument("e_" + lambda.to_string() + " is not a basis element");
}

Polynomial SymmetricPoly::expand() const {
  Polynomial out = Polynomial::zero(static_cast<std::size_t>(n), d);
  for (const auto& [lambda, c] : coeffs)
    if (!c.is_zero()) out = add(out, scale(expand_elementary(lambda, n), c));
  return out;
}

namespace {

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::vector<std::string> split_assignments(std::string_view spec) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  bool comment = false;
  for (char ch : spec) {
    if (comment) {
      if (ch == '\n') comment = false;
      else continue;
    }
    if (ch == '#') {
      comment = true;
      continue;
    }
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (depth == 0 && (ch == ',' || ch == ';' || ch == '\n')) {
      out.push_back(current);
      current.clear();
      continue;
    }
    current += ch;
  }
  out.push_back(current);
  return out;
}

int parse_part(const std::string& text, const std::string& key) {
  if (text.empty() || text.size() > 4 || !std::all_of(text.begin(), text.end(), ::isdigit))
    throw ParseError("bad partition in coefficient key '" + key + "'", 0);
  return std::stoi(text);
}

Partition parse_key(const std::string& key) {
  if (key.size() < 2 || key[0] != 'c') throw ParseError("coefficient key '" + key + "' must look like c21 or c[2,1]", 0);
  std::vector<int> parts;
  std::string body = key.substr(1);
  if (body.front() == '[') {
    if (body.back() != ']') throw ParseError("unterminated '[' in coefficient key '" + key + "'", 0);
    std::string inner = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    while (true) {
      std::size_t comma = inner.find(',', start);
      parts.push_back(parse_part(trim(inner.substr(start, comma - start)), key));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else if (body.find('_') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t sep = body.find('_', start);
      parts.push_back(parse_part(body.substr(start, sep - start), key));
      if (sep == std::string::npos) break;
      start = sep + 1;
    }
  } else {
    for (char ch : body) parts.push_back(parse_part(std::string(1, ch), key));
  }
  // e_lambda does not depend on the order of the parts.
  std::sort(parts.begin(), parts.end(), std::greater<>());
  try {
    return Partition(std::move(parts));
  } catch (const InvalidArgument&) {
    throw ParseError("bad partition in coefficient key '" + key + "'", 0);
  }
}

}  // namespace

SymmetricPoly parse_symmetric(int n, int d, std::string_view spec) {
  if (trim(spec) == "generic") return SymmetricPoly::generic(n, d);
  check_sizes(n, d);
  // Symbolic values need one parameter per basis element; past the exponent
  // capacity only integer values are accepted.
  ParameterRing ring;
  if (symmetric_basis(n, d).size() <= Exponents::kCapacity) ring = SymmetricPoly::generic(n, d).ring;
  std::vector<std::pair<Partition, Coefficient>> coeffs;
  for (const auto& raw : split_assignments(spec)) {
    std::string item = trim(raw);
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'", 0);
    Partition lambda = parse_key(trim(item.substr(0, eq)));
    if (lambda.size() != d)
      throw InvalidArgument("coefficient key " + lambda.to_string() + " is not a partition of d=" + std::to_string(d));
    for (const auto& [mu, c] : coeffs)
      if (mu == lambda) throw InvalidArgument("coefficient of e_" + lambda.to_string() + " given twice");
    coeffs.emplace_back(lambda, parse_coefficient(trim(item.substr(eq + 1)), ring));
  }
  return SymmetricPoly::make(n, d, std::move(coeffs), ring);
}

EquivariantSystem partial_derivatives(const SymmetricPoly& f) {
  check_sizes(f.n, f.d);
  const auto ambient = static_cast<std::size_t>(f.n);
  std::vector<Polynomial> polys;
  for (int i = 0; i < f.n; ++i) {
    Polynomial partial = Polynomial::zero(ambient, f.d - 1);
    for (const auto& [lambda, c] : f.coeffs) {
      if (c.is_zero()) continue;
      const auto& parts = lambda.parts();
      for (std::size_t j = 0; j < parts.size(); ++j) {
        // Parts equal to parts[j] contribute identically; count them once.
        if (j > 0 && parts[j] == parts[j - 1]) continue;
        Polynomial term = elementary_partial(parts[j], i, f.n);
        bool skipped = false;
        for (std::size_t k = 0; k < parts.size(); ++k) {
          if (!skipped && parts[k] == parts[j]) {
            skipped = true;
            continue;
          }
          term = mul(term, elementary(parts[k], f.n));
        }
        partial = add(partial, scale(term, c.scaled(lambda.count(parts[j]))));
      }
    }
    polys.push_back(partial);
  }
  return EquivariantSystem(std::move(polys), f.ring);
}

Integer a_exponent(int n, int d) {
  if (n < 1 || d < 2) throw InvalidArgument("a_exponent: need n >= 1 and d >= 2");
  Integer sign = n % 2 == 0 ? 1 : -1;
  return exact_quotient(ipow(d - 1, static_cast<unsigned long>(n)) - sign, d);
}

Coefficient DiscriminantResult::scaled_value() const {
  Coefficient v = factored.expand();
  return epsilon % 2 == 0 ? v : -v;
}

Coefficient DiscriminantResult::value(int d) const {
  return scaled_value().exact_div(Coefficient(ipow(d, a.get_ui())));
}

DiscriminantResult discriminant_decomposition(const SymmetricPoly& f, const DecomposeOptions& options) {
  check_sizes(f.n, f.d);
  const int n = f.n;
  const int d = f.d;
  EquivariantSystem partials = partial_derivatives(f);
  DiscriminantResult out;
  out.a = a_exponent(n, d);
  out.factored = decompose_resultant(partials, options);
  if (d <= n) {
    const Coefficient& cd = f.coefficient(Partition({d}));
    const Coefficient expected_top = d % 2 == 1 ? cd : -cd;
    if (out.factored.prefactor_base != expected_top)
      throw Mismatch("top divided difference of the partials is not (-1)^(d-1) c_(d)");
    Integer m0 = m_zero_discriminant(n, d);
    if (m0 != out.factored.prefactor_exponent) throw Mismatch("exponent of c_(d) disagrees with the degree count");
    out.epsilon = d == 2 ? n - 1 : 0;
    // ((-1)^(d-1))^m0 must be the sign (-1)^epsilon.
    const int top_sign = (d % 2 == 0 && m0.get_ui() % 2 == 1) ? 1 : 0;
    if (top_sign != out.epsilon % 2) throw Mismatch("sign of the c_(d) power disagrees with epsilon");
    out.factored.prefactor_base = cd;
    out.factored.prefactor = cd.pow(m0.get_ui());
  }
  return out;
}

Coefficient discriminant_value(const SymmetricPoly& f) {
  EquivariantSystem partials = partial_derivatives(f);
  Coefficient res = macaulay_resultant(partials.polys());
  return res.exact_div(Coefficient(ipow(f.d, a_exponent(f.n, f.d).get_ui())));
}

}  // namespace eqres
