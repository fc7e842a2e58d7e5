#include "eqres/equivariant.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "eqres/discriminant.hpp"
#include "eqres/error.hpp"
#include "eqres/resultant.hpp"

namespace eqres {

namespace {

std::vector<Subset> subsets_of_size(int l, int k) {
  std::vector<Subset> out;
  Subset current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  if (k == 0 || k > l) return out;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == l - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::size_t parameter_count(const std::vector<Polynomial>& polys) {
  std::size_t m = 0;
  for (const auto& p : polys) m = std::max(m, p.used_parameters());
  return m;
}

// Runs task(i) for i in [0, count) on up to `jobs` threads. The first
// exception is rethrown after all workers finish.
template <typename Task>
void run_parallel(std::size_t count, int jobs, Task task) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string parameter_name(std::size_t index, std::size_t count) {
  static const std::string letters = "abcdfghijklmnopqrstuvwyz";
  if (count <= letters.size()) return std::string(1, letters[index]);
  return "p" + std::to_string(index + 1);
}

}  // namespace

Polynomial rho_lambda(const Polynomial& p, const Partition& lambda) {
  if (static_cast<int>(p.ambient()) != lambda.size())
    throw InvalidArgument("rho_lambda: polynomial has " + std::to_string(p.ambient()) +
                          " variables but the partition has size " + std::to_string(lambda.size()));
  std::vector<std::size_t> target;
  for (int block = 0; block < lambda.length(); ++block)
    for (int k = 0; k < lambda[block]; ++k) target.push_back(static_cast<std::size_t>(block));
  return remap_variables(p, target, static_cast<std::size_t>(lambda.length()));
}

std::vector<Subset> chain_subsets(const Partition& lambda) {
  std::vector<Subset> out;
  Subset current;
  int start = 0;
  for (int part : lambda.parts()) {
    current.push_back(start);
    out.push_back(current);
    start += part;
  }
  return out;
}

SpecializedSystem specialize_chain(DividedDifferenceTable& table, const Partition& lambda) {
  if (lambda.size() != table.n()) throw InvalidArgument("specialize_chain: partition size differs from n");
  if (lambda.length() > table.d())
    throw InvalidArgument("specialize_chain: partition " + lambda.to_string() + " is longer than d=" +
                          std::to_string(table.d()));
  SpecializedSystem out{lambda, {}};
  for (const auto& subset : chain_subsets(lambda)) out.polys.push_back(rho_lambda(table.get(subset), lambda));
  return out;
}

FactoredResultant decompose_resultant(const EquivariantSystem& system, const DecomposeOptions& options) {
  const int n = system.n();
  const int d = system.d();
  if (n < 2) throw InvalidArgument("decompose_resultant needs n >= 2");
  DividedDifferenceTable table(system);
  FactoredResultant out;
  std::vector<Partition> lambdas = d >= n ? partitions(n) : partitions(n, d);
  if (d < n) {
    Coefficient top = table.top_constant();
    Integer m0 = m_zero_resultant(n, d);
    out.prefactor_base = top;
    out.prefactor_exponent = m0;
    out.prefactor = top.pow(m0.get_ui());
  }
  std::vector<SpecializedSystem> chains;
  for (const auto& lambda : lambdas) chains.push_back(specialize_chain(table, lambda));
  table.freeze();

  std::vector<Coefficient> values(chains.size());
  run_parallel(chains.size(), options.jobs,
               [&](std::size_t i) { values[i] = macaulay_resultant(chains[i].polys); });
  for (std::size_t i = 0; i < chains.size(); ++i)
    out.factors.push_back(Factor{std::move(values[i]), m_lambda(lambdas[i]), lambdas[i].to_string()});
  return out;
}

VerificationReport verify_decomposition(const EquivariantSystem& system, const VerifyOptions& options) {
  VerificationReport report;
  const std::size_t params = parameter_count(system.polys());
  VerifyMode mode = options.mode;
  if (mode == VerifyMode::Auto) {
    const auto n = static_cast<unsigned long>(system.n());
    const auto t = static_cast<unsigned long>(system.n() * (system.d() - 1) + 1);
    const bool small = binomial(t + n - 1, n - 1) <= 15;
    mode = (params == 0 || small) ? VerifyMode::Symbolic : VerifyMode::Sampled;
  }
  report.mode = mode;
  FactoredResultant factored = decompose_resultant(system, options.decompose);

  if (mode == VerifyMode::Symbolic) {
    report.decomposition = factored.expand();
    report.direct = macaulay_resultant(system.polys());
    report.equal = report.decomposition == report.direct;
    return report;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> dist(-60, 60);
  report.equal = true;
  for (int s = 0; s < std::max(options.samples, 1); ++s) {
    std::vector<Integer> point;
    for (std::size_t i = 0; i < params; ++i) point.emplace_back(dist(rng));
    Integer lhs = factored.evaluate(point);
    std::vector<Polynomial> specialized;
    for (const auto& p : system.polys())
      specialized.push_back(map_coefficients(p, [&](const Coefficient& c) { return Coefficient(c.evaluate(point)); }));
    Integer rhs = macaulay_resultant(specialized).constant_value();
    report.equal = report.equal && lhs == rhs;
    report.points.push_back(std::move(point));
    report.decomposition_values.push_back(lhs);
    report.direct_values.push_back(rhs);
  }
  return report;
}

AveragedChain averaged_chain_resultant(const EquivariantSystem& system, const Partition& lambda) {
  const int l = lambda.length();
  if (lambda.size() != system.n()) throw InvalidArgument("averaged_chain_resultant: partition size differs from n");
  if (l > std::min(system.d(), system.n()))
    throw InvalidArgument("averaged_chain_resultant: partition " + lambda.to_string() + " is too long");

  // F_lambda^{j} = rho_lambda(F^{first index of block j}).
  std::vector<Polynomial> family;
  int start = 0;
  for (int part : lambda.parts()) {
    family.push_back(rho_lambda(system.polys()[start], lambda));
    start += part;
  }
  DividedDifferenceTable table = DividedDifferenceTable::from_divisible_family(std::move(family));

  std::vector<Polynomial> sums;
  std::vector<Polynomial> chain;
  for (int k = 1; k <= l; ++k) {
    Polynomial sum = Polynomial::zero(static_cast<std::size_t>(l), system.d() - k + 1);
    for (const auto& subset : subsets_of_size(l, k)) sum = add(sum, table.get(subset));
    sums.push_back(sum);
    Subset prefix(k);
    for (int i = 0; i < k; ++i) prefix[i] = i;
    chain.push_back(table.get(prefix));
  }

  AveragedChain out;
  out.averaged = macaulay_resultant(sums);
  out.chain = macaulay_resultant(chain);
  out.predicted_constant = 1;
  for (int k = 1; k < l; ++k)
    out.predicted_constant *= ipow(binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k)),
                                   falling_quotient(system.d(), l, k).get_ui());
  out.holds = out.averaged == out.chain.scaled(out.predicted_constant);

  std::vector<Polynomial> divided;
  bool exact = true;
  for (int k = 1; k <= l && exact; ++k) {
    Integer b = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k));
    std::vector<Polynomial::Term> terms;
    for (const auto& [e, c] : sums[k - 1].terms()) {
      auto q = c.try_exact_div(Coefficient(b));
      if (!q) {
        exact = false;
        break;
      }
      terms.emplace_back(e, *q);
    }
    if (exact) divided.push_back(Polynomial::from_terms(sums[k - 1].ambient(), sums[k - 1].degree(), std::move(terms)));
  }
  if (exact) out.divided = macaulay_resultant(divided);
  return out;
}

EquivariantSystem generic_equivariant_system(int n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("generic_equivariant_system needs n >= 1 and d >= 1");
  const auto ambient = static_cast<std::size_t>(n);
  // (k, mu) pairs in parameter order.
  std::vector<std::pair<int, Partition>> shape;
  for (int k = d; k >= 0; --k) {
    const int j = d - k;
    if (j == 0) {
      shape.emplace_back(k, Partition());
      continue;
    }
    auto mus = partitions(j);
    for (auto it = mus.rbegin(); it != mus.rend(); ++it)
      if ((*it)[0] <= n) shape.emplace_back(k, *it);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < shape.size(); ++i) names.push_back(parameter_name(i, shape.size()));

  std::vector<Polynomial> products;
  for (const auto& [k, mu] : shape)
    products.push_back(mu.length() == 0 ? Polynomial::constant(ambient, 1) : expand_elementary(mu, n));

  std::vector<Polynomial> polys;
  for (int i = 0; i < n; ++i) {
    Polynomial f = Polynomial::zero(ambient, d);
    Polynomial x = Polynomial::variable(ambient, static_cast<std::size_t>(i));
    for (std::size_t s = 0; s < shape.size(); ++s) {
      Polynomial term = mul(pow(x, static_cast<unsigned>(shape[s].first)), products[s]);
      f = add(f, scale(term, Coefficient::variable(s)));
    }
    polys.push_back(f);
  }
  return EquivariantSystem(std::move(polys), ParameterRing(std::move(names)));
}

EquivariantSystem specialize_parameters(const EquivariantSystem& system, std::span<const Integer> values) {
  std::vector<Polynomial> polys;
  for (const auto& p : system.polys())
    polys.push_back(map_coefficients(p, [&](const Coefficient& c) { return Coefficient(c.evaluate(values)); }));
  return EquivariantSystem(std::move(polys));
}

EquivariantSystem random_equivariant_system(int n, int d, std::mt19937_64& rng, long bound) {
  EquivariantSystem generic = generic_equivariant_system(n, d);
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> values;
  for (std::size_t i = 0; i < generic.ring().size(); ++i) values.emplace_back(dist(rng));
  return specialize_parameters(generic, values);
}

}  // namespace eqres
