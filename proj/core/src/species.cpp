#include "catkit/species.hpp"

#include <functional>
#include <numeric>

namespace catkit::species {

namespace {

// One permutation of {0..n-1} with the given cycle type: consecutive blocks.
std::vector<int> standard_permutation(const Partition& lambda) {
  std::vector<int> perm;
  int start = 0;
  for (int len : lambda.parts) {
    for (int k = 0; k < len; ++k) perm.push_back(start + (k + 1) % len);
    start += len;
  }
  return perm;
}

// Restriction of perm to an invariant subset, relabelled 0..|subset|-1.
std::vector<int> restrict_perm(const std::vector<int>& perm, const std::vector<int>& subset) {
  std::vector<int> pos(perm.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
  std::vector<int> out(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) out[i] = pos[perm[subset[i]]];
  return out;
}

}  // namespace

ClassFunction ClassFunction::zero(int n) { return constant(n, 0); }

ClassFunction ClassFunction::constant(int n, const Rational& value) {
  ClassFunction f;
  f.n_ = n;
  for (auto& p : partitions_of(n)) f.values_.emplace(std::move(p), value);
  return f;
}

ClassFunction ClassFunction::sign(int n) {
  ClassFunction f = zero(n);
  for (auto& [lambda, val] : f.values_) val = (lambda.size() - lambda.length()) % 2 == 0 ? 1 : -1;
  return f;
}

ClassFunction ClassFunction::from_values(int n, const std::map<Partition, Rational>& values) {
  ClassFunction f = zero(n);
  for (const auto& [lambda, val] : values) f.set(lambda, val);
  return f;
}

const Rational& ClassFunction::at(const Partition& lambda) const {
  auto it = values_.find(lambda);
  if (it == values_.end())
    throw DimensionError(lambda.str() + " is not a partition of " + std::to_string(n_));
  return it->second;
}

void ClassFunction::set(const Partition& lambda, const Rational& value) {
  auto it = values_.find(lambda);
  if (it == values_.end())
    throw DimensionError(lambda.str() + " is not a partition of " + std::to_string(n_));
  it->second = value;
}

ClassFunction cauchy_product(const ClassFunction& f, const ClassFunction& g) {
  const int a = f.degree();
  ClassFunction out = ClassFunction::zero(a + g.degree());
  for (const auto& [lambda, unused] : out.values()) {
    const auto mult = lambda.multiplicities();
    const std::vector<std::pair<int, int>> sizes(mult.begin(), mult.end());
    std::vector<int> take(sizes.size(), 0);
    Rational sum;
    // Sub-multisets mu of lambda: choose how many cycles of each length go into S.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
      if (i == sizes.size()) {
        if (used != a) return;
        std::vector<int> mu, rest;
        BigInt weight = 1;
        for (std::size_t k = 0; k < sizes.size(); ++k) {
          const auto [len, m] = sizes[k];
          mu.insert(mu.end(), take[k], len);
          rest.insert(rest.end(), m - take[k], len);
          weight *= binomial(m, take[k]);
        }
        sum += Rational(weight) * f.at(Partition(mu)) * g.at(Partition(rest));
        return;
      }
      for (int t = 0; t <= sizes[i].second && used + t * sizes[i].first <= a; ++t) {
        take[i] = t;
        rec(i + 1, used + t * sizes[i].first);
      }
    };
    rec(0, 0);
    out.set(lambda, sum);
  }
  return out;
}

ClassFunction cauchy_product_by_subsets(const ClassFunction& f, const ClassFunction& g) {
  const int a = f.degree();
  const int n = a + g.degree();
  if (n > 20) throw CapExceeded("cauchy_product_by_subsets: degree above 20");
  ClassFunction out = ClassFunction::zero(n);
  for (const auto& [lambda, unused] : out.values()) {
    const auto perm = standard_permutation(lambda);
    Rational sum;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (__builtin_popcount(mask) != a) continue;
      bool invariant = true;
      for (int i = 0; i < n && invariant; ++i)
        if (((mask >> i) & 1U) != ((mask >> perm[i]) & 1U)) invariant = false;
      if (!invariant) continue;
      std::vector<int> in, outside;
      for (int i = 0; i < n; ++i) ((mask >> i) & 1U ? in : outside).push_back(i);
      sum += f.at(cycle_type(restrict_perm(perm, in))) * g.at(cycle_type(restrict_perm(perm, outside)));
    }
    out.set(lambda, sum);
  }
  return out;
}

ClassFunction hadamard_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree())
    throw DimensionError("hadamard_product: degrees " + std::to_string(f.degree()) + " and " +
                         std::to_string(g.degree()));
  ClassFunction out = f;
  for (const auto& [lambda, val] : f.values()) out.set(lambda, val * g.at(lambda));
  return out;
}

SymFunc::SymFunc(int maxdeg) : maxdeg_(maxdeg) {
  if (maxdeg < 0) throw DomainError("negative truncation degree");
}

SymFunc SymFunc::constant(const Rational& c, int maxdeg) {
  SymFunc f(maxdeg);
  f.add(Partition(), c);
  return f;
}

SymFunc SymFunc::power_sum(const Partition& lambda, int maxdeg) {
  SymFunc f(maxdeg);
  f.add(lambda, 1);
  return f;
}

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational() : it->second;
}

void SymFunc::add(const Partition& lambda, const Rational& c) {
  if (lambda.size() > maxdeg_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::degree_part(int n) const {
  SymFunc out(maxdeg_);
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() == n) out.add(lambda, c);
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  maxdeg_ = std::min(maxdeg_, o.maxdeg_);
  std::map<Partition, Rational> old;
  old.swap(terms_);
  for (const auto& [lambda, c] : old) add(lambda, c);
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o.scaled(-1); }

SymFunc SymFunc::scaled(const Rational& c) const {
  SymFunc out(maxdeg_);
  for (const auto& [lambda, x] : terms_) out.add(lambda, x * c);
  return out;
}

SymFunc char_map(const ClassFunction& f, int maxdeg) {
  if (f.degree() > maxdeg)
    throw DimensionError("char_map: degree " + std::to_string(f.degree()) + " exceeds truncation " +
                         std::to_string(maxdeg));
  SymFunc out(maxdeg);
  for (const auto& [lambda, val] : f.values()) out.add(lambda, val / Rational(lambda.z()));
  return out;
}

ClassFunction char_inverse(const SymFunc& f, int n) {
  ClassFunction out = ClassFunction::zero(n);
  for (const auto& [lambda, c] : f.terms())
    if (lambda.size() == n) out.set(lambda, c * Rational(lambda.z()));
  return out;
}

SymFunc sym_mul(const SymFunc& a, const SymFunc& b) {
  SymFunc out(std::min(a.maxdeg(), b.maxdeg()));
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      if (la.size() + lb.size() <= out.maxdeg()) out.add(la + lb, ca * cb);
  return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  if (!g.coeff(Partition()).is_zero()) throw DomainError("plethysm: inner series has a constant term");
  const int n = std::min(f.maxdeg(), g.maxdeg());
  // p_k o G for every k that can occur.
  std::map<int, SymFunc> adams;
  auto p_of_g = [&](int k) -> const SymFunc& {
    auto it = adams.find(k);
    if (it != adams.end()) return it->second;
    SymFunc s(n);
    for (const auto& [mu, c] : g.terms()) {
      std::vector<int> scaled = mu.parts;
      for (int& x : scaled) x *= k;
      s.add(Partition(scaled), c);
    }
    return adams.emplace(k, std::move(s)).first->second;
  };
  SymFunc out(n);
  for (const auto& [lambda, c] : f.terms()) {
    // G has no constant term, so p_lambda o G starts in degree >= length(lambda).
    if (lambda.length() > n) continue;
    SymFunc term = SymFunc::constant(c, n);
    for (int k : lambda.parts) term = sym_mul(term, p_of_g(k));
    out += term;
  }
  return out;
}

SymFunc exp_series(int maxdeg) {
  SymFunc out(maxdeg);
  for (int n = 0; n <= maxdeg; ++n)
    for (const auto& lambda : partitions_of(n)) out.add(lambda, Rational(1) / Rational(lambda.z()));
  return out;
}

SymFunc exp_plus_series(int maxdeg) { return exp_series(maxdeg) - SymFunc::constant(1, maxdeg); }

std::vector<BigInt> species_counts(const SymFunc& f, int upto) {
  std::vector<BigInt> out;
  for (int n = 0; n <= upto; ++n) {
    const Rational c = f.coeff(Partition(std::vector<int>(n, 1))) * Rational(factorial(n));
    if (!c.is_integer()) throw DomainError("species_counts: non-integral count in degree " + std::to_string(n));
    out.push_back(c.numerator());
  }
  return out;
}

Partition partition_from_string(const std::string& text) {
  try {
    return Partition(Json::parse(text).get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw ParseError("partition '" + text + "': " + e.what());
  }
}

Json to_json(const ClassFunction& f) {
  Json j = Json::object();
  for (const auto& [lambda, val] : f.values()) j[lambda.str()] = to_json(val);
  return j;
}

ClassFunction class_function_from_json(const Json& j, int n) {
  std::map<Partition, Rational> values;
  for (const auto& [key, val] : j.items()) values[partition_from_string(key)] = rational_from_json(val);
  return ClassFunction::from_values(n, values);
}

Json to_json(const SymFunc& f) {
  Json j = Json::object();
  for (const auto& [lambda, c] : f.terms()) j[lambda.str()] = to_json(c);
  return j;
}

SymFunc symfunc_from_json(const Json& j, int maxdeg) {
  SymFunc f(maxdeg);
  for (const auto& [key, val] : j.items()) f.add(partition_from_string(key), rational_from_json(val));
  return f;
}

}  // namespace catkit::species
