#include "catkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "catkit/errors.hpp"

namespace catkit::species {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw DomainError("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int x : parts) ++m[x];
  return m;
}

BigInt Partition::z() const {
  BigInt out = 1;
  for (const auto& [part, mult] : multiplicities()) {
    for (int k = 0; k < mult; ++k) out *= part;
    out *= factorial(mult);
  }
  return out;
}

BigInt Partition::class_size() const { return factorial(size()) / z(); }

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> p = a.parts;
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  return Partition(std::move(p));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(std::move(p));
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace catkit::species
