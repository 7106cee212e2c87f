#include "catkit/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace catkit::braid {

void validate(const BraidWord& b) {
  if (b.strands < 1) throw DomainError("a braid needs at least one strand");
  for (int g : b.word)
    if (g == 0 || std::abs(g) >= b.strands)
      throw DomainError("letter " + std::to_string(g) + " is invalid on " + std::to_string(b.strands) +
                        " strands");
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  std::swap(p.images.at(i - 1), p.images.at(j - 1));
  return p;
}

bool Permutation::is_bijection() const {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < size(); ++k)
    if (sorted[k] != k + 1) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionError("permutations of different sizes");
  Permutation out;
  out.images.resize(a.size());
  for (int i = 1; i <= a.size(); ++i) out.images[i - 1] = a(b(i));
  return out;
}

std::vector<int> free_reduce(const std::vector<int>& word) {
  std::vector<int> out;
  for (int g : word) {
    if (!out.empty() && out.back() == -g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

BraidWord braid_compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw DimensionError("braid_compose: " + std::to_string(a.strands) + " vs " + std::to_string(b.strands) +
                         " strands");
  std::vector<int> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return {a.strands, free_reduce(w)};
}

BraidWord braid_tensor(const BraidWord& a, const BraidWord& b) {
  BraidWord out{a.strands + b.strands, a.word};
  for (int g : b.word) out.word.push_back(g > 0 ? g + a.strands : g - a.strands);
  return out;
}

BraidWord braid_inverse(const BraidWord& b) {
  BraidWord out{b.strands, {}};
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) out.word.push_back(-*it);
  return out;
}

BraidWord braiding_gamma(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("braiding_gamma: negative block size");
  // Bottom to top: strand m+j walks left past the m strands of the first block.
  std::vector<int> bottom_up;
  for (int j = 1; j <= n; ++j)
    for (int k = m + j - 1; k >= j; --k) bottom_up.push_back(k);
  BraidWord out{std::max(m + n, 1), {}};
  out.word.assign(bottom_up.rbegin(), bottom_up.rend());
  return out;
}

Permutation underlying_perm(const BraidWord& b) {
  validate(b);
  Permutation p = Permutation::identity(b.strands);
  for (int g : b.word) p = p * Permutation::transposition(b.strands, std::abs(g), std::abs(g) + 1);
  return p;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int g : b.word) w += g > 0 ? 1 : -1;
  return w;
}

BraidWord conjugate(const BraidWord& b, const BraidWord& c) {
  return braid_compose(braid_compose(c, b), braid_inverse(c));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilize: sign must be +1 or -1");
  BraidWord out{b.strands + 1, b.word};
  out.word.push_back(sign * b.strands);
  return out;
}

Json to_json(const BraidWord& b) { return Json{{"strands", b.strands}, {"word", b.word}}; }

BraidWord braid_from_json(const Json& j) {
  try {
    BraidWord b{j.at("strands").get<int>(), j.at("word").get<std::vector<int>>()};
    validate(b);
    return b;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("braid: ") + e.what());
  }
}

}  // namespace catkit::braid
