#include "catkit/gl_classes.hpp"

#include <deque>
#include <memory>
#include <mutex>

#include "catkit/errors.hpp"

namespace catkit::hall {

std::uint64_t gl_order(int n, int q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
  std::uint64_t order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  return order;
}

int ClassTable::class_id(const FqMatrix& m) const {
  if (m.rows != n || m.cols != n) throw DomainError("class_id: matrix of the wrong size");
  auto it = class_of.find(encode(m, q));
  if (it == class_of.end()) throw DomainError("class_id: matrix is singular");
  return it->second;
}

namespace {

ClassTable build_table(int n, const FiniteField& f) {
  ClassTable t;
  t.n = n;
  t.q = f.q();
  if (n == 0) {
    t.reps.push_back(FqMatrix(0, 0));
    t.sizes.push_back(1);
    t.class_of.emplace(0, 0);
    return t;
  }
  // Generators: transvections 1 + E_ij and diag(primitive, 1, ..., 1).
  std::vector<std::pair<FqMatrix, FqMatrix>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      FqMatrix g = FqMatrix::identity(n);
      g(i, j) = 1;
      gens.emplace_back(g, *inverse(f, g));
    }
  if (f.q() > 2) {
    FqMatrix g = FqMatrix::identity(n);
    g(0, 0) = f.primitive();
    gens.emplace_back(g, *inverse(f, g));
  }

  std::uint64_t total = 1;
  for (int k = 0; k < n * n; ++k) total *= static_cast<std::uint64_t>(f.q());
  for (std::uint64_t code = 0; code < total; ++code) {
    if (t.class_of.count(code)) continue;
    const FqMatrix m = decode(code, n, f.q());
    if (rank(f, m) != n) continue;
    const int id = static_cast<int>(t.reps.size());
    t.reps.push_back(m);
    std::uint64_t size = 0;
    std::deque<FqMatrix> queue{m};
    t.class_of.emplace(code, id);
    while (!queue.empty()) {
      const FqMatrix x = queue.front();
      queue.pop_front();
      ++size;
      for (const auto& [g, gi] : gens) {
        const FqMatrix y = mul(f, mul(f, g, x), gi);
        if (t.class_of.emplace(encode(y, f.q()), id).second) queue.push_back(y);
      }
    }
    t.sizes.push_back(size);
  }
  return t;
}

}  // namespace

const ClassTable& conj_classes(int n, const FiniteField& f) {
  if (n < 0) throw DomainError("conj_classes: negative dimension");
  const std::uint64_t order = gl_order(n, f.q());
  if (order > kMaxGLOrder)
    throw CapExceeded("conj_classes: |GL_" + std::to_string(n) + "(F_" + std::to_string(f.q()) +
                      ")| = " + std::to_string(order) + " exceeds " + std::to_string(kMaxGLOrder));
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ClassTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, f.q()}];
  if (!slot) slot = std::make_unique<ClassTable>(build_table(n, f));
  return *slot;
}

GLClassFunction GLClassFunction::zero(int n, const FiniteField& f) { return constant(n, f, 0); }

GLClassFunction GLClassFunction::constant(int n, const FiniteField& f, const Rational& c) {
  GLClassFunction g;
  g.n = n;
  g.q = f.q();
  const auto& table = conj_classes(n, f);
  for (std::size_t id = 0; id < table.size(); ++id) g.values[static_cast<int>(id)] = c;
  return g;
}

GLClassFunction GLClassFunction::indicator(int n, const FiniteField& f, int class_id) {
  GLClassFunction g = zero(n, f);
  auto it = g.values.find(class_id);
  if (it == g.values.end()) throw DomainError("indicator: no class " + std::to_string(class_id));
  it->second = 1;
  return g;
}

FqMatrix restriction_matrix(const FiniteField& f, const FqMatrix& sigma, const Subspace& v) {
  const int a = v.dim();
  FqMatrix m(a, a);
  for (int j = 0; j < a; ++j) {
    const auto c = v.coords(f, apply(f, sigma, v.basis().row(j)));
    for (int i = 0; i < a; ++i) m(i, j) = c[i];
  }
  return m;
}

FqMatrix quotient_matrix(const FiniteField& f, const FqMatrix& sigma, const Subspace& v, Extension ext) {
  const int n = v.ambient();
  const auto nps = v.non_pivots();
  const int b = static_cast<int>(nps.size());
  std::vector<std::vector<int>> ext_basis;
  for (int j = 0; j < b; ++j) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c[nps[j]] = 1;
    if (ext == Extension::Sheared) {
      for (int k = j + 1; k < b; ++k) c[nps[k]] = 1;
      if (v.dim() > 0)
        for (int i = 0; i < n; ++i) c[i] = f.add(c[i], v.basis()(0, i));
    }
    ext_basis.push_back(std::move(c));
  }
  // Columns: quotient coordinates of the chosen basis of C/V.
  FqMatrix change(b, b);
  for (int j = 0; j < b; ++j) {
    const auto qc = v.quotient_coords(f, ext_basis[j]);
    for (int i = 0; i < b; ++i) change(i, j) = qc[i];
  }
  FqMatrix m(b, b);
  for (int j = 0; j < b; ++j) {
    const auto image = v.quotient_coords(f, apply(f, sigma, ext_basis[j]));
    const auto x = solve(f, change, image);
    if (!x) throw DomainError("quotient_matrix: extension does not span C/V");
    for (int i = 0; i < b; ++i) m(i, j) = (*x)[i];
  }
  return m;
}

std::vector<Subspace> invariant_subspaces(const FiniteField& f, const FqMatrix& sigma, int k) {
  std::vector<Subspace> out;
  for (auto& v : enumerate_subspaces(sigma.rows, k, f))
    if (v.invariant_under(f, sigma)) out.push_back(std::move(v));
  return out;
}

GLClassFunction green_convolution(const GLClassFunction& a, const GLClassFunction& b, const FiniteField& f,
                                  Extension ext) {
  if (a.q != f.q() || b.q != f.q()) throw DomainError("green_convolution: class functions over another field");
  const int n = a.n + b.n;
  const auto& big = conj_classes(n, f);
  const auto& small_a = conj_classes(a.n, f);
  const auto& small_b = conj_classes(b.n, f);
  GLClassFunction out = GLClassFunction::zero(n, f);
  for (std::size_t id = 0; id < big.size(); ++id) {
    const FqMatrix& sigma = big.reps[id];
    Rational sum;
    for (const auto& v : invariant_subspaces(f, sigma, a.n)) {
      const int ca = small_a.class_id(restriction_matrix(f, sigma, v));
      const int cb = small_b.class_id(quotient_matrix(f, sigma, v, ext));
      sum += a.values.at(ca) * b.values.at(cb);
    }
    out.values[static_cast<int>(id)] = sum;
  }
  return out;
}

Json to_json(const GLClassFunction& g) {
  Json j = Json::object();
  for (const auto& [id, val] : g.values) j[std::to_string(id)] = to_json(val);
  return j;
}

GLClassFunction gl_class_function_from_json(const Json& j, int n, const FiniteField& f) {
  GLClassFunction g = GLClassFunction::zero(n, f);
  for (const auto& [key, val] : j.items()) {
    int id = -1;
    try {
      id = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError("class id '" + key + "' is not an integer");
    }
    auto it = g.values.find(id);
    if (it == g.values.end()) throw ParseError("no class " + key + " in GL_" + std::to_string(n));
    it->second = rational_from_json(val);
  }
  return g;
}

}  // namespace catkit::hall
