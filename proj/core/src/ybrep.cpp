#include "catkit/ybrep.hpp"

#include <cmath>
#include <set>

#include "catkit/conventions.hpp"
#include "catkit/linalg.hpp"

namespace catkit::yb {

namespace {

SparseMat square(const SparseMat& m) { return compose(m, m); }

}  // namespace

YBOp YBOp::make(SparseMat r) {
  if (!r.is_square()) throw DimensionError("Yang-Baxter operator must be square");
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(r.rows()))));
  if (d == 0 || d * d != r.rows())
    throw DimensionError("Yang-Baxter operator size " + std::to_string(r.rows()) + " is not a square d^2");
  YBOp op;
  op.dim_ = d;
  op.inverse_ = invert(r);
  op.r_ = std::move(r);
  return op;
}

const SparseMat& YBOp::inverse() const {
  if (!inverse_) throw DomainError("Yang-Baxter operator is not invertible over Z[v, v^-1]");
  return *inverse_;
}

YBOp flip(std::size_t dim) {
  SparseMat s(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) s.set(j * dim + i, i * dim + j, LaurentPoly(1));
  return YBOp::make(std::move(s));
}

SparseMat embed(const SparseMat& m, std::size_t dim, std::size_t left, std::size_t right) {
  std::size_t l = 1, r = 1;
  for (std::size_t k = 0; k < left; ++k) l *= dim;
  for (std::size_t k = 0; k < right; ++k) r *= dim;
  return kron(kron(SparseMat::identity(l), m), SparseMat::identity(r));
}

bool check_ybe(const YBOp& r) {
  const std::size_t d = r.dim();
  const SparseMat a = embed(r.matrix(), d, 0, 1);
  const SparseMat b = embed(r.matrix(), d, 1, 0);
  return compose_all<LaurentPoly>({a, b, a}) == compose_all<LaurentPoly>({b, a, b});
}

bool check_hecke(const YBOp& r, const HeckeParams& p, HeckeCase which) {
  const SparseMat& m = r.matrix();
  const SparseMat id = SparseMat::identity(m.rows());
  if (which == HeckeCase::Distinct) {
    if (p.r < 0 || p.s < 0) throw DomainError("check_hecke: negative degree");
    return square(m) == id.scaled(LaurentPoly::q(p.r * p.s));
  }
  if (p.r < 0) throw DomainError("check_hecke: negative degree");
  const LaurentPoly e = LaurentPoly::q(p.r * (p.r - 1) / 2) * (LaurentPoly::q(p.r) - LaurentPoly(1));
  return square(m) == m.scaled(e) + id.scaled(LaurentPoly::q(p.r * p.r));
}

bool check_hecke_algebroid(const HeckeAlgebroid& h) {
  auto y = [&](int s, int t) -> const SparseMat& {
    auto it = h.y.find({s, t});
    if (it == h.y.end())
      throw DimensionError("missing operator y(" + std::to_string(s) + "," + std::to_string(t) + ")");
    const std::size_t n = h.dims.at(s) * h.dims.at(t);
    if (it->second.rows() != n || it->second.cols() != n)
      throw DimensionError("operator y(" + std::to_string(s) + "," + std::to_string(t) + ") has the wrong shape");
    return it->second;
  };
  auto d = [&](int s, int t) {
    auto it = h.d.find({s, t});
    if (it == h.d.end()) throw DimensionError("missing scalar d(" + std::to_string(s) + "," + std::to_string(t) + ")");
    return it->second;
  };
  for (const auto& [s, ds] : h.dims) {
    for (const auto& [t, dt] : h.dims) {
      const SparseMat id = SparseMat::identity(ds * dt);
      if (s == t) {
        auto e = h.e.find(s);
        if (e == h.e.end()) throw DimensionError("missing scalar e(" + std::to_string(s) + ")");
        const SparseMat& ys = y(s, s);
        if (square(ys) != ys.scaled(e->second) + id.scaled(d(s, s))) return false;
      } else {
        if (d(s, t) != d(t, s)) return false;
        if (compose(y(t, s), y(s, t)) != id.scaled(d(s, t))) return false;
      }
    }
  }
  return true;
}

bool check_colored_ybe(const HeckeAlgebroid& h) {
  auto y = [&](int s, int t) -> const SparseMat& { return h.y.at({s, t}); };
  auto id = [&](int s) { return SparseMat::identity(h.dims.at(s)); };
  for (const auto& [a, da] : h.dims)
    for (const auto& [b, db] : h.dims)
      for (const auto& [c, dc] : h.dims) {
        // A (x) B (x) C -> C (x) B (x) A, both ways round the hexagon.
        const SparseMat lhs = compose_all<LaurentPoly>(
            {kron(y(b, c), id(a)), kron(id(b), y(a, c)), kron(y(a, b), id(c))});
        const SparseMat rhs = compose_all<LaurentPoly>(
            {kron(id(c), y(a, b)), kron(y(a, c), id(b)), kron(id(a), y(b, c))});
        if (lhs != rhs) return false;
      }
  return true;
}

SparseMat braid_rep(const braid::BraidWord& b, const YBOp& r) {
  braid::validate(b);
  const std::size_t d = r.dim();
  const auto n = static_cast<std::size_t>(b.strands);
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= d;
  SparseMat out = SparseMat::identity(total);
  for (int g : b.word) {
    const auto i = static_cast<std::size_t>(std::abs(g));
    const SparseMat& m = g > 0 ? r.matrix() : r.inverse();
    out = compose(out, embed(m, d, i - 1, n - i - 1));
  }
  return out;
}

EnhancementReport check_enhancement(const EnhancedYB& e) {
  EnhancementReport rep;
  const std::size_t d = e.yb.dim();
  rep.mu_diagonal = e.mu.rows() == d && e.mu.cols() == d;
  for (std::size_t i = 0; rep.mu_diagonal && i < d; ++i)
    for (const auto& [j, val] : e.mu.row(i))
      if (j != i) rep.mu_diagonal = false;
  rep.units = e.alpha.is_unit() && e.beta.is_unit();
  if (!rep.mu_diagonal) return rep;
  const SparseMat mm = kron(e.mu, e.mu);
  rep.commutes = compose(mm, e.yb.matrix()) == compose(e.yb.matrix(), mm);
  const std::vector<std::size_t> dims{d, d};
  rep.positive_trace = partial_trace(compose(e.yb.matrix(), mm), 2, dims) == e.mu.scaled(e.alpha * e.beta);
  if (e.yb.invertible() && e.alpha.is_unit())
    rep.negative_trace =
        partial_trace(compose(e.yb.inverse(), mm), 2, dims) == e.mu.scaled(e.alpha.inverse() * e.beta);
  return rep;
}

LaurentPoly eyb_trace(const braid::BraidWord& b, const EnhancedYB& e) {
  const SparseMat rho = braid_rep(b, e.yb);
  SparseMat mu_n = SparseMat::identity(1);
  for (int k = 0; k < b.strands; ++k) mu_n = kron(mu_n, e.mu);
  return e.alpha.pow(-braid::writhe(b)) * e.beta.pow(-b.strands) * trace(compose(rho, mu_n));
}

LaurentPoly eyb_invariant(const braid::BraidWord& b, const EnhancedYB& e) {
  const LaurentPoly unknot = eyb_trace(braid::BraidWord{1, {}}, e);
  if (unknot.is_zero()) throw DomainError("enhanced operator assigns 0 to the unknot");
  auto quotient = divide_exact(eyb_trace(b, e), unknot);
  if (!quotient) throw DomainError("trace invariant is not divisible by its unknot value");
  return *quotient;
}

EnhancedYB builtin_jones() {
  const LaurentPoly q = LaurentPoly::q();
  SparseMat r(4, 4);
  r.set(0, 0, q);                    // e0e0 -> q e0e0
  r.set(2, 1, LaurentPoly(1));       // e0e1 -> e1e0
  r.set(1, 2, q);                    // e1e0 -> q e0e1 + (q - 1) e1e0
  r.set(2, 2, q - LaurentPoly(1));
  r.set(3, 3, q);                    // e1e1 -> q e1e1
  return EnhancedYB{
      YBOp::make(std::move(r)),
      SparseMat::diagonal({LaurentPoly::v(1), LaurentPoly::v(-1)}),
      LaurentPoly::monomial(conventions::kJonesAlphaSign, conventions::kJonesAlphaExponent),
      LaurentPoly(conventions::kJonesBeta),
  };
}

EnhancedYB builtin_operator(const std::string& name) {
  if (name == "jones") return builtin_jones();
  throw DomainError("unknown builtin operator '" + name + "'");
}

}  // namespace catkit::yb
