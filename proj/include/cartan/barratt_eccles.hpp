#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/f2_sum.hpp"
#include "cartan/permutation.hpp"
#include "cartan/simplicial.hpp"

namespace cartan {

/// A d-simplex (σ_0, ..., σ_d) of E(r); nondegenerate ones form a basis of ℰ(r)_d.
using BESimplex = Simplex<Permutation>;
using BEChain = F2Sum<BESimplex>;

/// Arity shared by all entries of the tuple.
inline int be_arity(const BESimplex& e) {
  const int r = e[0].arity();
  for (const auto& s : e.vertices())
    if (s.arity() != r) throw ShapeMismatch("tuple mixes permutations of different arity");
  return r;
}

inline BEChain be_boundary(const BEChain& chain) { return boundary(chain); }

/// σ·(σ_0, ..., σ_d) = (σσ_0, ..., σσ_d), normalized.
inline BEChain sigma_act(const Permutation& sigma, const BESimplex& e) {
  if (be_arity(e) != sigma.arity()) throw ShapeMismatch("acting permutation has wrong arity");
  std::vector<Permutation> out;
  out.reserve(e.vertices().size());
  for (const auto& s : e.vertices()) out.push_back(sigma * s);
  BESimplex result(std::move(out));
  if (result.is_degenerate()) return {};
  return BEChain(std::move(result));
}

inline BEChain sigma_act(const Permutation& sigma, const BEChain& chain) {
  return linear_extend(chain, [&](const BESimplex& e) { return sigma_act(sigma, e); });
}

inline Permutation perm_block_compose(const Permutation& outer, std::span<const Permutation> blocks) {
  return block_compose(outer, blocks);
}

namespace detail {

using Column = std::vector<Permutation>;
using ColumnSimplex = Simplex<Column>;

inline F2Sum<ColumnSimplex> as_columns(const BEChain& chain) {
  F2Accumulator<ColumnSimplex> acc;
  for (const auto& e : chain) {
    if (e.is_degenerate()) continue;
    std::vector<Column> cols;
    cols.reserve(e.vertices().size());
    for (const auto& s : e.vertices()) cols.push_back(Column{s});
    acc.push(ColumnSimplex(std::move(cols)));
  }
  return std::move(acc).finish();
}

/// EZ(x ⊗ rest), with the product simplex stored column-wise.
inline F2Sum<ColumnSimplex> ez_prepend(const BESimplex& x, const F2Sum<ColumnSimplex>& rest) {
  F2Accumulator<ColumnSimplex> acc;
  if (x.is_degenerate()) return {};
  for (const auto& y : rest) {
    for_each_shuffle(x, y, [&](const BESimplex& a, const ColumnSimplex& b) {
      std::vector<Column> cols;
      cols.reserve(a.vertices().size());
      for (std::size_t k = 0; k < a.vertices().size(); ++k) {
        Column c;
        c.reserve(b[k].size() + 1);
        c.push_back(a[k]);
        c.insert(c.end(), b[k].begin(), b[k].end());
        cols.push_back(std::move(c));
      }
      ColumnSimplex s(std::move(cols));
      if (!s.is_degenerate()) acc.push(std::move(s));
    });
  }
  return std::move(acc).finish();
}

}  // namespace detail

/**
 * Operadic composition ∘_ℰ(e ⊗ e_1 ⊗ ⋯ ⊗ e_r) = N(∘_E) EZ^r(e ⊗ e_1 ⊗ ⋯ ⊗ e_r),
 * where EZ^r = EZ(id ⊗ EZ^{r-1}) nests to the right.
 */
inline BEChain be_compose(const BESimplex& e, std::span<const BEChain> inputs) {
  const int r = be_arity(e);
  if (static_cast<int>(inputs.size()) != r)
    throw ShapeMismatch("composition needs one input per arity slot");
  for (const auto& chain : inputs)
    for (const auto& term : chain) be_arity(term);
  if (e.is_degenerate()) return {};

  F2Sum<detail::ColumnSimplex> acc = detail::as_columns(inputs.back());
  for (int j = r - 2; j >= 0; --j) {
    F2Accumulator<detail::ColumnSimplex> next;
    for (const auto& x : inputs[static_cast<std::size_t>(j)]) next.add(detail::ez_prepend(x, acc));
    acc = std::move(next).finish();
  }
  acc = detail::ez_prepend(e, acc);

  F2Accumulator<BESimplex> out;
  for (const auto& cols : acc) {
    std::vector<Permutation> tuple;
    tuple.reserve(cols.vertices().size());
    for (const auto& c : cols.vertices())
      tuple.push_back(block_compose(c.front(), std::span<const Permutation>(c).subspan(1)));
    BESimplex s(std::move(tuple));
    if (!s.is_degenerate()) out.push(std::move(s));
  }
  return std::move(out).finish();
}

inline BEChain be_compose(const BEChain& e, std::span<const BEChain> inputs) {
  return linear_extend(e, [&](const BESimplex& b) { return be_compose(b, inputs); });
}

inline BEChain be_compose(const BESimplex& e, std::initializer_list<BEChain> inputs) {
  return be_compose(e, std::span<const BEChain>(inputs.begin(), inputs.size()));
}

// ---------------------------------------------------------------------------
// The Cartan construction in arity 2 -> 4

/// x̃_i = (e, (12), e, ..., (12)^i) in ℰ(2)_i.
inline BESimplex x_tilde(int i) {
  if (i < 0) throw std::invalid_argument("x_tilde index must be non-negative");
  const Permutation e = Permutation::identity(2);
  const Permutation t{2, 1};
  std::vector<Permutation> v;
  v.reserve(static_cast<std::size_t>(i) + 1);
  for (int k = 0; k <= i; ++k) v.push_back(k % 2 == 0 ? e : t);
  return BESimplex(std::move(v));
}

namespace detail {
inline void require_arity_two(const BESimplex& e) {
  if (be_arity(e) != 2) throw ShapeMismatch("expected an element of arity 2");
}
inline const Permutation& perm_23() {
  static const Permutation p{1, 3, 2, 4};
  return p;
}
}  // namespace detail

/// f(σ) = ∘_Σ(σ; e, e): f(12) = (13)(24).
inline Permutation map_f(const Permutation& sigma) {
  if (sigma.arity() != 2) throw ShapeMismatch("map_f is defined on Σ₂");
  const Permutation e = Permutation::identity(2);
  return block_compose(sigma, {e, e});
}

/// g(σ) = ∘_Σ(e; σ, σ): g(12) = (12)(34).
inline Permutation map_g(const Permutation& sigma) {
  if (sigma.arity() != 2) throw ShapeMismatch("map_g is defined on Σ₂");
  return block_compose(Permutation::identity(2), {sigma, sigma});
}

namespace detail {
template <class Fn>
BEChain apply_entrywise(const BESimplex& x, Fn&& fn) {
  require_arity_two(x);
  std::vector<Permutation> v;
  v.reserve(x.vertices().size());
  for (const auto& s : x.vertices()) v.push_back(fn(s));
  BESimplex out(std::move(v));
  if (out.is_degenerate()) return {};
  return BEChain(std::move(out));
}
}  // namespace detail

/// N(E(f)): (σ_0, ..., σ_n) -> (fσ_0, ..., fσ_n).
inline BEChain nf(const BESimplex& x) { return detail::apply_entrywise(x, map_f); }
inline BEChain nf(const BEChain& c) { return linear_extend(c, [](const BESimplex& x) { return nf(x); }); }

/// N(E(g)): (σ_0, ..., σ_n) -> (gσ_0, ..., gσ_n).
inline BEChain ng(const BESimplex& x) { return detail::apply_entrywise(x, map_g); }
inline BEChain ng(const BEChain& c) { return linear_extend(c, [](const BESimplex& x) { return ng(x); }); }

/// F(x) = ∘_ℰ(x ⊗ x̃_0 ⊗ x̃_0).
inline BEChain F_map(const BESimplex& x) {
  detail::require_arity_two(x);
  const BEChain unit(x_tilde(0));
  return be_compose(x, {unit, unit});
}
inline BEChain F_map(const BEChain& c) {
  return linear_extend(c, [](const BESimplex& x) { return F_map(x); });
}

/// G(x) = ∘_ℰ(x̃_0 ⊗ AW(x × x)).
inline BEChain G_map(const BESimplex& x) {
  detail::require_arity_two(x);
  F2Accumulator<BESimplex> acc;
  for (const auto& t : aw(ProductSimplex<Permutation, Permutation>(x, x)))
    acc.add(be_compose(x_tilde(0), {BEChain(t.left), BEChain(t.right)}));
  return std::move(acc).finish();
}
inline BEChain G_map(const BEChain& c) {
  return linear_extend(c, [](const BESimplex& x) { return G_map(x); });
}

/// H₁(σ_0, ..., σ_n) = Σ_i ((23)fσ_0, ..., (23)fσ_i, gσ_i, ..., gσ_n).
inline BEChain h1(const BESimplex& x) {
  detail::require_arity_two(x);
  const int n = x.dim();
  std::vector<Permutation> twisted_f;
  std::vector<Permutation> plain_g;
  for (const auto& s : x.vertices()) {
    twisted_f.push_back(detail::perm_23() * map_f(s));
    plain_g.push_back(map_g(s));
  }
  F2Accumulator<BESimplex> acc;
  for (int i = 0; i <= n; ++i) {
    std::vector<Permutation> v(twisted_f.begin(), twisted_f.begin() + i + 1);
    v.insert(v.end(), plain_g.begin() + i, plain_g.end());
    BESimplex s(std::move(v));
    if (!s.is_degenerate()) acc.push(std::move(s));
  }
  return std::move(acc).finish();
}
inline BEChain h1(const BEChain& c) { return linear_extend(c, [](const BESimplex& x) { return h1(x); }); }

/// H₂(x) = N(∘_E)((e, ..., e) ⊗ SHI(x × x)).
inline BEChain h2(const BESimplex& x) {
  detail::require_arity_two(x);
  const Permutation e = Permutation::identity(2);
  F2Accumulator<BESimplex> acc;
  for (const auto& p : shi(ProductSimplex<Permutation, Permutation>(x, x))) {
    std::vector<Permutation> v;
    v.reserve(p.left.vertices().size());
    for (std::size_t k = 0; k < p.left.vertices().size(); ++k)
      v.push_back(block_compose(e, {p.left[k], p.right[k]}));
    BESimplex s(std::move(v));
    if (!s.is_degenerate()) acc.push(std::move(s));
  }
  return std::move(acc).finish();
}
inline BEChain h2(const BEChain& c) { return linear_extend(c, [](const BESimplex& x) { return h2(x); }); }

/// H = H₁ + H₂, the equivariant chain homotopy between (23)∘F and G.
inline BEChain cartan_homotopy(const BESimplex& x) { return h1(x) + h2(x); }
inline BEChain cartan_homotopy(const BEChain& c) {
  return linear_extend(c, [](const BESimplex& x) { return cartan_homotopy(x); });
}

/// Nondegenerate basis of ℰ(r)_d, in lexicographic order.
inline std::vector<BESimplex> be_basis(int r, int d) {
  std::vector<Permutation> perms;
  std::vector<int> v(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) v[static_cast<std::size_t>(k)] = k + 1;
  do perms.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));

  std::vector<BESimplex> out;
  std::vector<Permutation> tuple(static_cast<std::size_t>(d) + 1);
  // Depth-first over tuples with adjacent entries distinct.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > d) {
      out.emplace_back(tuple);
      return;
    }
    for (const auto& p : perms) {
      if (pos > 0 && p == tuple[static_cast<std::size_t>(pos - 1)]) continue;
      tuple[static_cast<std::size_t>(pos)] = p;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace cartan
