#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/f2_sum.hpp"

namespace cartan {

/**
 * An n-simplex of a simplicial set whose simplices are vertex sequences
 * (a nerve): the standard simplex Δⁿ (weakly increasing integer sequences)
 * and E(r) (arbitrary sequences of permutations) are both of this form.
 *
 * d_i deletes entry i and s_i repeats entry i. A simplex is degenerate
 * exactly when two adjacent entries coincide.
 */
template <std::totally_ordered V>
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<V> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
  }
  Simplex(std::initializer_list<V> vertices) : Simplex(std::vector<V>(vertices)) {}

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  [[nodiscard]] const std::vector<V>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const V& operator[](std::size_t i) const { return vertices_[i]; }

  [[nodiscard]] Simplex face(int i) const {
    if (i < 0 || i > dim() || dim() == 0) throw std::out_of_range("face index out of range");
    std::vector<V> out = vertices_;
    out.erase(out.begin() + i);
    return Simplex(std::move(out));
  }

  [[nodiscard]] Simplex degeneracy(int i) const {
    if (i < 0 || i > dim()) throw std::out_of_range("degeneracy index out of range");
    std::vector<V> out = vertices_;
    out.insert(out.begin() + i, vertices_[i]);
    return Simplex(std::move(out));
  }

  /// First k+1 vertices.
  [[nodiscard]] Simplex front(int k) const {
    return Simplex(std::vector<V>(vertices_.begin(), vertices_.begin() + k + 1));
  }
  /// Vertices k..n.
  [[nodiscard]] Simplex back(int k) const {
    return Simplex(std::vector<V>(vertices_.begin() + k, vertices_.end()));
  }

  [[nodiscard]] bool repeats_at(int j) const { return vertices_[j] == vertices_[j + 1]; }

  [[nodiscard]] bool is_degenerate() const {
    for (int j = 0; j < dim(); ++j)
      if (repeats_at(j)) return true;
    return false;
  }

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<V> vertices_;
};

/// A simplex of X × Y: two simplices of equal dimension.
template <std::totally_ordered X, std::totally_ordered Y>
struct ProductSimplex {
  Simplex<X> left;
  Simplex<Y> right;

  ProductSimplex() = default;
  ProductSimplex(Simplex<X> l, Simplex<Y> r) : left(std::move(l)), right(std::move(r)) {
    if (left.dim() != right.dim()) throw ShapeMismatch("product factors differ in dimension");
  }

  [[nodiscard]] int dim() const noexcept { return left.dim(); }

  /// Degenerate iff both factors repeat at a common index.
  [[nodiscard]] bool is_degenerate() const {
    for (int j = 0; j < dim(); ++j)
      if (left.repeats_at(j) && right.repeats_at(j)) return true;
    return false;
  }

  [[nodiscard]] ProductSimplex face(int i) const { return {left.face(i), right.face(i)}; }

  auto operator<=>(const ProductSimplex&) const = default;
};

/// A basis element x ⊗ y of N(X) ⊗ N(Y).
template <std::totally_ordered X, std::totally_ordered Y>
struct TensorTerm {
  Simplex<X> left;
  Simplex<Y> right;

  [[nodiscard]] int degree() const noexcept { return left.dim() + right.dim(); }
  [[nodiscard]] bool is_degenerate() const {
    return left.is_degenerate() || right.is_degenerate();
  }

  auto operator<=>(const TensorTerm&) const = default;
};

namespace detail {

/// Calls fn(chosen) for every k-subset of {0, ..., n-1}, in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> chosen(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) chosen[i] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(chosen));
    int i = k - 1;
    while (i >= 0 && chosen[i] == n - k + i) --i;
    if (i < 0) return;
    ++chosen[i];
    for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

/// Complement of a sorted subset of {0, ..., n-1}.
inline std::vector<int> complement(const std::vector<int>& chosen, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - chosen.size());
  std::size_t c = 0;
  for (int i = 0; i < n; ++i) {
    if (c < chosen.size() && chosen[c] == i)
      ++c;
    else
      out.push_back(i);
  }
  return out;
}

/// Applies s_{idx[0]} first, then s_{idx[1]} and so on; each index is shifted by `offset`.
template <class V>
Simplex<V> degenerate(Simplex<V> x, const std::vector<int>& idx, int offset = 0) {
  for (int i : idx) x = x.degeneracy(i + offset);
  return x;
}

/// Deletes the entries at positions first..last (inclusive); an empty range is the identity.
template <class V>
Simplex<V> delete_range(const Simplex<V>& x, int first, int last) {
  if (first > last) return x;
  std::vector<V> out;
  out.reserve(x.vertices().size());
  for (int j = 0; j <= x.dim(); ++j)
    if (j < first || j > last) out.push_back(x[static_cast<std::size_t>(j)]);
  return Simplex<V>(std::move(out));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Boundaries of normalized chains

template <class V>
F2Sum<Simplex<V>> boundary(const Simplex<V>& x) {
  if (x.dim() == 0) return {};
  F2Accumulator<Simplex<V>> acc;
  for (int i = 0; i <= x.dim(); ++i) {
    Simplex<V> f = x.face(i);
    if (!f.is_degenerate()) acc.push(std::move(f));
  }
  return std::move(acc).finish();
}

template <class V>
F2Sum<Simplex<V>> boundary(const F2Sum<Simplex<V>>& chain) {
  return linear_extend(chain, [](const Simplex<V>& x) { return boundary(x); });
}

template <class X, class Y>
F2Sum<ProductSimplex<X, Y>> boundary(const ProductSimplex<X, Y>& p) {
  if (p.dim() == 0) return {};
  F2Accumulator<ProductSimplex<X, Y>> acc;
  for (int i = 0; i <= p.dim(); ++i) {
    ProductSimplex<X, Y> f = p.face(i);
    if (!f.is_degenerate()) acc.push(std::move(f));
  }
  return std::move(acc).finish();
}

template <class X, class Y>
F2Sum<ProductSimplex<X, Y>> boundary(const F2Sum<ProductSimplex<X, Y>>& chain) {
  return linear_extend(chain, [](const ProductSimplex<X, Y>& p) { return boundary(p); });
}

/// ∂ ⊗ id + id ⊗ ∂.
template <class X, class Y>
F2Sum<TensorTerm<X, Y>> boundary(const TensorTerm<X, Y>& t) {
  F2Accumulator<TensorTerm<X, Y>> acc;
  for (const auto& f : boundary(t.left)) acc.push({f, t.right});
  for (const auto& f : boundary(t.right)) acc.push({t.left, f});
  return std::move(acc).finish();
}

template <class X, class Y>
F2Sum<TensorTerm<X, Y>> boundary(const F2Sum<TensorTerm<X, Y>>& chain) {
  return linear_extend(chain, [](const TensorTerm<X, Y>& t) { return boundary(t); });
}

// ---------------------------------------------------------------------------
// Alexander-Whitney, Eilenberg-Zilber and the Shih homotopy

/// AW(x × y) = Σ_i (front i-face of x) ⊗ (back (n-i)-face of y).
template <class X, class Y>
F2Sum<TensorTerm<X, Y>> aw(const ProductSimplex<X, Y>& p) {
  if (p.is_degenerate()) return {};
  F2Accumulator<TensorTerm<X, Y>> acc;
  for (int i = 0; i <= p.dim(); ++i) {
    TensorTerm<X, Y> t{p.left.front(i), p.right.back(i)};
    if (!t.is_degenerate()) acc.push(std::move(t));
  }
  return std::move(acc).finish();
}

template <class X, class Y>
F2Sum<TensorTerm<X, Y>> aw(const F2Sum<ProductSimplex<X, Y>>& chain) {
  return linear_extend(chain, [](const ProductSimplex<X, Y>& p) { return aw(p); });
}

/**
 * Calls fn(x', y') for each (p,q)-shuffle: x' is x degenerated along a
 * q-subset of {0..p+q-1} and y' is y degenerated along the complementary
 * p-subset. Indices are applied in increasing order. Results may be
 * degenerate as product simplices only if x or y already was.
 */
template <class X, class Y, class Fn>
void for_each_shuffle(const Simplex<X>& x, const Simplex<Y>& y, Fn&& fn) {
  const int p = x.dim();
  const int q = y.dim();
  detail::for_each_subset(p + q, q, [&](const std::vector<int>& on_x) {
    fn(detail::degenerate(x, on_x), detail::degenerate(y, detail::complement(on_x, p + q)));
  });
}

template <class X, class Y>
F2Sum<ProductSimplex<X, Y>> ez(const TensorTerm<X, Y>& t) {
  if (t.is_degenerate()) return {};
  F2Accumulator<ProductSimplex<X, Y>> acc;
  for_each_shuffle(t.left, t.right, [&](Simplex<X> a, Simplex<Y> b) {
    ProductSimplex<X, Y> s(std::move(a), std::move(b));
    if (!s.is_degenerate()) acc.push(std::move(s));
  });
  return std::move(acc).finish();
}

template <class X, class Y>
F2Sum<ProductSimplex<X, Y>> ez(const F2Sum<TensorTerm<X, Y>>& chain) {
  return linear_extend(chain, [](const TensorTerm<X, Y>& t) { return ez(t); });
}

/**
 * Shih's chain homotopy between EZ∘AW and the identity on N(X × Y).
 *
 * For x × y of degree n > 0, sums over 0 <= p <= n-1, 0 <= q <= n-p-1 and
 * partitions {0..p+q} = V ⊔ W with |V| = p, m = n-p-q:
 *   x-part: s_{v_p+m}⋯s_{v_1+m} s_{m-1} d_{n-p+1}⋯d_n x
 *   y-part: s_{w_{q+1}+m}⋯s_{w_1+m} d_{n-p-q}⋯d_{n-p-1} y
 * In every composite the rightmost operator acts first.
 */
template <class X, class Y>
F2Sum<ProductSimplex<X, Y>> shi(const ProductSimplex<X, Y>& prod) {
  const int n = prod.dim();
  if (n == 0 || prod.is_degenerate()) return {};
  F2Accumulator<ProductSimplex<X, Y>> acc;
  for (int p = 0; p <= n - 1; ++p) {
    // d_{n-p+1}⋯d_n drops the last p vertices.
    const Simplex<X> x_front = prod.left.front(n - p);
    for (int q = 0; q <= n - p - 1; ++q) {
      const int m = n - p - q;
      const Simplex<X> x_lifted = x_front.degeneracy(m - 1);
      // d_{n-p-q}⋯d_{n-p-1} removes positions m..m+q-1.
      const Simplex<Y> y_cut = detail::delete_range(prod.right, m, m + q - 1);
      detail::for_each_subset(p + q + 1, p, [&](const std::vector<int>& v) {
        Simplex<X> a = detail::degenerate(x_lifted, v, m);
        Simplex<Y> b = detail::degenerate(y_cut, detail::complement(v, p + q + 1), m);
        ProductSimplex<X, Y> s(std::move(a), std::move(b));
        if (!s.is_degenerate()) acc.push(std::move(s));
      });
    }
  }
  return std::move(acc).finish();
}

template <class X, class Y>
F2Sum<ProductSimplex<X, Y>> shi(const F2Sum<ProductSimplex<X, Y>>& chain) {
  return linear_extend(chain, [](const ProductSimplex<X, Y>& p) { return shi(p); });
}

// ---------------------------------------------------------------------------
// Standard simplices

/// All nondegenerate d-simplices of Δⁿ, i.e. strictly increasing sequences, in lexicographic order.
inline std::vector<Simplex<int>> standard_simplices(int n, int d) {
  std::vector<Simplex<int>> out;
  detail::for_each_subset(n + 1, d + 1, [&](const std::vector<int>& v) { out.emplace_back(v); });
  return out;
}

/// All (possibly degenerate) d-simplices of Δⁿ: weakly increasing sequences.
inline std::vector<Simplex<int>> all_standard_simplices(int n, int d) {
  // Weakly increasing length-(d+1) sequences in [0,n] <-> (d+1)-subsets of [0, n+d].
  std::vector<Simplex<int>> out;
  detail::for_each_subset(n + d + 1, d + 1, [&](const std::vector<int>& v) {
    std::vector<int> seq(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) seq[j] = v[j] - static_cast<int>(j);
    out.emplace_back(std::move(seq));
  });
  return out;
}

/// Nondegenerate d-simplices of Δᵃ × Δᵇ.
inline std::vector<ProductSimplex<int, int>> product_basis(int a, int b, int d) {
  std::vector<ProductSimplex<int, int>> out;
  const auto xs = all_standard_simplices(a, d);
  const auto ys = all_standard_simplices(b, d);
  for (const auto& x : xs)
    for (const auto& y : ys) {
      ProductSimplex<int, int> p(x, y);
      if (!p.is_degenerate()) out.push_back(std::move(p));
    }
  return out;
}

}  // namespace cartan
