#pragma once

#include <functional>
#include <utility>

#include "cartan/f2_sum.hpp"

namespace cartan {

/// A linear map of chain complexes, given on basis elements, shifting degree by `degree`.
template <class Src, class Dst>
struct GradedMap {
  int degree = 0;
  std::function<F2Sum<Dst>(const Src&)> on_basis;

  F2Sum<Dst> operator()(const Src& basis) const { return on_basis(basis); }
  F2Sum<Dst> operator()(const F2Sum<Src>& chain) const { return linear_extend(chain, on_basis); }
};

template <class B>
using BoundaryFn = std::function<F2Sum<B>(const B&)>;

/// Boundary in Hom(C, C'): c -> d'(f(c)) + f(d(c)). Degree drops by one.
template <class Src, class Dst>
GradedMap<Src, Dst> hom_boundary(GradedMap<Src, Dst> f, BoundaryFn<Src> d_src,
                                 BoundaryFn<Dst> d_dst) {
  auto on_basis = [f, d_src = std::move(d_src), d_dst = std::move(d_dst)](const Src& c) {
    return linear_extend(f(c), d_dst) + f(d_src(c));
  };
  return {f.degree - 1, std::move(on_basis)};
}

/// Pointwise sum. Both maps are expected to have the same degree.
template <class Src, class Dst>
GradedMap<Src, Dst> operator+(GradedMap<Src, Dst> f, GradedMap<Src, Dst> g) {
  const int degree = f.degree;
  return {degree, [f = std::move(f), g = std::move(g)](const Src& c) { return f(c) + g(c); }};
}

/// g after f.
template <class A, class B, class C>
GradedMap<A, C> compose(GradedMap<B, C> g, GradedMap<A, B> f) {
  const int degree = f.degree + g.degree;
  return {degree, [f = std::move(f), g = std::move(g)](const A& a) { return g(f(a)); }};
}

}  // namespace cartan
