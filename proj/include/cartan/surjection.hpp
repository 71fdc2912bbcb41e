#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartan/barratt_eccles.hpp"
#include "cartan/errors.hpp"
#include "cartan/f2_sum.hpp"
#include "cartan/permutation.hpp"

namespace cartan {

/**
 * A generator of the surjection operad Sur(r): a sequence (s(1), ..., s(k))
 * hitting every value of {1, ..., r} with no two adjacent entries equal.
 *
 * Degree is the excess k - r, so that Table Reduction preserves degree.
 */
class Surjection {
 public:
  Surjection(int arity, std::vector<int> seq) : arity_(arity), seq_(std::move(seq)) {
    check_range(seq_, arity_);
    if (!is_normal(seq_, arity_))
      throw std::invalid_argument("sequence is not surjective or has adjacent repeats");
  }

  /// True when seq is surjective onto 1..r and has no adjacent repeats.
  static bool is_normal(const std::vector<int>& seq, int r) {
    std::vector<bool> hit(static_cast<std::size_t>(r), false);
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (j + 1 < seq.size() && seq[j] == seq[j + 1]) return false;
      hit[static_cast<std::size_t>(seq[j] - 1)] = true;
    }
    for (bool h : hit)
      if (!h) return false;
    return true;
  }

  static void check_range(const std::vector<int>& seq, int r) {
    if (r < 1) throw std::invalid_argument("surjection arity must be positive");
    for (int v : seq)
      if (v < 1 || v > r)
        throw std::invalid_argument("surjection value " + std::to_string(v) + " outside 1.." +
                                    std::to_string(r));
  }

  [[nodiscard]] int arity() const noexcept { return arity_; }
  [[nodiscard]] const std::vector<int>& sequence() const noexcept { return seq_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(seq_.size()); }
  [[nodiscard]] int degree() const noexcept { return length() - arity_; }
  [[nodiscard]] int operator()(int k) const { return seq_.at(static_cast<std::size_t>(k - 1)); }

  /// "(1,3,2,3,4,3)"
  [[nodiscard]] std::string to_string() const {
    std::string out = "(";
    for (std::size_t j = 0; j < seq_.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(seq_[j]);
    }
    return out + ")";
  }

  auto operator<=>(const Surjection&) const = default;

 private:
  int arity_ = 1;
  std::vector<int> seq_;
};

using SurChain = F2Sum<Surjection>;

/// The class of an arbitrary sequence in Sur(r): the generator, or zero.
inline SurChain surj_normalize(std::vector<int> seq, int r) {
  Surjection::check_range(seq, r);
  if (!Surjection::is_normal(seq, r)) return {};
  return SurChain(Surjection(r, std::move(seq)));
}

/// ∂s = Σ_k s∘δ_k: every single-entry deletion, normalized.
inline SurChain surj_boundary(const Surjection& s) {
  F2Accumulator<Surjection> acc;
  const auto& seq = s.sequence();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    std::vector<int> d = seq;
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
    if (!d.empty() && Surjection::is_normal(d, s.arity())) acc.push(Surjection(s.arity(), std::move(d)));
  }
  return std::move(acc).finish();
}

inline SurChain surj_boundary(const SurChain& c) {
  return linear_extend(c, [](const Surjection& s) { return surj_boundary(s); });
}

/// Relabels every entry k by σ(k).
inline Surjection surj_act(const Permutation& sigma, const Surjection& s) {
  if (sigma.arity() != s.arity()) throw ShapeMismatch("acting permutation has wrong arity");
  std::vector<int> out;
  out.reserve(s.sequence().size());
  for (int v : s.sequence()) out.push_back(sigma(v));
  return Surjection(s.arity(), std::move(out));
}

inline SurChain surj_act(const Permutation& sigma, const SurChain& c) {
  return linear_extend(c, [&](const Surjection& s) { return SurChain(surj_act(sigma, s)); });
}

/**
 * Partial composition outer ∘_p inner.
 *
 * If p occurs k times in outer, the sum runs over 1 = j_0 <= j_1 <= ... <= j_k = n
 * (n = length of inner) in lexicographic order; the t-th occurrence of p is
 * replaced by (inner(j_{t-1}), ..., inner(j_t)). Inner values shift by p-1,
 * outer values above p shift by r-1 where r is the arity of inner.
 */
inline SurChain surj_compose(const Surjection& outer, int p, const Surjection& inner) {
  if (p < 1 || p > outer.arity()) throw std::out_of_range("composition position out of range");
  const int r = inner.arity();
  const int n = inner.length();
  const int result_arity = outer.arity() + r - 1;

  std::vector<int> occurrences;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer(i) == p) occurrences.push_back(i);
  const int k = static_cast<int>(occurrences.size());

  F2Accumulator<Surjection> acc;
  std::vector<int> cuts(static_cast<std::size_t>(k) + 1);
  cuts.front() = 1;
  cuts.back() = n;

  auto emit = [&] {
    std::vector<int> seq;
    int t = 0;
    for (int i = 1; i <= outer.length(); ++i) {
      const int v = outer(i);
      if (v == p) {
        for (int j = cuts[static_cast<std::size_t>(t)]; j <= cuts[static_cast<std::size_t>(t) + 1]; ++j)
          seq.push_back(inner(j) + p - 1);
        ++t;
      } else {
        seq.push_back(v > p ? v + r - 1 : v);
      }
    }
    if (Surjection::is_normal(seq, result_arity)) acc.push(Surjection(result_arity, std::move(seq)));
  };

  auto rec = [&](auto&& self, int t) -> void {
    if (t == k) {
      emit();
      return;
    }
    for (int j = cuts[static_cast<std::size_t>(t) - 1]; j <= n; ++j) {
      cuts[static_cast<std::size_t>(t)] = j;
      self(self, t + 1);
    }
  };
  if (k == 1)
    emit();
  else
    rec(rec, 1);
  return std::move(acc).finish();
}

// ---------------------------------------------------------------------------
// Table Reduction ℰ -> Sur

/**
 * Calls fn(a, seq) for every composition a = (a_0, ..., a_n) of n + r into
 * positive parts (lexicographic order), with seq the unnormalized sequence s_a.
 *
 * Block i of s_a reads the first a_i entries of row σ_i after discarding the
 * values already placed at non-caesura positions of earlier blocks; the last
 * entry of each block except the final one is a caesura.
 */
template <class Fn>
void for_each_table_term(const BESimplex& e, Fn&& fn) {
  const int r = be_arity(e);
  const int n = e.dim();
  const int total = n + r;
  std::vector<int> a(static_cast<std::size_t>(n) + 1);

  auto build = [&] {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(total));
    std::vector<bool> finished(static_cast<std::size_t>(r) + 1, false);
    for (int i = 0; i <= n; ++i) {
      const auto& row = e[static_cast<std::size_t>(i)].images();
      const std::size_t block_start = seq.size();
      for (int v : row) {
        if (static_cast<int>(seq.size() - block_start) == a[static_cast<std::size_t>(i)]) break;
        if (!finished[static_cast<std::size_t>(v)]) seq.push_back(v);
      }
      if (static_cast<int>(seq.size() - block_start) != a[static_cast<std::size_t>(i)])
        throw std::logic_error("table row exhausted");
      for (std::size_t j = block_start; j + 1 < seq.size(); ++j) finished[static_cast<std::size_t>(seq[j])] = true;
    }
    fn(static_cast<const std::vector<int>&>(a), static_cast<const std::vector<int>&>(seq));
  };

  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == n) {
      a[static_cast<std::size_t>(n)] = remaining;
      build();
      return;
    }
    // Leave at least one entry for each later block.
    for (int ai = 1; ai <= remaining - (n - i); ++ai) {
      a[static_cast<std::size_t>(i)] = ai;
      self(self, i + 1, remaining - ai);
    }
  };
  rec(rec, 0, total);
}

/// All raw sequences s_a, before normalization, in the enumeration order of the a-tuples.
inline std::vector<std::vector<int>> table_reduction_terms(const BESimplex& e) {
  std::vector<std::vector<int>> out;
  for_each_table_term(e, [&](const std::vector<int>&, const std::vector<int>& seq) { out.push_back(seq); });
  return out;
}

/// TR(σ_0, ..., σ_n) = Σ_a s_a, degenerate tuples mapping to zero.
inline SurChain table_reduction(const BESimplex& e) {
  if (e.is_degenerate()) return {};
  const int r = be_arity(e);
  F2Accumulator<Surjection> acc;
  for_each_table_term(e, [&](const std::vector<int>&, const std::vector<int>& seq) {
    if (Surjection::is_normal(seq, r)) acc.push(Surjection(r, seq));
  });
  return std::move(acc).finish();
}

inline SurChain table_reduction(const BEChain& c) {
  return linear_extend(c, [](const BESimplex& e) { return table_reduction(e); });
}

}  // namespace cartan
