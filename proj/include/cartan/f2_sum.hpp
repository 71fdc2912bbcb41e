#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <type_traits>
#include <utility>
#include <vector>

namespace cartan {

/**
 * A finite formal sum over F2 of basis elements of type B.
 *
 * Terms are kept sorted and unique, so two sums are equal exactly when
 * their term lists are. Adding a term that is already present cancels it.
 */
template <std::totally_ordered B>
class F2Sum {
 public:
  using value_type = B;
  using const_iterator = typename std::vector<B>::const_iterator;

  F2Sum() = default;
  explicit F2Sum(B term) { terms_.push_back(std::move(term)); }
  F2Sum(std::initializer_list<B> terms) : terms_(terms) { canonicalize(terms_); }

  /// Builds a sum from an arbitrary term list; repeated terms cancel in pairs.
  static F2Sum from_terms(std::vector<B> terms) {
    F2Sum sum;
    canonicalize(terms);
    sum.terms_ = std::move(terms);
    return sum;
  }

  [[nodiscard]] const std::vector<B>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const_iterator begin() const noexcept { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return terms_.end(); }

  [[nodiscard]] bool contains(const B& term) const {
    return std::binary_search(terms_.begin(), terms_.end(), term);
  }

  /// Adds a single basis element.
  void toggle(const B& term) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
    if (it != terms_.end() && *it == term)
      terms_.erase(it);
    else
      terms_.insert(it, term);
  }

  F2Sum& operator+=(const F2Sum& other) {
    std::vector<B> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
  }

  friend F2Sum operator+(F2Sum lhs, const F2Sum& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const F2Sum&, const F2Sum&) = default;

 private:
  static void canonicalize(std::vector<B>& terms) {
    std::sort(terms.begin(), terms.end());
    auto out = terms.begin();
    for (auto it = terms.begin(); it != terms.end();) {
      auto run_end = std::find_if(it, terms.end(), [&](const B& b) { return !(b == *it); });
      if (std::distance(it, run_end) % 2 == 1) {
        if (out != it) *out = std::move(*it);
        ++out;
      }
      it = run_end;
    }
    terms.erase(out, terms.end());
  }

  std::vector<B> terms_;
};

/// Collects raw terms and cancels duplicates once, at the end.
template <std::totally_ordered B>
class F2Accumulator {
 public:
  void push(B term) { raw_.push_back(std::move(term)); }
  void add(const F2Sum<B>& sum) { raw_.insert(raw_.end(), sum.begin(), sum.end()); }
  [[nodiscard]] F2Sum<B> finish() && { return F2Sum<B>::from_terms(std::move(raw_)); }

 private:
  std::vector<B> raw_;
};

/// Extends a map defined on basis elements linearly to a formal sum.
template <class B, class Fn>
  requires std::invocable<Fn&, const B&>
auto linear_extend(const F2Sum<B>& sum, Fn&& on_basis) {
  using Result = std::remove_cvref_t<std::invoke_result_t<Fn&, const B&>>;
  using C = typename Result::value_type;
  F2Accumulator<C> acc;
  for (const B& term : sum) acc.add(on_basis(term));
  return std::move(acc).finish();
}

}  // namespace cartan
