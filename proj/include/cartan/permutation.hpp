#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cartan/errors.hpp"

namespace cartan {

/**
 * A permutation of {1, ..., r} in one-line notation: images()[k-1] is the image of k.
 *
 * Products compose right to left: (s * t)(k) = s(t(k)).
 */
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int r = arity();
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > r || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(r));
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// Product of disjoint or overlapping cycles, rightmost applied first.
  static Permutation from_cycles(int r, const std::vector<std::vector<int>>& cycles) {
    Permutation result = identity(r);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<int> v = identity(r).images_;
      const auto& c = *it;
      for (std::size_t j = 0; j < c.size(); ++j) {
        const int from = c[j];
        const int to = c[(j + 1) % c.size()];
        if (from < 1 || from > r || to < 1 || to > r)
          throw std::invalid_argument("cycle entry out of range");
        v[static_cast<std::size_t>(from - 1)] = to;
      }
      result = Permutation(std::move(v)) * result;
    }
    return result;
  }

  [[nodiscard]] int arity() const noexcept { return static_cast<int>(images_.size()); }
  [[nodiscard]] const std::vector<int>& images() const noexcept { return images_; }
  [[nodiscard]] int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }

  [[nodiscard]] bool is_identity() const {
    for (int k = 1; k <= arity(); ++k)
      if ((*this)(k) != k) return false;
    return true;
  }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (int k = 1; k <= arity(); ++k) v[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Permutation(std::move(v));
  }

  friend Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.arity() != t.arity()) throw ShapeMismatch("composing permutations of different arity");
    std::vector<int> v(t.images_.size());
    for (int k = 1; k <= t.arity(); ++k) v[static_cast<std::size_t>(k - 1)] = s(t(k));
    Permutation out;
    out.images_ = std::move(v);
    return out;
  }

  auto operator<=>(const Permutation&) const = default;

  /// "[2,4,1,3]"
  [[nodiscard]] std::string one_line() const {
    std::string out = "[";
    for (std::size_t j = 0; j < images_.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(images_[j]);
    }
    return out + "]";
  }

  /// Cycle notation for display, e.g. "(13)(24)"; the identity prints as "e".
  [[nodiscard]] std::string cycles() const {
    if (is_identity()) return "e";
    const bool wide = arity() > 9;
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int k = 1; k <= arity(); ++k) {
      if (done[static_cast<std::size_t>(k - 1)] || (*this)(k) == k) continue;
      out += '(';
      int j = k;
      bool first = true;
      do {
        if (!first && wide) out += ' ';
        out += std::to_string(j);
        done[static_cast<std::size_t>(j - 1)] = true;
        j = (*this)(j);
        first = false;
      } while (j != k);
      out += ')';
    }
    return out;
  }

 private:
  std::vector<int> images_;
};

/**
 * Operadic composition of permutations: blocks of sizes s_1, ..., s_r are
 * permuted among themselves by `outer` and internally by the `blocks[j]`.
 * Position i of block j is sent to (start of block outer(j)) + blocks[j](i).
 */
inline Permutation block_compose(const Permutation& outer, std::span<const Permutation> blocks) {
  const int r = outer.arity();
  if (static_cast<int>(blocks.size()) != r)
    throw ShapeMismatch("block composition needs one permutation per outer input");
  std::vector<int> size_at_target(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j)
    size_at_target[static_cast<std::size_t>(outer(j) - 1)] = blocks[static_cast<std::size_t>(j - 1)].arity();
  std::vector<int> start(static_cast<std::size_t>(r), 0);
  for (int t = 1; t < r; ++t)
    start[static_cast<std::size_t>(t)] = start[static_cast<std::size_t>(t - 1)] + size_at_target[static_cast<std::size_t>(t - 1)];
  std::vector<int> images;
  for (int j = 1; j <= r; ++j) {
    const Permutation& tau = blocks[static_cast<std::size_t>(j - 1)];
    const int offset = start[static_cast<std::size_t>(outer(j) - 1)];
    for (int i = 1; i <= tau.arity(); ++i) images.push_back(offset + tau(i));
  }
  return Permutation(std::move(images));
}

inline Permutation block_compose(const Permutation& outer, std::initializer_list<Permutation> blocks) {
  return block_compose(outer, std::span<const Permutation>(blocks.begin(), blocks.size()));
}

}  // namespace cartan
