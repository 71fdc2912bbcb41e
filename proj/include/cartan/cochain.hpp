#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartan/barratt_eccles.hpp"
#include "cartan/errors.hpp"
#include "cartan/f2_sum.hpp"
#include "cartan/surjection.hpp"

namespace cartan {

/// Largest ambient dimension a cochain may live on (lookup tables are 2^(n+1) bytes).
inline constexpr int kMaxAmbient = 20;

/// A nondegenerate simplex {v_0 < ... < v_m} of Δⁿ.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("a face needs at least one vertex");
    if (vertices_.front() < 0) throw std::invalid_argument("face vertices must be non-negative");
    for (std::size_t j = 1; j < vertices_.size(); ++j)
      if (vertices_[j - 1] >= vertices_[j])
        throw std::invalid_argument("face vertices must be strictly increasing");
  }
  Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

  static Face from_mask(std::uint64_t mask) {
    std::vector<int> v;
    for (int b = 0; mask; ++b, mask >>= 1)
      if (mask & 1U) v.push_back(b);
    return Face(std::move(v));
  }

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  [[nodiscard]] const std::vector<int>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] int operator[](std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] int max_vertex() const { return vertices_.back(); }

  [[nodiscard]] std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int v : vertices_) m |= std::uint64_t{1} << v;
    return m;
  }

  /// d_i: drop the i-th vertex.
  [[nodiscard]] Face face(int i) const {
    std::vector<int> v = vertices_;
    v.erase(v.begin() + i);
    return Face(std::move(v));
  }

  /// "{0,1,2}"
  [[nodiscard]] std::string to_string() const {
    std::string out = "{";
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(vertices_[j]);
    }
    return out + "}";
  }

  auto operator<=>(const Face&) const = default;

 private:
  std::vector<int> vertices_;
};

/// All m-faces of Δⁿ in lexicographic order (empty when m is out of range).
inline std::vector<Face> faces_of(int n, int m) {
  std::vector<Face> out;
  if (m < 0 || m > n) return out;
  detail::for_each_subset(n + 1, m + 1, [&](const std::vector<int>& v) { out.emplace_back(v); });
  return out;
}

/// The top face {0, ..., n}.
inline Face identity_face(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = j;
  return Face(std::move(v));
}

/**
 * A homogeneous normalized F2-cochain on Δⁿ, given by the set of m-faces
 * on which it takes the value 1.
 *
 * dim may fall outside [0, ambient] for results of products; such cochains
 * are necessarily zero.
 */
class Cochain {
 public:
  Cochain(int ambient, int dim, std::vector<Face> support)
      : ambient_(ambient), dim_(dim), support_(std::move(support)) {
    if (ambient_ < 0 || ambient_ > kMaxAmbient)
      throw ShapeMismatch("ambient dimension must lie in 0.." + std::to_string(kMaxAmbient));
    for (const auto& f : support_) {
      if (f.dim() != dim_) throw ShapeMismatch("support face " + f.to_string() + " has the wrong dimension");
      if (f.max_vertex() > ambient_) throw ShapeMismatch("support face " + f.to_string() + " lies outside the ambient simplex");
    }
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  }

  static Cochain zero(int ambient, int dim) { return Cochain(ambient, dim, {}); }

  /// The cochain with value 1 on every m-face.
  static Cochain constant(int ambient, int dim) { return Cochain(ambient, dim, faces_of(ambient, dim)); }

  [[nodiscard]] int ambient() const noexcept { return ambient_; }
  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<Face>& support() const noexcept { return support_; }
  [[nodiscard]] bool is_zero() const noexcept { return support_.empty(); }

  [[nodiscard]] bool value(const Face& f) const {
    return std::binary_search(support_.begin(), support_.end(), f);
  }

  /// Pullback along the inclusion Δᵏ -> Δⁿ whose image is `face`.
  [[nodiscard]] Cochain restrict_to(const Face& face) const {
    const int k = face.dim();
    std::vector<Face> out;
    for (const auto& g : faces_of(k, dim_)) {
      std::vector<int> image;
      for (int v : g.vertices()) image.push_back(face[static_cast<std::size_t>(v)]);
      if (value(Face(std::move(image)))) out.push_back(g);
    }
    return Cochain(k, dim_, std::move(out));
  }

  friend Cochain operator+(const Cochain& a, const Cochain& b) {
    if (a.ambient_ != b.ambient_ || a.dim_ != b.dim_) throw ShapeMismatch("adding cochains of different shape");
    std::vector<Face> out;
    std::set_symmetric_difference(a.support_.begin(), a.support_.end(), b.support_.begin(),
                                  b.support_.end(), std::back_inserter(out));
    return Cochain(a.ambient_, a.dim_, std::move(out));
  }

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  int ambient_ = 0;
  int dim_ = 0;
  std::vector<Face> support_;
};

/// Bit lookup of a cochain indexed by face vertex masks.
class CochainTable {
 public:
  explicit CochainTable(const Cochain& c) : dim_(c.dim()), bits_(std::size_t{1} << (c.ambient() + 1), 0) {
    for (const auto& f : c.support()) bits_[f.mask()] = 1;
  }
  [[nodiscard]] bool operator()(std::uint64_t mask) const { return bits_[mask] != 0; }
  [[nodiscard]] int dim() const noexcept { return dim_; }

 private:
  int dim_;
  std::vector<std::uint8_t> bits_;
};

/// δα: an (m+1)-face is in the support iff an odd number of its facets are.
inline Cochain delta(const Cochain& alpha) {
  const int n = alpha.ambient();
  const int m = alpha.dim() + 1;
  if (m < 0 || m > n || alpha.is_zero()) return Cochain::zero(n, m);
  const CochainTable table(alpha);
  std::vector<Face> out;
  for (const auto& f : faces_of(n, m)) {
    const std::uint64_t mask = f.mask();
    bool v = false;
    for (int x : f.vertices()) v ^= table(mask & ~(std::uint64_t{1} << x));
    if (v) out.push_back(f);
  }
  return Cochain(n, m, std::move(out));
}

inline bool is_cocycle(const Cochain& alpha) { return delta(alpha).is_zero(); }

// ---------------------------------------------------------------------------
// Diagonal and join

/// Calls fn(points) for each 0 = i_0 <= i_1 <= ... <= i_{blocks-1} <= i_blocks = m.
template <class Fn>
void for_each_cut(int m, int blocks, Fn&& fn) {
  std::vector<int> points(static_cast<std::size_t>(blocks) + 1, 0);
  points.back() = m;
  auto rec = [&](auto&& self, int t) -> void {
    if (t == blocks) {
      fn(static_cast<const std::vector<int>&>(points));
      return;
    }
    for (int j = points[static_cast<std::size_t>(t) - 1]; j <= m; ++j) {
      points[static_cast<std::size_t>(t)] = j;
      self(self, t + 1);
    }
  };
  if (blocks == 1)
    fn(static_cast<const std::vector<int>&>(points));
  else
    rec(rec, 1);
}

/// Δᵏ(a): every way to cut a into k+1 consecutive blocks sharing their end vertices.
inline F2Sum<std::vector<Face>> diagonal_iter(int k, const Face& a) {
  if (k < 1) throw std::invalid_argument("iterated diagonal needs k >= 1");
  F2Accumulator<std::vector<Face>> acc;
  for_each_cut(a.dim(), k + 1, [&](const std::vector<int>& pts) {
    std::vector<Face> blocks;
    for (int t = 0; t <= k; ++t) {
      std::vector<int> v(a.vertices().begin() + pts[static_cast<std::size_t>(t)],
                         a.vertices().begin() + pts[static_cast<std::size_t>(t) + 1] + 1);
      blocks.emplace_back(std::move(v));
    }
    acc.push(std::move(blocks));
  });
  return std::move(acc).finish();
}

/// Union of pairwise disjoint faces; nullopt (zero) on any overlap.
inline std::optional<Face> join(std::span<const Face> faces) {
  if (faces.empty()) throw std::invalid_argument("join of no faces");
  std::uint64_t acc = 0;
  for (const auto& f : faces) {
    const std::uint64_t m = f.mask();
    if (acc & m) return std::nullopt;
    acc |= m;
  }
  return Face::from_mask(acc);
}

inline std::optional<Face> join(std::initializer_list<Face> faces) {
  return join(std::span<const Face>(faces.begin(), faces.size()));
}

// ---------------------------------------------------------------------------
// The surjection action on cochains

namespace detail {

/// Sums over cuts of `target` into |s| blocks the product of tables[j](join of blocks at s⁻¹(j)).
inline bool evaluate_surjection(const Surjection& s, std::span<const CochainTable> tables,
                                const std::vector<int>& target) {
  const int m = static_cast<int>(target.size()) - 1;
  const int k = s.length();
  const int r = s.arity();
  std::vector<std::uint64_t> prefix(target.size() + 1, 0);
  for (std::size_t j = 0; j < target.size(); ++j) prefix[j + 1] = prefix[j] | (std::uint64_t{1} << target[j]);
  auto range = [&](int lo, int hi) { return prefix[static_cast<std::size_t>(hi) + 1] & ~prefix[static_cast<std::size_t>(lo)]; };

  std::vector<int> want(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    want[static_cast<std::size_t>(j)] = tables[static_cast<std::size_t>(j)].dim() + 1;
    if (want[static_cast<std::size_t>(j)] <= 0) return false;
  }
  std::vector<std::uint64_t> slot(static_cast<std::size_t>(r), 0);
  bool parity = false;

  auto rec = [&](auto&& self, int t, int lo) -> void {
    const std::size_t j = static_cast<std::size_t>(s.sequence()[static_cast<std::size_t>(t)] - 1);
    const int first_hi = (t == k - 1) ? m : lo;
    for (int hi = first_hi; hi <= m; ++hi) {
      const std::uint64_t block = range(lo, hi);
      if (slot[j] & block) continue;
      const std::uint64_t merged = slot[j] | block;
      if (std::popcount(merged) > want[j]) break;
      const std::uint64_t saved = slot[j];
      slot[j] = merged;
      if (t == k - 1) {
        bool v = true;
        for (int q = 0; q < r && v; ++q) v = tables[static_cast<std::size_t>(q)](slot[static_cast<std::size_t>(q)]);
        parity ^= v;
      } else {
        self(self, t + 1, hi);
      }
      slot[j] = saved;
    }
  };
  rec(rec, 0, 0);
  return parity;
}

inline void check_inputs(const Surjection& s, std::span<const Cochain> inputs) {
  if (static_cast<int>(inputs.size()) != s.arity())
    throw ShapeMismatch("surjection of arity " + std::to_string(s.arity()) + " applied to " +
                        std::to_string(inputs.size()) + " cochains");
  for (const auto& c : inputs)
    if (c.ambient() != inputs.front().ambient()) throw ShapeMismatch("cochains live on different simplices");
}

}  // namespace detail

/// s(α_1 ⊗ ⋯ ⊗ α_r)(target).
inline bool apply_surjection(const Surjection& s, std::span<const Cochain> inputs, const Face& target) {
  detail::check_inputs(s, inputs);
  if (target.max_vertex() > inputs.front().ambient()) throw ShapeMismatch("target face outside the ambient simplex");
  std::vector<CochainTable> tables(inputs.begin(), inputs.end());
  return detail::evaluate_surjection(s, tables, target.vertices());
}

/**
 * The cochain F -> Σ_s s(α_1 ⊗ ⋯ ⊗ α_r)(F) for a homogeneous sum of
 * surjections of excess d; its dimension is Σ dim α_i - d.
 */
inline Cochain apply_surjections(const SurChain& sum, std::span<const Cochain> inputs,
                                 std::optional<int> excess = std::nullopt) {
  if (inputs.empty()) throw ShapeMismatch("no input cochains");
  for (const auto& s : sum) {
    detail::check_inputs(s, inputs);
    if (excess && s.degree() != *excess) throw ShapeMismatch("surjection sum is not homogeneous");
    excess = s.degree();
  }
  if (!excess) throw std::invalid_argument("cannot infer the degree of an empty surjection sum");
  const int n = inputs.front().ambient();
  int dim = -*excess;
  for (const auto& c : inputs) dim += c.dim();
  if (dim < 0 || dim > n || sum.empty()) return Cochain::zero(n, dim);
  for (const auto& c : inputs)
    if (c.is_zero()) return Cochain::zero(n, dim);

  std::vector<CochainTable> tables(inputs.begin(), inputs.end());
  std::vector<Face> out;
  for (const auto& f : faces_of(n, dim)) {
    bool v = false;
    for (const auto& s : sum) v ^= detail::evaluate_surjection(s, tables, f.vertices());
    if (v) out.push_back(f);
  }
  return Cochain(n, dim, std::move(out));
}

inline Cochain apply_surjections(const SurChain& sum, std::initializer_list<Cochain> inputs) {
  return apply_surjections(sum, std::span<const Cochain>(inputs.begin(), inputs.size()));
}

// ---------------------------------------------------------------------------
// Cached surjection sums

namespace detail {

/// Lazily computed, per-index values; concurrent readers after first construction.
class SurjectionCache {
 public:
  explicit SurjectionCache(std::function<SurChain(int)> make) : make_(std::move(make)) {}

  const SurChain& get(int i) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(i); it != cache_.end()) return *it->second;
    }
    std::unique_lock lock(mutex_);
    auto& slot = cache_[i];
    if (!slot) slot = std::make_unique<const SurChain>(make_(i));
    return *slot;
  }

 private:
  std::function<SurChain(int)> make_;
  std::shared_mutex mutex_;
  std::map<int, std::unique_ptr<const SurChain>> cache_;
};

}  // namespace detail

/// TR(x̃_i).
inline const SurChain& cup_surjections(int i) {
  static detail::SurjectionCache cache([](int k) { return table_reduction(x_tilde(k)); });
  if (i < 0) throw std::invalid_argument("cup-i index must be non-negative");
  return cache.get(i);
}

/// TR((H₁ + H₂)(x̃_i)).
inline const SurChain& zeta_surjections(int i) {
  static detail::SurjectionCache cache([](int k) { return table_reduction(cartan_homotopy(x_tilde(k))); });
  if (i < 0) throw std::invalid_argument("zeta index must be non-negative");
  return cache.get(i);
}

// ---------------------------------------------------------------------------
// Cup-i products, Steenrod squares and Cartan coboundaries

/// α ⌣_i β, of dimension dim α + dim β - i.
inline Cochain cup_i(int i, const Cochain& alpha, const Cochain& beta) {
  if (alpha.ambient() != beta.ambient()) throw ShapeMismatch("cochains live on different simplices");
  return apply_surjections(cup_surjections(i), {alpha, beta});
}

/// Sq^k α = α ⌣_{m-k} α for a cocycle α of dimension m.
inline Cochain sq(int k, const Cochain& alpha) {
  if (!is_cocycle(alpha)) throw NotACocycle("Sq is applied to cocycles only");
  const int i = alpha.dim() - k;
  if (i < 0) return Cochain::zero(alpha.ambient(), alpha.dim() + k);
  return cup_i(i, alpha, alpha);
}

/// ζ_i(α ⊗ β) = TR((H₁ + H₂)(x̃_i))(α ⊗ α ⊗ β ⊗ β).
inline Cochain zeta(int i, const Cochain& alpha, const Cochain& beta) {
  if (alpha.ambient() != beta.ambient()) throw ShapeMismatch("cochains live on different simplices");
  return apply_surjections(zeta_surjections(i), {alpha, alpha, beta, beta});
}

/// (α⌣₀β)⌣_i(α⌣₀β) + Σ_{j+k=i} (α⌣_jα)⌣₀(β⌣_kβ).
inline Cochain cartan_rhs(int i, const Cochain& alpha, const Cochain& beta) {
  const Cochain ab = cup_i(0, alpha, beta);
  Cochain total = cup_i(i, ab, ab);
  for (int j = 0; j <= i; ++j) total = total + cup_i(0, cup_i(j, alpha, alpha), cup_i(i - j, beta, beta));
  return total;
}

/// δζ_i(α ⊗ β) + cartan_rhs; zero whenever ζ_i is a Cartan i-coboundary.
inline Cochain cartan_defect(int i, const Cochain& alpha, const Cochain& beta) {
  if (alpha.ambient() != beta.ambient()) throw ShapeMismatch("cochains live on different simplices");
  if (!is_cocycle(alpha)) throw NotACocycle("alpha is not a cocycle");
  if (!is_cocycle(beta)) throw NotACocycle("beta is not a cocycle");
  return delta(zeta(i, alpha, beta)) + cartan_rhs(i, alpha, beta);
}

struct CartanWitness {
  int i = 0;
  Cochain alpha;
  Cochain beta;
  Cochain zeta;
  Cochain defect;
};

inline CartanWitness cartan_witness(int i, const Cochain& alpha, const Cochain& beta) {
  Cochain z = zeta(i, alpha, beta);
  Cochain defect = cartan_defect(i, alpha, beta);
  return {i, alpha, beta, std::move(z), std::move(defect)};
}

// ---------------------------------------------------------------------------
// Symbolic evaluation on a single face

/// A product of indeterminates symbol{face}; factors sorted, so the product is commutative.
struct Monomial {
  std::vector<std::pair<int, Face>> factors;

  auto operator<=>(const Monomial&) const = default;

  [[nodiscard]] std::string to_string(std::span<const std::string> names) const {
    std::string out;
    for (const auto& [sym, f] : factors) {
      if (!out.empty()) out += ' ';
      out += names[static_cast<std::size_t>(sym)] + f.to_string();
    }
    return out;
  }
};

/**
 * Expands Σ_s s(x_{symbol[0]} ⊗ ⋯ ⊗ x_{symbol[r-1]})(target) as an F2-polynomial
 * in indeterminates x{F}. Slots that share a symbol must see faces of the same
 * dimension (the indeterminates are homogeneous cochains), and every face has
 * dimension at least `min_dim`.
 */
inline F2Sum<Monomial> symbolic_evaluate(const SurChain& sum, std::span<const int> symbol_of_slot,
                                         const Face& target, int min_dim = 1) {
  F2Accumulator<Monomial> acc;
  for (const auto& s : sum) {
    const int r = s.arity();
    if (static_cast<int>(symbol_of_slot.size()) != r) throw ShapeMismatch("one symbol per slot is required");
    for_each_cut(target.dim(), s.length(), [&](const std::vector<int>& pts) {
      std::vector<std::uint64_t> slot(static_cast<std::size_t>(r), 0);
      for (int t = 0; t < s.length(); ++t) {
        std::uint64_t block = 0;
        for (int v = pts[static_cast<std::size_t>(t)]; v <= pts[static_cast<std::size_t>(t) + 1]; ++v)
          block |= std::uint64_t{1} << target[static_cast<std::size_t>(v)];
        auto& sl = slot[static_cast<std::size_t>(s.sequence()[static_cast<std::size_t>(t)] - 1)];
        if (sl & block) return;
        sl |= block;
      }
      std::map<int, int> dim_of_symbol;
      Monomial mono;
      for (int j = 0; j < r; ++j) {
        const Face f = Face::from_mask(slot[static_cast<std::size_t>(j)]);
        if (f.dim() < min_dim) return;
        const int sym = symbol_of_slot[static_cast<std::size_t>(j)];
        auto [it, fresh] = dim_of_symbol.emplace(sym, f.dim());
        if (!fresh && it->second != f.dim()) return;
        mono.factors.emplace_back(sym, f);
      }
      std::sort(mono.factors.begin(), mono.factors.end());
      acc.push(std::move(mono));
    });
  }
  return std::move(acc).finish();
}

/// ζ_i(α ⊗ β)(id_n) for homogeneous α, β of positive degree; α is symbol 0 and β is symbol 1.
inline F2Sum<Monomial> symbolic_zeta(int i, int n) {
  static constexpr std::array<int, 4> kSlots{0, 0, 1, 1};
  return symbolic_evaluate(zeta_surjections(i), kSlots, identity_face(n));
}

}  // namespace cartan
