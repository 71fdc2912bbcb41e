#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cartan/barratt_eccles.hpp"
#include "cartan/cochain.hpp"
#include "cartan/io.hpp"
#include "cartan/simplicial.hpp"
#include "cartan/surjection.hpp"

namespace cartan::verify {

using nlohmann::json;

struct SuiteOptions {
  int max_degree = 4;
  int random_degree = 5;
  int random_samples = 500;
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::string name;
  SuiteOptions options;
  long checked = 0;
  std::vector<json> failures;
  double elapsed_ms = 0;

  [[nodiscard]] bool ok() const { return failures.empty(); }

  [[nodiscard]] json to_json() const {
    return json{{"suite", name},
                {"max_degree", options.max_degree},
                {"random_degree", options.random_degree},
                {"random_samples", options.random_samples},
                {"seed", options.seed},
                {"checked", checked},
                {"failures", failures},
                {"elapsed_ms", elapsed_ms}};
  }
};

// ---------------------------------------------------------------------------
// Randomness

/// Seeded per (seed, stream) so that results do not depend on scheduling.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform in [0, k); the modulo bias is negligible at these sizes and keeps draws stdlib-independent.
inline int draw(std::mt19937_64& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

inline bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

inline std::vector<Permutation> all_permutations(int r) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) v[static_cast<std::size_t>(k)] = k + 1;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// A uniformly random nondegenerate d-simplex of E(r).
inline BESimplex random_be_simplex(std::mt19937_64& rng, int r, int d) {
  const auto perms = all_permutations(r);
  const int count = static_cast<int>(perms.size());
  std::vector<Permutation> v;
  v.push_back(perms[static_cast<std::size_t>(draw(rng, count))]);
  for (int k = 1; k <= d; ++k) {
    // Pick among the count-1 permutations different from the previous one.
    int j = draw(rng, count - 1);
    if (perms[static_cast<std::size_t>(j)] >= v.back()) ++j;
    v.push_back(perms[static_cast<std::size_t>(j)]);
  }
  return BESimplex(std::move(v));
}

/// A random, possibly degenerate, d-simplex of Δⁿ.
inline Simplex<int> random_standard_simplex(std::mt19937_64& rng, int n, int d) {
  std::vector<int> v(static_cast<std::size_t>(d) + 1);
  for (auto& x : v) x = draw(rng, n + 1);
  std::sort(v.begin(), v.end());
  return Simplex<int>(std::move(v));
}

/// A random cochain: each m-face is in the support with probability 1/2.
inline Cochain random_cochain(std::mt19937_64& rng, int n, int m) {
  std::vector<Face> support;
  for (auto& f : faces_of(n, m))
    if (coin(rng)) support.push_back(std::move(f));
  return Cochain(n, m, std::move(support));
}

// ---------------------------------------------------------------------------
// Lemma suites

namespace detail {

inline json describe(const BESimplex& e) { return io::be_simplex_to_json(e); }
inline json describe(const Simplex<int>& x) { return x.vertices(); }
template <class X, class Y>
json describe(const ProductSimplex<X, Y>& p) {
  return json{{"left", describe(p.left)}, {"right", describe(p.right)}};
}
template <class X, class Y>
json describe(const TensorTerm<X, Y>& t) {
  return json{{"left", describe(t.left)}, {"right", describe(t.right)}};
}

/// Counts checks and records the inputs of failed ones.
class SuiteRunner {
 public:
  SuiteRunner(std::string name, SuiteOptions opts) {
    report_.name = std::move(name);
    report_.options = opts;
    start_ = std::chrono::steady_clock::now();
  }

  template <class B>
  void check(const std::string& law, const B& input, bool holds) {
    ++report_.checked;
    if (!holds) report_.failures.push_back(json{{"law", law}, {"input", describe(input)}});
  }

  SuiteReport finish() && {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

/// Nondegenerate ℰ(2) inputs: every basis element up to max_degree, then random samples.
template <class Fn>
void for_each_e2_input(const SuiteOptions& o, Fn&& fn) {
  for (int d = 0; d <= o.max_degree; ++d)
    for (const auto& x : be_basis(2, d)) fn(x);
  auto rng = make_rng(o.seed, 0);
  for (int s = 0; s < o.random_samples; ++s) fn(random_be_simplex(rng, 2, o.random_degree));
}

inline BEChain be_boundary_of(const BESimplex& x) { return boundary(x); }

inline const Permutation& swap12() {
  static const Permutation p{2, 1};
  return p;
}
inline const Permutation& swap12_34() {
  static const Permutation p{2, 1, 4, 3};
  return p;
}

}  // namespace detail

/// ∂H₁ + H₁∂ = (23)·N(E(f)) + N(E(g)).
inline SuiteReport boundary_h1(const SuiteOptions& o) {
  detail::SuiteRunner run("boundary-h1", o);
  detail::for_each_e2_input(o, [&](const BESimplex& x) {
    const BEChain lhs = boundary(h1(x)) + h1(detail::be_boundary_of(x));
    const BEChain rhs = sigma_act(cartan::detail::perm_23(), nf(x)) + ng(x);
    run.check("dH1 + H1d = (23)f + g", x, lhs == rhs);
  });
  return std::move(run).finish();
}

/// H₁((12)·x) = (12)(34)·H₁(x).
inline SuiteReport equiv_h1(const SuiteOptions& o) {
  detail::SuiteRunner run("equiv-h1", o);
  detail::for_each_e2_input(o, [&](const BESimplex& x) {
    run.check("H1 (12) = (12)(34) H1", x,
              h1(sigma_act(detail::swap12(), x)) == sigma_act(detail::swap12_34(), h1(x)));
  });
  return std::move(run).finish();
}

/// ∂H₂ + H₂∂ = N(E(g)) + G.
inline SuiteReport boundary_h2(const SuiteOptions& o) {
  detail::SuiteRunner run("boundary-h2", o);
  detail::for_each_e2_input(o, [&](const BESimplex& x) {
    const BEChain lhs = boundary(h2(x)) + h2(detail::be_boundary_of(x));
    run.check("dH2 + H2d = g + G", x, lhs == ng(x) + G_map(x));
  });
  return std::move(run).finish();
}

inline SuiteReport equiv_h2(const SuiteOptions& o) {
  detail::SuiteRunner run("equiv-h2", o);
  detail::for_each_e2_input(o, [&](const BESimplex& x) {
    run.check("H2 (12) = (12)(34) H2", x,
              h2(sigma_act(detail::swap12(), x)) == sigma_act(detail::swap12_34(), h2(x)));
  });
  return std::move(run).finish();
}

/// N(E(f)) = F.
inline SuiteReport nf_equals_f(const SuiteOptions& o) {
  detail::SuiteRunner run("nf-equals-F", o);
  detail::for_each_e2_input(o, [&](const BESimplex& x) { run.check("N(E(f)) = F", x, nf(x) == F_map(x)); });
  return std::move(run).finish();
}

/// ∂H + H∂ = (23)·F + G with H = H₁ + H₂, together with H(12) = (12)(34)H.
inline SuiteReport cartan_homotopy_suite(const SuiteOptions& o) {
  detail::SuiteRunner run("cartan-homotopy", o);
  detail::for_each_e2_input(o, [&](const BESimplex& x) {
    const BEChain lhs = boundary(cartan_homotopy(x)) + cartan_homotopy(detail::be_boundary_of(x));
    run.check("dH + Hd = (23)F + G", x, lhs == sigma_act(cartan::detail::perm_23(), F_map(x)) + G_map(x));
    run.check("H (12) = (12)(34) H", x,
              cartan_homotopy(sigma_act(detail::swap12(), x)) ==
                  sigma_act(detail::swap12_34(), cartan_homotopy(x)));
  });
  return std::move(run).finish();
}

/// ∂SHI + SHI∂ = EZ∘AW + id on Δᵈ × Δᵈ (every degree-d shape occurs there) and on E(3) × E(3).
inline SuiteReport shih_homotopy(const SuiteOptions& o) {
  detail::SuiteRunner run("shih-homotopy", o);
  auto law = [&](const auto& p) {
    using P = std::remove_cvref_t<decltype(p)>;
    const auto lhs = boundary(shi(p)) + shi(boundary(p));
    const auto rhs = ez(aw(p)) + F2Sum<P>(p);
    run.check("dSHI + SHId = EZ AW + id", p, lhs == rhs);
  };
  for (int d = 0; d <= o.max_degree; ++d)
    for (const auto& p : product_basis(d, d, d)) law(p);
  auto rng = make_rng(o.seed, 1);
  for (int s = 0; s < o.random_samples; ++s) {
    if (s % 2 == 0) {
      ProductSimplex<int, int> p(random_standard_simplex(rng, 3, o.random_degree),
                                 random_standard_simplex(rng, 3, o.random_degree));
      if (!p.is_degenerate()) law(p);
    } else {
      // Random E(3) sequences, with repeats allowed so that degenerate factors occur.
      const auto perms = all_permutations(3);
      std::vector<Permutation> a, b;
      for (int k = 0; k <= o.random_degree; ++k) {
        a.push_back(perms[static_cast<std::size_t>(draw(rng, 6))]);
        b.push_back(perms[static_cast<std::size_t>(draw(rng, 6))]);
      }
      ProductSimplex<Permutation, Permutation> p(BESimplex(std::move(a)), BESimplex(std::move(b)));
      if (!p.is_degenerate()) law(p);
    }
  }
  return std::move(run).finish();
}

/// AW∘EZ = id, and AW, EZ commute with ∂, for x ⊗ y of bidegree p + q <= max_degree.
inline SuiteReport aw_ez_identity(const SuiteOptions& o) {
  detail::SuiteRunner run("aw-ez-identity", o);
  auto law = [&](const auto& t) {
    using T = std::remove_cvref_t<decltype(t)>;
    run.check("AW EZ = id", t, aw(ez(t)) == F2Sum<T>(t));
    run.check("d EZ = EZ d", t, boundary(ez(t)) == ez(boundary(t)));
  };
  const int n = o.max_degree;
  for (int p = 0; p <= o.max_degree; ++p)
    for (int q = 0; p + q <= o.max_degree; ++q)
      for (const auto& x : standard_simplices(n, p))
        for (const auto& y : standard_simplices(n, q)) law(TensorTerm<int, int>{x, y});
  for (int d = 0; d <= o.max_degree; ++d)
    for (const auto& p : product_basis(d, d, d)) run.check("d AW = AW d", p, boundary(aw(p)) == aw(boundary(p)));

  auto rng = make_rng(o.seed, 2);
  for (int s = 0; s < o.random_samples; ++s) {
    const int p = draw(rng, o.random_degree + 1);
    law(TensorTerm<Permutation, Permutation>{random_be_simplex(rng, 3, p),
                                             random_be_simplex(rng, 3, o.random_degree - p)});
  }
  return std::move(run).finish();
}

/// TR∂ = ∂TR and TR(σ·e) = σ·TR(e) on ℰ(2) and ℰ(3).
inline SuiteReport tr_chain_map(const SuiteOptions& o) {
  detail::SuiteRunner run("tr-chain-map", o);
  auto law = [&](const BESimplex& e, const std::vector<Permutation>& group) {
    run.check("TR d = d TR", e, table_reduction(detail::be_boundary_of(e)) == surj_boundary(table_reduction(e)));
    for (const auto& sigma : group)
      run.check("TR sigma = sigma TR", e,
                table_reduction(sigma_act(sigma, e)) == surj_act(sigma, table_reduction(e)));
  };
  for (int r : {2, 3}) {
    const auto group = all_permutations(r);
    for (int d = 0; d <= o.max_degree; ++d)
      for (const auto& e : be_basis(r, d)) law(e, group);
  }
  auto rng = make_rng(o.seed, 3);
  const auto group3 = all_permutations(3);
  for (int s = 0; s < o.random_samples; ++s) law(random_be_simplex(rng, 3, o.random_degree), group3);
  return std::move(run).finish();
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

/// Every lemma suite by command-line name.
inline const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table{
      {"boundary-h1", boundary_h1},       {"equiv-h1", equiv_h1},
      {"boundary-h2", boundary_h2},       {"equiv-h2", equiv_h2},
      {"nf-equals-F", nf_equals_f},       {"cartan-homotopy", cartan_homotopy_suite},
      {"shih-homotopy", shih_homotopy},   {"aw-ez-identity", aw_ez_identity},
      {"tr-chain-map", tr_chain_map},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Cartan sweep

struct VerifyReport {
  int i = 0;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  long checked = 0;
  std::vector<json> failures;
  double elapsed_ms = 0;

  [[nodiscard]] bool ok() const { return failures.empty(); }

  [[nodiscard]] json to_json() const {
    return json{{"i", i},         {"n", n},           {"trials", trials},          {"seed", seed},
                {"checked", checked}, {"failures", failures}, {"elapsed_ms", elapsed_ms}};
  }
};

namespace detail {

/// (p, q) with p, q >= 1 such that the defect has a face to live on, when there is one.
inline std::pair<int, int> pick_degrees(std::mt19937_64& rng, int i, int n) {
  std::vector<std::pair<int, int>> good;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (2 * (p + q) - i <= n) good.emplace_back(p, q);
  if (!good.empty()) return good[static_cast<std::size_t>(draw(rng, static_cast<int>(good.size())))];
  const int top = std::max(1, n);
  return {1 + draw(rng, top), 1 + draw(rng, top)};
}

inline std::optional<json> check_pair(int i, const Cochain& alpha, const Cochain& beta, const std::string& label) {
  const Cochain defect = cartan_defect(i, alpha, beta);
  if (defect.is_zero()) return std::nullopt;
  return json{{"case", label},
              {"alpha", io::cochain_to_json(alpha)},
              {"beta", io::cochain_to_json(beta)},
              {"defect", io::cochain_to_json(defect)}};
}

}  // namespace detail

/**
 * Checks that cartan_defect(i, α, β) vanishes for `trials` random coboundary
 * pairs α = δγ₁, β = δγ₂ on Δⁿ plus the degree-0 constant cocycles.
 * Trials are spread over `threads` workers; results are collected by trial index.
 */
inline VerifyReport verify_cartan(int i, int n, int trials, std::uint64_t seed, unsigned threads = 0) {
  if (i < 0) throw std::invalid_argument("i must be non-negative");
  if (n < 0 || n > kMaxAmbient) throw ShapeMismatch("ambient dimension out of range");
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  const auto start = std::chrono::steady_clock::now();

  VerifyReport report;
  report.i = i;
  report.n = n;
  report.trials = trials;
  report.seed = seed;

  zeta_surjections(i);
  cup_surjections(i);

  std::vector<std::optional<json>> outcome(static_cast<std::size_t>(trials));
  auto run_trial = [&](int t) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(t) + 1);
    const auto [p, q] = detail::pick_degrees(rng, i, n);
    const Cochain alpha = delta(random_cochain(rng, n, p - 1));
    const Cochain beta = delta(random_cochain(rng, n, q - 1));
    outcome[static_cast<std::size_t>(t)] = detail::check_pair(i, alpha, beta, "trial " + std::to_string(t));
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(trials, 1)));
  if (threads <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(threads)) run_trial(t);
      });
    for (auto& th : pool) th.join();
  }
  report.checked = trials;
  for (auto& o : outcome)
    if (o) report.failures.push_back(std::move(*o));

  // Degree-0 cocycles on Δⁿ are the constants 0 and 1.
  auto fixed_rng = make_rng(seed, 0);
  const Cochain one = Cochain::constant(n, 0);
  const Cochain zero = Cochain::zero(n, 0);
  const auto [p, q] = detail::pick_degrees(fixed_rng, i, n);
  const Cochain a = delta(random_cochain(fixed_rng, n, p - 1));
  const Cochain b = delta(random_cochain(fixed_rng, n, q - 1));
  const std::vector<std::tuple<Cochain, Cochain, std::string>> fixed{
      {one, one, "constant x constant"}, {one, zero, "constant x zero"},
      {one, b, "constant x coboundary"}, {a, one, "coboundary x constant"}};
  for (const auto& [x, y, label] : fixed) {
    ++report.checked;
    if (auto f = detail::check_pair(i, x, y, label)) report.failures.push_back(std::move(*f));
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cartan::verify
