// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cartan/cartan.hpp"
#include "oracles.hpp"

namespace {

using cartan::BEChain;
using cartan::Cochain;
using cartan::Face;
using cartan::SurChain;
using cartan::Surjection;
using oracle::tuple;

// Every comparison below is exact equality over F2; only wall-clock budgets vary.
constexpr double kBudget1 = 1.0;
constexpr double kBudget2 = 1.0;
constexpr double kBudget3 = 1.0;
constexpr double kBudget4 = 120.0;
constexpr double kBudget5 = 600.0;
constexpr double kBudget6 = 120.0;
constexpr double kBudget7 = 120.0;

constexpr int kLemmaDegree = 4;
constexpr int kRandomDegree = 5;
constexpr int kRandomSamples = 500;
constexpr int kSweepTrials = 100;
constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
  bool ok = true;
  std::string note;
};

/// Sum of listed tuples read in normalized chains, where degenerate tuples are zero.
BEChain listed(int r, const std::vector<std::vector<std::string>>& tuples) {
  cartan::F2Accumulator<cartan::BESimplex> acc;
  for (const auto& t : tuples) {
    auto e = tuple(r, t);
    if (!e.is_degenerate()) acc.push(std::move(e));
  }
  return std::move(acc).finish();
}

SurChain surjections(int r, const std::vector<std::vector<int>>& seqs) {
  cartan::F2Accumulator<Surjection> acc;
  for (const auto& s : seqs) acc.push(Surjection(r, s));
  return std::move(acc).finish();
}

cartan::Monomial mono(std::vector<std::pair<int, Face>> f) {
  std::sort(f.begin(), f.end());
  return {f};
}

Outcome golden_values() {
  Outcome out;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      out.ok = false;
      out.note += what + " differs; ";
    }
  };
  const std::vector<BEChain> h1{
      listed(4, {{"(23)", "e"}}),
      listed(4, {{"(23)", "e", "(12)(34)"}, {"(23)", "(23)(13)(24)", "(12)(34)"}}),
      listed(4, {{"(23)", "e", "(12)(34)", "e"},
                  {"(23)", "(12)(34)(23)", "(12)(34)", "e"},
                  {"(23)", "(12)(34)(23)", "(23)", "e"}})};
  const std::vector<BEChain> h2{
      BEChain{}, listed(4, {{"e", "(34)", "(12)(34)"}}),
      listed(4, {{"e", "(34)", "(12)(34)", "(12)"}, {"e", "e", "(12)", "e"}, {"e", "(34)", "e", "(12)"},
                  {"e", "(12)(34)", "(12)", "e"}})};
  const std::vector<SurChain> tr{
      surjections(4, {{1, 3, 2, 3, 4}}), surjections(4, {{1, 3, 2, 3, 4, 3}, {1, 2, 4, 1, 4, 3}}),
      surjections(4, {{1, 3, 2, 3, 4, 3, 4}, {1, 2, 4, 1, 4, 3, 4}, {1, 2, 1, 3, 2, 3, 4}, {1, 3, 2, 3, 2, 3, 4}})};
  using P = std::pair<int, Face>;
  const std::vector<cartan::F2Sum<cartan::Monomial>> zeta{
      {mono({P{0, {0, 1}}, P{0, {1, 2}}, P{1, {1, 2}}, P{1, {2, 3}}})},
      {mono({P{0, {0, 1}}, P{0, {1, 2}}, P{1, {1, 2, 4}}, P{1, {2, 3, 4}}}),
       mono({P{0, {0, 2, 3}}, P{0, {0, 1, 2}}, P{1, {3, 4}}, P{1, {2, 3}}})},
      {mono({P{0, {0, 1}}, P{0, {1, 2}}, P{1, {1, 2, 3, 4}}, P{1, {2, 3, 4, 5}}}),
       mono({P{0, {0, 1}}, P{0, {1, 2}}, P{1, {1, 2, 4, 5}}, P{1, {2, 3, 4, 5}}}),
       mono({P{0, {0, 2, 3}}, P{0, {0, 1, 2}}, P{1, {3, 4, 5}}, P{1, {2, 3, 5}}}),
       mono({P{0, {0, 1, 2, 3}}, P{0, {0, 1, 3, 4}}, P{1, {3, 4}}, P{1, {4, 5}}}),
       mono({P{0, {0, 1, 2, 3}}, P{0, {1, 2, 3, 4}}, P{1, {3, 4}}, P{1, {4, 5}}})}};
  for (int i = 0; i <= 2; ++i) {
    const auto x = cartan::x_tilde(i);
    const std::string tag = "i=" + std::to_string(i) + " ";
    expect(cartan::h1(x) == h1[static_cast<std::size_t>(i)], tag + "H1");
    expect(cartan::h2(x) == h2[static_cast<std::size_t>(i)], tag + "H2");
    expect(cartan::table_reduction(cartan::cartan_homotopy(x)) == tr[static_cast<std::size_t>(i)], tag + "TR");
    expect(cartan::symbolic_zeta(i, i + 3) == zeta[static_cast<std::size_t>(i)], tag + "zeta");
  }
  if (out.ok) out.note = "H1, H2, TR(H1+H2) and zeta expansions for i = 0, 1, 2";
  return out;
}

Outcome tr_worked_example() {
  const auto e = tuple(4, {"(23)", "e", "(12)(34)"});
  std::multiset<std::vector<int>> shapes;
  int count = 0;
  cartan::for_each_table_term(e, [&](const std::vector<int>& a, const std::vector<int>&) {
    std::vector<int> s = a;
    std::sort(s.begin(), s.end());
    shapes.insert(s);
    ++count;
  });
  const std::multiset<std::vector<int>> expected_shapes{{1, 1, 4}, {1, 1, 4}, {1, 1, 4}, {1, 2, 3}, {1, 2, 3},
                                                        {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {2, 2, 2}};
  const bool ok = count == 10 && shapes == expected_shapes &&
                  cartan::table_reduction(e) == SurChain(Surjection(4, {1, 3, 2, 3, 4, 3}));
  return {ok, std::to_string(count) + " tuples, sum " + cartan::io::format_surjections(cartan::table_reduction(e))};
}

Outcome surjection_composition() {
  const auto result = cartan::surj_compose(Surjection(3, {1, 2, 3, 2, 1}), 2, Surjection(2, {1, 2, 1}));
  const SurChain expected =
      surjections(4, {{1, 2, 3, 2, 4, 2, 1}, {1, 2, 3, 4, 3, 2, 1}, {1, 2, 4, 2, 3, 2, 1}});
  return {result == expected, cartan::io::format_surjections(result)};
}

Outcome run_suites(const std::vector<std::string>& names) {
  cartan::verify::SuiteOptions o;
  o.max_degree = kLemmaDegree;
  o.random_degree = kRandomDegree;
  o.random_samples = kRandomSamples;
  o.seed = kSeed;
  Outcome out;
  long checked = 0;
  for (const auto& name : names) {
    const auto r = cartan::verify::suites().at(name)(o);
    checked += r.checked;
    if (!r.ok()) {
      out.ok = false;
      out.note += name + ": " + std::to_string(r.failures.size()) + " failures; ";
    }
  }
  if (out.ok) out.note = std::to_string(checked) + " checks";
  return out;
}

Outcome cartan_sweep() {
  Outcome out;
  long checked = 0;
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i <= 3; ++i) {
      const auto r = cartan::verify::verify_cartan(i, n, kSweepTrials, kSeed);
      checked += r.checked;
      if (!r.ok()) {
        out.ok = false;
        out.note += "n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " +
                    std::to_string(r.failures.size()) + " failures; ";
      }
    }
  if (out.ok) out.note = std::to_string(checked) + " cocycle pairs, all defects zero";
  return out;
}

Outcome cup_sanity() {
  Outcome out;
  long checked = 0;
  // Bilinearity reduces the cup_0 comparison on all of N*(Δⁿ) to pairs of basis cochains.
  for (int n = 0; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        for (const auto& f : cartan::faces_of(n, p))
          for (const auto& g : cartan::faces_of(n, q)) {
            const Cochain a(n, p, {f});
            const Cochain b(n, q, {g});
            ++checked;
            if (cartan::cup_i(0, a, b) != oracle::cup0(a, b)) {
              out.ok = false;
              out.note = "cup_0 differs on " + f.to_string() + " x " + g.to_string();
              return out;
            }
          }
  auto rng = cartan::verify::make_rng(kSeed, 7);
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= 3; ++i)
      for (int trial = 0; trial < 20; ++trial) {
        const Cochain a = cartan::verify::random_cochain(rng, n, cartan::verify::draw(rng, n + 1));
        const Cochain b = cartan::verify::random_cochain(rng, n, cartan::verify::draw(rng, n + 1));
        Cochain rhs = cartan::cup_i(i, cartan::delta(a), b) + cartan::cup_i(i, a, cartan::delta(b));
        if (i > 0) rhs = rhs + cartan::cup_i(i - 1, a, b) + cartan::cup_i(i - 1, b, a);
        ++checked;
        if (cartan::delta(cartan::cup_i(i, a, b)) != rhs) {
          out.ok = false;
          out.note = "derivation law fails at n=" + std::to_string(n) + " i=" + std::to_string(i);
          return out;
        }
      }
  out.note = std::to_string(checked) + " checks";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden reference values", kBudget1, golden_values},
      {2, "Table Reduction worked example", kBudget2, tr_worked_example},
      {3, "surjection composition example", kBudget3, surjection_composition},
      {4, "Cartan homotopy lemmas", kBudget4,
       [] {
         return run_suites({"boundary-h1", "equiv-h1", "nf-equals-F", "boundary-h2", "equiv-h2", "cartan-homotopy"});
       }},
      {5, "Cartan identity sweep", kBudget5, cartan_sweep},
      {6, "structural identities", kBudget6, [] { return run_suites({"aw-ez-identity", "shih-homotopy", "tr-chain-map"}); }},
      {7, "cup-i sanity", kBudget7, cup_sanity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_s) {
      o.ok = false;
      o.note += " (over budget)";
    }
    std::printf("%s criterion %d: %s [%.3f s / %.0f s] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_s, o.note.c_str());
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
