// Command-line front end: cochain operations, Table Reduction and the verification sweeps.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartan/cartan.hpp"

namespace {

using cartan::Cochain;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kShape = 3, kCocycle = 4 };

int max_ambient() {
  if (const char* env = std::getenv("CARTAN_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw cartan::ParseError("CARTAN_MAX_N must be an integer");
    }
  }
  return 6;
}

void check_n(int n) {
  if (n < 0 || n > max_ambient())
    throw cartan::ShapeMismatch("n = " + std::to_string(n) + " exceeds the configured maximum " +
                                std::to_string(max_ambient()));
}

Cochain load(const std::string& path, int n) {
  Cochain c = cartan::io::load_cochain(path);
  if (c.ambient() != n)
    throw cartan::ShapeMismatch(path + " lives on Δ^" + std::to_string(c.ambient()) + ", expected Δ^" +
                                std::to_string(n));
  return c;
}

void require_cocycle(const Cochain& c, const std::string& what) {
  if (!cartan::is_cocycle(c)) throw cartan::NotACocycle(what + " is not a cocycle");
}

void print(const Cochain& c) { std::cout << cartan::io::dump(cartan::io::cochain_to_json(c)) << '\n'; }

/// A JSON argument given inline or as @file.
json json_arg(const std::string& text) {
  const std::string body = (!text.empty() && text.front() == '@') ? cartan::io::read_file(text.substr(1)) : text;
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw cartan::ParseError(std::string("malformed JSON argument: ") + e.what());
  }
}

struct Options {
  int i = 0;
  int k = 0;
  int n = 0;
  int p = 1;
  int trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  int max_degree = 4;
  int samples = 500;
  int random_degree = 5;
  bool json_out = false;
  bool symbolic = false;
  std::string alpha, beta, input, outer, inner;
};

int run_suite(const std::string& name, const Options& o) {
  cartan::verify::SuiteOptions so;
  so.max_degree = o.max_degree;
  so.random_samples = o.samples;
  so.random_degree = o.random_degree;
  so.seed = o.seed;
  const auto report = cartan::verify::suites().at(name)(so);
  std::cout << report.to_json().dump() << '\n';
  return report.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cup-i products, Steenrod squares and Cartan coboundaries on the standard simplex over F2"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output where text is the default");

  auto cochain_pair = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Ambient dimension")->required();
    cmd->add_option("alpha", o.alpha, "Cochain JSON file")->required();
    cmd->add_option("beta", o.beta, "Cochain JSON file")->required();
  };

  auto* cup = app.add_subcommand("cup", "Print α ⌣_i β");
  cup->add_option("--i", o.i, "Index of the product")->required()->check(CLI::NonNegativeNumber);
  cochain_pair(cup);

  auto* sq = app.add_subcommand("sq", "Print Sq^k α for a cocycle α");
  sq->add_option("--k", o.k, "Degree of the square")->required();
  sq->add_option("--n", o.n, "Ambient dimension")->required();
  sq->add_option("alpha", o.alpha, "Cochain JSON file")->required();

  auto* zeta = app.add_subcommand("zeta", "Print the Cartan coboundary ζ_i(α ⊗ β)");
  zeta->add_option("--i", o.i)->required()->check(CLI::NonNegativeNumber);
  zeta->add_option("--n", o.n, "Ambient dimension")->required();
  zeta->add_flag("--symbolic", o.symbolic, "Expand ζ_i on the top face for indeterminate α, β instead");
  zeta->add_option("alpha", o.alpha, "Cochain JSON file");
  zeta->add_option("beta", o.beta, "Cochain JSON file");

  auto* defect = app.add_subcommand("defect", "Print δζ_i + the Cartan terms; exit 1 unless zero");
  defect->add_option("--i", o.i)->required()->check(CLI::NonNegativeNumber);
  cochain_pair(defect);

  auto* tr = app.add_subcommand("tr", "Table Reduction of a tuple of permutations (one-line JSON arrays)");
  tr->add_option("tuple", o.input, "JSON like [[1,3,2,4],[1,2,3,4],[2,1,4,3]], or @file")
      ->required()
      ->allow_extra_args(false);

  auto* homotopy = app.add_subcommand("homotopy", "H₁, H₂ and TR(H₁ + H₂) of x̃_i");
  homotopy->add_option("--i", o.i)->required()->check(CLI::NonNegativeNumber);

  auto* compose = app.add_subcommand("surj-compose", "Partial composition outer ∘_p inner of surjections");
  compose->add_option("--outer", o.outer, "JSON array, e.g. [1,2,3,2,1]")->required()->allow_extra_args(false);
  compose->add_option("--p", o.p, "Position")->required();
  compose->add_option("--inner", o.inner, "JSON array, e.g. [1,2,1]")->required()->allow_extra_args(false);

  auto* verify = app.add_subcommand("verify", "Cartan identity sweep, or a lemma suite");
  verify->add_option("--i", o.i)->check(CLI::NonNegativeNumber);
  verify->add_option("--n", o.n);
  verify->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed);
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  verify->require_subcommand(0, 1);
  std::vector<std::pair<std::string, CLI::App*>> suite_cmds;
  for (const auto& [name, fn] : cartan::verify::suites()) {
    auto* sub = verify->add_subcommand(name, "Lemma suite " + name);
    sub->add_option("--max-degree", o.max_degree, "Exhaustive up to this degree");
    sub->add_option("--samples", o.samples, "Random samples");
    sub->add_option("--random-degree", o.random_degree, "Degree of random samples");
    sub->add_option("--seed", o.seed);
    suite_cmds.emplace_back(name, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*cup) {
      check_n(o.n);
      print(cartan::cup_i(o.i, load(o.alpha, o.n), load(o.beta, o.n)));
    } else if (*sq) {
      check_n(o.n);
      print(cartan::sq(o.k, load(o.alpha, o.n)));
    } else if (*zeta) {
      check_n(o.n);
      if (o.symbolic) {
        static const std::vector<std::string> names{"α", "β"};
        const auto expansion = cartan::symbolic_zeta(o.i, o.n);
        if (o.json_out) {
          json terms = json::array();
          for (const auto& m : expansion) terms.push_back(m.to_string(names));
          std::cout << terms.dump() << '\n';
        } else {
          std::cout << cartan::io::format_monomials(expansion, names) << '\n';
        }
      } else {
        if (o.alpha.empty() || o.beta.empty()) throw cartan::ParseError("zeta needs two cochain files");
        const Cochain a = load(o.alpha, o.n);
        const Cochain b = load(o.beta, o.n);
        require_cocycle(a, "alpha");
        require_cocycle(b, "beta");
        print(cartan::zeta(o.i, a, b));
      }
    } else if (*defect) {
      check_n(o.n);
      const Cochain d = cartan::cartan_defect(o.i, load(o.alpha, o.n), load(o.beta, o.n));
      print(d);
      return d.is_zero() ? kOk : kVerifyFailed;
    } else if (*tr) {
      const auto result = cartan::table_reduction(cartan::io::be_simplex_from_json(json_arg(o.input)));
      if (o.json_out)
        std::cout << cartan::io::surjections_to_json(result).dump() << '\n';
      else
        std::cout << cartan::io::format_surjections(result) << '\n';
    } else if (*homotopy) {
      const auto x = cartan::x_tilde(o.i);
      const auto h1 = cartan::h1(x);
      const auto h2 = cartan::h2(x);
      const auto& tr_h = cartan::zeta_surjections(o.i);
      if (o.json_out) {
        auto chain = [](const cartan::BEChain& c) {
          json out = json::array();
          for (const auto& e : c) out.push_back(cartan::io::be_simplex_to_json(e));
          return out;
        };
        std::cout << json{{"h1", chain(h1)}, {"h2", chain(h2)}, {"tr", cartan::io::surjections_to_json(tr_h)}}.dump()
                  << '\n';
      } else {
        std::cout << "H1 = " << cartan::io::format_be_chain(h1) << '\n'
                  << "H2 = " << cartan::io::format_be_chain(h2) << '\n'
                  << "TR = " << cartan::io::format_surjections(tr_h) << '\n';
      }
    } else if (*compose) {
      const auto outer = cartan::io::surjection_from_json(json_arg(o.outer));
      const auto inner = cartan::io::surjection_from_json(json_arg(o.inner));
      if (o.p < 1 || o.p > outer.arity()) throw cartan::ShapeMismatch("position outside 1..arity of outer");
      const auto result = cartan::surj_compose(outer, o.p, inner);
      if (o.json_out)
        std::cout << cartan::io::surjections_to_json(result).dump() << '\n';
      else
        std::cout << cartan::io::format_surjections(result) << '\n';
    } else if (*verify) {
      for (const auto& [name, sub] : suite_cmds)
        if (*sub) return run_suite(name, o);
      check_n(o.n);
      const auto report = cartan::verify::verify_cartan(o.i, o.n, o.trials, o.seed, o.threads);
      std::cout << report.to_json().dump() << '\n';
      return report.ok() ? kOk : kVerifyFailed;
    }
  } catch (const cartan::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const cartan::ShapeMismatch& e) {
    std::cerr << "shape mismatch: " << e.what() << '\n';
    return kShape;
  } catch (const cartan::NotACocycle& e) {
    std::cerr << "not a cocycle: " << e.what() << '\n';
    return kCocycle;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kParse;
  }
  return kOk;
}
