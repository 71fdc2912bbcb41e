#include <catch_amalgamated.hpp>

#include "cartan/verify.hpp"

namespace v = cartan::verify;

TEST_CASE("random draws are reproducible per stream") {
  auto a = v::make_rng(5, 3);
  auto b = v::make_rng(5, 3);
  auto c = v::make_rng(5, 4);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  for (int k = 0; k < 100; ++k) {
    const auto e = v::random_be_simplex(a, 3, 4);
    CHECK_FALSE(e.is_degenerate());
  }
}

TEST_CASE("sweep reports are deterministic and independent of threading") {
  const auto one = v::verify_cartan(1, 4, 30, 17, 1);
  const auto many = v::verify_cartan(1, 4, 30, 17, 4);
  CHECK(one.ok());
  CHECK(one.checked == 34);
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    return j;
  };
  CHECK(strip(one.to_json()) == strip(many.to_json()));
}

TEST_CASE("vacuous sweep on a point") {
  const auto r = v::verify_cartan(1, 0, 10, 1);
  CHECK(r.ok());
  CHECK(r.n == 0);
}

TEST_CASE("sweep argument checks") {
  CHECK_THROWS_AS(v::verify_cartan(-1, 3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(v::verify_cartan(0, 30, 1, 1), cartan::ShapeMismatch);
}

TEST_CASE("every lemma suite passes in low degree") {
  v::SuiteOptions o;
  o.max_degree = 3;
  o.random_degree = 4;
  o.random_samples = 20;
  for (const auto& [name, fn] : v::suites()) {
    INFO(name);
    const auto r = fn(o);
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(r.name == name);
  }
}
