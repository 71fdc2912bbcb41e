#include <catch_amalgamated.hpp>

#include <random>

#include "cartan/simplicial.hpp"
#include "oracles.hpp"

using cartan::F2Sum;
using Simplex = cartan::Simplex<int>;
using Prod = cartan::ProductSimplex<int, int>;
using Tensor = cartan::TensorTerm<int, int>;

TEST_CASE("face and degeneracy operators act on vertex lists") {
  const Simplex x{0, 1, 3};
  CHECK(x.face(0) == Simplex{1, 3});
  CHECK(x.face(2) == Simplex{0, 1});
  CHECK(x.degeneracy(1) == Simplex{0, 1, 1, 3});
  CHECK(x.front(1) == Simplex{0, 1});
  CHECK(x.back(1) == Simplex{1, 3});
  CHECK(Simplex{0, 1, 1, 3}.is_degenerate());
  CHECK_FALSE(x.is_degenerate());
  CHECK_THROWS(Simplex{0}.face(0));
  CHECK_THROWS_AS(Simplex(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("simplicial identities") {
  const Simplex x{0, 2, 3, 5, 7};
  for (int j = 0; j <= x.dim(); ++j)
    for (int i = 0; i < j; ++i) CHECK(x.face(j).face(i) == x.face(i).face(j - 1));
  for (int i = 0; i <= x.dim(); ++i) {
    CHECK(x.degeneracy(i).face(i) == x);
    CHECK(x.degeneracy(i).face(i + 1) == x);
  }
}

TEST_CASE("boundary of standard simplices") {
  CHECK(cartan::boundary(Simplex{0, 1}) == F2Sum<Simplex>{Simplex{0}, Simplex{1}});
  CHECK(cartan::boundary(Simplex{0, 1, 2}) == F2Sum<Simplex>{Simplex{1, 2}, Simplex{0, 2}, Simplex{0, 1}});
  CHECK(cartan::boundary(cartan::boundary(Simplex{0, 1, 2, 3})).empty());
  CHECK(cartan::boundary(Simplex{4}).empty());
}

TEST_CASE("product simplices are degenerate exactly on a common repeat") {
  CHECK(Prod(Simplex{0, 0, 1}, Simplex{0, 1, 1}).is_degenerate() == false);
  CHECK(Prod(Simplex{0, 0, 1}, Simplex{2, 2, 3}).is_degenerate());
  CHECK_THROWS_AS(Prod(Simplex{0, 1}, Simplex{0}), cartan::ShapeMismatch);
}

TEST_CASE("boundary squares to zero on products and tensors") {
  for (int d = 0; d <= 4; ++d)
    for (const auto& p : cartan::product_basis(2, 3, d)) CHECK(cartan::boundary(cartan::boundary(p)).empty());
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      CHECK(cartan::boundary(cartan::boundary(Tensor{cartan::standard_simplices(3, p).back(),
                                                     cartan::standard_simplices(3, q).front()}))
                .empty());
}

TEST_CASE("AW examples") {
  CHECK(cartan::aw(Prod(Simplex{2}, Simplex{1})) == F2Sum<Tensor>{Tensor{Simplex{2}, Simplex{1}}});
  CHECK(cartan::aw(Prod(Simplex{0, 1}, Simplex{0, 1})) ==
        F2Sum<Tensor>{Tensor{Simplex{0}, Simplex{0, 1}}, Tensor{Simplex{0, 1}, Simplex{1}}});
}

TEST_CASE("EZ examples") {
  SECTION("a point factor gives the single shuffle") {
    const Simplex x{0, 1, 2};
    CHECK(cartan::ez(Tensor{x, Simplex{5}}) == F2Sum<Prod>{Prod(x, Simplex{5, 5, 5})});
  }
  SECTION("p = q = 1") {
    const Simplex x{0, 1};
    const Simplex y{3, 4};
    CHECK(cartan::ez(Tensor{x, y}) ==
          F2Sum<Prod>{Prod(x.degeneracy(1), y.degeneracy(0)), Prod(x.degeneracy(0), y.degeneracy(1))});
  }
}

TEST_CASE("EZ agrees with the lattice-path description") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 5; ++q)
      for (const auto& x : cartan::standard_simplices(4, p))
        for (const auto& y : cartan::standard_simplices(3, q)) CHECK(cartan::ez(Tensor{x, y}) == oracle::ez(x, y));
}

TEST_CASE("SHI examples") {
  CHECK(cartan::shi(Prod(Simplex{3}, Simplex{1})).empty());
  const Simplex x{0, 1};
  const Simplex y{0, 1};
  CHECK(cartan::shi(Prod(x, y)) == F2Sum<Prod>{Prod(x.degeneracy(0), y.degeneracy(1))});
}

TEST_CASE("AW EZ = id and SHI is a homotopy from EZ AW to id") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 4; ++q)
      for (const auto& x : cartan::standard_simplices(3, p))
        for (const auto& y : cartan::standard_simplices(3, q)) {
          const Tensor t{x, y};
          CHECK(cartan::aw(cartan::ez(t)) == F2Sum<Tensor>(t));
        }
  for (int d = 0; d <= 4; ++d)
    for (const auto& p : cartan::product_basis(d, d, d)) {
      const auto lhs = cartan::boundary(cartan::shi(p)) + cartan::shi(cartan::boundary(p));
      CHECK(lhs == cartan::ez(cartan::aw(p)) + F2Sum<Prod>(p));
    }
}

TEST_CASE("AW and EZ are chain maps") {
  for (int d = 0; d <= 4; ++d)
    for (const auto& p : cartan::product_basis(2, 2, d))
      CHECK(cartan::boundary(cartan::aw(p)) == cartan::aw(cartan::boundary(p)));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 4; ++q) {
      const Tensor t{cartan::standard_simplices(p, p).front(), cartan::standard_simplices(q + 1, q).back()};
      CHECK(cartan::boundary(cartan::ez(t)) == cartan::ez(cartan::boundary(t)));
    }
}

TEST_CASE("SHI kills degenerate inputs and annihilates itself") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> a(5), b(5);
    for (auto& v : a) v = static_cast<int>(rng() % 4);
    for (auto& v : b) v = static_cast<int>(rng() % 4);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const Prod p{Simplex(a), Simplex(b)};
    if (p.is_degenerate()) {
      CHECK(cartan::shi(p).empty());
      CHECK(cartan::aw(p).empty());
    } else {
      // SHI∘SHI = 0 and AW∘SHI = 0 are the side conditions of Shih's homotopy.
      CHECK(cartan::shi(cartan::shi(p)).empty());
      CHECK(cartan::aw(cartan::shi(p)).empty());
    }
  }
}

TEST_CASE("basis enumeration") {
  CHECK(cartan::standard_simplices(3, 1).size() == 6);
  CHECK(cartan::all_standard_simplices(1, 1).size() == 3);
  // Δ¹ × Δ¹ has two nondegenerate 2-simplices.
  CHECK(cartan::product_basis(1, 1, 2).size() == 2);
  CHECK(cartan::product_basis(1, 1, 3).empty());
}
