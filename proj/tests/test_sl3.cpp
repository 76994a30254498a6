#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "nilo/sl3.hpp"

using nilo::sl3::Monomial;
using nilo::sl3::MonomialArray;

TEST_CASE("invariant dimensions") {
  CHECK(nilo::sl3::invariant_dim(0, 0) == 1);
  CHECK(nilo::sl3::invariant_dim(1, 0) == 2);
  CHECK(nilo::sl3::invariant_dim(1, 1) == 4);
  CHECK(nilo::sl3::invariant_dim(3, 2) == 12);
  CHECK_THROWS_AS(nilo::sl3::invariant_dim(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(nilo::sl3::invariant_dim(2, -3), std::invalid_argument);
}

TEST_CASE("branching multiplicities of small modules") {
  CHECK(nilo::sl3::branching_multiplicities(1, 1) == std::vector<int>{1, 2, 1});
  for (int k = 0; k <= 5; ++k) CHECK(nilo::sl3::branching_multiplicity(5, 0, k) == 1);
  CHECK(nilo::sl3::branching_multiplicities(2, 1) == std::vector<int>{1, 2, 2, 1});
  CHECK(nilo::sl3::branching_multiplicity(2, 1, -1) == 0);
  CHECK(nilo::sl3::branching_multiplicity(2, 1, 4) == 0);
  CHECK(nilo::sl3::branching_multiplicity(-1, 1, 0) == 0);
}

TEST_CASE("branching multiplicities sum to the module dimension") {
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto mults = nilo::sl3::branching_multiplicities(a, b);
      CHECK(static_cast<int>(mults.size()) == a + b + 1);
      long dim = 0;
      for (int k = 0; k <= a + b; ++k) dim += static_cast<long>(mults[k]) * (k + 1);
      CHECK(dim == static_cast<long>(a + 1) * (b + 1) * (a + b + 2) / 2);
      CHECK(mults[0] == 1);
    }
  }
}

TEST_CASE("branching multiplicities are symmetric and follow the profile") {
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int k = 0; k <= a + b; ++k) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(k);
        const int m = nilo::sl3::branching_multiplicity(a, b, k);
        CHECK(m == nilo::sl3::branching_multiplicity(b, a, k));
        // Ascend 1..b+1, plateau at b+1 through k = a, then descend to 1.
        if (k <= b) {
          CHECK(m == k + 1);
        } else if (k <= a) {
          CHECK(m == b + 1);
        } else {
          CHECK(m == a + b + 1 - k);
        }
      }
    }
  }
}

TEST_CASE("monomial array shape and entries") {
  MonomialArray arr(2, 1);
  CHECK(arr.a() == 2);
  CHECK(arr.b() == 1);
  CHECK(arr.size() == 6);
  // m(0,0) = x2^a xi2^b is the corner monomial.
  CHECK(arr.entry(0, 0) == Monomial{0, 2, 1, 0});
  CHECK(arr.entry(1, 0) == Monomial{1, 1, 1, 0});
  CHECK(arr.entry(2, 1) == Monomial{2, 0, 0, 1});
  CHECK_THROWS_AS(arr.entry(3, 0), std::out_of_range);
  CHECK_THROWS_AS(arr.entry(0, 2), std::out_of_range);
  CHECK_THROWS_AS(arr.entry(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(MonomialArray(-1, 2), std::invalid_argument);
}

TEST_CASE("raising actions shift within the array and kill the boundary") {
  MonomialArray arr(2, 1);
  CHECK(nilo::sl3::act_e1(arr, 0, 0) == arr.entry(1, 0));
  CHECK(nilo::sl3::act_e2(arr, 1, 0) == arr.entry(1, 1));
  CHECK(!nilo::sl3::act_e1(arr, 2, 0).has_value());
  CHECK(!nilo::sl3::act_e1(arr, 2, 1).has_value());
  CHECK(!nilo::sl3::act_e2(arr, 0, 1).has_value());
  CHECK_THROWS_AS(nilo::sl3::act_e1(arr, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(nilo::sl3::act_e2(arr, 0, 5), std::out_of_range);

  // Single-column and single-row arrays: one action is identically zero.
  MonomialArray col(3, 0);
  for (int i = 0; i <= 3; ++i) CHECK(!nilo::sl3::act_e2(col, i, 0).has_value());
  MonomialArray row(0, 3);
  for (int j = 0; j <= 3; ++j) CHECK(!nilo::sl3::act_e1(row, 0, j).has_value());
}

TEST_CASE("every array is generated from its corner") {
  CHECK(nilo::sl3::is_cyclic(MonomialArray(0, 0)));
  CHECK(nilo::sl3::is_cyclic(MonomialArray(3, 2)));
  CHECK(nilo::sl3::is_cyclic(MonomialArray(6, 6)));
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(nilo::sl3::is_cyclic(MonomialArray(a, b)));
    }
  }
}
