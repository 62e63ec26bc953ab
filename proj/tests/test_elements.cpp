#include <doctest.h>

#include "fusedlink/artin.hpp"
#include "fusedlink/elements.hpp"
#include "fusedlink/errors.hpp"
#include "fusedlink/random.hpp"
#include "fusedlink/topology.hpp"
#include "oracles.hpp"

using namespace fusedlink;

TEST_CASE("B words") {
  for (int m = 1; m <= 7; ++m)
    for (int j = 1; j <= m; ++j)
      for (int i = 1; i <= j; ++i) CHECK(build_B(i, j, m) == oracle::B(i, j, m));
  CHECK(build_B(2, 5, 6) == parse_word("n=6 s4 s3 s2"));
  CHECK_THROWS(build_B(3, 2, 4));
}

TEST_CASE("both spellings of A are the same pure braid") {
  for (int m = 2; m <= 7; ++m) {
    for (int j = 2; j <= m; ++j) {
      for (int i = 1; i < j; ++i) {
        const BraidWord left = build_A(i, j, m, AForm::Left);
        const BraidWord right = build_A(i, j, m, AForm::Right);
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(m);
        CHECK(artin_equal(left, right));
        CHECK(oracle::artin(left) == oracle::artin(right));
        CHECK(is_pure(left));
        CHECK(left.size() == static_cast<std::size_t>(2 * (j - i)));
      }
    }
  }
  CHECK(build_A(1, 3, 3, AForm::Left) == parse_word("s2 s1 s1 S2"));
  CHECK(build_A(1, 3, 3, AForm::Right) == parse_word("S1 s2 s2 s1"));
}

TEST_CASE("delta counts A exponents") {
  for (int m = 2; m <= 6; ++m) {
    for (int j = 2; j <= m; ++j) {
      for (int i = 1; i < j; ++i) {
        for (int k : {-2, -1, 0, 3}) {
          const BraidWord a = build_A_power(i, j, m, k, k % 2 == 0 ? AForm::Left : AForm::Right);
          for (int q = 2; q <= m; ++q)
            for (int p = 1; p < q; ++p) CHECK(delta(a, p, q) == (p == i && q == j ? k : 0));
        }
      }
    }
  }
}

TEST_CASE("delta is the strand linking number of a pure braid") {
  Rng rng(3);
  int tested = 0;
  while (tested < 100) {
    const BraidWord w = random_word(rng, 4, 12);
    if (!is_pure(w)) continue;
    ++tested;
    const auto sums = oracle::strand_sums(w);
    for (int j = 2; j <= 4; ++j)
      for (int i = 1; i < j; ++i) CHECK(2 * delta(w, i, j) == sums[i - 1][j - 1]);
  }
  CHECK_THROWS_AS(delta(parse_word("t1 t1"), 1, 2), NonClassicalInput);
  CHECK_THROWS_AS(delta(parse_word("s1"), 1, 2), std::invalid_argument);
}
