#include <doctest.h>

#include "fusedlink/random.hpp"
#include "fusedlink/topology.hpp"

using namespace fusedlink;

TEST_CASE("generators are reproducible") {
  Rng a(99), b(99);
  for (int it = 0; it < 50; ++it) CHECK(random_word(a, 5, 20, 0.3) == random_word(b, 5, 20, 0.3));
  Rng c(1);
  for (int it = 0; it < 50; ++it) {
    const BraidWord w = random_classical_word(c, 4, 10);
    CHECK(w.is_classical());
    CHECK(w.strands() <= 4);
    CHECK(w.size() <= 10);
  }
}

TEST_CASE("classical walks stay classical and capped") {
  Rng rng(2);
  for (int it = 0; it < 100; ++it) {
    const RewriteTrace t = random_walk(rng, parse_word("s1 s2 s1"), 15, 5);
    CHECK(replay(t) == t.end);
    CHECK(t.end.is_classical());
    CHECK(t.end.strands() <= 5);
  }
}

TEST_CASE("property sweep") {
  const SweepReport a = property_sweep({7, 60, 4, 15});
  const SweepReport b = property_sweep({7, 60, 4, 15});
  CHECK(a.ok());
  CHECK(a.checks == b.checks);
  CHECK(a.checks >= 60 * 4);
}
