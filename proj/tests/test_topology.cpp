#include <doctest.h>

#include "fusedlink/errors.hpp"
#include "fusedlink/random.hpp"
#include "fusedlink/topology.hpp"
#include "oracles.hpp"

using namespace fusedlink;

namespace {

oracle::Matrix rows(const SquareMatrix& m) {
  oracle::Matrix out(static_cast<std::size_t>(m.size()), std::vector<int>(static_cast<std::size_t>(m.size())));
  for (int r = 1; r <= m.size(); ++r)
    for (int c = 1; c <= m.size(); ++c) out[r - 1][c - 1] = m.at(r, c);
  return out;
}

}  // namespace

TEST_CASE("invariants agree with the reference computation") {
  Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    const BraidWord w = random_word(rng, 2 + it % 6, it % 30, it % 3 == 0 ? 0.3 : 0.0);
    CAPTURE(format_word_with_strands(w));
    CHECK(permutation_of(w).images() == oracle::permutation(w));
    const ComponentAssignment comps = closure_components(w);
    CHECK(comps.component_of == oracle::components(w));
    CHECK(comps.components == oracle::component_count(w));
    CHECK(rows(strand_crossing_sums(w)) == oracle::strand_sums(w));
    CHECK(rows(crossing_sums(w)) == oracle::component_sums(w));
    CHECK(is_pure(w) == (comps.components == w.strands()));
  }
}

TEST_CASE("permutations compose left to right") {
  const BraidWord u = parse_word("s1 s2");
  const BraidWord v = parse_word("S2 t1");
  CHECK(permutation_of(concat(u, v)) == permutation_of(u).then(permutation_of(v)));
  const Permutation p = permutation_of(parse_word("s1 s2 s3"));
  CHECK(p.images() == std::vector<int>{4, 1, 2, 3});
  CHECK(p.then(p.inverse()).is_identity());
  CHECK_THROWS(Permutation::from_images({1, 1}));
}

TEST_CASE("small links") {
  SUBCASE("Borromean braid") {
    const BraidWord w = parse_word("s1 S2 s1 S2 s1 S2");
    CHECK(closure_components(w).components == 3);
    CHECK(linking_matrix(w) == LinkingMatrix(3));
  }
  SUBCASE("Hopf link") {
    const LinkingMatrix lk = linking_matrix(parse_word("s1 s1"));
    REQUIRE(lk.size() == 2);
    CHECK(lk.at(1, 2) == 1);
    CHECK(lk.at(2, 1) == 1);
    CHECK(lk.has_zero_diagonal());
  }
  SUBCASE("trefoil") { CHECK(closure_components(parse_word("s1 s1 s1")).components == 1); }
  SUBCASE("trailing trivial strands are components") {
    CHECK(closure_components(parse_word("n=4 s1 s1 s1")).components == 3);
  }
}

TEST_CASE("odd crossing sums have no linking matrix") {
  const BraidWord w = parse_word("s1 t1");
  CHECK(crossing_sums(w).at(1, 2) == 1);
  CHECK_THROWS_AS(linking_matrix(w), OddLinkingSum);
}

TEST_CASE("relabel_minimal picks the smallest relabeling") {
  Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    const BraidWord w = random_word(rng, 2 + it % 5, 4 + it % 25);
    const CrossingSumMatrix m = crossing_sums(w);
    const Relabeling r = relabel_minimal(m);
    CHECK(rows(r.matrix) == oracle::minimal_relabel(rows(m)));
    CHECK(m.relabeled(r.labels) == r.matrix);
    std::vector<int> sorted = r.labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) CHECK(sorted[k] == static_cast<int>(k) + 1);
  }
}
