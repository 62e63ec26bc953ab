#include <doctest.h>

#include "fusedlink/artin.hpp"
#include "fusedlink/derivations.hpp"
#include "fusedlink/lemmas.hpp"
#include "oracles.hpp"

using namespace fusedlink;

TEST_CASE("pfa template") {
  for (int m = 3; m <= 7; ++m) {
    for (int j = 2; j <= m - 1; ++j) {
      const RewriteTrace t = pfa_trace(j, m);
      CHECK(replay(t) == t.end);
      CHECK(t.moves.size() == 4);
      CHECK(oracle::permutation(t.start) == oracle::permutation(t.end));
      CHECK(oracle::strand_sums(t.start) == oracle::strand_sums(t.end));
    }
  }
  CHECK(pfa_trace(2, 3).start == parse_word("s2 s2 S1 s2 s2 s1 S2 S2"));
  CHECK(pfa_trace(2, 3).end == parse_word("s2 s1 s1 S2"));
}

TEST_CASE("A spellings are related by classical moves") {
  for (int m = 2; m <= 7; ++m) {
    for (int j = 2; j <= m; ++j) {
      for (int i = 1; i < j; ++i) {
        const RewriteTrace t = left_to_right_trace(i, j, m);
        CHECK(t.start == build_A(i, j, m, AForm::Left));
        CHECK(t.end == build_A(i, j, m, AForm::Right));
        CHECK(replay(t) == t.end);
        for (const auto& a : t.moves) CHECK(move_info(a.kind).preserves_artin);
      }
    }
  }
}

TEST_CASE("tau slide template") {
  for (int m = 3; m <= 7; ++m) {
    for (int j = 2; j + 1 <= m; ++j) {
      for (int i = 1; i <= j - 1; ++i) {
        for (int e : {1, -1}) {
          const RewriteTrace t = tau_slide_trace(i, j, m, e);
          CHECK(replay(t) == t.end);
          CHECK(t.start == concat(build_A_power(i, j + 1, m, e, AForm::Right), BraidWord(m, {Generator::tau(j)})));
          CHECK(t.end == concat(BraidWord(m, {Generator::tau(j)}), build_A_power(i, j, m, e, AForm::Right)));
        }
      }
    }
  }
}

TEST_CASE("identity checks replay for every instance") {
  for (int m = 3; m <= 6; ++m) {
    LemmaOptions options;
    options.bfs = false;
    for (int j = 2; j <= m - 1; ++j) CHECK(check_eq_pfa(j, m, options).ok());
    for (int j = 2; j + 1 <= m; ++j) {
      for (int i = 1; i < j; ++i) {
        const LemmaReport central = check_lemma_central(i, j, m, options);
        CHECK(central.ok());
        CHECK(central.replay_ok);
        CHECK(check_lemma_tau(i, j, m, options).ok());
      }
      for (int i = 2; i <= j; ++i) {
        for (int k = 1; k < i; ++k) CHECK(check_lemma_commute(k, i, j, m, options).ok());
      }
    }
  }
  CHECK_THROWS(check_eq_pfa(1, 3));
  CHECK_THROWS(check_lemma_central(2, 2, 4));
}

TEST_CASE("fused-only identities are not braid identities") {
  LemmaOptions options;
  options.bfs = false;
  for (const LemmaReport& r : {check_eq_pfa(2, 3, options), check_lemma_central(1, 2, 3, options),
                               check_lemma_commute(1, 2, 2, 3, options), check_lemma_tau(1, 2, 3, options)}) {
    CAPTURE(to_string(r.id));
    CHECK_FALSE(r.sides_artin_equal);
    CHECK(oracle::artin(r.left) != oracle::artin(r.right));
    CHECK(oracle::strand_sums(r.left) == oracle::strand_sums(r.right));
  }
}

TEST_CASE("search confirms the smallest instances") {
  LemmaOptions options;
  options.bfs = true;
  const LemmaReport r = check_eq_pfa(2, 3, options);
  REQUIRE(r.bfs_found);
  CHECK(*r.bfs_found);
  const SuiteReport suite = run_lemma_suite({4, true, false, {0, 200'000}});
  CHECK(suite.ok());
  int searched = 0;
  for (const auto& l : suite.lemmas) searched += l.bfs_found.has_value();
  CHECK(searched == 4);
}

TEST_CASE("M moves are derivable") {
  const auto derived = derive_M_moves({0, 200'000});
  REQUIRE(derived.size() == 3);
  for (const auto& d : derived) {
    CAPTURE(to_string(d.kind));
    REQUIRE(d.trace);
    CHECK(replay(*d.trace) == d.right);
    for (const auto& a : d.trace->moves) {
      CHECK(a.kind != MoveKind::M1);
      CHECK(a.kind != MoveKind::M2);
      CHECK(a.kind != MoveKind::M3);
    }
  }
}
