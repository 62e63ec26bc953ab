#include <doctest.h>

#include <array>

#include "fusedlink/artin.hpp"
#include "fusedlink/search.hpp"
#include "fusedlink/trace_builder.hpp"
#include "oracles.hpp"

using namespace fusedlink;

namespace {

bool catalog_only(const RewriteTrace& t, MoveLevel level) {
  return std::all_of(t.moves.begin(), t.moves.end(), [&](const MoveApplication& a) {
    return level == MoveLevel::Closure || is_word_level(a.kind);
  });
}

}  // namespace

TEST_CASE("one braid relation is one move") {
  const SearchResult r = bfs_search(parse_word("s1 s2 s1"), parse_word("s2 s1 s2"),
                                    default_budget(parse_word("s1 s2 s1"), parse_word("s2 s1 s2")));
  REQUIRE(r.trace);
  CHECK(r.trace->moves.size() == 1);
  CHECK(replay(*r.trace) == parse_word("s2 s1 s2"));
}

TEST_CASE("derived moves are found from the base moves") {
  const std::array<const char*, 2> pairs[] = {
      {"s1 t2 s1", "s2 t1 s2"}, {"S1 t2 S1", "S2 t1 S2"}, {"s1 S2 s1", "s2 S1 s2"}};
  for (const auto& pair : pairs) {
    SearchOptions options;
    options.kinds = {MoveKind::R2, MoveKind::R3, MoveKind::FAR, MoveKind::V2,
                     MoveKind::V3, MoveKind::MIXED, MoveKind::F_O, MoveKind::F_U};
    const BraidWord a = parse_word(pair[0]);
    const BraidWord b = parse_word(pair[1]);
    const SearchResult r = bfs_search(a, b, {0, 200'000}, options);
    CAPTURE(pair[0]);
    REQUIRE(r.trace);
    CHECK(replay(*r.trace) == b);
    for (const auto& m : r.trace->moves) {
      CHECK(std::find(options.kinds.begin(), options.kinds.end(), m.kind) != options.kinds.end());
    }
  }
}

TEST_CASE("invariant mismatch is reported without searching") {
  const SearchResult hopf = bfs_search(parse_word("s1 s1"), parse_word("n=2"), {0, 1000});
  CHECK_FALSE(hopf.trace);
  CHECK(hopf.invariant_mismatch);
  const SearchResult perm = bfs_search(parse_word("s1"), parse_word("n=2"), {0, 1000});
  CHECK(perm.invariant_mismatch);
}

TEST_CASE("budgets are honoured") {
  const SearchResult none = bfs_search(parse_word("s1 s2 s1"), parse_word("s2 s1 s2"), {10, 0});
  CHECK(none.budget_exhausted);
  CHECK_FALSE(none.trace);
  SearchOptions base;
  base.kinds = {MoveKind::R2, MoveKind::R3, MoveKind::FAR, MoveKind::V2, MoveKind::V3, MoveKind::MIXED,
                MoveKind::F_O, MoveKind::F_U};
  const SearchResult tight = bfs_search(parse_word("s1 t2 s1"), parse_word("s2 t1 s2"), {0, 50}, base);
  CHECK_FALSE(tight.trace);
  CHECK(tight.budget_exhausted);
  CHECK(tight.states <= 60);
}

TEST_CASE("closure-level search unknots the trefoil") {
  SearchOptions options;
  options.level = MoveLevel::Closure;
  const SearchResult r = bfs_search(parse_word("s1 s1 s1"), parse_word("n=1"), {0, 200'000}, options);
  REQUIRE(r.trace);
  CHECK(replay(*r.trace) == parse_word("n=1"));
  CHECK(catalog_only(*r.trace, MoveLevel::Closure));
}

TEST_CASE("word-level traces keep the Artin image for classical relations") {
  const BraidWord a = parse_word("s1 s3 s2 s1 s2");
  const BraidWord b = parse_word("s3 s1 s1 s2 s1");
  REQUIRE(artin_equal(a, b));
  const auto t = bfs_equivalent(a, b);
  REQUIRE(t);
  CHECK(catalog_only(*t, MoveLevel::Word));
  CHECK(replay(*t) == b);
}

TEST_CASE("trace builder") {
  TraceBuilder tb(parse_word("n=4 s1 s3"));
  tb.swap(1);
  CHECK(tb.current() == parse_word("n=4 s3 s1"));
  tb.insert_cancelling(2, letters_of("s2 t1"));
  CHECK(tb.current() == parse_word("n=4 s3 s2 t1 t1 S2 s1"));
  tb.free_reduce();
  CHECK(tb.current() == parse_word("n=4 s3 s1"));
  CHECK(replay(tb.trace()) == tb.current());
  CHECK_THROWS(tb.rewrite(MoveKind::R3, 1, "s3 s1", "s1 s3"));
  tb.conjugate(letters_of("s2"));
  CHECK(tb.current() == parse_word("n=4 S2 s3 s1 s2"));
  tb.cyclic(1);
  CHECK(tb.current() == parse_word("n=4 s3 s1 s2 S2"));
  CHECK(replay(tb.trace()) == tb.current());
}

TEST_CASE("free reduction traces") {
  const BraidWord w = parse_word("s1 s2 t3 t3 S2 s2 S2 S1 s3");
  const RewriteTrace t = free_reduction_trace(w);
  CHECK(t.end == free_reduce(w));
  CHECK(replay(t) == t.end);
  for (const auto& m : t.moves) CHECK((m.kind == MoveKind::R2 || m.kind == MoveKind::V2));
}
