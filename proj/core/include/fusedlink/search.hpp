#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fusedlink/moves.hpp"

namespace fusedlink {

struct SearchBudget {
  /// Longest free-reduced word the search may visit; 0 means the default
  /// max(|a|, |b|) + 6.
  int max_length = 0;
  /// Total number of stored states over both search directions.
  std::size_t max_states = 2'000'000;
};

/// max_length = max(|a|, |b|) + 6, max_states = 2e6.
SearchBudget default_budget(const BraidWord& a, const BraidWord& b);

struct SearchOptions {
  MoveLevel level = MoveLevel::Word;
  /// Word-level kinds the search may use; empty means all of them.
  std::vector<MoveKind> kinds;
  /// Strand ceiling for stabilizations at closure level; 0 means one more
  /// than the larger input.
  int max_strands = 0;
};

struct SearchResult {
  std::optional<RewriteTrace> trace;
  std::size_t states = 0;
  bool budget_exhausted = false;
  /// The inputs differ in an invariant every move preserves, so no trace
  /// exists at any budget.
  bool invariant_mismatch = false;
};

/// Bidirectional breadth-first search over freely reduced words.
///
/// One search step from a word x picks a catalog relation rule u -> v
/// (a three-letter or FAR rewrite, read as the cyclic relator r = u v^-1 of
/// length L) and a k in 0..L. If the first k letters of r occur in x, they
/// are replaced by the inverse of the remaining L - k letters, realised
/// elementarily by nested cancelling-pair insertions, the rule itself, and
/// pair deletions; the result is then freely reduced. k = |u| is a plain
/// rule application. At closure level a step may also be a cyclic shift,
/// conjugation by one letter, or a (de)stabilization. Every returned trace
/// consists of catalog moves only and replays from a to b.
///
/// Absence of a trace is never a proof of inequivalence.
SearchResult bfs_search(const BraidWord& a, const BraidWord& b, const SearchBudget& budget,
                        const SearchOptions& options = {});

std::optional<RewriteTrace> bfs_equivalent(const BraidWord& a, const BraidWord& b,
                                           const SearchBudget& budget,
                                           const SearchOptions& options = {});
std::optional<RewriteTrace> bfs_equivalent(const BraidWord& a, const BraidWord& b);

}  // namespace fusedlink
