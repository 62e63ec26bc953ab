#pragma once

#include <span>
#include <string_view>

#include "fusedlink/moves.hpp"

namespace fusedlink {

/// Incrementally records a validated RewriteTrace. Every call applies its
/// moves immediately, so a bad template fails at the offending step with
/// InvalidMove. Positions are 1-based, as in MoveApplication.
class TraceBuilder {
 public:
  explicit TraceBuilder(BraidWord start);

  const BraidWord& current() const noexcept { return trace_.end; }
  const RewriteTrace& trace() const noexcept { return trace_; }
  RewriteTrace take() && { return std::move(trace_); }

  TraceBuilder& apply(const MoveApplication& a);

  /// Replaces the factor at `pos` spelled `lhs` by `rhs` using the catalog
  /// rule of `kind` with exactly that rewrite. Throws InvalidMove when no
  /// variant of the kind performs it.
  TraceBuilder& rewrite(MoveKind kind, int pos, std::span<const Generator> lhs,
                        std::span<const Generator> rhs);
  TraceBuilder& rewrite(MoveKind kind, int pos, std::string_view lhs, std::string_view rhs);

  /// Inserts u u^-1 so that u starts at `pos`, one nested cancelling pair at
  /// a time (R2 for classical letters, V2 for virtual ones).
  TraceBuilder& insert_cancelling(int pos, std::span<const Generator> u);
  TraceBuilder& insert_cancelling(int pos, const BraidWord& u);

  /// Deletes the cancelling pair at pos, pos+1.
  TraceBuilder& cancel(int pos);

  /// FAR-commutes the letters at pos and pos+1.
  TraceBuilder& swap(int pos);

  /// Carries the letter at `from` to `to` by adjacent FAR swaps.
  TraceBuilder& move_letter(int from, int to);

  /// Cancels adjacent inverse pairs until the word is freely reduced.
  TraceBuilder& free_reduce();

  /// Replays a word-level trace whose start occupies letters
  /// [offset + 1, offset + |t.start|] of the current word.
  TraceBuilder& embed(const RewriteTrace& t, int offset);

  /// Appends the moves of a trace starting at the current word.
  TraceBuilder& append(const RewriteTrace& t);

  TraceBuilder& conjugate(std::span<const Generator> c);
  TraceBuilder& cyclic(int direction);
  TraceBuilder& destabilize();

 private:
  RewriteTrace trace_;
};

/// Trace of R2/V2 deletions from w to free_reduce(w).
RewriteTrace free_reduction_trace(const BraidWord& w);

/// Letters of a token string such as "s1 S2 t1".
std::vector<Generator> letters_of(std::string_view tokens);

}  // namespace fusedlink
