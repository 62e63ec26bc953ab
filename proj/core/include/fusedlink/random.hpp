#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fusedlink/moves.hpp"

namespace fusedlink {

using Rng = std::mt19937_64;

/// Uniform letters on `strands` strands; each letter is virtual with
/// probability `virtual_rate`, otherwise a signed σ.
BraidWord random_word(Rng& rng, int strands, int length, double virtual_rate = 0.0);

/// Strand count uniform in 1..max_strands, length uniform in 0..max_length.
BraidWord random_classical_word(Rng& rng, int max_strands, int max_length);

/// A uniformly chosen applicable move. Word level adds the cancelling-pair
/// insertions (R2, and V2 unless `classical_only`) at every position to the
/// matching rewrites; closure level adds conjugation by a single letter.
/// With `classical_only` the choice is restricted to moves whose result has
/// no virtual letter. Returns nothing only when no move qualifies.
std::optional<MoveApplication> random_move(Rng& rng, const BraidWord& w, MoveLevel level,
                                           bool classical_only, int max_strands = 8);

/// `steps` random classical closure-or-word moves starting at `start`, with
/// the strand count capped at `max_strands`.
RewriteTrace random_walk(Rng& rng, const BraidWord& start, int steps, int max_strands);

struct SweepOptions {
  std::uint64_t seed = 20240611;
  int iterations = 200;
  int max_strands = 5;
  int max_length = 20;
};

struct SweepReport {
  std::uint64_t seed = 0;
  int iterations = 0;
  long checks = 0;
  /// "iteration <k>: <what>" in iteration order.
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Per iteration: canonicalize a random classical word and verify its
/// certificate and linking data, check a random catalog move on a random
/// virtual word against the Artin flag and crossing sums, and check that a
/// random classical walk leaves the canonical form unchanged.
SweepReport property_sweep(const SweepOptions& options);

}  // namespace fusedlink
