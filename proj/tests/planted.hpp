#pragma once

// Random catalog-move instances built by planting a rewrite's left side
// between random context words.

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fusedlink/moves.hpp"
#include "fusedlink/random.hpp"

namespace planted {

using namespace fusedlink;

inline constexpr MoveKind kWordKinds[] = {MoveKind::R2,    MoveKind::R3,  MoveKind::FAR,
                                          MoveKind::V2,    MoveKind::V3,  MoveKind::MIXED,
                                          MoveKind::F_O,   MoveKind::F_U, MoveKind::M1,
                                          MoveKind::M2,    MoveKind::M3};

inline std::vector<std::pair<int, int>> admissible_pairs(MoveKind kind, int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (indices_admissible(kind, i, j)) out.emplace_back(i, j);
  return out;
}

struct Instance {
  BraidWord word;
  MoveApplication move;
  BraidWord expected;
};

inline Instance plant(Rng& rng, MoveKind kind, int m, int max_context, double virtual_rate = 0.3) {
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  const auto pairs = admissible_pairs(kind, m);
  if (pairs.empty()) throw std::invalid_argument("no admissible indices on this many strands");
  const auto [i, j] = pairs[static_cast<std::size_t>(pick(static_cast<int>(pairs.size()) - 1))];
  const auto variants = rewrite_variants(kind, i, j);
  const int variant = pick(static_cast<int>(variants.size()) - 1);
  const Rewrite& rw = variants[static_cast<std::size_t>(variant)];
  const BraidWord prefix = random_word(rng, m, pick(max_context), virtual_rate);
  const BraidWord suffix = random_word(rng, m, pick(max_context), virtual_rate);
  auto build = [&](const std::vector<Generator>& middle) {
    std::vector<Generator> letters = prefix.letters();
    letters.insert(letters.end(), middle.begin(), middle.end());
    letters.insert(letters.end(), suffix.letters().begin(), suffix.letters().end());
    return BraidWord(m, std::move(letters));
  };
  MoveApplication move;
  move.kind = kind;
  move.pos = static_cast<int>(prefix.size()) + 1;
  move.i = i;
  move.j = j;
  move.variant = variant;
  return {build(rw.lhs), move, build(rw.rhs)};
}

}  // namespace planted
