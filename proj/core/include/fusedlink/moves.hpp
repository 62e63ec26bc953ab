#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusedlink/braid_word.hpp"

namespace fusedlink {

/// Catalog of fused-isotopy moves. Word-level kinds rewrite a factor of the
/// braid word; closure-level kinds change the braid but not its closure.
enum class MoveKind : std::uint8_t {
  R2,        // s_i^e s_i^-e <-> 1
  R3,        // s_i s_j s_i <-> s_j s_i s_j, j = i+1
  FAR,       // g_i h_j <-> h_j g_i, |i-j| >= 2
  V2,        // t_i t_i <-> 1
  V3,        // t_i t_j t_i <-> t_j t_i t_j, j = i+1
  MIXED,     // t_i t_j s_i <-> s_j t_i t_j, j = i+1
  F_O,       // s_i s_j t_i <-> t_j s_i s_j, i = j+1
  F_U,       // S_i t_j s_i <-> s_j t_i S_j, j = i+1
  M1,        // s_i t_j s_i <-> s_j t_i s_j, j = i+1
  M2,        // S_i t_j S_i <-> S_j t_i S_j, j = i+1
  M3,        // s_i S_j s_i <-> s_j S_i s_j, j = i+1
  CYCLIC,    // rotate one letter between the ends
  CONJ,      // w -> c^-1 w c
  STAB_C,    // w on m strands -> w s_m^e on m+1
  DESTAB_C,  // inverse of STAB_C
  STAB_V,    // w on m strands -> w t_m on m+1
  DESTAB_V,  // inverse of STAB_V
};

enum class MoveLevel : std::uint8_t { Word, Closure };

struct MoveInfo {
  MoveKind kind;
  std::string_view name;
  MoveLevel level;
  /// Whether every instance leaves artin_image unchanged. Closure-level
  /// moves change the braid itself and are flagged false.
  bool preserves_artin;
  std::string_view pattern;
};

std::span<const MoveInfo> move_catalog();
const MoveInfo& move_info(MoveKind kind);
std::string_view to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(std::string_view name);
bool is_word_level(MoveKind kind);

/// One directed local rewrite lhs -> rhs. Insertions have an empty lhs,
/// deletions an empty rhs.
struct Rewrite {
  std::vector<Generator> lhs;
  std::vector<Generator> rhs;
  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

/// Whether (i, j) is an admissible index pair for a word-level kind
/// (R2 and V2 use i only and require j == 0).
bool indices_admissible(MoveKind kind, int i, int j);

/// Deterministic list of directed rewrites of a word-level kind at indices
/// (i, j). For the three-letter relations the list holds every 3|3 split of
/// every cyclic rotation of the relator L R^-1 and of its inverse (variant 0
/// is L -> R itself), so a rewrite and its reverse are both present.
/// FAR has 9 variants (3 * first letter type + second letter type, types
/// s, S, t). R2: 0 deletes s S, 1 deletes S s, 2 inserts s S, 3 inserts S s.
/// V2: 0 deletes t t, 1 inserts t t.
std::vector<Rewrite> rewrite_variants(MoveKind kind, int i, int j);

/// A catalog move at a position with its parameters.
///  - pos: 1-based index of the first letter of the match (for insertions,
///    the index the inserted letters will occupy). Closure-level moves keep
///    a descriptive position that apply_move ignores.
///  - i, j, variant: word-level kinds, see rewrite_variants.
///  - sign: CYCLIC direction (+1 first letter to the end, -1 last letter to
///    the front) or the sign of the STAB_C / DESTAB_C crossing.
///  - conjugator: the word c for CONJ.
struct MoveApplication {
  MoveKind kind = MoveKind::R2;
  int pos = 1;
  int i = 0;
  int j = 0;
  int variant = 0;
  int sign = 1;
  std::vector<Generator> conjugator;

  friend bool operator==(const MoveApplication&, const MoveApplication&) = default;
};

std::string describe(const MoveApplication& a);

/// All word-level rewrites for a strand count, in catalog order (kind, i, j,
/// variant), indexed by the first letter of the pattern.
class RuleTable {
 public:
  struct Rule {
    MoveKind kind;
    int i;
    int j;
    int variant;
    Rewrite rewrite;
  };

  /// `kinds` restricts the table; empty means every word-level kind.
  explicit RuleTable(int strands, std::span<const MoveKind> kinds = {});

  int strands() const noexcept { return strands_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  /// Indices into rules() of non-insertion rules whose pattern starts with g.
  const std::vector<std::size_t>& starting_with(Generator g) const;
  /// Indices of insertion rules (empty lhs).
  const std::vector<std::size_t>& insertions() const noexcept { return insertions_; }

 private:
  std::size_t slot(Generator g) const;

  int strands_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::size_t> insertions_;
};

/// Every catalog match in w, ordered by position then catalog order.
/// Insertions (R2/V2 with empty pattern) and CONJ need free parameters and
/// are not enumerated. At closure level the list also holds CYCLIC in both
/// directions (non-empty words), DESTAB_* when the trailing pattern matches,
/// and STAB_C+, STAB_C-, STAB_V at the word end.
std::vector<MoveApplication> applicable_moves(const BraidWord& w, MoveLevel level);

/// Applies a move with full validation; throws InvalidMove describing the
/// expected versus found letters on mismatch.
BraidWord apply_move(const BraidWord& w, const MoveApplication& a);

/// Moves that restore w letter for letter from apply_move(w, a). This is a
/// single move except for CONJ by c, which is undone by CONJ by c^-1
/// followed by the pair deletions at both ends.
std::vector<MoveApplication> inverse_moves(const BraidWord& w, const MoveApplication& a);

/// For each strand p of apply_move(w, a), the strand of w whose closure arc
/// it continues (0 for the strand created by a stabilization).
std::vector<int> strand_correspondence(const BraidWord& w, const MoveApplication& a);

/// For each closure component of apply_move(w, a), the component of w it
/// corresponds to. Throws std::logic_error if the move splits or merges
/// components.
std::vector<int> component_correspondence(const BraidWord& w, const MoveApplication& a);

/// A start word, a sequence of moves, and the claimed end word.
struct RewriteTrace {
  BraidWord start;
  std::vector<MoveApplication> moves;
  BraidWord end;

  friend bool operator==(const RewriteTrace&, const RewriteTrace&) = default;
};

/// Replays every move with validation and checks the final word; throws
/// TraceError naming the first failing step.
BraidWord replay(const RewriteTrace& t);

/// The trace from t.end back to t.start.
RewriteTrace invert_trace(const RewriteTrace& t);

/// Component map from t.end back to t.start, composed move by move.
std::vector<int> trace_component_map(const RewriteTrace& t);

}  // namespace fusedlink
