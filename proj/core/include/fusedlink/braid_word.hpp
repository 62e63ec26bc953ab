#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusedlink {

enum class GeneratorKind : std::uint8_t { Classical, Virtual };

/// One letter of a braid word: sigma_i^{+-1} (classical crossing) or tau_i
/// (virtual crossing). Virtual letters are self-inverse and always carry
/// sign +1, so equality never depends on a virtual letter's sign.
class Generator {
 public:
  constexpr Generator() = default;

  static constexpr Generator sigma(int index, int sign = 1) {
    return Generator(GeneratorKind::Classical, index, sign < 0 ? -1 : 1);
  }
  static constexpr Generator tau(int index) { return Generator(GeneratorKind::Virtual, index, 1); }

  constexpr GeneratorKind kind() const noexcept { return kind_; }
  constexpr int index() const noexcept { return index_; }
  constexpr int sign() const noexcept { return sign_; }
  constexpr bool is_virtual() const noexcept { return kind_ == GeneratorKind::Virtual; }
  constexpr bool is_classical() const noexcept { return kind_ == GeneratorKind::Classical; }

  constexpr Generator inverse() const noexcept {
    return is_virtual() ? *this : sigma(index_, -sign_);
  }
  constexpr Generator with_index(int index) const noexcept {
    return Generator(kind_, index, sign_);
  }

  friend constexpr bool operator==(const Generator&, const Generator&) = default;
  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;

 private:
  constexpr Generator(GeneratorKind kind, int index, int sign)
      : kind_(kind), index_(index), sign_(sign) {}

  GeneratorKind kind_ = GeneratorKind::Classical;
  int index_ = 1;
  int sign_ = 1;
};

/// Token spelling of a single letter: `s<k>`, `S<k>` or `t<k>`.
std::string to_token(Generator g);

/// A strand count together with a letter sequence. The same value stands for
/// an element of B_m, VB_m, WB_m or FB_m; which group is meant is decided by
/// the equivalence an operation applies.
///
/// Invariants: strands >= 1 and every letter index is at most strands - 1.
/// The strand count may exceed 1 + max index (trailing trivial strands).
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Generator> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Generator& operator[](std::size_t k) const { return letters_[k]; }

  bool is_classical() const noexcept;
  /// Largest letter index, 0 for the empty word.
  int max_index() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Generator> letters_;
};

/// Parses the shared braid-word grammar: whitespace-separated tokens `s<k>`
/// (sigma_k), `S<k>` (sigma_k^-1), `t<k>` (tau_k) with k >= 1, optionally
/// preceded by a header `n=<m>` declaring the strand count. Without a header
/// the strand count is 1 + max index.
BraidWord parse_word(std::string_view text);

/// Letters only, single-space separated; "" for the empty word.
std::string format_word(const BraidWord& w);
/// `n=<m>` header followed by the letters; round-trips through parse_word
/// including the strand count.
std::string format_word_with_strands(const BraidWord& w);

/// Group inverse: reversed letters, classical signs flipped.
BraidWord invert(const BraidWord& w);
/// Concatenation; the result has max(a.strands, b.strands) strands.
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord concat(std::span<const BraidWord> parts);
/// Same letters on a larger strand count (the inclusion B_m -> B_m').
BraidWord with_strands(const BraidWord& w, int strands);
/// w repeated |k| times, inverted when k < 0.
BraidWord power(const BraidWord& w, int k);
/// Letters [first, first + count) as a word on the same strands.
BraidWord subword(const BraidWord& w, std::size_t first, std::size_t count);

bool cancels(Generator a, Generator b) noexcept;
/// Deletes adjacent sigma_i^e sigma_i^-e and tau_i tau_i pairs until none remain.
BraidWord free_reduce(const BraidWord& w);
bool is_freely_reduced(const BraidWord& w) noexcept;

/// Compact byte encoding usable as a hash key (strand count + one byte per
/// letter). Requires strands <= 64.
std::string word_key(const BraidWord& w);

}  // namespace fusedlink
