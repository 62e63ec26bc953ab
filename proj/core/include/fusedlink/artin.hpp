#pragma once

#include <string>
#include <vector>

#include "fusedlink/braid_word.hpp"

namespace fusedlink {

/// Reduced word in the free group on x_1..x_m; letter +k is x_k, -k is x_k^-1.
class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces the input.
  explicit FreeWord(const std::vector<int>& letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  /// Appends one letter, cancelling against the tail.
  void push(int letter);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  FreeWord inverse() const;

  std::string to_string() const;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Endomorphism of the free group F_m given by the images of its generators.
struct FreeGroupEndo {
  int strands = 1;
  /// images[k - 1] is the image of x_k.
  std::vector<FreeWord> images;

  static FreeGroupEndo identity(int strands);
  const FreeWord& image(int k) const { return images.at(static_cast<std::size_t>(k - 1)); }
};

/// Artin-style action of a braid word on F_m:
///   s_i : x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
///   S_i : x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
///   t_i : x_i <-> x_{i+1}
/// Letters are composed left to right by post-composition: reading letter g
/// replaces the current map psi by phi_g o psi. With this order the image is
/// invariant under classical moves, virtual moves and F_o in the orientation
/// s_{j} s_{j-1} t_{j} = t_{j-1} s_{j} s_{j-1}, and changes under F_u.
FreeGroupEndo artin_image(const BraidWord& w);

/// Componentwise equality of reduced images. Throws std::invalid_argument on
/// a strand-count mismatch. Decides equality in B_m for classical words and
/// in WB_m for words related by classical, virtual and F_o moves.
bool endo_equal(const FreeGroupEndo& a, const FreeGroupEndo& b);

/// True when every x_k maps to a conjugate u x_j u^-1 and k -> j is a
/// permutation.
bool is_permutation_conjugacy(const FreeGroupEndo& e);

/// Convenience: endo_equal(artin_image(a), artin_image(b)).
bool artin_equal(const BraidWord& a, const BraidWord& b);

}  // namespace fusedlink
