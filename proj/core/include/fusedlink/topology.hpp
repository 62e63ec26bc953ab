#pragma once

#include <vector>

#include "fusedlink/braid_word.hpp"

namespace fusedlink {

/// Strand permutation of a braid word.
///
/// Convention (used everywhere in the library): positions are 1-based and
/// `(*this)(p)` is the bottom position reached by the strand that starts at
/// top position p. Letters act left to right, so the permutation of a
/// concatenation u v is `permutation_of(u).then(permutation_of(v))`.
/// Both sigma_i^{+-1} and tau_i act as the transposition of positions i, i+1.
class Permutation {
 public:
  explicit Permutation(int size = 1);
  /// `images[p - 1]` is the image of p; throws unless bijective on 1..size.
  static Permutation from_images(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int p) const { return images_.at(p - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Swap the images of p and p+1 after applying *this (appending a letter).
  void append_transposition(int p);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Closure components: the cycles of the strand permutation. Component ids
/// run 1..n and are assigned in ascending order of the smallest strand in
/// each cycle.
struct ComponentAssignment {
  int strands = 1;
  int components = 1;
  /// component_of[p - 1] is the component id of strand p.
  std::vector<int> component_of;

  int of(int strand) const { return component_of.at(strand - 1); }
  friend bool operator==(const ComponentAssignment&, const ComponentAssignment&) = default;
};

/// Dense square integer matrix with 1-based accessors.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n = 0) : n_(n), values_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  int at(int r, int c) const { return values_.at(index(r, c)); }
  int& at(int r, int c) { return values_.at(index(r, c)); }
  const std::vector<int>& row_major() const noexcept { return values_; }

  bool is_symmetric() const noexcept;
  bool has_zero_diagonal() const noexcept;
  /// Relabeled copy: result(a, b) = (*this)(labels[a-1], labels[b-1]).
  SquareMatrix relabeled(const std::vector<int>& labels) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(c - 1);
  }

  int n_;
  std::vector<int> values_;
};

/// Pairwise linking numbers of closure components (symmetric, zero diagonal).
struct LinkingMatrix : SquareMatrix {
  using SquareMatrix::SquareMatrix;
  explicit LinkingMatrix(SquareMatrix m) : SquareMatrix(std::move(m)) {}
};

/// Signed count of classical crossings between each pair of closure
/// components, i.e. twice the linking number. Always defined, also for words
/// with virtual crossings where the count may be odd.
struct CrossingSumMatrix : SquareMatrix {
  using SquareMatrix::SquareMatrix;
  explicit CrossingSumMatrix(SquareMatrix m) : SquareMatrix(std::move(m)) {}
};

Permutation permutation_of(const BraidWord& w);
ComponentAssignment closure_components(const BraidWord& w);
bool is_pure(const BraidWord& w);

CrossingSumMatrix crossing_sums(const BraidWord& w);
/// Signed classical crossing counts between strands, labelled by starting
/// position (m x m, symmetric, zero diagonal). Invariant under every
/// word-level catalog move.
SquareMatrix strand_crossing_sums(const BraidWord& w);
/// Half of crossing_sums. Throws OddLinkingSum if some between-component sum
/// is odd, which cannot happen for classical words.
LinkingMatrix linking_matrix(const BraidWord& w);

struct Relabeling {
  SquareMatrix matrix;
  /// labels[k - 1] is the original index that receives canonical label k.
  std::vector<int> labels;
};

/// Simultaneous row/column permutation making the matrix lexicographically
/// minimal in row-major order. Among minimisers the lexicographically first
/// permutation is returned, so the identity wins whenever it is minimal.
/// Cost is n! matrix comparisons.
Relabeling relabel_minimal(const SquareMatrix& m);

}  // namespace fusedlink
