#include "fusedlink/topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fusedlink/errors.hpp"

namespace fusedlink {

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(size)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p(0);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out(size());
  for (int p = 1; p <= size(); ++p) out.images_[static_cast<std::size_t>(p - 1)] = next((*this)(p));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (int p = 1; p <= size(); ++p) out.images_[static_cast<std::size_t>((*this)(p) - 1)] = p;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

void Permutation::append_transposition(int p) {
  for (auto& v : images_) {
    if (v == p) v = p + 1;
    else if (v == p + 1) v = p;
  }
}

bool SquareMatrix::is_symmetric() const noexcept {
  for (int r = 1; r <= n_; ++r)
    for (int c = r + 1; c <= n_; ++c)
      if (values_[index(r, c)] != values_[index(c, r)]) return false;
  return true;
}

bool SquareMatrix::has_zero_diagonal() const noexcept {
  for (int r = 1; r <= n_; ++r)
    if (values_[index(r, r)] != 0) return false;
  return true;
}

SquareMatrix SquareMatrix::relabeled(const std::vector<int>& labels) const {
  if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("labeling size mismatch");
  SquareMatrix out(n_);
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      out.at(a, b) = at(labels[static_cast<std::size_t>(a - 1)], labels[static_cast<std::size_t>(b - 1)]);
  return out;
}

Permutation permutation_of(const BraidWord& w) {
  // Track which strand sits at each position, then invert.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);
  for (const auto& g : w.letters()) {
    std::swap(at[static_cast<std::size_t>(g.index() - 1)], at[static_cast<std::size_t>(g.index())]);
  }
  std::vector<int> images(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) {
    images[static_cast<std::size_t>(at[pos] - 1)] = static_cast<int>(pos + 1);
  }
  return Permutation::from_images(std::move(images));
}

ComponentAssignment closure_components(const BraidWord& w) {
  const Permutation perm = permutation_of(w);
  ComponentAssignment out;
  out.strands = w.strands();
  out.component_of.assign(static_cast<std::size_t>(w.strands()), 0);
  int next = 0;
  for (int start = 1; start <= w.strands(); ++start) {
    if (out.component_of[static_cast<std::size_t>(start - 1)] != 0) continue;
    ++next;
    for (int p = start; out.component_of[static_cast<std::size_t>(p - 1)] == 0; p = perm(p)) {
      out.component_of[static_cast<std::size_t>(p - 1)] = next;
    }
  }
  out.components = next;
  return out;
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

SquareMatrix strand_crossing_sums(const BraidWord& w) {
  SquareMatrix sums(w.strands());
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);
  for (const auto& g : w.letters()) {
    auto lo = static_cast<std::size_t>(g.index() - 1);
    if (g.is_classical()) {
      sums.at(at[lo], at[lo + 1]) += g.sign();
      sums.at(at[lo + 1], at[lo]) += g.sign();
    }
    std::swap(at[lo], at[lo + 1]);
  }
  return sums;
}

CrossingSumMatrix crossing_sums(const BraidWord& w) {
  const ComponentAssignment comps = closure_components(w);
  const SquareMatrix strands = strand_crossing_sums(w);
  CrossingSumMatrix out(comps.components);
  for (int a = 1; a <= w.strands(); ++a) {
    for (int b = 1; b <= w.strands(); ++b) {
      int ca = comps.of(a);
      int cb = comps.of(b);
      if (ca != cb) out.at(ca, cb) += strands.at(a, b);
    }
  }
  return out;
}

LinkingMatrix linking_matrix(const BraidWord& w) {
  const CrossingSumMatrix sums = crossing_sums(w);
  LinkingMatrix out(sums.size());
  for (int a = 1; a <= sums.size(); ++a) {
    for (int b = 1; b <= sums.size(); ++b) {
      int s = sums.at(a, b);
      if (s % 2 != 0) {
        throw OddLinkingSum("odd signed crossing sum " + std::to_string(s) +
                            " between components " + std::to_string(a) + " and " +
                            std::to_string(b) + " of " + format_word_with_strands(w));
      }
      out.at(a, b) = s / 2;
    }
  }
  return out;
}

Relabeling relabel_minimal(const SquareMatrix& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.size()));
  std::iota(perm.begin(), perm.end(), 1);
  Relabeling best{m, perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    SquareMatrix candidate = m.relabeled(perm);
    if (candidate.row_major() < best.matrix.row_major()) best = {std::move(candidate), perm};
  }
  return best;
}

}  // namespace fusedlink
