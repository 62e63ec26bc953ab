#include "fusedlink/artin.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fusedlink {

FreeWord::FreeWord(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int x : letters) push(x);
}

void FreeWord::push(int letter) {
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

void FreeWord::append(const FreeWord& w) {
  for (int x : w.letters_) push(x);
}

void FreeWord::append_inverse(const FreeWord& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.append_inverse(*this);
  return out;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

FreeGroupEndo FreeGroupEndo::identity(int strands) {
  FreeGroupEndo e;
  e.strands = strands;
  for (int k = 1; k <= strands; ++k) e.images.push_back(FreeWord({k}));
  return e;
}

namespace {

// Images of x_i and x_{i+1} under a single letter; all other generators are fixed.
struct LetterAction {
  int i;
  FreeWord low;   // image of x_i
  FreeWord high;  // image of x_{i+1}
};

LetterAction action_of(Generator g) {
  const int i = g.index();
  if (g.is_virtual()) return {i, FreeWord({i + 1}), FreeWord({i})};
  if (g.sign() > 0) return {i, FreeWord({i, i + 1, -i}), FreeWord({i})};
  return {i, FreeWord({i + 1}), FreeWord({-(i + 1), i, i + 1})};
}

FreeWord substitute(const FreeWord& w, const LetterAction& a) {
  FreeWord out;
  for (int x : w.letters()) {
    const int k = std::abs(x);
    if (k == a.i || k == a.i + 1) {
      const FreeWord& img = k == a.i ? a.low : a.high;
      if (x > 0) out.append(img);
      else out.append_inverse(img);
    } else {
      out.push(x);
    }
  }
  return out;
}

}  // namespace

FreeGroupEndo artin_image(const BraidWord& w) {
  FreeGroupEndo e = FreeGroupEndo::identity(w.strands());
  for (const auto& g : w.letters()) {
    const LetterAction a = action_of(g);
    for (auto& img : e.images) img = substitute(img, a);
  }
  return e;
}

bool endo_equal(const FreeGroupEndo& a, const FreeGroupEndo& b) {
  if (a.strands != b.strands) throw std::invalid_argument("free group rank mismatch");
  return a.images == b.images;
}

bool is_permutation_conjugacy(const FreeGroupEndo& e) {
  std::vector<bool> used(static_cast<std::size_t>(e.strands) + 1, false);
  for (const auto& img : e.images) {
    const auto& l = img.letters();
    if (l.size() % 2 == 0) return false;
    const std::size_t mid = l.size() / 2;
    if (l[mid] <= 0) return false;
    for (std::size_t k = 0; k < mid; ++k) {
      if (l[k] != -l[l.size() - 1 - k]) return false;
    }
    const auto target = static_cast<std::size_t>(l[mid]);
    if (target > static_cast<std::size_t>(e.strands) || used[target]) return false;
    used[target] = true;
  }
  return true;
}

bool artin_equal(const BraidWord& a, const BraidWord& b) {
  return endo_equal(artin_image(a), artin_image(b));
}

}  // namespace fusedlink
