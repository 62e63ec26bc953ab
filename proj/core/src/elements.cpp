#include "fusedlink/elements.hpp"

#include <stdexcept>
#include <string>

#include "fusedlink/errors.hpp"
#include "fusedlink/topology.hpp"

namespace fusedlink {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BraidWord build_B(int i, int j, int m) {
  require(1 <= i && i <= j && j <= m,
          "B_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range for " +
              std::to_string(m) + " strands");
  std::vector<Generator> out;
  for (int k = j - 1; k >= i; --k) out.push_back(Generator::sigma(k));
  return BraidWord(m, std::move(out));
}

BraidWord build_A(int i, int j, int m, AForm form) {
  require(1 <= i && i < j && j <= m,
          "A_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range for " +
              std::to_string(m) + " strands");
  std::vector<Generator> out;
  if (form == AForm::Left) {
    for (int k = j - 1; k > i; --k) out.push_back(Generator::sigma(k));
    out.push_back(Generator::sigma(i));
    out.push_back(Generator::sigma(i));
    for (int k = i + 1; k <= j - 1; ++k) out.push_back(Generator::sigma(k, -1));
  } else {
    for (int k = i; k < j - 1; ++k) out.push_back(Generator::sigma(k, -1));
    out.push_back(Generator::sigma(j - 1));
    out.push_back(Generator::sigma(j - 1));
    for (int k = j - 2; k >= i; --k) out.push_back(Generator::sigma(k));
  }
  return BraidWord(m, std::move(out));
}

BraidWord build_A_power(int i, int j, int m, int k, AForm form) {
  return power(build_A(i, j, m, form), k);
}

int delta(const BraidWord& w, int i, int j) {
  if (!w.is_classical()) throw NonClassicalInput("delta is defined on classical pure braids");
  require(1 <= i && i < j && j <= w.strands(), "delta indices out of range");
  require(is_pure(w), "delta requires a pure braid");
  return linking_matrix(w).at(i, j);
}

}  // namespace fusedlink
