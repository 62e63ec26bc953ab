#pragma once

#include "fusedlink/braid_word.hpp"

namespace fusedlink {

/// The two standard spellings of the pure braid generator A_{i,j}:
///   Left:  s_{j-1} ... s_{i+1} s_i s_i S_{i+1} ... S_{j-1}
///   Right: S_i ... S_{j-2} s_{j-1} s_{j-1} s_{j-2} ... s_i
/// They are equal in B_m; the Right spelling is B_{i,j-1}^-1 A_{j-1,j} B_{i,j-1}.
enum class AForm { Left, Right };

/// B_{i,j} = s_{j-1} ... s_{i+1} s_i on m strands; empty when i == j.
/// Requires 1 <= i <= j <= m.
BraidWord build_B(int i, int j, int m);

/// A_{i,j} on m strands in the requested spelling. Requires 1 <= i < j <= m.
BraidWord build_A(int i, int j, int m, AForm form);

/// A_{i,j}^k (k may be negative or zero).
BraidWord build_A_power(int i, int j, int m, int k, AForm form);

/// The homomorphism delta_{i,j}: P_m -> Z counting A_{i,j} exponents. For a
/// pure braid each strand is its own closure component, so this is the
/// linking number of strands i and j. Throws NonClassicalInput for words with
/// virtual letters and std::invalid_argument for non-pure words or bad indices.
int delta(const BraidWord& w, int i, int j);

}  // namespace fusedlink
