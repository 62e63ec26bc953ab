#pragma once

#include "fusedlink/elements.hpp"
#include "fusedlink/trace_builder.hpp"

namespace fusedlink {

/// Elementary rewrite templates for the pure-braid identities used by the
/// reducer and the lemma checks. Every function either returns a trace that
/// has been applied move by move or extends a TraceBuilder in place; an
/// `offset` is the number of letters preceding the factor being rewritten.

/// s_j s_j S_{j-1} s_j s_j s_{j-1} S_j S_j -> s_j s_{j-1} s_{j-1} S_j
/// (one M3, one R3, two cancellations). Requires 2 <= j <= m-1.
RewriteTrace pfa_trace(int j, int m);

/// A_{i,j} from its Left spelling to its Right spelling (R2, R3, FAR only).
RewriteTrace left_to_right_trace(int i, int j, int m);
void left_to_right(TraceBuilder& tb, int offset, int i, int j);
void right_to_left(TraceBuilder& tb, int offset, int i, int j);

/// For A = A^L_{k,top} at `offset` immediately followed by sigma_l^e with
/// k < l < top - 1, moves the letter in front of A.
void commute_letter_past_A(TraceBuilder& tb, int offset, int k, int top);

/// A_{j,j+1} A_{i,j+1} A_{j,j+1}^-1 -> A_{i,j+1} with Right spellings,
/// in five segments (FAR, pfa, FAR, Left-to-Right inverse, Left-to-Right).
/// Requires 1 <= i < j and j + 1 <= m.
struct CentralTrace {
  RewriteTrace unfold;   // s_j^2 A^R_{i,j+1} s_j^-2 -> B^-1 (pfa start) B
  RewriteTrace pfa;      // pfa rewrite inside the conjugation by B = B_{i,j-1}
  RewriteTrace refold;   // -> s_j A^R_{i,j} S_j
  RewriteTrace to_left;  // -> A^L_{i,j+1}
  RewriteTrace to_right; // -> A^R_{i,j+1}
  RewriteTrace whole() const;
};
CentralTrace central_trace(int i, int j, int m);

/// A^R_{i,j+1}^e t_j -> t_j A^R_{i,j}^e for e = +1 or -1, using F_O and M1.
/// Requires 1 <= i <= j-1 and j + 1 <= m.
RewriteTrace tau_slide_trace(int i, int j, int m, int exponent);

/// Concatenation of traces with matching ends.
RewriteTrace chain(std::initializer_list<const RewriteTrace*> parts);

}  // namespace fusedlink
