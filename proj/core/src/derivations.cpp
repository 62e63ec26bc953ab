#include "fusedlink/derivations.hpp"

#include <stdexcept>
#include <string>

#include "fusedlink/errors.hpp"

namespace fusedlink {

namespace {

Generator s(int i) { return Generator::sigma(i, 1); }
Generator S(int i) { return Generator::sigma(i, -1); }
Generator t(int i) { return Generator::tau(i); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

RewriteTrace pfa_trace(int j, int m) {
  require(j >= 2 && j <= m - 1, "pfa_trace: need 2 <= j <= m-1");
  TraceBuilder tb(BraidWord(m, {s(j), s(j), S(j - 1), s(j), s(j), s(j - 1), S(j), S(j)}));
  const std::vector<Generator> m3_lhs{s(j), S(j - 1), s(j)};
  const std::vector<Generator> m3_rhs{s(j - 1), S(j), s(j - 1)};
  const std::vector<Generator> r3_lhs{s(j), s(j - 1), S(j)};
  const std::vector<Generator> r3_rhs{S(j - 1), s(j), s(j - 1)};
  tb.rewrite(MoveKind::M3, 2, m3_lhs, m3_rhs);
  tb.rewrite(MoveKind::R3, 5, r3_lhs, r3_rhs);
  tb.cancel(4).cancel(3);
  return std::move(tb).take();
}

void left_to_right(TraceBuilder& tb, int offset, int i, int j) {
  if (j - i < 2) return;
  const int d = j - i - 2;
  const int core = offset + d + 1;
  const std::vector<Generator> pair{S(i + 1)};
  const std::vector<Generator> lhs{s(i + 1), s(i), S(i + 1)};
  const std::vector<Generator> rhs{S(i), s(i + 1), s(i)};
  tb.insert_cancelling(core + 2, pair);
  tb.rewrite(MoveKind::R3, core, lhs, rhs);
  tb.rewrite(MoveKind::R3, core + 3, lhs, rhs);
  tb.cancel(core + 2);
  tb.move_letter(core, offset + 1);
  tb.move_letter(core + 3, core + 3 + d);
  left_to_right(tb, offset + 1, i + 1, j);
}

RewriteTrace left_to_right_trace(int i, int j, int m) {
  TraceBuilder tb(build_A(i, j, m, AForm::Left));
  left_to_right(tb, 0, i, j);
  return std::move(tb).take();
}

void right_to_left(TraceBuilder& tb, int offset, int i, int j) {
  tb.embed(invert_trace(left_to_right_trace(i, j, tb.current().strands())), offset);
}

void commute_letter_past_A(TraceBuilder& tb, int offset, int k, int top) {
  const int j = top - 1;
  const int len = 2 * (j - k) + 2;
  const Generator g = tb.current()[static_cast<std::size_t>(offset + len)];
  const int l = g.index();
  const int e = g.sign();
  if (!g.is_classical() || l <= k || l >= j) {
    throw InvalidMove("commute_letter_past_A: letter " + to_token(g) + " does not commute with A");
  }
  // A = D s_k s_k D^-1 with D = s_j ... s_{k+1}; D^-1 = S_{k+1} ... S_j.
  int pos = offset + len + 1;
  const int inv_l = offset + (j - k) + 2 + (l - k);  // position of S_l in D^-1
  tb.move_letter(pos, inv_l + 2);
  const std::vector<Generator> a_lhs{S(l), S(l + 1), Generator::sigma(l, e)};
  const std::vector<Generator> a_rhs{Generator::sigma(l + 1, e), S(l), S(l + 1)};
  tb.rewrite(MoveKind::R3, inv_l, a_lhs, a_rhs);
  const int fwd_l = offset + (j - l);  // position of s_{l+1} in D
  tb.move_letter(inv_l, fwd_l + 2);
  const std::vector<Generator> b_lhs{s(l + 1), s(l), Generator::sigma(l + 1, e)};
  const std::vector<Generator> b_rhs{Generator::sigma(l, e), s(l + 1), s(l)};
  tb.rewrite(MoveKind::R3, fwd_l, b_lhs, b_rhs);
  tb.move_letter(fwd_l, offset + 1);
}

RewriteTrace CentralTrace::whole() const { return chain({&unfold, &pfa, &refold, &to_left, &to_right}); }

CentralTrace central_trace(int i, int j, int m) {
  require(i >= 1 && i < j && j + 1 <= m, "central_trace: need 1 <= i < j, j+1 <= m");
  CentralTrace out;
  const BraidWord a = build_A(i, j + 1, m, AForm::Right);
  const BraidWord start = concat(std::vector<BraidWord>{BraidWord(m, {s(j), s(j)}), a, BraidWord(m, {S(j), S(j)})});
  const int b = j - 1 - i;  // |B_{i,j-1}|

  // s_j s_j [B^-1 S_{j-1} s_j s_j s_{j-1} B] S_j S_j: carry B^-1 to the front
  // and B to the back.
  TraceBuilder unfold(start);
  for (int q = 0; q < b; ++q) unfold.move_letter(3 + q, 1 + q);
  const int tail = static_cast<int>(start.size()) - 1 - b;  // first letter of B
  for (int q = b - 1; q >= 0; --q) unfold.move_letter(tail + q, static_cast<int>(start.size()) - (b - 1 - q));
  out.unfold = std::move(unfold).take();

  TraceBuilder pfa(out.unfold.end);
  pfa.embed(pfa_trace(j, m), b);
  out.pfa = std::move(pfa).take();

  // B^-1 s_j s_{j-1} s_{j-1} S_j B -> s_j B^-1 s_{j-1}^2 B S_j
  TraceBuilder refold(out.pfa.end);
  refold.move_letter(b + 1, 1);
  refold.move_letter(b + 4, 2 * b + 4);
  out.refold = std::move(refold).take();

  TraceBuilder to_left(out.refold.end);
  right_to_left(to_left, 1, i, j);
  out.to_left = std::move(to_left).take();
  if (!(out.to_left.end == build_A(i, j + 1, m, AForm::Left))) {
    throw std::logic_error("central_trace: refolded word is not A^L");
  }

  TraceBuilder to_right(out.to_left.end);
  left_to_right(to_right, 0, i, j + 1);
  out.to_right = std::move(to_right).take();
  return out;
}

RewriteTrace tau_slide_trace(int i, int j, int m, int exponent) {
  require(i >= 1 && i <= j - 1 && j + 1 <= m, "tau_slide_trace: need 1 <= i <= j-1, j+1 <= m");
  require(exponent == 1 || exponent == -1, "tau_slide_trace: exponent must be +1 or -1");
  const BraidWord a = build_A(i, j + 1, m, AForm::Right);
  const BraidWord tau(m, {t(j)});
  if (exponent == 1) {
    TraceBuilder tb(concat(a, tau));
    const int b = j - 1 - i;  // |B_{i,j-1}|
    const int len = static_cast<int>(a.size());
    tb.move_letter(len + 1, len + 1 - b);
    const int base = j - i;  // position of S_{j-1}
    const std::vector<Generator> fo_lhs{s(j), s(j - 1), t(j)};
    const std::vector<Generator> fo_rhs{t(j - 1), s(j), s(j - 1)};
    tb.rewrite(MoveKind::F_O, base + 2, fo_lhs, fo_rhs);
    const std::vector<Generator> m1_lhs{S(j - 1), s(j), t(j - 1)};
    const std::vector<Generator> m1_rhs{t(j), s(j - 1), S(j)};
    tb.rewrite(MoveKind::M1, base, m1_lhs, m1_rhs);
    tb.cancel(base + 2);
    tb.move_letter(base, 1);
    return std::move(tb).take();
  }
  // A^-1 t -> A^-1 t A' A'^-1 -> A^-1 A t A'^-1 -> t A'^-1
  const BraidWord a_inv = invert(a);
  const BraidWord small = build_A(i, j, m, AForm::Right);
  TraceBuilder tb(concat(a_inv, tau));
  const int n = static_cast<int>(a.size());
  tb.insert_cancelling(n + 2, small);
  tb.embed(invert_trace(tau_slide_trace(i, j, m, 1)), n);
  for (int q = n; q >= 1; --q) tb.cancel(q);
  return std::move(tb).take();
}

RewriteTrace chain(std::initializer_list<const RewriteTrace*> parts) {
  if (parts.size() == 0) throw std::invalid_argument("chain: no traces");
  TraceBuilder tb((*parts.begin())->start);
  for (const RewriteTrace* p : parts) tb.append(*p);
  return std::move(tb).take();
}

}  // namespace fusedlink
