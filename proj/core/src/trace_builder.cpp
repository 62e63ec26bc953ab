#include "fusedlink/trace_builder.hpp"

#include <algorithm>
#include <string>

#include "fusedlink/errors.hpp"

namespace fusedlink {

namespace {

MoveApplication word_move(MoveKind kind, int pos, int i, int j, int variant) {
  MoveApplication a;
  a.kind = kind;
  a.pos = pos;
  a.i = i;
  a.j = j;
  a.variant = variant;
  return a;
}

MoveApplication pair_deletion(Generator left, int pos) {
  if (left.is_virtual()) return word_move(MoveKind::V2, pos, left.index(), 0, 0);
  return word_move(MoveKind::R2, pos, left.index(), 0, left.sign() > 0 ? 0 : 1);
}

MoveApplication pair_insertion(Generator left, int pos) {
  if (left.is_virtual()) return word_move(MoveKind::V2, pos, left.index(), 0, 1);
  return word_move(MoveKind::R2, pos, left.index(), 0, left.sign() > 0 ? 2 : 3);
}

}  // namespace

TraceBuilder::TraceBuilder(BraidWord start) : trace_{start, {}, start} {}

TraceBuilder& TraceBuilder::apply(const MoveApplication& a) {
  trace_.end = apply_move(trace_.end, a);
  trace_.moves.push_back(a);
  return *this;
}

TraceBuilder& TraceBuilder::rewrite(MoveKind kind, int pos, std::span<const Generator> lhs,
                                    std::span<const Generator> rhs) {
  const int m = current().strands();
  for (int i = 1; i <= m - 1; ++i) {
    for (int j = 0; j <= m - 1; ++j) {
      if (!indices_admissible(kind, i, j)) continue;
      const auto variants = rewrite_variants(kind, i, j);
      for (std::size_t v = 0; v < variants.size(); ++v) {
        if (std::equal(lhs.begin(), lhs.end(), variants[v].lhs.begin(), variants[v].lhs.end()) &&
            std::equal(rhs.begin(), rhs.end(), variants[v].rhs.begin(), variants[v].rhs.end())) {
          return apply(word_move(kind, pos, i, j, static_cast<int>(v)));
        }
      }
    }
  }
  BraidWord l(m, {lhs.begin(), lhs.end()});
  BraidWord r(m, {rhs.begin(), rhs.end()});
  throw InvalidMove(std::string(to_string(kind)) + " has no variant rewriting " + format_word(l) +
                    " to " + format_word(r));
}

TraceBuilder& TraceBuilder::rewrite(MoveKind kind, int pos, std::string_view lhs,
                                    std::string_view rhs) {
  const auto l = letters_of(lhs);
  const auto r = letters_of(rhs);
  return rewrite(kind, pos, l, r);
}

TraceBuilder& TraceBuilder::insert_cancelling(int pos, std::span<const Generator> u) {
  for (std::size_t k = 0; k < u.size(); ++k) apply(pair_insertion(u[k], pos + static_cast<int>(k)));
  return *this;
}

TraceBuilder& TraceBuilder::insert_cancelling(int pos, const BraidWord& u) {
  return insert_cancelling(pos, std::span<const Generator>(u.letters()));
}

TraceBuilder& TraceBuilder::cancel(int pos) {
  if (pos < 1 || static_cast<std::size_t>(pos) > current().size()) {
    throw InvalidMove("cancel: position " + std::to_string(pos) + " out of range");
  }
  return apply(pair_deletion(current()[static_cast<std::size_t>(pos - 1)], pos));
}

TraceBuilder& TraceBuilder::swap(int pos) {
  if (pos < 1 || static_cast<std::size_t>(pos) + 1 > current().size()) {
    throw InvalidMove("swap: position " + std::to_string(pos) + " out of range");
  }
  const Generator a = current()[static_cast<std::size_t>(pos - 1)];
  const Generator b = current()[static_cast<std::size_t>(pos)];
  auto type = [](Generator g) { return g.is_virtual() ? 2 : (g.sign() > 0 ? 0 : 1); };
  return apply(word_move(MoveKind::FAR, pos, a.index(), b.index(), 3 * type(a) + type(b)));
}

TraceBuilder& TraceBuilder::move_letter(int from, int to) {
  for (int p = from; p < to; ++p) swap(p);
  for (int p = from; p > to; --p) swap(p - 1);
  return *this;
}

TraceBuilder& TraceBuilder::free_reduce() {
  return append(free_reduction_trace(current()));
}

TraceBuilder& TraceBuilder::embed(const RewriteTrace& t, int offset) {
  const auto& letters = current().letters();
  const auto start = static_cast<std::size_t>(offset);
  if (offset < 0 || start + t.start.size() > letters.size() ||
      !std::equal(t.start.letters().begin(), t.start.letters().end(),
                  letters.begin() + static_cast<std::ptrdiff_t>(start))) {
    throw InvalidMove("embed: trace start " + format_word(t.start) + " not found at offset " +
                      std::to_string(offset));
  }
  for (MoveApplication a : t.moves) {
    if (!is_word_level(a.kind)) throw InvalidMove("embed: closure-level move in embedded trace");
    a.pos += offset;
    apply(a);
  }
  return *this;
}

TraceBuilder& TraceBuilder::append(const RewriteTrace& t) {
  if (!(t.start == current())) {
    throw InvalidMove("append: trace starts at " + format_word_with_strands(t.start) +
                      " but the current word is " + format_word_with_strands(current()));
  }
  for (const auto& a : t.moves) apply(a);
  return *this;
}

TraceBuilder& TraceBuilder::conjugate(std::span<const Generator> c) {
  MoveApplication a;
  a.kind = MoveKind::CONJ;
  a.conjugator.assign(c.begin(), c.end());
  return apply(a);
}

TraceBuilder& TraceBuilder::cyclic(int direction) {
  MoveApplication a;
  a.kind = MoveKind::CYCLIC;
  a.sign = direction < 0 ? -1 : 1;
  a.pos = direction < 0 ? static_cast<int>(current().size()) : 1;
  return apply(a);
}

TraceBuilder& TraceBuilder::destabilize() {
  if (current().empty()) throw InvalidMove("destabilize: empty word");
  const Generator last = current().letters().back();
  MoveApplication a;
  a.kind = last.is_virtual() ? MoveKind::DESTAB_V : MoveKind::DESTAB_C;
  a.sign = last.sign();
  a.pos = static_cast<int>(current().size());
  return apply(a);
}

RewriteTrace free_reduction_trace(const BraidWord& w) {
  RewriteTrace t{w, {}, BraidWord(w.strands())};
  std::vector<Generator> stack;
  for (const Generator& g : w.letters()) {
    if (!stack.empty() && cancels(stack.back(), g)) {
      t.moves.push_back(pair_deletion(stack.back(), static_cast<int>(stack.size())));
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  t.end = BraidWord(w.strands(), std::move(stack));
  return t;
}

std::vector<Generator> letters_of(std::string_view tokens) { return parse_word(tokens).letters(); }

}  // namespace fusedlink
