#include "fusedlink/moves.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

#include "fusedlink/errors.hpp"
#include "fusedlink/topology.hpp"

namespace fusedlink {

namespace {

constexpr std::array<MoveInfo, 17> kCatalog{{
    {MoveKind::R2, "R2", MoveLevel::Word, true, "s_i^e s_i^-e <-> 1"},
    {MoveKind::R3, "R3", MoveLevel::Word, true, "s_i s_j s_i <-> s_j s_i s_j, |i-j|=1"},
    {MoveKind::FAR, "FAR", MoveLevel::Word, true, "g_i h_j <-> h_j g_i, |i-j|>=2"},
    {MoveKind::V2, "V2", MoveLevel::Word, true, "t_i t_i <-> 1"},
    {MoveKind::V3, "V3", MoveLevel::Word, true, "t_i t_j t_i <-> t_j t_i t_j, |i-j|=1"},
    {MoveKind::MIXED, "MIXED", MoveLevel::Word, true, "t_i t_j s_i <-> s_j t_i t_j, |i-j|=1"},
    {MoveKind::F_O, "F_O", MoveLevel::Word, true, "s_i s_j t_i <-> t_j s_i s_j, i=j+1"},
    {MoveKind::F_U, "F_U", MoveLevel::Word, false, "S_i t_j s_i <-> s_j t_i S_j, j=i+1"},
    {MoveKind::M1, "M1", MoveLevel::Word, false, "s_i t_j s_i <-> s_j t_i s_j, |i-j|=1"},
    {MoveKind::M2, "M2", MoveLevel::Word, false, "S_i t_j S_i <-> S_j t_i S_j, |i-j|=1"},
    {MoveKind::M3, "M3", MoveLevel::Word, false, "s_i S_j s_i <-> s_j S_i s_j, |i-j|=1"},
    {MoveKind::CYCLIC, "CYCLIC", MoveLevel::Closure, false, "g w <-> w g"},
    {MoveKind::CONJ, "CONJ", MoveLevel::Closure, false, "w <-> c^-1 w c"},
    {MoveKind::STAB_C, "STAB_C", MoveLevel::Closure, false, "w (m) -> w s_m^e (m+1)"},
    {MoveKind::DESTAB_C, "DESTAB_C", MoveLevel::Closure, false, "w s_m^e (m+1) -> w (m)"},
    {MoveKind::STAB_V, "STAB_V", MoveLevel::Closure, false, "w (m) -> w t_m (m+1)"},
    {MoveKind::DESTAB_V, "DESTAB_V", MoveLevel::Closure, false, "w t_m (m+1) -> w (m)"},
}};

using Letters = std::vector<Generator>;

Generator s(int i) { return Generator::sigma(i, 1); }
Generator S(int i) { return Generator::sigma(i, -1); }
Generator t(int i) { return Generator::tau(i); }

Letters inverse_letters(const Letters& w) {
  Letters out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// Three-letter relation L = R for a relator kind.
std::pair<Letters, Letters> base_relation(MoveKind kind, int i, int j) {
  switch (kind) {
    case MoveKind::R3: return {{s(i), s(j), s(i)}, {s(j), s(i), s(j)}};
    case MoveKind::V3: return {{t(i), t(j), t(i)}, {t(j), t(i), t(j)}};
    case MoveKind::MIXED: return {{t(i), t(j), s(i)}, {s(j), t(i), t(j)}};
    case MoveKind::F_O: return {{s(i), s(j), t(i)}, {t(j), s(i), s(j)}};
    case MoveKind::F_U: return {{S(i), t(j), s(i)}, {s(j), t(i), S(j)}};
    case MoveKind::M1: return {{s(i), t(j), s(i)}, {s(j), t(i), s(j)}};
    case MoveKind::M2: return {{S(i), t(j), S(i)}, {S(j), t(i), S(j)}};
    case MoveKind::M3: return {{s(i), S(j), s(i)}, {s(j), S(i), s(j)}};
    default: throw std::logic_error("not a relator kind");
  }
}

Generator typed_letter(int type, int index) {
  switch (type) {
    case 0: return s(index);
    case 1: return S(index);
    default: return t(index);
  }
}

std::string letters_text(const Letters& l) {
  std::string out;
  for (const auto& g : l) {
    if (!out.empty()) out += ' ';
    out += to_token(g);
  }
  return out.empty() ? "<empty>" : out;
}

void check_word_move_indices(const MoveApplication& a, int strands) {
  if (!indices_admissible(a.kind, a.i, a.j)) {
    throw InvalidMove(std::string(to_string(a.kind)) + ": inadmissible indices (" +
                      std::to_string(a.i) + "," + std::to_string(a.j) + ")");
  }
  if (std::max(a.i, a.j) > strands - 1) {
    throw InvalidMove(std::string(to_string(a.kind)) + ": indices exceed " +
                      std::to_string(strands) + " strands");
  }
}

Rewrite word_rewrite(const MoveApplication& a, int strands) {
  check_word_move_indices(a, strands);
  auto variants = rewrite_variants(a.kind, a.i, a.j);
  if (a.variant < 0 || a.variant >= static_cast<int>(variants.size())) {
    throw InvalidMove(std::string(to_string(a.kind)) + ": variant " + std::to_string(a.variant) +
                      " out of range");
  }
  return variants[static_cast<std::size_t>(a.variant)];
}

bool matches_at(const Letters& word, std::size_t offset, const Letters& pattern) {
  if (offset + pattern.size() > word.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<std::ptrdiff_t>(offset));
}

int only_index_count(const BraidWord& w, int index) {
  return static_cast<int>(std::count_if(w.letters().begin(), w.letters().end(),
                                        [&](const Generator& g) { return g.index() == index; }));
}

MoveApplication closure_move(MoveKind kind, int pos, int sign = 1) {
  MoveApplication a;
  a.kind = kind;
  a.pos = pos;
  a.sign = sign;
  return a;
}

void require_letters_fit(const Letters& letters, int strands) {
  for (const auto& g : letters) {
    if (g.index() < 1 || g.index() > strands - 1) {
      throw InvalidMove("CONJ: letter " + to_token(g) + " out of range");
    }
  }
}

}  // namespace

std::span<const MoveInfo> move_catalog() { return kCatalog; }

const MoveInfo& move_info(MoveKind kind) { return kCatalog.at(static_cast<std::size_t>(kind)); }

std::string_view to_string(MoveKind kind) { return move_info(kind).name; }

std::optional<MoveKind> move_kind_from_string(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

bool is_word_level(MoveKind kind) { return move_info(kind).level == MoveLevel::Word; }

bool indices_admissible(MoveKind kind, int i, int j) {
  if (i < 1) return false;
  switch (kind) {
    case MoveKind::R2:
    case MoveKind::V2: return j == 0;
    case MoveKind::FAR: return j >= 1 && std::abs(i - j) >= 2;
    case MoveKind::F_O: return j >= 1 && i == j + 1;
    case MoveKind::R3:
    case MoveKind::V3:
    case MoveKind::MIXED:
    case MoveKind::F_U:
    case MoveKind::M1:
    case MoveKind::M2:
    case MoveKind::M3: return j == i + 1;
    default: return false;
  }
}

std::vector<Rewrite> rewrite_variants(MoveKind kind, int i, int j) {
  if (!indices_admissible(kind, i, j)) {
    throw std::invalid_argument(std::string(to_string(kind)) + ": inadmissible indices");
  }
  std::vector<Rewrite> out;
  switch (kind) {
    case MoveKind::R2:
      out.push_back({{s(i), S(i)}, {}});
      out.push_back({{S(i), s(i)}, {}});
      out.push_back({{}, {s(i), S(i)}});
      out.push_back({{}, {S(i), s(i)}});
      return out;
    case MoveKind::V2:
      out.push_back({{t(i), t(i)}, {}});
      out.push_back({{}, {t(i), t(i)}});
      return out;
    case MoveKind::FAR:
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          out.push_back({{typed_letter(a, i), typed_letter(b, j)}, {typed_letter(b, j), typed_letter(a, i)}});
      return out;
    default: break;
  }
  const auto [lhs, rhs] = base_relation(kind, i, j);
  Letters relator = lhs;
  const Letters rhs_inv = inverse_letters(rhs);
  relator.insert(relator.end(), rhs_inv.begin(), rhs_inv.end());
  for (const Letters& cyc : {relator, inverse_letters(relator)}) {
    const std::size_t n = cyc.size();
    for (std::size_t r = 0; r < n; ++r) {
      Letters rotated(n);
      for (std::size_t k = 0; k < n; ++k) rotated[k] = cyc[(r + k) % n];
      Rewrite rw{Letters(rotated.begin(), rotated.begin() + 3),
                 inverse_letters(Letters(rotated.begin() + 3, rotated.end()))};
      if (std::find(out.begin(), out.end(), rw) == out.end()) out.push_back(std::move(rw));
    }
  }
  return out;
}

std::string describe(const MoveApplication& a) {
  std::string out(to_string(a.kind));
  out += "@" + std::to_string(a.pos);
  if (is_word_level(a.kind)) {
    out += "(i=" + std::to_string(a.i);
    if (a.j != 0) out += ",j=" + std::to_string(a.j);
    out += ",v=" + std::to_string(a.variant) + ")";
  } else if (a.kind == MoveKind::CONJ) {
    out += "(" + letters_text(a.conjugator) + ")";
  } else if (a.kind == MoveKind::CYCLIC || a.kind == MoveKind::STAB_C || a.kind == MoveKind::DESTAB_C) {
    out += a.sign > 0 ? "(+)" : "(-)";
  }
  return out;
}

RuleTable::RuleTable(int strands, std::span<const MoveKind> kinds) : strands_(strands) {
  by_first_.resize(static_cast<std::size_t>(3 * std::max(strands, 1)));
  auto allowed = [&](MoveKind k) {
    return kinds.empty() || std::find(kinds.begin(), kinds.end(), k) != kinds.end();
  };
  for (const auto& info : kCatalog) {
    if (info.level != MoveLevel::Word || !allowed(info.kind)) continue;
    for (int i = 1; i <= strands - 1; ++i) {
      for (int j = 0; j <= strands - 1; ++j) {
        if (!indices_admissible(info.kind, i, j)) continue;
        auto variants = rewrite_variants(info.kind, i, j);
        for (std::size_t v = 0; v < variants.size(); ++v) {
          rules_.push_back({info.kind, i, j, static_cast<int>(v), std::move(variants[v])});
        }
      }
    }
  }
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& lhs = rules_[r].rewrite.lhs;
    if (lhs.empty()) insertions_.push_back(r);
    else by_first_[slot(lhs.front())].push_back(r);
  }
}

std::size_t RuleTable::slot(Generator g) const {
  const std::size_t type = g.is_virtual() ? 2 : (g.sign() > 0 ? 0 : 1);
  return 3 * static_cast<std::size_t>(g.index() - 1) + type;
}

const std::vector<std::size_t>& RuleTable::starting_with(Generator g) const {
  return by_first_.at(slot(g));
}

std::vector<MoveApplication> applicable_moves(const BraidWord& w, MoveLevel level) {
  const RuleTable table(w.strands());
  const Letters& letters = w.letters();
  std::vector<MoveApplication> out;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    for (std::size_t r : table.starting_with(letters[p])) {
      const auto& rule = table.rules()[r];
      if (matches_at(letters, p, rule.rewrite.lhs)) {
        MoveApplication a;
        a.kind = rule.kind;
        a.pos = static_cast<int>(p + 1);
        a.i = rule.i;
        a.j = rule.j;
        a.variant = rule.variant;
        out.push_back(a);
      }
    }
  }
  if (level == MoveLevel::Closure) {
    const int m = w.strands();
    const int end = static_cast<int>(letters.size());
    if (!letters.empty()) {
      out.push_back(closure_move(MoveKind::CYCLIC, 1, 1));
      out.push_back(closure_move(MoveKind::CYCLIC, end, -1));
      const Generator last = letters.back();
      if (m >= 2 && last.index() == m - 1 && only_index_count(w, m - 1) == 1) {
        if (last.is_virtual()) out.push_back(closure_move(MoveKind::DESTAB_V, end));
        else out.push_back(closure_move(MoveKind::DESTAB_C, end, last.sign()));
      }
    }
    out.push_back(closure_move(MoveKind::STAB_C, end + 1, 1));
    out.push_back(closure_move(MoveKind::STAB_C, end + 1, -1));
    out.push_back(closure_move(MoveKind::STAB_V, end + 1));
    std::stable_sort(out.begin(), out.end(), [](const MoveApplication& a, const MoveApplication& b) {
      return a.pos < b.pos;
    });
  }
  return out;
}

BraidWord apply_move(const BraidWord& w, const MoveApplication& a) {
  const Letters& letters = w.letters();
  const int m = w.strands();
  if (is_word_level(a.kind)) {
    const Rewrite rw = word_rewrite(a, m);
    const auto offset = static_cast<std::size_t>(a.pos - 1);
    if (a.pos < 1 || offset + rw.lhs.size() > letters.size() ||
        (rw.lhs.empty() && offset > letters.size())) {
      throw InvalidMove(describe(a) + ": position out of range for word of length " +
                        std::to_string(letters.size()));
    }
    if (!matches_at(letters, offset, rw.lhs)) {
      Letters found(letters.begin() + static_cast<std::ptrdiff_t>(offset),
                    letters.begin() + static_cast<std::ptrdiff_t>(offset + rw.lhs.size()));
      throw InvalidMove(describe(a) + ": expected " + letters_text(rw.lhs) + ", found " +
                        letters_text(found));
    }
    Letters out(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(offset));
    out.insert(out.end(), rw.rhs.begin(), rw.rhs.end());
    out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(offset + rw.lhs.size()),
               letters.end());
    return BraidWord(m, std::move(out));
  }
  switch (a.kind) {
    case MoveKind::CYCLIC: {
      if (letters.empty()) throw InvalidMove("CYCLIC: empty word");
      Letters out = letters;
      if (a.sign > 0) std::rotate(out.begin(), out.begin() + 1, out.end());
      else std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
      return BraidWord(m, std::move(out));
    }
    case MoveKind::CONJ: {
      require_letters_fit(a.conjugator, m);
      Letters out = inverse_letters(a.conjugator);
      out.insert(out.end(), letters.begin(), letters.end());
      out.insert(out.end(), a.conjugator.begin(), a.conjugator.end());
      return BraidWord(m, std::move(out));
    }
    case MoveKind::STAB_C:
    case MoveKind::STAB_V: {
      Letters out = letters;
      out.push_back(a.kind == MoveKind::STAB_C ? Generator::sigma(m, a.sign) : Generator::tau(m));
      return BraidWord(m + 1, std::move(out));
    }
    case MoveKind::DESTAB_C:
    case MoveKind::DESTAB_V: {
      const Generator expected =
          a.kind == MoveKind::DESTAB_C ? Generator::sigma(m - 1, a.sign) : Generator::tau(m - 1);
      if (m < 2 || letters.empty() || letters.back() != expected) {
        throw InvalidMove(describe(a) + ": expected trailing " +
                          (m < 2 ? std::string("letter") : to_token(expected)) + ", found " +
                          (letters.empty() ? std::string("<empty>") : to_token(letters.back())));
      }
      if (only_index_count(w, m - 1) != 1) {
        throw InvalidMove(describe(a) + ": strand " + std::to_string(m) +
                          " is involved in more than the trailing crossing");
      }
      return BraidWord(m - 1, Letters(letters.begin(), letters.end() - 1));
    }
    default: throw std::logic_error("unhandled move kind");
  }
}

namespace {

MoveApplication single_inverse(const BraidWord& w, const MoveApplication& a) {
  MoveApplication inv = a;
  switch (a.kind) {
    case MoveKind::R2: inv.variant = (a.variant + 2) % 4; return inv;
    case MoveKind::V2: inv.variant = 1 - a.variant; return inv;
    case MoveKind::FAR:
      inv.i = a.j;
      inv.j = a.i;
      inv.variant = 3 * (a.variant % 3) + a.variant / 3;
      return inv;
    case MoveKind::CYCLIC:
      inv.sign = -a.sign;
      inv.pos = a.sign > 0 ? static_cast<int>(w.size()) : 1;
      return inv;
    case MoveKind::STAB_C: inv.kind = MoveKind::DESTAB_C; inv.pos = static_cast<int>(w.size()) + 1; return inv;
    case MoveKind::DESTAB_C: inv.kind = MoveKind::STAB_C; inv.pos = static_cast<int>(w.size()); return inv;
    case MoveKind::STAB_V: inv.kind = MoveKind::DESTAB_V; inv.pos = static_cast<int>(w.size()) + 1; return inv;
    case MoveKind::DESTAB_V: inv.kind = MoveKind::STAB_V; inv.pos = static_cast<int>(w.size()); return inv;
    default: break;
  }
  const auto variants = rewrite_variants(a.kind, a.i, a.j);
  const Rewrite& rw = variants.at(static_cast<std::size_t>(a.variant));
  for (std::size_t v = 0; v < variants.size(); ++v) {
    if (variants[v].lhs == rw.rhs && variants[v].rhs == rw.lhs) {
      inv.variant = static_cast<int>(v);
      return inv;
    }
  }
  throw std::logic_error("variant list not closed under reversal");
}

MoveApplication deletion_of(Generator left, int pos) {
  MoveApplication d;
  d.kind = left.is_virtual() ? MoveKind::V2 : MoveKind::R2;
  d.pos = pos;
  d.i = left.index();
  d.variant = left.is_virtual() || left.sign() > 0 ? 0 : 1;
  return d;
}

}  // namespace

std::vector<MoveApplication> inverse_moves(const BraidWord& w, const MoveApplication& a) {
  if (a.kind != MoveKind::CONJ) return {single_inverse(w, a)};
  // c (c^-1 w c) c^-1: cancel the inner pairs at the front, then at the back.
  std::vector<MoveApplication> out;
  MoveApplication conj = a;
  conj.conjugator = inverse_letters(a.conjugator);
  out.push_back(conj);
  const auto& c = a.conjugator;
  const int k = static_cast<int>(c.size());
  const int n = static_cast<int>(w.size());
  for (int t = k; t >= 1; --t) out.push_back(deletion_of(c[static_cast<std::size_t>(t - 1)], t));
  for (int t = k; t >= 1; --t) out.push_back(deletion_of(c[static_cast<std::size_t>(t - 1)], n + t));
  return out;
}

std::vector<int> strand_correspondence(const BraidWord& w, const MoveApplication& a) {
  const int m = w.strands();
  std::vector<int> identity(static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p) identity[static_cast<std::size_t>(p - 1)] = p;
  if (is_word_level(a.kind)) return identity;
  switch (a.kind) {
    case MoveKind::CYCLIC: {
      if (w.empty()) throw InvalidMove("CYCLIC: empty word");
      const Generator g = a.sign > 0 ? w.letters().front() : w.letters().back();
      for (auto& p : identity) {
        if (p == g.index()) p = g.index() + 1;
        else if (p == g.index() + 1) p = g.index();
      }
      return identity;
    }
    case MoveKind::CONJ: {
      // Top position p of c^-1 w c enters w at the image of p under c^-1.
      const Permutation through = permutation_of(BraidWord(m, inverse_letters(a.conjugator)));
      for (auto& p : identity) p = through(p);
      return identity;
    }
    case MoveKind::STAB_C:
    case MoveKind::STAB_V: identity.push_back(0); return identity;
    case MoveKind::DESTAB_C:
    case MoveKind::DESTAB_V: identity.pop_back(); return identity;
    default: throw std::logic_error("unhandled move kind");
  }
}

std::vector<int> component_correspondence(const BraidWord& w, const MoveApplication& a) {
  const BraidWord after = apply_move(w, a);
  const auto strands = strand_correspondence(w, a);
  const ComponentAssignment before_c = closure_components(w);
  const ComponentAssignment after_c = closure_components(after);
  if (before_c.components != after_c.components) {
    throw std::logic_error(describe(a) + " changed the closure component count");
  }
  std::vector<int> map(static_cast<std::size_t>(after_c.components), 0);
  for (int p = 1; p <= after.strands(); ++p) {
    const int q = strands[static_cast<std::size_t>(p - 1)];
    if (q == 0) continue;
    int& slot = map[static_cast<std::size_t>(after_c.of(p) - 1)];
    if (slot == 0) slot = before_c.of(q);
    else if (slot != before_c.of(q)) throw std::logic_error(describe(a) + " merged components");
  }
  for (int v : map) {
    if (v == 0) throw std::logic_error(describe(a) + " created a component");
  }
  return map;
}

BraidWord replay(const RewriteTrace& t) {
  BraidWord current = t.start;
  for (std::size_t k = 0; k < t.moves.size(); ++k) {
    try {
      current = apply_move(current, t.moves[k]);
    } catch (const std::exception& e) {
      throw TraceError(k, e.what());
    }
  }
  if (!(current == t.end)) {
    throw TraceError(t.moves.size(), "final word " + format_word_with_strands(current) +
                                         " differs from claimed end " +
                                         format_word_with_strands(t.end));
  }
  return current;
}

RewriteTrace invert_trace(const RewriteTrace& t) {
  std::vector<BraidWord> words{t.start};
  for (const auto& a : t.moves) words.push_back(apply_move(words.back(), a));
  RewriteTrace out{t.end, {}, t.start};
  for (std::size_t k = t.moves.size(); k-- > 0;) {
    for (auto& a : inverse_moves(words[k], t.moves[k])) out.moves.push_back(std::move(a));
  }
  return out;
}

std::vector<int> trace_component_map(const RewriteTrace& t) {
  const int n = closure_components(t.start).components;
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) map[static_cast<std::size_t>(c - 1)] = c;
  BraidWord current = t.start;
  for (const auto& a : t.moves) {
    const auto step = component_correspondence(current, a);
    std::vector<int> composed(step.size());
    for (std::size_t c = 0; c < step.size(); ++c) composed[c] = map[static_cast<std::size_t>(step[c] - 1)];
    map = std::move(composed);
    current = apply_move(current, a);
  }
  return map;
}

}  // namespace fusedlink
