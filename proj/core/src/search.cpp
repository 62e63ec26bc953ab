#include "fusedlink/search.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fusedlink/topology.hpp"
#include "fusedlink/trace_builder.hpp"

namespace fusedlink {

namespace {

using Letters = std::vector<Generator>;

enum class StepType : std::uint8_t { Relator, Cyclic, Conj, StabC, StabV, Destab };

struct Step {
  StepType type = StepType::Relator;
  std::uint8_t overlap = 0;
  std::int8_t sign = 1;
  std::uint16_t pos = 0;
  std::uint32_t rule = 0;
};

struct Node {
  std::uint32_t parent;
  Step step;
  std::uint8_t side;
  const std::string* key;
};

constexpr std::uint32_t kRoot = 0xFFFFFFFFu;

BraidWord decode(const std::string& key) {
  const int strands = static_cast<unsigned char>(key[0]);
  Letters letters;
  letters.reserve(key.size() - 1);
  for (std::size_t k = 1; k < key.size(); ++k) {
    const auto code = static_cast<unsigned char>(key[k]);
    const int index = code & 0x3F;
    if (code & 0x80) letters.push_back(Generator::tau(index));
    else letters.push_back(Generator::sigma(index, (code & 0x40) ? -1 : 1));
  }
  return BraidWord(strands, std::move(letters));
}

Letters reduced(const Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (const auto& g : w) {
    if (!out.empty() && cancels(out.back(), g)) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

struct Relator {
  std::size_t rule;
  int half;
  Letters cycle;
};

bool invariants_agree(const BraidWord& a, const BraidWord& b, MoveLevel level) {
  if (level == MoveLevel::Word) {
    return a.strands() == b.strands() && permutation_of(a) == permutation_of(b) &&
           strand_crossing_sums(a) == strand_crossing_sums(b);
  }
  const auto ca = closure_components(a);
  const auto cb = closure_components(b);
  if (ca.components != cb.components) return false;
  return relabel_minimal(crossing_sums(a)).matrix == relabel_minimal(crossing_sums(b)).matrix;
}

class Search {
 public:
  Search(const SearchBudget& budget, const SearchOptions& options, int max_strands)
      : budget_(budget), options_(options), max_strands_(max_strands) {}

  SearchResult run(const BraidWord& a, const BraidWord& b);

 private:
  const std::vector<Relator>& relators(int strands);
  template <class Visit>
  void expand(const BraidWord& x, Visit&& visit);
  RewriteTrace materialize(std::uint32_t node) ;
  void realize(TraceBuilder& tb, const Step& step);

  SearchBudget budget_;
  SearchOptions options_;
  int max_strands_;
  std::unordered_map<int, RuleTable> tables_;
  std::unordered_map<int, std::vector<Relator>> relators_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<Node> nodes_;
  BraidWord roots_[2];
};

const std::vector<Relator>& Search::relators(int strands) {
  auto found = relators_.find(strands);
  if (found != relators_.end()) return found->second;
  auto table = tables_.emplace(strands, RuleTable(strands, options_.kinds)).first;
  std::vector<Relator> list;
  const auto& rules = table->second.rules();
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const auto& rw = rules[r].rewrite;
    if (rw.lhs.empty() || rw.lhs.size() != rw.rhs.size()) continue;
    Relator rel{r, static_cast<int>(rw.lhs.size()), rw.lhs};
    for (std::size_t k = rw.rhs.size(); k-- > 0;) rel.cycle.push_back(rw.rhs[k].inverse());
    list.push_back(std::move(rel));
  }
  return relators_.emplace(strands, std::move(list)).first->second;
}

template <class Visit>
void Search::expand(const BraidWord& x, Visit&& visit) {
  const Letters& w = x.letters();
  const int m = x.strands();
  const std::size_t n = w.size();
  auto emit = [&](Letters&& letters, int strands, const Step& step) {
    Letters r = reduced(letters);
    if (static_cast<int>(r.size()) > budget_.max_length) return true;
    return visit(BraidWord(strands, std::move(r)), step);
  };
  if (m >= 2) {
    const auto& rels = relators(m);
    // Plain rule applications (k = half) go first so that short traces win.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p <= n; ++p) {
        for (std::uint32_t q = 0; q < rels.size(); ++q) {
          const Letters& c = rels[q].cycle;
          const std::size_t L = c.size();
          const std::size_t h = static_cast<std::size_t>(rels[q].half);
          for (std::size_t k = 0; k <= L && p + k <= n; ++k) {
            if (k > 0 && w[p + k - 1] != c[k - 1]) break;
            if ((k == h) != (pass == 0)) continue;
            Letters out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            for (std::size_t t = L; t-- > k;) out.push_back(c[t].inverse());
            out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(p + k), w.end());
            Step s{StepType::Relator, static_cast<std::uint8_t>(k), 1, static_cast<std::uint16_t>(p), q};
            if (!emit(std::move(out), m, s)) return;
          }
        }
      }
    }
  }
  if (options_.level != MoveLevel::Closure) return;
  if (n > 0) {
    for (int sign : {1, -1}) {
      Letters out = w;
      if (sign > 0) std::rotate(out.begin(), out.begin() + 1, out.end());
      else std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
      if (!emit(std::move(out), m, Step{StepType::Cyclic, 0, static_cast<std::int8_t>(sign), 0, 0})) return;
    }
  }
  for (int i = 1; i <= m - 1; ++i) {
    for (Generator g : {Generator::sigma(i, 1), Generator::sigma(i, -1), Generator::tau(i)}) {
      Letters out{g.inverse()};
      out.insert(out.end(), w.begin(), w.end());
      out.push_back(g);
      const std::uint32_t code = static_cast<std::uint32_t>(i) * 3u +
                                 (g.is_virtual() ? 2u : (g.sign() > 0 ? 0u : 1u));
      if (!emit(std::move(out), m, Step{StepType::Conj, 0, 1, 0, code})) return;
    }
  }
  if (m >= 2 && n > 0 && w.back().index() == m - 1 &&
      std::count_if(w.begin(), w.end(), [&](const Generator& g) { return g.index() == m - 1; }) == 1) {
    if (!emit(Letters(w.begin(), w.end() - 1), m - 1, Step{StepType::Destab, 0, 1, 0, 0})) return;
  }
  if (m < max_strands_ && m < 64) {
    for (int sign : {1, -1}) {
      Letters out = w;
      out.push_back(Generator::sigma(m, sign));
      if (!emit(std::move(out), m + 1, Step{StepType::StabC, 0, static_cast<std::int8_t>(sign), 0, 0})) return;
    }
    Letters out = w;
    out.push_back(Generator::tau(m));
    if (!emit(std::move(out), m + 1, Step{StepType::StabV, 0, 1, 0, 0})) return;
  }
}

void Search::realize(TraceBuilder& tb, const Step& step) {
  const BraidWord& x = tb.current();
  switch (step.type) {
    case StepType::Relator: {
      const Relator& rel = relators(x.strands())[step.rule];
      const auto& rule = tables_.at(x.strands()).rules()[rel.rule];
      const int p = step.pos;
      const int k = step.overlap;
      const int h = rel.half;
      const int L = static_cast<int>(rel.cycle.size());
      if (k < h) {
        const Letters z(rel.cycle.begin() + k, rel.cycle.begin() + h);
        tb.insert_cancelling(p + k + 1, z);
      }
      MoveApplication a;
      a.kind = rule.kind;
      a.pos = p + 1;
      a.i = rule.i;
      a.j = rule.j;
      a.variant = rule.variant;
      tb.apply(a);
      for (int c = 0; c < k - h; ++c) tb.cancel(p + L - h - c);
      break;
    }
    case StepType::Cyclic: tb.cyclic(step.sign); break;
    case StepType::Conj: {
      const int i = static_cast<int>(step.rule / 3);
      const int type = static_cast<int>(step.rule % 3);
      const Generator g = type == 2 ? Generator::tau(i) : Generator::sigma(i, type == 0 ? 1 : -1);
      const Letters c{g};
      tb.conjugate(c);
      break;
    }
    case StepType::StabC:
    case StepType::StabV: {
      MoveApplication a;
      a.kind = step.type == StepType::StabC ? MoveKind::STAB_C : MoveKind::STAB_V;
      a.sign = step.sign;
      a.pos = static_cast<int>(x.size()) + 1;
      tb.apply(a);
      break;
    }
    case StepType::Destab: tb.destabilize(); break;
  }
  tb.free_reduce();
}

RewriteTrace Search::materialize(std::uint32_t node) {
  std::vector<std::uint32_t> chain;
  for (std::uint32_t v = node; nodes_[v].parent != kRoot; v = nodes_[v].parent) chain.push_back(v);
  std::uint32_t root = chain.empty() ? node : nodes_[chain.back()].parent;
  TraceBuilder tb(decode(*nodes_[root].key));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    realize(tb, nodes_[*it].step);
    if (word_key(tb.current()) != *nodes_[*it].key) {
      throw std::logic_error("search step did not reproduce its recorded word");
    }
  }
  return std::move(tb).take();
}

SearchResult Search::run(const BraidWord& a, const BraidWord& b) {
  SearchResult result;
  if (budget_.max_states == 0) {
    result.budget_exhausted = true;
    return result;
  }
  if (a == b) {
    result.trace = RewriteTrace{a, {}, b};
    return result;
  }
  if (!invariants_agree(a, b, options_.level)) {
    result.invariant_mismatch = true;
    return result;
  }
  const RewriteTrace reduce_a = free_reduction_trace(a);
  const RewriteTrace reduce_b = free_reduction_trace(b);

  auto finish = [&](RewriteTrace forward, RewriteTrace backward) {
    TraceBuilder tb(a);
    tb.append(reduce_a).append(forward).append(invert_trace(backward)).append(invert_trace(reduce_b));
    result.trace = std::move(tb).take();
  };

  std::vector<std::uint32_t> frontier[2];
  for (std::uint8_t side = 0; side < 2; ++side) {
    const BraidWord& root = side == 0 ? reduce_a.end : reduce_b.end;
    auto [it, inserted] = index_.emplace(word_key(root), static_cast<std::uint32_t>(nodes_.size()));
    if (!inserted) {
      finish(RewriteTrace{root, {}, root}, RewriteTrace{root, {}, root});
      result.states = nodes_.size();
      return result;
    }
    nodes_.push_back(Node{kRoot, Step{}, side, &it->first});
    frontier[side].push_back(it->second);
  }

  while (!frontier[0].empty() && !frontier[1].empty()) {
    const std::uint8_t side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::uint32_t> next;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;
    bool exhausted = false;
    for (std::uint32_t u : frontier[side]) {
      const BraidWord x = decode(*nodes_[u].key);
      expand(x, [&](BraidWord&& y, const Step& step) {
        auto [it, inserted] = index_.emplace(word_key(y), static_cast<std::uint32_t>(nodes_.size()));
        if (inserted) {
          nodes_.push_back(Node{u, step, side, &it->first});
          next.push_back(it->second);
          if (nodes_.size() >= budget_.max_states) {
            exhausted = true;
            return false;
          }
          return true;
        }
        if (nodes_[it->second].side != side) {
          const auto id = static_cast<std::uint32_t>(nodes_.size());
          nodes_.push_back(Node{u, step, side, &it->first});
          meet = std::make_pair(id, it->second);
          return false;
        }
        return true;
      });
      if (meet || exhausted) break;
    }
    if (meet) {
      RewriteTrace mine = materialize(meet->first);
      RewriteTrace theirs = materialize(meet->second);
      if (side == 0) finish(std::move(mine), std::move(theirs));
      else finish(std::move(theirs), std::move(mine));
      result.states = nodes_.size();
      return result;
    }
    if (exhausted) {
      result.budget_exhausted = true;
      break;
    }
    frontier[side] = std::move(next);
  }
  result.states = nodes_.size();
  return result;
}

}  // namespace

SearchBudget default_budget(const BraidWord& a, const BraidWord& b) {
  SearchBudget budget;
  budget.max_length = static_cast<int>(std::max(a.size(), b.size())) + 6;
  return budget;
}

SearchResult bfs_search(const BraidWord& a, const BraidWord& b, const SearchBudget& budget,
                        const SearchOptions& options) {
  const int ceiling =
      options.max_strands > 0 ? options.max_strands : std::max(a.strands(), b.strands()) + 1;
  SearchBudget effective = budget;
  if (effective.max_length <= 0) effective.max_length = default_budget(a, b).max_length;
  Search search(effective, options, ceiling);
  return search.run(a, b);
}

std::optional<RewriteTrace> bfs_equivalent(const BraidWord& a, const BraidWord& b,
                                           const SearchBudget& budget,
                                           const SearchOptions& options) {
  return bfs_search(a, b, budget, options).trace;
}

std::optional<RewriteTrace> bfs_equivalent(const BraidWord& a, const BraidWord& b) {
  return bfs_equivalent(a, b, default_budget(a, b));
}

}  // namespace fusedlink
