#include "fusedlink/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fusedlink/artin.hpp"
#include "fusedlink/derivations.hpp"
#include "fusedlink/elements.hpp"

namespace fusedlink {

namespace {

Generator s(int i) { return Generator::sigma(i, 1); }
Generator S(int i) { return Generator::sigma(i, -1); }

RewriteTrace slice(const RewriteTrace& t, std::size_t first, std::size_t count) {
  BraidWord w = t.start;
  for (std::size_t k = 0; k < first; ++k) w = apply_move(w, t.moves[k]);
  TraceBuilder tb(w);
  for (std::size_t k = first; k < first + count; ++k) tb.apply(t.moves[k]);
  return std::move(tb).take();
}

ChainStep make_step(std::string justification, Method method, RewriteTrace trace) {
  ChainStep step;
  step.justification = std::move(justification);
  step.method = method;
  step.from = trace.start;
  step.to = trace.end;
  step.trace = std::move(trace);
  return step;
}

void validate_steps(LemmaReport& report) {
  for (std::size_t k = 0; k < report.steps.size(); ++k) {
    ChainStep& step = report.steps[k];
    try {
      if (!(step.trace.start == step.from) || !(step.trace.end == step.to)) {
        throw std::runtime_error("trace endpoints differ from the step words");
      }
      replay(step.trace);
      if (k > 0 && !(report.steps[k - 1].to == step.from)) {
        throw std::runtime_error("does not continue the previous step");
      }
      if (step.method == Method::Artin && !artin_equal(step.from, step.to)) {
        throw std::runtime_error("Artin images differ");
      }
      step.ok = true;
      step.detail = std::to_string(step.trace.moves.size()) + " moves";
    } catch (const std::exception& e) {
      step.ok = false;
      step.detail = e.what();
      if (report.failure.empty()) {
        report.failure = "step " + std::to_string(k + 1) + " (" + step.justification + "): " + e.what();
      }
    }
  }
  try {
    TraceBuilder tb(report.left);
    for (const auto& step : report.steps) tb.append(step.trace);
    report.trace = std::move(tb).take();
    replay(report.trace);
    if (!(report.trace.end == report.right)) throw std::runtime_error("chain ends at the wrong word");
    report.replay_ok = true;
  } catch (const std::exception& e) {
    report.replay_ok = false;
    if (report.failure.empty()) report.failure = std::string("chain: ") + e.what();
  }
  report.sides_artin_equal = artin_equal(report.left, report.right);
}

void run_bfs(LemmaReport& report, const LemmaOptions& options) {
  if (!options.bfs) return;
  const SearchResult result = bfs_search(report.left, report.right, options.budget);
  report.bfs_found = result.trace.has_value();
  report.bfs_states = result.states;
  if (result.trace) replay(*result.trace);
}

template <class Build>
LemmaReport run(LemmaReport report, const LemmaOptions& options, Build&& build) {
  try {
    build(report);
  } catch (const std::exception& e) {
    report.failure = std::string("template: ") + e.what();
  }
  validate_steps(report);
  run_bfs(report, options);
  return report;
}

}  // namespace

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::Pfa: return "pfa";
    case LemmaId::Central: return "central";
    case LemmaId::Commute: return "commute";
    case LemmaId::TauSlide: return "tau-slide";
    case LemmaId::MoveDerivation: return "move-derivation";
  }
  return "?";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Replay: return "replay";
    case Method::Bfs: return "bfs";
    case Method::Artin: return "artin";
  }
  return "?";
}

bool LemmaReport::ok() const {
  return failure.empty() && replay_ok &&
         std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.ok; }) &&
         bfs_found.value_or(true);
}

LemmaReport check_eq_pfa(int j, int m, const LemmaOptions& options) {
  if (j < 2 || j > m - 1) throw std::invalid_argument("check_eq_pfa: need 2 <= j <= m-1");
  LemmaReport report;
  report.id = LemmaId::Pfa;
  report.j = j;
  report.m = m;
  report.left = BraidWord(m, {s(j), s(j), S(j - 1), s(j), s(j), s(j - 1), S(j), S(j)});
  report.right = BraidWord(m, {s(j), s(j - 1), s(j - 1), S(j)});
  return run(std::move(report), options, [&](LemmaReport& r) {
    const RewriteTrace t = pfa_trace(j, m);
    r.steps.push_back(make_step("M3", Method::Replay, slice(t, 0, 1)));
    r.steps.push_back(make_step("R3", Method::Replay, slice(t, 1, 1)));
    r.steps.push_back(make_step("free cancellation", Method::Replay, slice(t, 2, 2)));
  });
}

LemmaReport check_lemma_central(int i, int j, int m, const LemmaOptions& options) {
  if (i < 1 || i >= j || j + 1 > m) throw std::invalid_argument("check_lemma_central: need 1 <= i < j, j+1 <= m");
  LemmaReport report;
  report.id = LemmaId::Central;
  report.i = i;
  report.j = j;
  report.m = m;
  const BraidWord a = build_A(i, j + 1, m, AForm::Right);
  report.left = concat(std::vector<BraidWord>{build_A(j, j + 1, m, AForm::Right), a,
                                              invert(build_A(j, j + 1, m, AForm::Right))});
  report.right = a;
  return run(std::move(report), options, [&](LemmaReport& r) {
    const CentralTrace c = central_trace(i, j, m);
    r.steps.push_back(make_step("commutation in B_n", Method::Artin, c.unfold));
    r.steps.push_back(make_step("pfa identity", Method::Replay, c.pfa));
    r.steps.push_back(make_step("commutation in B_n", Method::Artin, c.refold));
    r.steps.push_back(make_step("s_j A_{i,j} s_j^-1 = A_{i,j+1} in B_n", Method::Artin,
                                chain({&c.to_left, &c.to_right})));
  });
}

LemmaReport check_lemma_commute(int k, int i, int j, int m, const LemmaOptions& options) {
  if (k < 1 || k >= i || i > j || j + 1 > m) {
    throw std::invalid_argument("check_lemma_commute: need 1 <= k < i <= j, j+1 <= m");
  }
  LemmaReport report;
  report.id = LemmaId::Commute;
  report.i = i;
  report.j = j;
  report.k = k;
  report.m = m;
  const BraidWord ak = build_A(k, j + 1, m, AForm::Right);
  const BraidWord ai = build_A(i, j + 1, m, AForm::Right);
  report.left = concat(ak, ai);
  report.right = concat(ai, ak);
  return run(std::move(report), options, [&](LemmaReport& r) {
    const int b = j - i;  // |B_{i,j}|
    const int len = static_cast<int>(ak.size());

    TraceBuilder first(r.left);
    right_to_left(first, 0, k, j + 1);
    for (int q = 0; q < b; ++q) commute_letter_past_A(first, q, k, j + 1);
    left_to_right(first, b, k, j + 1);
    r.steps.push_back(make_step("commutation in B_n", Method::Artin, std::move(first).take()));

    TraceBuilder second(r.steps.back().to);
    second.embed(invert_trace(central_trace(k, j, m).whole()), b);
    const int middle = b + 2 + len + 2;
    second.cancel(middle).cancel(middle - 1);
    r.steps.push_back(make_step("central identity", Method::Replay, std::move(second).take()));

    TraceBuilder third(r.steps.back().to);
    const int at = b + 2;
    right_to_left(third, at, k, j + 1);
    for (int q = 0; q < b; ++q) commute_letter_past_A(third, at + q, k, j + 1);
    left_to_right(third, at + b, k, j + 1);
    r.steps.push_back(make_step("commutation in B_n", Method::Artin, std::move(third).take()));
  });
}

LemmaReport check_lemma_tau(int i, int j, int m, const LemmaOptions& options) {
  if (i < 1 || i > j - 1 || j + 1 > m) throw std::invalid_argument("check_lemma_tau: need 1 <= i <= j-1, j+1 <= m");
  LemmaReport report;
  report.id = LemmaId::TauSlide;
  report.i = i;
  report.j = j;
  report.m = m;
  report.left = concat(build_A(i, j + 1, m, AForm::Right), BraidWord(m, {Generator::tau(j)}));
  report.right = concat(BraidWord(m, {Generator::tau(j)}), build_A(i, j, m, AForm::Right));
  return run(std::move(report), options, [&](LemmaReport& r) {
    const RewriteTrace t = tau_slide_trace(i, j, m, 1);
    const auto b = static_cast<std::size_t>(j - 1 - i);
    r.steps.push_back(make_step("commutation in VB_n", Method::Artin, slice(t, 0, b)));
    r.steps.push_back(make_step("F_o move", Method::Replay, slice(t, b, 1)));
    r.steps.push_back(make_step("M1 move", Method::Replay, slice(t, b + 1, 2)));
    r.steps.push_back(make_step("commutation in VB_n", Method::Artin, slice(t, b + 3, t.moves.size() - b - 3)));
  });
}

std::vector<DerivationReport> derive_M_moves(const SearchBudget& budget) {
  static constexpr MoveKind base[] = {MoveKind::R2, MoveKind::R3,    MoveKind::FAR, MoveKind::V2,
                                      MoveKind::V3, MoveKind::MIXED, MoveKind::F_O, MoveKind::F_U};
  SearchOptions options;
  options.kinds.assign(std::begin(base), std::end(base));
  std::vector<DerivationReport> out;
  for (MoveKind kind : {MoveKind::M1, MoveKind::M2, MoveKind::M3}) {
    const Rewrite rw = rewrite_variants(kind, 1, 2).front();
    DerivationReport report;
    report.kind = kind;
    report.left = BraidWord(3, rw.lhs);
    report.right = BraidWord(3, rw.rhs);
    const SearchResult result = bfs_search(report.left, report.right, budget, options);
    report.trace = result.trace;
    report.states = result.states;
    report.budget_exhausted = result.budget_exhausted;
    out.push_back(std::move(report));
  }
  return out;
}

bool SuiteReport::ok() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaReport& r) { return r.ok(); });
}

SuiteReport run_lemma_suite(const SuiteOptions& options) {
  SuiteReport suite;
  LemmaOptions plain;
  LemmaOptions searched;
  searched.bfs = options.bfs;
  for (int m = 3; m <= options.max_strands; ++m) {
    const LemmaOptions& o = m == 3 ? searched : plain;
    for (int j = 2; j <= m - 1; ++j) suite.lemmas.push_back(check_eq_pfa(j, m, j == 2 ? o : plain));
    for (int j = 2; j + 1 <= m; ++j)
      for (int i = 1; i < j; ++i)
        suite.lemmas.push_back(check_lemma_central(i, j, m, (i == 1 && j == 2) ? o : plain));
    for (int j = 2; j + 1 <= m; ++j)
      for (int i = 2; i <= j; ++i)
        for (int k = 1; k < i; ++k)
          suite.lemmas.push_back(check_lemma_commute(k, i, j, m, (k == 1 && i == 2 && j == 2) ? o : plain));
    for (int j = 2; j + 1 <= m; ++j)
      for (int i = 1; i <= j - 1; ++i)
        suite.lemmas.push_back(check_lemma_tau(i, j, m, (i == 1 && j == 2) ? o : plain));
  }
  if (options.derive_m_moves) suite.derivations = derive_M_moves(options.derivation_budget);
  return suite;
}

}  // namespace fusedlink
