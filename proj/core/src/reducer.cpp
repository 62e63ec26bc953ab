#include "fusedlink/reducer.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

#include "fusedlink/derivations.hpp"
#include "fusedlink/elements.hpp"
#include "fusedlink/errors.hpp"
#include "fusedlink/trace_builder.hpp"

namespace fusedlink {

namespace {

constexpr std::array<std::string_view, 7> kStepNames{
    "Conjugate", "NormalForm", "Virtualize", "TauSlide", "CyclicShift", "DestabilizeVirtual",
    "FinalAbelianize"};

void require_classical(const BraidWord& w, const char* who) {
  if (!w.is_classical()) throw NonClassicalInput(std::string(who) + " got " + format_word(w));
}

std::vector<int> identity_map(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = k;
  return out;
}

// Map from output components to input components for a generated step.
std::vector<int> step_component_map(const CertificateStep& step) {
  if (step.trace) return trace_component_map(*step.trace);
  if (step.kind == StepKind::FinalAbelianize) return step.labels;
  return identity_map(closure_components(step.output).components);
}

CertificateStep cyclic_shift(const BraidWord& w, int count) {
  CertificateStep step;
  step.kind = StepKind::CyclicShift;
  step.input = w;
  step.count = count;
  step.direction = -1;
  TraceBuilder tb(w);
  for (int k = 0; k < count; ++k) tb.cyclic(-1);
  step.output = tb.current();
  step.trace = std::move(tb).take();
  return step;
}

bool invariants_match(const BraidWord& a, const BraidWord& b, std::string& why) {
  const int ca = closure_components(a).components;
  const int cb = closure_components(b).components;
  if (ca != cb) {
    why = "component count changes from " + std::to_string(ca) + " to " + std::to_string(cb);
    return false;
  }
  if (relabel_minimal(crossing_sums(a)).matrix != relabel_minimal(crossing_sums(b)).matrix) {
    why = "linking matrix changes";
    return false;
  }
  return true;
}

bool kinds_allowed(const RewriteTrace& t, StepKind kind) {
  return std::all_of(t.moves.begin(), t.moves.end(), [&](const MoveApplication& a) {
    switch (kind) {
      case StepKind::Conjugate:
        return a.kind == MoveKind::CONJ || a.kind == MoveKind::R2 || a.kind == MoveKind::V2;
      case StepKind::TauSlide: return is_word_level(a.kind);
      case StepKind::CyclicShift: return a.kind == MoveKind::CYCLIC;
      case StepKind::DestabilizeVirtual: return a.kind == MoveKind::DESTAB_V;
      default: return true;
    }
  });
}

void check_virtualize(const CertificateStep& step) {
  const auto& in = step.input.letters();
  const int m = step.input.strands();
  const auto first = static_cast<std::size_t>(step.position - 1);
  const auto count = static_cast<std::size_t>(step.count);
  if (step.position < 1 || step.count < 1 || step.count % 2 == 0 || first + count > in.size()) {
    throw std::runtime_error("run parameters out of range");
  }
  const Generator g = in[first];
  if (!g.is_classical() || g.index() != m - 1) throw std::runtime_error("run is not a power of s_{m-1}");
  for (std::size_t k = first; k < first + count; ++k) {
    if (in[k] != g) throw std::runtime_error("run letters differ at letter " + std::to_string(k + 1));
  }
  std::vector<Generator> expected(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(first));
  expected.push_back(Generator::tau(m - 1));
  expected.insert(expected.end(), in.begin() + static_cast<std::ptrdiff_t>(first + count), in.end());
  if (!(BraidWord(m, std::move(expected)) == step.output)) {
    throw std::runtime_error("output is not the input with the run virtualized");
  }
}

}  // namespace

std::string_view to_string(StepKind kind) { return kStepNames.at(static_cast<std::size_t>(kind)); }

std::optional<StepKind> step_kind_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kStepNames.size(); ++k) {
    if (kStepNames[k] == name) return static_cast<StepKind>(k);
  }
  return std::nullopt;
}

LastStrandDecomposition comb_last_strand(const BraidWord& w) {
  require_classical(w, "comb_last_strand");
  const int m = w.strands();
  if (m < 2) throw std::invalid_argument("comb_last_strand: need at least 2 strands");
  LastStrandDecomposition d;
  d.t = permutation_of(w)(m);
  const BraidWord y = concat(w, invert(build_B(d.t, m, m)));

  std::vector<Generator> kept;
  int p = m;  // current position of strand m
  for (const Generator& g : y.letters()) {
    const int i = g.index();
    if (i == p) {
      p = p + 1;
    } else if (i == p - 1) {
      p = p - 1;
    } else {
      kept.push_back(i < p ? g : g.with_index(i - 1));
    }
  }
  d.W = BraidWord(m - 1, std::move(kept));

  const Permutation perm = permutation_of(y);
  const Permutation back = perm.inverse();
  const SquareMatrix sums = strand_crossing_sums(y);
  d.r.resize(static_cast<std::size_t>(m - 1));
  for (int i = 1; i <= m - 1; ++i) {
    const int twice = sums.at(m, back(i));
    if (twice % 2 != 0) throw OddLinkingSum("odd crossing count with the combed strand");
    d.r[static_cast<std::size_t>(i - 1)] = twice / 2;
  }
  return d;
}

BraidWord recompose(const LastStrandDecomposition& d, AForm form) {
  const int m = d.strands();
  std::vector<BraidWord> parts{with_strands(d.W, m)};
  for (int i = 1; i <= m - 1; ++i) {
    parts.push_back(build_A_power(i, m, m, d.r[static_cast<std::size_t>(i - 1)], form));
  }
  parts.push_back(build_B(d.t, m, m));
  return concat(parts);
}

BraidWord normal_form_word(const LastStrandDecomposition& d) {
  const int m = d.strands();
  if (d.t >= m) throw std::invalid_argument("normal_form_word: the combed strand must not be fixed");
  std::vector<BraidWord> parts{with_strands(d.W, m)};
  for (int i = 1; i <= m - 2; ++i) {
    parts.push_back(build_A_power(i, m, m, d.r[static_cast<std::size_t>(i - 1)], AForm::Right));
  }
  parts.push_back(power(BraidWord(m, {Generator::sigma(m - 1)}), 2 * d.r.back() + 1));
  parts.push_back(build_B(d.t, m - 1, m));
  return concat(parts);
}

ConjugateResult bring_strand_last(const BraidWord& w, int s) {
  const int m = w.strands();
  if (s < 1 || s > m) throw std::invalid_argument("bring_strand_last: strand index out of range");
  ConjugateResult out;
  out.step.kind = StepKind::Conjugate;
  out.step.input = w;
  TraceBuilder tb(w);
  if (s < m) {
    out.step.conjugator = power(build_B(1, m, m), m - s).letters();
    tb.conjugate(out.step.conjugator).free_reduce();
  }
  out.word = tb.current();
  out.step.output = out.word;
  out.step.trace = std::move(tb).take();
  return out;
}

StepResult reduce_step(const BraidWord& w) {
  require_classical(w, "reduce_step");
  const int m = w.strands();
  if (m < 2 || permutation_of(w)(m) == m) {
    throw std::invalid_argument("reduce_step: the permutation must move position m");
  }
  StepResult out;
  const LastStrandDecomposition d = comb_last_strand(w);

  CertificateStep nf;
  nf.kind = StepKind::NormalForm;
  nf.input = w;
  nf.output = normal_form_word(d);
  nf.decomposition = d;
  out.steps.push_back(nf);

  struct Factor {
    int i;
    int e;
  };
  std::vector<Factor> factors;
  int v_len = 0;
  for (int i = 1; i <= m - 2; ++i) {
    const int r = d.r[static_cast<std::size_t>(i - 1)];
    for (int q = 0; q < std::abs(r); ++q) factors.push_back({i, r > 0 ? 1 : -1});
    v_len += std::abs(r) * static_cast<int>(build_A(i, m, m, AForm::Right).size());
  }
  const int w_len = static_cast<int>(d.W.size());

  CertificateStep virt;
  virt.kind = StepKind::Virtualize;
  virt.input = nf.output;
  virt.position = w_len + v_len + 1;
  virt.count = std::abs(2 * d.r.back() + 1);
  {
    const auto& in = nf.output.letters();
    const auto first = static_cast<std::ptrdiff_t>(virt.position - 1);
    std::vector<Generator> letters(in.begin(), in.begin() + first);
    letters.push_back(Generator::tau(m - 1));
    letters.insert(letters.end(), in.begin() + first + virt.count, in.end());
    virt.output = BraidWord(m, std::move(letters));
  }
  out.steps.push_back(virt);

  // A^e_{i,m} t_{m-1} -> t_{m-1} A^e_{i,m-1}, factor by factor from the right.
  CertificateStep slide;
  slide.kind = StepKind::TauSlide;
  slide.input = virt.output;
  TraceBuilder tb(virt.output);
  int offset = w_len + v_len;
  for (std::size_t q = factors.size(); q-- > 0;) {
    offset -= static_cast<int>(build_A(factors[q].i, m, m, AForm::Right).size());
    tb.embed(tau_slide_trace(factors[q].i, m - 1, m, factors[q].e), offset);
  }
  slide.output = tb.current();
  slide.trace = std::move(tb).take();
  out.steps.push_back(slide);

  const int tail = static_cast<int>(slide.output.size()) - w_len - 1;  // |v_{m-1} B_{t,m-1}|
  CertificateStep shift = cyclic_shift(slide.output, tail);
  out.steps.push_back(shift);

  CertificateStep destab;
  destab.kind = StepKind::DestabilizeVirtual;
  destab.input = shift.output;
  TraceBuilder db(shift.output);
  db.destabilize();
  destab.output = db.current();
  destab.trace = std::move(db).take();
  out.steps.push_back(destab);

  CertificateStep back = cyclic_shift(destab.output, w_len);
  out.steps.push_back(back);
  out.word = back.output;
  return out;
}

PureResult reduce_to_pure(const BraidWord& w) {
  require_classical(w, "reduce_to_pure");
  PureResult out;
  const int n = closure_components(w).components;
  out.certificate.start = w;
  out.origin = identity_map(closure_components(w).components);
  BraidWord current = w;
  auto record = [&](const CertificateStep& step) {
    const auto map = step_component_map(step);
    std::vector<int> origin(map.size());
    for (std::size_t c = 0; c < map.size(); ++c) origin[c] = out.origin[static_cast<std::size_t>(map[c] - 1)];
    out.origin = std::move(origin);
    out.certificate.steps.push_back(step);
  };
  while (current.strands() > n) {
    const Permutation perm = permutation_of(current);
    int s = current.strands();
    while (perm(s) == s) --s;
    ConjugateResult conj = bring_strand_last(current, s);
    record(conj.step);
    StepResult round = reduce_step(conj.word);
    for (const auto& step : round.steps) record(step);
    current = round.word;
    ++out.rounds;
  }
  out.beta = current;
  out.certificate.end = current;
  return out;
}

BraidWord canonical_beta(const SquareMatrix& lambda) {
  const int n = std::max(lambda.size(), 1);
  std::vector<BraidWord> parts{BraidWord(n)};
  for (int k = 2; k <= n; ++k) {
    for (int i = 1; i < k; ++i) parts.push_back(build_A_power(i, k, n, lambda.at(i, k), AForm::Left));
  }
  return concat(parts);
}

CanonicalResult canonicalize(const BraidWord& w, const ReduceOptions& options) {
  PureResult pure = reduce_to_pure(w);
  const int n = pure.beta.strands();
  const Relabeling rel = relabel_minimal(linking_matrix(pure.beta));

  CanonicalResult out;
  out.rounds = pure.rounds;
  out.form.n = n;
  out.form.lambda = LinkingMatrix(rel.matrix);
  out.form.beta = canonical_beta(rel.matrix);
  for (int label : rel.labels) out.form.labeling.push_back(pure.origin[static_cast<std::size_t>(label - 1)]);

  CertificateStep fin;
  fin.kind = StepKind::FinalAbelianize;
  fin.input = pure.beta;
  fin.output = out.form.beta;
  fin.labels = rel.labels;
  if (fin.input == fin.output) {
    fin.trace = RewriteTrace{fin.input, {}, fin.output};
  } else if (options.bfs_upgrade && n <= 3 && pure.beta.size() <= 10) {
    SearchOptions search;
    const bool same_labels = rel.labels == identity_map(n);
    search.level = same_labels ? MoveLevel::Word : MoveLevel::Closure;
    SearchBudget budget = default_budget(fin.input, fin.output);
    budget.max_states = options.upgrade_states;
    auto found = bfs_search(fin.input, fin.output, budget, search);
    // A searched trace is only kept when it realises the recorded labeling.
    if (found.trace && trace_component_map(*found.trace) == fin.labels) fin.trace = std::move(found.trace);
  }
  out.certificate = std::move(pure.certificate);
  out.certificate.steps.push_back(std::move(fin));
  out.certificate.end = out.form.beta;
  return out;
}

CanonicalForm canonical_form(const BraidWord& w) { return canonicalize(w).form; }

bool fused_equivalent(const BraidWord& a, const BraidWord& b) {
  require_classical(a, "fused_equivalent");
  require_classical(b, "fused_equivalent");
  if (closure_components(a).components != closure_components(b).components) return false;
  return relabel_minimal(linking_matrix(a)).matrix == relabel_minimal(linking_matrix(b)).matrix;
}

CertificateReport check_certificate(const Certificate& c) {
  CertificateReport report;
  auto fail = [&](StepReport& r, const std::string& why) {
    r.ok = false;
    r.detail = why;
    if (!report.first_failure) {
      report.first_failure = r.index;
      report.message = "step " + std::to_string(r.index) + " (" + std::string(to_string(r.kind)) + "): " + why;
    }
  };
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const CertificateStep& step = c.steps[k];
    StepReport r;
    r.index = k;
    r.kind = step.kind;
    r.ok = true;
    const BraidWord& expected = k == 0 ? c.start : c.steps[k - 1].output;
    std::string why;
    if (!(step.input == expected)) {
      fail(r, "input does not chain from " + std::string(k == 0 ? "the certificate start" : "the previous output"));
    } else if (!invariants_match(step.input, step.output, why)) {
      fail(r, why);
    } else {
      try {
        const bool needs_trace = step.kind == StepKind::Conjugate || step.kind == StepKind::TauSlide ||
                                 step.kind == StepKind::CyclicShift ||
                                 step.kind == StepKind::DestabilizeVirtual;
        if (needs_trace && !step.trace) throw std::runtime_error("missing elementary trace");
        switch (step.kind) {
          case StepKind::NormalForm: {
            if (!step.decomposition) throw std::runtime_error("missing decomposition");
            if (!(comb_last_strand(step.input) == *step.decomposition)) {
              throw std::runtime_error("decomposition does not match the input");
            }
            if (!(normal_form_word(*step.decomposition) == step.output)) {
              throw std::runtime_error("output is not the normal form of the decomposition");
            }
            break;
          }
          case StepKind::Virtualize: check_virtualize(step); break;
          case StepKind::Conjugate: {
            std::vector<Generator> used;
            for (const auto& a : step.trace->moves) {
              if (a.kind == MoveKind::CONJ) used.insert(used.end(), a.conjugator.begin(), a.conjugator.end());
            }
            if (used != step.conjugator) throw std::runtime_error("trace conjugates by a different word");
            break;
          }
          case StepKind::CyclicShift: {
            const auto& moves = step.trace->moves;
            if (static_cast<int>(moves.size()) != step.count ||
                std::any_of(moves.begin(), moves.end(),
                            [&](const MoveApplication& a) { return a.sign != step.direction; })) {
              throw std::runtime_error("trace is not " + std::to_string(step.count) + " shifts in direction " +
                                       std::to_string(step.direction));
            }
            break;
          }
          case StepKind::FinalAbelianize: {
            if (!step.input.is_classical() || !is_pure(step.input) || !is_pure(step.output)) {
              throw std::runtime_error("words must be classical pure braids");
            }
            const Relabeling rel = relabel_minimal(linking_matrix(step.input));
            if (!(canonical_beta(rel.matrix) == step.output)) {
              throw std::runtime_error("output is not the canonical braid of the input's linking matrix");
            }
            if (linking_matrix(step.input).relabeled(step.labels) != rel.matrix) {
              throw std::runtime_error("labels do not produce the canonical matrix");
            }
            break;
          }
          default: break;
        }
        if (step.trace) {
          if (!(step.trace->start == step.input) || !(step.trace->end == step.output)) {
            throw std::runtime_error("trace endpoints differ from the step words");
          }
          if (!kinds_allowed(*step.trace, step.kind)) throw std::runtime_error("trace uses moves foreign to the step");
          try {
            replay(*step.trace);
          } catch (const TraceError& e) {
            throw std::runtime_error(std::string("replay failed: ") + e.what());
          }
          r.validation = Validation::Elementary;
        }
        r.detail = r.validation == Validation::Elementary
                       ? std::to_string(step.trace->moves.size()) + " moves replayed"
                       : "invariants preserved";
      } catch (const std::exception& e) {
        fail(r, e.what());
      }
    }
    report.steps.push_back(std::move(r));
  }
  if (!report.first_failure) {
    const BraidWord& last = c.steps.empty() ? c.start : c.steps.back().output;
    if (!(last == c.end)) {
      report.first_failure = c.steps.size();
      report.message = "certificate end differs from the last output";
    }
  }
  report.valid = !report.first_failure.has_value();
  if (report.valid) report.message = "valid";
  return report;
}

}  // namespace fusedlink
