#include "fusedlink/random.hpp"

#include "fusedlink/artin.hpp"
#include "fusedlink/reducer.hpp"
#include "fusedlink/topology.hpp"

namespace fusedlink {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool is_classical_kind(MoveKind k) {
  switch (k) {
    case MoveKind::R2:
    case MoveKind::R3:
    case MoveKind::FAR:
    case MoveKind::M3:
    case MoveKind::CYCLIC:
    case MoveKind::CONJ:
    case MoveKind::STAB_C:
    case MoveKind::DESTAB_C: return true;
    default: return false;
  }
}

}  // namespace

BraidWord random_word(Rng& rng, int strands, int length, double virtual_rate) {
  std::vector<Generator> letters;
  if (strands < 2) return BraidWord(std::max(strands, 1), {});
  std::bernoulli_distribution is_virtual(virtual_rate);
  for (int k = 0; k < length; ++k) {
    const int i = uniform(rng, 1, strands - 1);
    letters.push_back(is_virtual(rng) ? Generator::tau(i)
                                      : Generator::sigma(i, uniform(rng, 0, 1) ? 1 : -1));
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord random_classical_word(Rng& rng, int max_strands, int max_length) {
  const int strands = uniform(rng, 1, max_strands);
  return random_word(rng, strands, strands < 2 ? 0 : uniform(rng, 0, max_length));
}

std::optional<MoveApplication> random_move(Rng& rng, const BraidWord& w, MoveLevel level,
                                           bool classical_only, int max_strands) {
  std::vector<MoveApplication> pool;
  for (auto& a : applicable_moves(w, MoveLevel::Word)) {
    if (!classical_only || is_classical_kind(a.kind)) pool.push_back(std::move(a));
  }
  const int n = static_cast<int>(w.size());
  for (int pos = 1; pos <= n + 1; ++pos) {
    for (int i = 1; i < w.strands(); ++i) {
      for (int variant : {2, 3}) pool.push_back({MoveKind::R2, pos, i, 0, variant, 1, {}});
      if (!classical_only) pool.push_back({MoveKind::V2, pos, i, 0, 1, 1, {}});
    }
  }
  if (level == MoveLevel::Closure) {
    for (auto& a : applicable_moves(w, MoveLevel::Closure)) {
      if (classical_only && !is_classical_kind(a.kind)) continue;
      if (a.kind == MoveKind::STAB_C || a.kind == MoveKind::STAB_V) {
        if (w.strands() >= max_strands) continue;
      }
      pool.push_back(std::move(a));
    }
    for (int i = 1; i < w.strands(); ++i) {
      for (int e : {1, -1}) {
        MoveApplication c{MoveKind::CONJ, 1, 0, 0, 0, 1, {Generator::sigma(i, e)}};
        pool.push_back(std::move(c));
      }
      if (!classical_only) pool.push_back({MoveKind::CONJ, 1, 0, 0, 0, 1, {Generator::tau(i)}});
    }
  }
  if (pool.empty()) return std::nullopt;
  return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
}

RewriteTrace random_walk(Rng& rng, const BraidWord& start, int steps, int max_strands) {
  RewriteTrace t{start, {}, start};
  for (int k = 0; k < steps; ++k) {
    auto a = random_move(rng, t.end, MoveLevel::Closure, true, max_strands);
    if (!a) break;
    t.end = apply_move(t.end, *a);
    t.moves.push_back(std::move(*a));
  }
  return t;
}

SweepReport property_sweep(const SweepOptions& options) {
  SweepReport report;
  report.seed = options.seed;
  report.iterations = options.iterations;
  Rng rng(options.seed);
  for (int it = 0; it < options.iterations; ++it) {
    auto fail = [&](const std::string& what) {
      report.violations.push_back("iteration " + std::to_string(it) + ": " + what);
    };
    const BraidWord w = random_classical_word(rng, options.max_strands, options.max_length);
    const std::string shown = format_word_with_strands(w);

    const CanonicalResult canon = canonicalize(w);
    ++report.checks;
    const CertificateReport cert = check_certificate(canon.certificate);
    if (!cert.valid) fail("certificate of '" + shown + "' rejected: " + cert.message);
    ++report.checks;
    if (canon.form.lambda != relabel_minimal(linking_matrix(w)).matrix) {
      fail("canonical lambda of '" + shown + "' is not the minimal linking matrix");
    }
    ++report.checks;
    if (closure_components(w).components != canon.form.n) fail("component count of '" + shown + "'");

    const RewriteTrace walk = random_walk(rng, w, uniform(rng, 1, 12), options.max_strands + 1);
    ++report.checks;
    const CanonicalForm moved = canonical_form(walk.end);
    if (moved.n != canon.form.n || moved.lambda != canon.form.lambda || moved.beta != canon.form.beta) {
      fail("walk from '" + shown + "' to '" + format_word_with_strands(walk.end) +
           "' changed the canonical form");
    }

    const BraidWord v = random_word(rng, uniform(rng, 2, options.max_strands),
                                    uniform(rng, 0, options.max_length), 0.35);
    if (auto a = random_move(rng, v, MoveLevel::Word, false)) {
      const BraidWord moved = apply_move(v, *a);
      ++report.checks;
      if (strand_crossing_sums(moved) != strand_crossing_sums(v)) {
        fail(describe(*a) + " on '" + format_word_with_strands(v) + "' changed crossing sums");
      }
      if (move_info(a->kind).preserves_artin) {
        ++report.checks;
        if (!artin_equal(v, moved)) {
          fail(describe(*a) + " on '" + format_word_with_strands(v) + "' changed the Artin image");
        }
      }
    }
  }
  return report;
}

}  // namespace fusedlink
