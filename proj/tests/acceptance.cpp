// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "fusedlink/artin.hpp"
#include "fusedlink/errors.hpp"
#include "fusedlink/lemmas.hpp"
#include "fusedlink/random.hpp"
#include "fusedlink/reducer.hpp"
#include "fusedlink/serialize.hpp"
#include "oracles.hpp"
#include "planted.hpp"

using namespace fusedlink;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failed) + " failures, first: " + first};
  }
};

int cli(const std::string& args) {
  const std::string command = std::string(FUSEDLINK_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string tmp(const std::string& name) { return std::string(FUSEDLINK_TMP) + "/" + name; }

std::string shown(const BraidWord& w) { return "'" + format_word_with_strands(w) + "'"; }

oracle::Matrix half(oracle::Matrix m) {
  for (auto& row : m)
    for (int& x : row) x /= 2;
  return m;
}

oracle::Matrix rows(const SquareMatrix& m) {
  oracle::Matrix out(static_cast<std::size_t>(m.size()), std::vector<int>(static_cast<std::size_t>(m.size())));
  for (int r = 1; r <= m.size(); ++r)
    for (int c = 1; c <= m.size(); ++c) out[r - 1][c - 1] = m.at(r, c);
  return out;
}

Outcome unknotting() {
  Rng rng(1001);
  Tally tally;
  int words = 0;
  while (words < 200) {
    const BraidWord w = random_word(rng, std::uniform_int_distribution<int>(2, 5)(rng),
                                    std::uniform_int_distribution<int>(1, 25)(rng));
    if (oracle::component_count(w) != 1) continue;
    ++words;
    const CanonicalForm f = canonical_form(w);
    tally.check(f.n == 1 && f.beta == BraidWord(1, {}) && f.lambda == LinkingMatrix(1), shown(w));
  }
  return tally.outcome(std::to_string(words) + " knots canonicalize to the empty 1-strand word");
}

Outcome soundness() {
  Rng rng(1002);
  Tally tally;
  std::map<std::string, int> per_kind;
  for (int it = 0; it < 10'000; ++it) {
    BraidWord w(1, {});
    MoveApplication a;
    if (it % 2 == 0) {
      const MoveKind kind = planted::kWordKinds[static_cast<std::size_t>(it / 2) % std::size(planted::kWordKinds)];
      const auto inst = planted::plant(rng, kind, std::uniform_int_distribution<int>(4, 6)(rng), 8);
      w = inst.word;
      a = inst.move;
    } else {
      w = random_word(rng, std::uniform_int_distribution<int>(2, 5)(rng),
                      std::uniform_int_distribution<int>(0, 16)(rng), 0.3);
      a = *random_move(rng, w, MoveLevel::Closure, false, 7);
    }
    ++per_kind[std::string(to_string(a.kind))];
    const BraidWord out = apply_move(w, a);
    const std::string what = describe(a) + " on " + shown(w);
    tally.check(oracle::component_count(out) == oracle::component_count(w), what + " (components)");
    const auto before = oracle::component_sums(w);
    const auto after = oracle::component_sums(out);
    if (is_word_level(a.kind)) {
      tally.check(after == before, what + " (crossing sums)");
    } else {
      const auto map = component_correspondence(w, a);
      bool same = true;
      for (std::size_t r = 0; r < after.size(); ++r)
        for (std::size_t c = 0; c < after.size(); ++c) same &= after[r][c] == before[map[r] - 1][map[c] - 1];
      tally.check(same && oracle::minimal_relabel(after) == oracle::minimal_relabel(before),
                  what + " (crossing sums)");
    }
  }
  return tally.outcome("10000 (word, move) pairs over " + std::to_string(per_kind.size()) +
                       " move kinds keep components and 2*linking exactly");
}

Outcome completeness() {
  Rng rng(1003);
  Tally tally;
  long length_gap = 0;
  for (int it = 0; it < 200; ++it) {
    const BraidWord seed = random_word(rng, std::uniform_int_distribution<int>(2, 4)(rng),
                                       std::uniform_int_distribution<int>(0, 12)(rng));
    const BraidWord a = random_walk(rng, seed, std::uniform_int_distribution<int>(1, 20)(rng), 6).end;
    const BraidWord b = random_walk(rng, seed, std::uniform_int_distribution<int>(1, 20)(rng), 6).end;
    length_gap += std::abs(static_cast<long>(a.size()) - static_cast<long>(b.size()));
    const std::string what = shown(a) + " vs " + shown(b);
    const bool same_invariants =
        oracle::component_count(a) == oracle::component_count(b) &&
        oracle::minimal_relabel(oracle::component_sums(a)) == oracle::minimal_relabel(oracle::component_sums(b));
    tally.check(same_invariants, what + " (generated pair has different invariants)");
    tally.check(fused_equivalent(a, b), what + " (not equivalent)");
    const CanonicalForm fa = canonical_form(a);
    const CanonicalForm fb = canonical_form(b);
    tally.check(fa.n == fb.n && fa.lambda == fb.lambda && fa.beta == fb.beta, what + " (different canonical words)");
  }
  std::ostringstream s;
  s << "200 walked pairs equivalent with identical canonical words (mean length gap "
    << static_cast<double>(length_gap) / 200.0 << ")";
  return tally.outcome(s.str());
}

Outcome borromean() {
  Tally tally;
  const BraidWord w = parse_word("s1 S2 s1 S2 s1 S2");
  const CanonicalResult r = canonicalize(w);
  tally.check(r.form.n == 3, "n");
  tally.check(r.form.lambda == LinkingMatrix(3), "lambda");
  tally.check(r.form.beta == BraidWord(3, {}), "beta " + shown(r.form.beta));
  tally.check(check_certificate(r.certificate).valid, "certificate");
  tally.check(fused_equivalent(w, parse_word("n=3")), "library equiv");
  tally.check(cli("equiv 's1 S2 s1 S2 s1 S2' 'n=3'") == 0, "cli equiv");
  return tally.outcome("n = 3, lambda = 0, beta empty on 3 strands, equivalent to the trivial 3-strand braid");
}

Outcome hopf() {
  Tally tally;
  const CanonicalForm h = canonical_form(parse_word("s1 s1"));
  const CanonicalForm u = canonical_form(parse_word("n=2"));
  tally.check(h.lambda.at(1, 2) == 1 && u.lambda.at(1, 2) == 0, "lambda entries");
  tally.check(!fused_equivalent(parse_word("s1 s1"), parse_word("n=2")), "library equiv");
  tally.check(cli("equiv 's1 s1' 'n=2'") == 1, "cli equiv");
  return tally.outcome("inequivalent, lambda(1,2) = 1 vs 0");
}

Outcome lemma_suite() {
  Tally tally;
  const SuiteReport suite = run_lemma_suite({6, true, false, {0, 200'000}});
  std::set<std::tuple<LemmaId, int, int, int, int>> seen;
  for (const LemmaReport& r : suite.lemmas) {
    const std::string what = std::string(to_string(r.id)) + " i=" + std::to_string(r.i) + " j=" + std::to_string(r.j) +
                             " k=" + std::to_string(r.k) + " m=" + std::to_string(r.m);
    tally.check(r.ok() && r.replay_ok, what + ": " + r.failure);
    tally.check(replay(r.trace) == r.right && r.trace.start == r.left, what + " (trace)");
    seen.insert({r.id, r.i, r.j, r.k, r.m});
  }
  // every index instance with m <= 6 must be present
  int expected = 0;
  for (int m = 3; m <= 6; ++m) {
    for (int j = 2; j <= m - 1; ++j) {
      ++expected;
      tally.check(seen.count({LemmaId::Pfa, 0, j, 0, m}) == 1, "missing pfa j=" + std::to_string(j));
      for (int i = 1; i < j; ++i) {
        expected += 2;
        tally.check(seen.count({LemmaId::Central, i, j, 0, m}) == 1, "missing central");
        tally.check(seen.count({LemmaId::TauSlide, i, j, 0, m}) == 1, "missing tau-slide");
      }
      for (int i = 2; i <= j; ++i) {
        for (int k = 1; k < i; ++k) {
          ++expected;
          tally.check(seen.count({LemmaId::Commute, i, j, k, m}) == 1, "missing commute");
        }
      }
    }
  }
  tally.check(static_cast<int>(suite.lemmas.size()) == expected, "instance count " + std::to_string(suite.lemmas.size()));
  std::map<LemmaId, bool> searched;
  std::size_t states = 0;
  for (const LemmaReport& r : suite.lemmas) {
    if (!r.bfs_found) continue;
    searched[r.id] = *r.bfs_found;
    states += r.bfs_states;
  }
  for (LemmaId id : {LemmaId::Pfa, LemmaId::Central, LemmaId::Commute, LemmaId::TauSlide}) {
    tally.check(searched.count(id) == 1 && searched[id], std::string(to_string(id)) + " not confirmed by search");
  }
  return tally.outcome(std::to_string(suite.lemmas.size()) + " instances replayed, 4 smallest instances found by search (" +
                       std::to_string(states) + " states)");
}

Outcome oracle_discipline() {
  Rng rng(1007);
  Tally tally;
  const MoveKind flagged[] = {MoveKind::R2, MoveKind::R3,    MoveKind::FAR, MoveKind::V2,
                              MoveKind::V3, MoveKind::MIXED, MoveKind::F_O};
  for (int it = 0; it < 10'000; ++it) {
    const MoveKind kind = flagged[static_cast<std::size_t>(it) % std::size(flagged)];
    const auto inst = planted::plant(rng, kind, std::uniform_int_distribution<int>(4, 6)(rng), 8);
    const BraidWord out = apply_move(inst.word, inst.move);
    tally.check(artin_equal(inst.word, out), describe(inst.move) + " on " + shown(inst.word));
    tally.check(oracle::artin(inst.word) == oracle::artin(out), describe(inst.move) + " (reference action)");
  }
  int fu_changed = 0;
  for (int it = 0; it < 200; ++it) {
    const auto inst = planted::plant(rng, MoveKind::F_U, 3 + it % 3, 4);
    fu_changed += !artin_equal(inst.word, apply_move(inst.word, inst.move));
  }
  tally.check(fu_changed > 0, "no F_U instance changed the Artin image");
  LemmaOptions quick;
  quick.bfs = false;
  for (const LemmaReport& r : {check_eq_pfa(2, 3, quick), check_lemma_central(1, 2, 3, quick),
                               check_lemma_commute(1, 2, 2, 3, quick)}) {
    tally.check(!artin_equal(r.left, r.right) && oracle::artin(r.left) != oracle::artin(r.right),
                std::string(to_string(r.id)) + " sides are Artin-equal");
  }
  return tally.outcome("10000 flagged moves keep the image; " + std::to_string(fu_changed) +
                       "/200 F_U instances change it; pfa, central and commute sides differ");
}

// Changes step k so that the certificate no longer holds there.
bool tamper(Rng& rng, Certificate& c, std::size_t k) {
  CertificateStep& s = c.steps[k];
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: s.output = concat(s.output, parse_word("s1 S1")); return true;
    case 1: s.input = concat(s.input, parse_word("S1 s1")); return true;
    case 2:
      if (!s.trace || s.trace->moves.empty()) return false;
      s.trace->moves.erase(s.trace->moves.begin() +
                           std::uniform_int_distribution<long>(0, static_cast<long>(s.trace->moves.size()) - 1)(rng));
      return true;
    default:
      switch (s.kind) {
        case StepKind::Conjugate: s.conjugator.push_back(Generator::sigma(1, 1)); return true;
        case StepKind::NormalForm: s.decomposition->r.front() += 1; return true;
        case StepKind::Virtualize: s.position += 1; return true;
        case StepKind::CyclicShift: s.count += 1; return true;
        case StepKind::FinalAbelianize:
          s.labels.front() = static_cast<int>(s.labels.size()) + 1;
          return true;
        default: return false;
      }
  }
}

Outcome certificates() {
  Rng rng(1008);
  Tally tally;
  std::vector<Certificate> certs;
  for (int it = 0; it < 200; ++it) {
    const BraidWord w = random_classical_word(rng, 6, 30);
    const Certificate c = canonicalize(w).certificate;
    const Certificate back = nlohmann::json::parse(nlohmann::json(c).dump()).get<Certificate>();
    tally.check(check_certificate(back).valid, "emitted certificate rejected for " + shown(w));
    if (!c.steps.empty()) certs.push_back(c);
  }
  for (int it = 0; it < 5; ++it) {
    const std::string path = tmp("accept_cert_" + std::to_string(it) + ".json");
    tally.check(cli("reduce '" + format_word_with_strands(certs[static_cast<std::size_t>(it)].start) +
                    "' --certificate " + path) == 0 &&
                    cli("verify-cert " + path) == 0,
                "cli reduce/verify-cert");
  }
  int tampered = 0;
  while (tampered < 100) {
    Certificate c = certs[std::uniform_int_distribution<std::size_t>(0, certs.size() - 1)(rng)];
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, c.steps.size() - 1)(rng);
    if (!tamper(rng, c, k)) continue;
    ++tampered;
    const Certificate parsed = nlohmann::json::parse(nlohmann::json(c).dump()).get<Certificate>();
    const CertificateReport report = check_certificate(parsed);
    tally.check(!report.valid, "tampered step " + std::to_string(k) + " accepted");
    tally.check(report.first_failure && (*report.first_failure == k || *report.first_failure == k + 1),
                "tampered step " + std::to_string(k) + " reported at " +
                    (report.first_failure ? std::to_string(*report.first_failure) : "none"));
    if (tampered % 20 == 0) {
      const std::string path = tmp("accept_tampered.json");
      std::ofstream(path) << nlohmann::json(c).dump();
      tally.check(cli("verify-cert " + path) == 1, "cli accepted a tampered certificate");
    }
  }
  return tally.outcome("200 emitted certificates verify; 100 tampered certificates fail at the tampered step or the next");
}

Outcome comb_round_trip() {
  Rng rng(1009);
  Tally tally;
  for (int it = 0; it < 1000; ++it) {
    const int m = std::uniform_int_distribution<int>(2, 6)(rng);
    const BraidWord w = random_word(rng, m, std::uniform_int_distribution<int>(0, 40)(rng));
    const LastStrandDecomposition d = comb_last_strand(w);
    const BraidWord back = recompose(d);
    const std::string what = shown(w);
    tally.check(oracle::permutation(back) == oracle::permutation(w), what + " (permutation)");
    tally.check(oracle::component_sums(back) == oracle::component_sums(w), what + " (linking)");
    const BraidWord y = concat(w, invert(oracle::B(oracle::permutation(w)[m - 1], m, m)));
    tally.check(d.W == oracle::delete_strand(y, m), what + " (strand deletion)");
    tally.check(rows(linking_matrix(back)) == half(oracle::component_sums(w)), what + " (linking matrix)");
  }
  return tally.outcome("1000 decompositions recompose with exact permutation and linking; W matches strand deletion");
}

Outcome non_classical_guard() {
  Rng rng(1010);
  Tally tally;
  auto throws = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const NonClassicalInput&) {
      return true;
    } catch (...) {
      return false;
    }
    return false;
  };
  for (int it = 0; it < 200; ++it) {
    const int m = std::uniform_int_distribution<int>(2, 5)(rng);
    BraidWord w = random_word(rng, m, std::uniform_int_distribution<int>(0, 15)(rng), 0.3);
    if (w.is_classical()) w = concat(w, BraidWord(m, {Generator::tau(1)}));
    const BraidWord other = random_word(rng, m, 6);
    tally.check(throws([&] { canonical_form(w); }), "canonical_form " + shown(w));
    tally.check(throws([&] { canonicalize(w); }), "canonicalize " + shown(w));
    tally.check(throws([&] { fused_equivalent(w, other); }), "fused_equivalent " + shown(w));
    tally.check(throws([&] { fused_equivalent(other, w); }), "fused_equivalent (second) " + shown(w));
    if (it < 10) {
      tally.check(cli("canon '" + format_word_with_strands(w) + "'") == 2, "cli canon");
      tally.check(cli("equiv '" + format_word_with_strands(other) + "' '" + format_word_with_strands(w) + "'") == 2,
                  "cli equiv");
    }
  }
  tally.check(cli("equiv 's1 t1 S1 t1' ''") == 2, "cli equiv on the open example");
  return tally.outcome("200 virtual words rejected by canonical_form, canonicalize and fused_equivalent; CLI exits 2");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 when untimed
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "unknotting", 10, unknotting},
      {2, "move soundness", 30, soundness},
      {3, "completeness at desk scale", 60, completeness},
      {4, "Borromean collapse", 0, borromean},
      {5, "Hopf separation", 0, hopf},
      {6, "lemma suite", 120, lemma_suite},
      {7, "oracle discipline", 0, oracle_discipline},
      {8, "certificate integrity", 0, certificates},
      {9, "decomposition round trip", 30, comb_round_trip},
      {10, "non-classical guard", 0, non_classical_guard},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && seconds > c.limit) {
      outcome.pass = false;
      outcome.detail += "; over the " + std::to_string(static_cast<int>(c.limit)) + " s limit";
    }
    failures += !outcome.pass;
    std::printf("%s criterion %2d (%s): %s [%.2f s%s]\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), seconds,
                c.limit > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit)) + " s").c_str() : "");
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
