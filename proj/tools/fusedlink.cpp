#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "fusedlink/errors.hpp"
#include "fusedlink/random.hpp"
#include "fusedlink/serialize.hpp"

namespace {

using namespace fusedlink;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitNonClassical = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// "@path" reads the word from a file; anything else is the word itself.
BraidWord word_arg(const std::string& arg) {
  return parse_word(arg.starts_with('@') ? slurp(arg.substr(1)) : arg);
}

void require_classical(const BraidWord& w) {
  if (!w.is_classical()) throw NonClassicalInput("'" + format_word(w) + "' contains a virtual crossing");
}

int cmd_canon(const std::string& word) {
  const BraidWord w = word_arg(word);
  require_classical(w);
  std::cout << json(canonical_form(w)).dump(2) << '\n';
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b) {
  const BraidWord u = word_arg(a);
  const BraidWord v = word_arg(b);
  require_classical(u);
  require_classical(v);
  const bool same = fused_equivalent(u, v);
  std::cout << (same ? "equivalent" : "inequivalent") << '\n';
  return same ? 0 : 1;
}

int cmd_invariants(const std::string& word) {
  std::cout << invariants_json(word_arg(word)).dump(2) << '\n';
  return 0;
}

int cmd_reduce(const std::string& word, const std::string& cert_path, bool upgrade) {
  const BraidWord w = word_arg(word);
  require_classical(w);
  ReduceOptions options;
  options.bfs_upgrade = upgrade;
  const CanonicalResult result = canonicalize(w, options);
  json out{{"canonical", result.form}, {"rounds", result.rounds},
           {"steps", result.certificate.steps.size()}};
  if (cert_path.empty()) {
    out["certificate"] = result.certificate;
  } else {
    std::ofstream file(cert_path);
    if (!file) throw UsageError("cannot write '" + cert_path + "'");
    file << json(result.certificate).dump(1) << '\n';
    out["certificate_path"] = cert_path;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::string& path) {
  Certificate cert;
  try {
    cert = json::parse(slurp(path)).get<Certificate>();
  } catch (const json::exception& e) {
    std::cerr << "malformed certificate: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed certificate: " << e.what() << '\n';
    return kExitParse;
  }
  const CertificateReport report = check_certificate(cert);
  std::cout << json(report).dump(2) << '\n';
  return report.valid ? 0 : 1;
}

int cmd_lemmas(int max_strands, bool bfs, bool derive, bool as_json) {
  SuiteOptions options;
  options.max_strands = max_strands;
  options.bfs = bfs;
  options.derive_m_moves = derive;
  const SuiteReport report = run_lemma_suite(options);
  if (as_json) {
    std::cout << json{{"ok", report.ok()}, {"lemmas", report.lemmas}, {"derivations", report.derivations}}
                     .dump(2)
              << '\n';
    return report.ok() ? 0 : 1;
  }
  int passed = 0;
  for (const auto& r : report.lemmas) {
    passed += r.ok();
    std::cout << (r.ok() ? "ok   " : "FAIL ") << to_string(r.id) << " i=" << r.i << " j=" << r.j
              << " k=" << r.k << " m=" << r.m;
    if (r.bfs_found) std::cout << " bfs=" << (*r.bfs_found ? "found" : "missed") << '/' << r.bfs_states;
    if (!r.sides_artin_equal) std::cout << " artin-unequal";
    if (!r.ok()) std::cout << "  " << r.failure;
    std::cout << '\n';
  }
  for (const auto& d : report.derivations) {
    std::cout << (d.trace ? "ok   " : "FAIL ") << "derive " << to_string(d.kind) << " states=" << d.states
              << '\n';
  }
  std::cout << passed << '/' << report.lemmas.size() << " lemma instances verified\n";
  return report.ok() ? 0 : 1;
}

int cmd_bfs(const std::string& a, const std::string& b, std::size_t max_states, int max_length,
            bool closure) {
  const BraidWord u = word_arg(a);
  const BraidWord v = word_arg(b);
  SearchBudget budget = default_budget(u, v);
  budget.max_states = max_states;
  if (max_length > 0) budget.max_length = max_length;
  SearchOptions options;
  options.level = closure ? MoveLevel::Closure : MoveLevel::Word;
  const SearchResult result = bfs_search(u, v, budget, options);
  std::cerr << "states: " << result.states << '\n';
  if (!result.trace) {
    std::cout << "not found";
    if (result.invariant_mismatch) std::cout << " (invariants differ)";
    else if (result.budget_exhausted) std::cout << " (budget exhausted)";
    std::cout << '\n';
    return 1;
  }
  std::cout << json(*result.trace).dump(2) << '\n';
  return 0;
}

int cmd_random_test(std::uint64_t seed, int iterations, int max_strands, int max_length) {
  std::cout << "seed " << seed << '\n';
  const SweepReport report = property_sweep({seed, iterations, max_strands, max_length});
  for (const auto& v : report.violations) std::cout << "violation " << v << '\n';
  std::cout << report.iterations << " iterations, " << report.checks << " checks, "
            << report.violations.size() << " violations\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical forms and certificates for classical links under fused isotopy"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "fusedlink 1.0.0");

  std::string w1, w2, path;
  auto* canon = app.add_subcommand("canon", "canonical form of a classical braid closure (JSON)");
  canon->add_option("word", w1, "braid word, or @file")->required();

  auto* equiv = app.add_subcommand("equiv", "decide fused equivalence of two classical closures");
  equiv->add_option("word1", w1)->required();
  equiv->add_option("word2", w2)->required();

  auto* inv = app.add_subcommand("invariants", "components, linking matrix and permutation (JSON)");
  inv->add_option("word", w1)->required();

  bool no_upgrade = false;
  auto* reduce = app.add_subcommand("reduce", "canonicalize and emit a certificate");
  reduce->add_option("word", w1)->required();
  reduce->add_option("--certificate", path, "write the certificate here instead of stdout");
  reduce->add_flag("--no-upgrade", no_upgrade, "skip the bounded search on invariant-only steps");

  auto* verify = app.add_subcommand("verify-cert", "check a certificate file");
  verify->add_option("path", path)->required();

  int max_strands = 6;
  bool no_bfs = false, derive = false, as_json = false;
  auto* lemmas = app.add_subcommand("lemmas", "replay and search-confirm the lemma identities");
  lemmas->add_option("--max-strands", max_strands)->check(CLI::Range(3, 9));
  lemmas->add_flag("--no-bfs", no_bfs, "skip search confirmation");
  lemmas->add_flag("--derive", derive, "also derive M1, M2, M3 from the base moves");
  lemmas->add_flag("--json", as_json);

  std::size_t max_states = 2'000'000;
  int max_length = 0;
  bool closure = false;
  auto* bfs = app.add_subcommand("bfs", "bounded bidirectional search for a rewrite trace");
  bfs->add_option("word1", w1)->required();
  bfs->add_option("word2", w2)->required();
  bfs->add_option("--max-states", max_states, "default 2000000");
  bfs->add_option("--max-length", max_length, "default max(|w1|,|w2|) + 6");
  bfs->add_flag("--closure", closure, "allow cyclic shifts, conjugation and (de)stabilization");

  std::uint64_t seed = 20240611;
  int iterations = 200, sweep_strands = 5, sweep_length = 20;
  auto* random = app.add_subcommand("random-test", "seeded randomized property sweep");
  random->add_option("--seed", seed, "default 20240611");
  random->add_option("--iterations", iterations)->check(CLI::NonNegativeNumber);
  random->add_option("--max-strands", sweep_strands)->check(CLI::Range(1, 8));
  random->add_option("--max-length", sweep_length)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*canon) return cmd_canon(w1);
    if (*equiv) return cmd_equiv(w1, w2);
    if (*inv) return cmd_invariants(w1);
    if (*reduce) return cmd_reduce(w1, path, !no_upgrade);
    if (*verify) return cmd_verify(path);
    if (*lemmas) return cmd_lemmas(max_strands, !no_bfs, derive, as_json);
    if (*bfs) return cmd_bfs(w1, w2, max_states, max_length, closure);
    if (*random) return cmd_random_test(seed, iterations, sweep_strands, sweep_length);
  } catch (const NonClassicalInput& e) {
    std::cerr << e.what() << '\n';
    return kExitNonClassical;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
