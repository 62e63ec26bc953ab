#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusedlink/search.hpp"

namespace fusedlink {

enum class LemmaId { Pfa, Central, Commute, TauSlide, MoveDerivation };
enum class Method { Replay, Bfs, Artin };

std::string_view to_string(LemmaId id);
std::string_view to_string(Method method);

/// One link of a proof chain. Every step carries the elementary
/// trace from `from` to `to`; Artin steps are additionally required to have
/// equal Artin images (they are classical or welded rewrites).
struct ChainStep {
  std::string justification;
  Method method = Method::Replay;
  BraidWord from;
  BraidWord to;
  RewriteTrace trace;
  bool ok = false;
  std::string detail;
};

struct LemmaReport {
  LemmaId id = LemmaId::Pfa;
  int i = 0;
  int j = 0;
  int k = 0;
  int m = 0;
  BraidWord left;
  BraidWord right;
  std::vector<ChainStep> steps;
  /// The chain flattened into one elementary trace from left to right.
  RewriteTrace trace;
  bool replay_ok = false;
  /// Whether the two sides already agree in B_m / WB_m.
  bool sides_artin_equal = false;
  /// Set when an independent search ran.
  std::optional<bool> bfs_found;
  std::size_t bfs_states = 0;
  std::string failure;

  bool ok() const;
};

struct LemmaOptions {
  bool bfs = false;
  /// max_length 0 means the default max(|left|, |right|) + 6.
  SearchBudget budget{0, 2'000'000};
};

/// Instances are validated rather than thrown: a template or replay failure
/// is reported in `failure` with the failing step. Out-of-range indices
/// throw std::invalid_argument.
LemmaReport check_eq_pfa(int j, int m, const LemmaOptions& options = {});
LemmaReport check_lemma_central(int i, int j, int m, const LemmaOptions& options = {});
LemmaReport check_lemma_commute(int k, int i, int j, int m, const LemmaOptions& options = {});
LemmaReport check_lemma_tau(int i, int j, int m, const LemmaOptions& options = {});

struct DerivationReport {
  MoveKind kind = MoveKind::M1;
  BraidWord left;
  BraidWord right;
  std::optional<RewriteTrace> trace;
  std::size_t states = 0;
  bool budget_exhausted = false;
};

/// Searches for M1, M2 and M3 (indices 1, 2 on 3 strands) using only R2,
/// R3, FAR, V2, V3, MIXED, F_O and F_U. A missing trace only means "not
/// found within budget".
std::vector<DerivationReport> derive_M_moves(const SearchBudget& budget);

struct SuiteOptions {
  int max_strands = 6;
  /// Search-confirm the smallest instance of each lemma.
  bool bfs = true;
  bool derive_m_moves = false;
  SearchBudget derivation_budget{0, 200'000};
};

struct SuiteReport {
  std::vector<LemmaReport> lemmas;
  std::vector<DerivationReport> derivations;
  bool ok() const;
};

SuiteReport run_lemma_suite(const SuiteOptions& options = {});

}  // namespace fusedlink
