#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusedlink/elements.hpp"
#include "fusedlink/search.hpp"
#include "fusedlink/topology.hpp"

namespace fusedlink {

/// Top-level combing of a classical word w on m >= 2 strands:
///   w ~ iota(W) * prod_{i<m} A_{i,m}^{r_i} * B_{t,m}
/// where t = perm(w)(m), W is w * B_{t,m}^-1 with strand m deleted, and
/// r_i is half the signed crossing count between strand m and the strand
/// that ends at position i of w * B_{t,m}^-1.
struct LastStrandDecomposition {
  BraidWord W;
  /// r[i - 1] = r_i for i = 1..m-1.
  std::vector<int> r;
  int t = 1;

  int strands() const noexcept { return W.strands() + 1; }
  friend bool operator==(const LastStrandDecomposition&, const LastStrandDecomposition&) = default;
};

LastStrandDecomposition comb_last_strand(const BraidWord& w);

/// iota(W) * prod_i A_{i,m}^{r_i} * B_{t,m} (A in the requested spelling).
BraidWord recompose(const LastStrandDecomposition& d, AForm form = AForm::Right);

/// iota(W) * prod_{i<=m-2} A^R_{i,m}^{r_i} * s_{m-1}^{2 r_{m-1} + 1} * B_{t,m-1}.
/// Requires t < m.
BraidWord normal_form_word(const LastStrandDecomposition& d);

enum class StepKind {
  Conjugate,
  NormalForm,
  Virtualize,
  TauSlide,
  CyclicShift,
  DestabilizeVirtual,
  FinalAbelianize,
};

std::string_view to_string(StepKind kind);
std::optional<StepKind> step_kind_from_string(std::string_view name);

/// One macro step. Only the parameters of its own kind are meaningful.
struct CertificateStep {
  StepKind kind = StepKind::Conjugate;
  BraidWord input;
  BraidWord output;
  std::optional<RewriteTrace> trace;

  std::vector<Generator> conjugator;                      // Conjugate
  std::optional<LastStrandDecomposition> decomposition;   // NormalForm
  int position = 0;  // Virtualize: 1-based first letter of the replaced run
  int count = 0;     // Virtualize: run length; CyclicShift: number of shifts
  int direction = -1;                                     // CyclicShift
  std::vector<int> labels;                                // FinalAbelianize

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

struct Certificate {
  BraidWord start;
  std::vector<CertificateStep> steps;
  BraidWord end;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ConjugateResult {
  BraidWord word;
  CertificateStep step;
};

/// Conjugates by B_{1,m}^{m-s} and freely reduces, so that the strand at
/// position s of w ends up at position m.
ConjugateResult bring_strand_last(const BraidWord& w, int s);

struct StepResult {
  BraidWord word;
  std::vector<CertificateStep> steps;
};

/// One reduction round on a classical word whose permutation moves m:
/// NormalForm, Virtualize, TauSlide, CyclicShift, DestabilizeVirtual and a
/// final CyclicShift giving W v_{m-1} B_{t,m-1} on m-1 strands.
StepResult reduce_step(const BraidWord& w);

struct PureResult {
  BraidWord beta;
  Certificate certificate;
  /// origin[c - 1]: component of the input closure that strand c of beta
  /// belongs to.
  std::vector<int> origin;
  int rounds = 0;
};

/// Repeats bring_strand_last (s = largest non-fixed position) and
/// reduce_step until the braid is pure. Throws NonClassicalInput.
PureResult reduce_to_pure(const BraidWord& w);

struct CanonicalForm {
  int n = 1;
  LinkingMatrix lambda;
  BraidWord beta;
  /// labeling[k - 1]: input component receiving canonical label k.
  std::vector<int> labeling;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct ReduceOptions {
  /// Try to replace the invariant-only FinalAbelianize justification by a
  /// searched elementary trace when n <= 3 and |beta| <= 10.
  bool bfs_upgrade = true;
  std::size_t upgrade_states = 5'000;
};

struct CanonicalResult {
  CanonicalForm form;
  Certificate certificate;
  int rounds = 0;
};

CanonicalResult canonicalize(const BraidWord& w, const ReduceOptions& options = {});
CanonicalForm canonical_form(const BraidWord& w);

/// prod_{k=2..n} prod_{i<k} A^L_{i,k}^{lambda(i,k)} on n strands.
BraidWord canonical_beta(const SquareMatrix& lambda);

/// Closure component count and relabel-minimal linking matrix agree.
/// Throws NonClassicalInput for words with virtual letters.
bool fused_equivalent(const BraidWord& a, const BraidWord& b);

enum class Validation { Elementary, Invariant };

struct StepReport {
  std::size_t index = 0;
  StepKind kind = StepKind::Conjugate;
  Validation validation = Validation::Invariant;
  bool ok = false;
  std::string detail;
};

struct CertificateReport {
  bool valid = false;
  std::vector<StepReport> steps;
  /// Index of the first failing step; equals steps.size() when only the
  /// final end-word comparison failed.
  std::optional<std::size_t> first_failure;
  std::string message;
};

CertificateReport check_certificate(const Certificate& c);

}  // namespace fusedlink
