#include "fusedlink/serialize.hpp"

#include <stdexcept>
#include <string>

#include "fusedlink/errors.hpp"

namespace fusedlink {

using nlohmann::json;

namespace {

std::vector<Generator> letters_from(const json& j) {
  const std::string text = j.get<std::string>();
  return text.empty() ? std::vector<Generator>{} : parse_word(text).letters();
}

std::string letters_text(const std::vector<Generator>& letters) {
  return format_word(BraidWord(1 + std::max_element(letters.begin(), letters.end(),
                                                    [](const Generator& a, const Generator& b) {
                                                      return a.index() < b.index();
                                                    })->index(),
                               letters));
}

std::string letters_or_empty(const std::vector<Generator>& letters) {
  return letters.empty() ? std::string() : letters_text(letters);
}

}  // namespace

void to_json(json& j, const BraidWord& w) { j = format_word_with_strands(w); }

void from_json(const json& j, BraidWord& w) { w = parse_word(j.get<std::string>()); }

void to_json(json& j, const MoveApplication& a) {
  json params = json::object();
  if (is_word_level(a.kind)) {
    params["i"] = a.i;
    if (a.j != 0) params["j"] = a.j;
    params["variant"] = a.variant;
  } else if (a.kind == MoveKind::CYCLIC) {
    params["dir"] = a.sign;
  } else if (a.kind == MoveKind::CONJ) {
    params["word"] = letters_or_empty(a.conjugator);
  } else if (a.kind == MoveKind::STAB_C || a.kind == MoveKind::DESTAB_C) {
    params["sign"] = a.sign;
  }
  j = json{{"kind", std::string(to_string(a.kind))}, {"pos", a.pos}, {"params", params}};
}

void from_json(const json& j, MoveApplication& a) {
  const auto name = j.at("kind").get<std::string>();
  const auto kind = move_kind_from_string(name);
  if (!kind) throw std::invalid_argument("unknown move kind '" + name + "'");
  a = MoveApplication{};
  a.kind = *kind;
  a.pos = j.at("pos").get<int>();
  const json& params = j.contains("params") ? j.at("params") : json::object();
  if (is_word_level(a.kind)) {
    a.i = params.at("i").get<int>();
    a.j = params.value("j", 0);
    a.variant = params.at("variant").get<int>();
  } else if (a.kind == MoveKind::CYCLIC) {
    a.sign = params.at("dir").get<int>();
  } else if (a.kind == MoveKind::CONJ) {
    a.conjugator = letters_from(params.at("word"));
  } else if (a.kind == MoveKind::STAB_C || a.kind == MoveKind::DESTAB_C) {
    a.sign = params.at("sign").get<int>();
  }
}

void to_json(json& j, const RewriteTrace& t) {
  j = json{{"start", t.start}, {"moves", t.moves}, {"end", t.end}};
}

void from_json(const json& j, RewriteTrace& t) {
  t.start = j.at("start").get<BraidWord>();
  t.moves = j.at("moves").get<std::vector<MoveApplication>>();
  t.end = j.at("end").get<BraidWord>();
}

void to_json(json& j, const LastStrandDecomposition& d) {
  j = json{{"W", d.W}, {"r", d.r}, {"t", d.t}};
}

void from_json(const json& j, LastStrandDecomposition& d) {
  d.W = j.at("W").get<BraidWord>();
  d.r = j.at("r").get<std::vector<int>>();
  d.t = j.at("t").get<int>();
}

void to_json(json& j, const CertificateStep& s) {
  json params = json::object();
  switch (s.kind) {
    case StepKind::Conjugate: params["conjugator"] = letters_or_empty(s.conjugator); break;
    case StepKind::NormalForm:
      if (s.decomposition) params["decomposition"] = *s.decomposition;
      break;
    case StepKind::Virtualize:
      params["position"] = s.position;
      params["count"] = s.count;
      break;
    case StepKind::CyclicShift:
      params["count"] = s.count;
      params["direction"] = s.direction;
      break;
    case StepKind::FinalAbelianize: params["labels"] = s.labels; break;
    default: break;
  }
  j = json{{"kind", std::string(to_string(s.kind))},
           {"input", s.input},
           {"output", s.output},
           {"trace", s.trace ? json(*s.trace) : json(nullptr)},
           {"params", params}};
}

void from_json(const json& j, CertificateStep& s) {
  const auto name = j.at("kind").get<std::string>();
  const auto kind = step_kind_from_string(name);
  if (!kind) throw std::invalid_argument("unknown step kind '" + name + "'");
  s = CertificateStep{};
  s.kind = *kind;
  s.input = j.at("input").get<BraidWord>();
  s.output = j.at("output").get<BraidWord>();
  if (j.contains("trace") && !j.at("trace").is_null()) s.trace = j.at("trace").get<RewriteTrace>();
  const json& params = j.contains("params") ? j.at("params") : json::object();
  switch (s.kind) {
    case StepKind::Conjugate: s.conjugator = letters_from(params.at("conjugator")); break;
    case StepKind::NormalForm:
      if (params.contains("decomposition")) {
        s.decomposition = params.at("decomposition").get<LastStrandDecomposition>();
      }
      break;
    case StepKind::Virtualize:
      s.position = params.at("position").get<int>();
      s.count = params.at("count").get<int>();
      break;
    case StepKind::CyclicShift:
      s.count = params.at("count").get<int>();
      s.direction = params.value("direction", -1);
      break;
    case StepKind::FinalAbelianize: s.labels = params.at("labels").get<std::vector<int>>(); break;
    default: break;
  }
}

void to_json(json& j, const Certificate& c) {
  j = json{{"format", kCertificateFormat}, {"start", c.start}, {"steps", c.steps}, {"end", c.end}};
}

void from_json(const json& j, Certificate& c) {
  if (j.value("format", std::string()) != kCertificateFormat) {
    throw std::invalid_argument(std::string("expected format ") + kCertificateFormat);
  }
  c.start = j.at("start").get<BraidWord>();
  c.steps = j.at("steps").get<std::vector<CertificateStep>>();
  c.end = j.at("end").get<BraidWord>();
}

void to_json(json& j, const SquareMatrix& m) {
  j = json::array();
  for (int r = 1; r <= m.size(); ++r) {
    json row = json::array();
    for (int c = 1; c <= m.size(); ++c) row.push_back(m.at(r, c));
    j.push_back(std::move(row));
  }
}

void to_json(json& j, const CanonicalForm& f) {
  j = json{{"n", f.n},
           {"lambda", static_cast<const SquareMatrix&>(f.lambda)},
           {"beta", format_word(f.beta)},
           {"labeling", f.labeling}};
}

void to_json(json& j, const CertificateReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"index", s.index},
                     {"kind", std::string(to_string(s.kind))},
                     {"validation", s.validation == Validation::Elementary ? "elementary" : "invariant"},
                     {"ok", s.ok},
                     {"detail", s.detail}});
  }
  j = json{{"valid", r.valid},
           {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
           {"message", r.message},
           {"steps", steps}};
}

void to_json(json& j, const ChainStep& s) {
  j = json{{"justification", s.justification},
           {"method", std::string(to_string(s.method))},
           {"from", s.from},
           {"to", s.to},
           {"trace", s.trace},
           {"ok", s.ok},
           {"detail", s.detail}};
}

void to_json(json& j, const LemmaReport& r) {
  j = json{{"lemma", std::string(to_string(r.id))},
           {"i", r.i},
           {"j", r.j},
           {"k", r.k},
           {"m", r.m},
           {"left", r.left},
           {"right", r.right},
           {"ok", r.ok()},
           {"replay_ok", r.replay_ok},
           {"sides_artin_equal", r.sides_artin_equal},
           {"bfs_found", r.bfs_found ? json(*r.bfs_found) : json(nullptr)},
           {"bfs_states", r.bfs_states},
           {"failure", r.failure},
           {"steps", r.steps}};
}

void to_json(json& j, const DerivationReport& r) {
  j = json{{"kind", std::string(to_string(r.kind))},
           {"left", r.left},
           {"right", r.right},
           {"found", r.trace.has_value()},
           {"states", r.states},
           {"budget_exhausted", r.budget_exhausted},
           {"trace", r.trace ? json(*r.trace) : json(nullptr)}};
}

json invariants_json(const BraidWord& w) {
  const ComponentAssignment comps = closure_components(w);
  const Permutation perm = permutation_of(w);
  json out{{"word", w},
           {"strands", w.strands()},
           {"components", comps.components},
           {"component_of", comps.component_of},
           {"permutation", perm.images()},
           {"pure", perm.is_identity()},
           {"classical", w.is_classical()},
           {"crossing_sums", static_cast<const SquareMatrix&>(crossing_sums(w))}};
  try {
    out["linking_matrix"] = static_cast<const SquareMatrix&>(linking_matrix(w));
  } catch (const OddLinkingSum&) {
    out["linking_matrix"] = nullptr;
  }
  return out;
}

}  // namespace fusedlink
