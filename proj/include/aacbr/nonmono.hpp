#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "aacbr/aacbr.hpp"
#include "aacbr/caacbr.hpp"
#include "aacbr/casebase.hpp"
#include "aacbr/errors.hpp"

namespace aacbr {

// ---------------------------------------------------------------------------
// Sentences and the inference relation
// ---------------------------------------------------------------------------

/// A labelled example (x, y), or its negation ¬(x, y).
struct Sentence {
  bool negated = false;
  Characterisation characterisation;
  Outcome outcome = Outcome::Default;

  static Sentence positive(Characterisation x, Outcome y) { return {false, std::move(x), y}; }
  static Sentence negative(Characterisation x, Outcome y) { return {true, std::move(x), y}; }

  Sentence negate() const { return {!negated, characterisation, outcome}; }

  Case as_case() const { return Case{{}, characterisation, outcome}; }

  std::string str(const OutcomeLabels& labels = {}) const {
    std::string body = "(" + characterisation.str() + "," + labels(outcome) + ")";
    return negated ? "not" + body : body;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

enum class EngineKind { AACBR, CAACBR };

inline std::string_view engine_name(EngineKind k) { return k == EngineKind::AACBR ? "aacbr" : "caacbr"; }

inline std::optional<EngineKind> parse_engine(std::string_view name) {
  if (name == "aacbr") return EngineKind::AACBR;
  if (name == "caacbr") return EngineKind::CAACBR;
  return std::nullopt;
}

/// A total classifier Casebase × Characterisation → Outcome. The default argument is
/// taken from the casebase.
template <OrderRelation Order = SupersetOrder>
struct Engine {
  EngineKind kind = EngineKind::AACBR;
  Order order{};

  /// The framework whose default-argument membership decides every prediction for D.
  MinedFramework prepare(const Casebase& D) const {
    if (kind == EngineKind::AACBR) return mine(D, std::nullopt, order);
    return build(D, order).framework;
  }

  Outcome operator()(const Casebase& D, const Characterisation& x) const {
    return predict_in(prepare(D), x, order);
  }
};

/// D ⊢ (x,y) iff the engine gives y for x; D ⊢ ¬(x,y) iff it gives some y' ≠ y.
inline bool infers_outcome(Outcome predicted, const Sentence& s) {
  if (!s.negated) return predicted == s.outcome;
  for (Outcome other : {Outcome::Default, Outcome::NonDefault})
    if (other != s.outcome && predicted == other) return true;
  return false;
}

template <OrderRelation Order = SupersetOrder>
bool infers(const Engine<Order>& engine, const Casebase& D, const Sentence& s) {
  return infers_outcome(engine(D, s.characterisation), s);
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

enum class Property {
  CautiousMonotonicity,
  Cut,
  Cumulativity,
  RationalMonotonicity,
  Completeness,
  Consistency,
};

inline constexpr std::array<Property, 6> kAllProperties{
    Property::CautiousMonotonicity, Property::Cut,          Property::Cumulativity,
    Property::RationalMonotonicity, Property::Completeness, Property::Consistency};

inline std::string_view property_name(Property p) {
  switch (p) {
    case Property::CautiousMonotonicity: return "cautious-monotonicity";
    case Property::Cut: return "cut";
    case Property::Cumulativity: return "cumulativity";
    case Property::RationalMonotonicity: return "rational-monotonicity";
    case Property::Completeness: return "completeness";
    case Property::Consistency: return "consistency";
  }
  return "?";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (auto p : kAllProperties)
    if (property_name(p) == name) return p;
  return std::nullopt;
}

/// One violation. `added` is the sentence joined to the casebase (absent for
/// completeness and consistency); `conclusion` is the sentence whose inference fails.
///
///   cautious monotonicity:  D ⊢ added, D ⊢ conclusion, D ∪ {added} ⊬ conclusion
///   cut:                    D ⊢ added, D ∪ {added} ⊢ conclusion, D ⊬ conclusion
///   rational monotonicity:  D ⊢ conclusion, D ⊬ ¬added, D ∪ {added} ⊬ conclusion
///   completeness:           D ⊬ conclusion and D ⊬ ¬conclusion
///   consistency:            D ⊢ conclusion and D ⊢ ¬conclusion
///
/// For cumulativity, `failed` records which of the first two clauses broke.
struct Witness {
  Property failed = Property::CautiousMonotonicity;
  Casebase casebase;
  std::optional<Sentence> added;
  Sentence conclusion;
};

struct PropertyReport {
  Property property = Property::CautiousMonotonicity;
  std::string engine;
  std::string universe;
  std::size_t casebases_examined = 0;
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  /// The first `max_witnesses` violations in enumeration order.
  std::vector<Witness> violations;
  /// Tallied on every run regardless of `property`.
  std::size_t completeness_violations = 0;
  std::size_t consistency_violations = 0;

  bool clean() const { return violation_count == 0; }
};

/// All characterisations over a finite atom list, indexed by bitmask.
class Universe {
 public:
  static constexpr std::size_t kMaxAtoms = 6;

  explicit Universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    if (atoms_.size() > kMaxAtoms)
      throw SizeLimitExceeded("at most " + std::to_string(kMaxAtoms) + " atoms are supported");
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms_.size()); ++mask) {
      std::vector<std::string> members;
      for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (mask & (std::size_t{1} << i)) members.push_back(atoms_[i]);
      characterisations_.emplace_back(std::move(members));
    }
  }

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<Characterisation>& characterisations() const noexcept {
    return characterisations_;
  }
  std::size_t size() const noexcept { return characterisations_.size(); }
  const Characterisation& operator[](std::size_t i) const { return characterisations_[i]; }

  std::optional<std::size_t> index_of(const Characterisation& c) const {
    for (std::size_t i = 0; i < characterisations_.size(); ++i)
      if (characterisations_[i] == c) return i;
    return std::nullopt;
  }

  std::string describe() const {
    std::string out = "P({";
    for (std::size_t i = 0; i < atoms_.size(); ++i) out += (i ? "," : "") + atoms_[i];
    return out + "})";
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<Characterisation> characterisations_;
};

struct CheckOptions {
  /// Casebases with more cases are skipped. Zero means no bound.
  std::size_t max_cases = 0;
  bool coherent_only = false;
  std::size_t jobs = 1;
  std::size_t max_witnesses = 100000;
  /// Refuse enumerations larger than this many casebases.
  std::size_t max_casebases = 20'000'000;
  OutcomeLabels labels{};
};

/// Per characterisation: 0 absent, 1 default outcome, 2 non-default outcome, 3 both.
using CasebaseCode = std::vector<std::uint8_t>;

/// Number of casebases the enumeration will visit.
inline std::size_t count_casebases(std::size_t characterisations, std::size_t max_cases,
                                   bool coherent_only) {
  const std::size_t cap = max_cases == 0 ? 2 * characterisations : max_cases;
  // ways[k] = number of partial assignments using k cases
  std::vector<double> ways(cap + 1, 0.0);
  ways[0] = 1.0;
  for (std::size_t i = 0; i < characterisations; ++i) {
    std::vector<double> next(cap + 1, 0.0);
    for (std::size_t k = 0; k <= cap; ++k) {
      if (ways[k] == 0.0) continue;
      next[k] += ways[k];
      if (k + 1 <= cap) next[k + 1] += 2 * ways[k];
      if (!coherent_only && k + 2 <= cap) next[k + 2] += ways[k];
    }
    ways = std::move(next);
  }
  double total = 0.0;
  for (double w : ways) total += w;
  return total > 1e18 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(total);
}

inline std::vector<CasebaseCode> enumerate_casebases(std::size_t characterisations,
                                                     std::size_t max_cases, bool coherent_only) {
  const std::size_t cap = max_cases == 0 ? 2 * characterisations : max_cases;
  std::vector<CasebaseCode> out;
  CasebaseCode code(characterisations, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == characterisations) {
      out.push_back(code);
      return;
    }
    const std::uint8_t top = coherent_only ? 2 : 3;
    for (std::uint8_t s = 0; s <= top; ++s) {
      const std::size_t cost = s == 0 ? 0 : (s == 3 ? 2 : 1);
      if (used + cost > cap) continue;
      code[i] = s;
      self(self, i + 1, used + cost);
    }
    code[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

inline Casebase decode_casebase(const Universe& u, const CasebaseCode& code,
                                const OutcomeLabels& labels = {}) {
  Casebase D(Characterisation{}, labels);
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] == 1 || code[i] == 3) D.add(u[i], Outcome::Default);
    if (code[i] == 2 || code[i] == 3) D.add(u[i], Outcome::NonDefault);
  }
  return D;
}

namespace detail {

using Table = std::vector<Outcome>;

template <OrderRelation Order>
Table prediction_table(const Engine<Order>& engine, const Universe& u, const Casebase& D) {
  const MinedFramework mf = engine.prepare(D);
  Table t(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) t[i] = predict_in(mf, u[i], engine.order);
  return t;
}

/// Sentences over the universe, as (negated, characterisation index, outcome).
struct SentenceCode {
  bool negated;
  std::size_t x;
  Outcome y;
};

inline std::vector<SentenceCode> all_sentences(const Universe& u) {
  std::vector<SentenceCode> out;
  for (std::size_t x = 0; x < u.size(); ++x)
    for (Outcome y : {Outcome::Default, Outcome::NonDefault})
      for (bool neg : {false, true}) out.push_back({neg, x, y});
  return out;
}

inline bool infers(const Table& t, const SentenceCode& s) {
  if (!s.negated) return t[s.x] == s.y;
  for (Outcome other : {Outcome::Default, Outcome::NonDefault})
    if (other != s.y && t[s.x] == other) return true;
  return false;
}

inline Sentence to_sentence(const Universe& u, const SentenceCode& s) {
  return {s.negated, u[s.x], s.y};
}

struct Sink {
  explicit Sink(std::size_t cap) : max_witnesses(cap) {}

  std::size_t max_witnesses;
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  std::size_t completeness_violations = 0;
  std::size_t consistency_violations = 0;
  std::vector<Witness> witnesses;

  void record(Witness w) {
    ++violation_count;
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
  }
};

/// Checks `property` on a single casebase, exhaustively over sentences of the universe.
template <OrderRelation Order>
void check_one(const Engine<Order>& engine, Property property, const Universe& u,
               const Casebase& D, Sink& sink) {
  const Table t = prediction_table(engine, u, D);
  const auto sentences = all_sentences(u);

  for (std::size_t x = 0; x < u.size(); ++x) {
    for (Outcome y : {Outcome::Default, Outcome::NonDefault}) {
      const bool pos = infers(t, {false, x, y});
      const bool neg = infers(t, {true, x, y});
      ++sink.checks;
      if (!pos && !neg) {
        ++sink.completeness_violations;
        if (property == Property::Completeness)
          sink.record({Property::Completeness, D, std::nullopt, Sentence::positive(u[x], y)});
      }
      if (pos && neg) {
        ++sink.consistency_violations;
        if (property == Property::Consistency)
          sink.record({Property::Consistency, D, std::nullopt, Sentence::positive(u[x], y)});
      }
    }
  }
  if (property == Property::Completeness || property == Property::Consistency) return;

  // Every casebase extension this property needs: D ∪ {(x, y)} for positive sentences.
  for (std::size_t x = 0; x < u.size(); ++x) {
    for (Outcome y : {Outcome::Default, Outcome::NonDefault}) {
      const SentenceCode joined{false, x, y};
      const bool rm = property == Property::RationalMonotonicity;
      // CM/cut quantify over inferred additions; RM over additions whose negation is not inferred.
      const bool applies = rm ? !infers(t, {true, x, y}) : infers(t, joined);
      if (!applies) continue;
      const Casebase extended = D.with(Case{{}, u[x], y});
      const Table t2 = extended.size() == D.size() ? t : prediction_table(engine, u, extended);
      for (const auto& b : sentences) {
        ++sink.checks;
        const bool before = infers(t, b);
        const bool after = infers(t2, b);
        const bool cm_fail = before && !after;
        const bool cut_fail = after && !before;
        auto emit = [&](Property failed) {
          sink.record({failed, D, to_sentence(u, joined), to_sentence(u, b)});
        };
        switch (property) {
          case Property::CautiousMonotonicity:
            if (cm_fail) emit(Property::CautiousMonotonicity);
            break;
          case Property::Cut:
            if (cut_fail) emit(Property::Cut);
            break;
          case Property::Cumulativity:
            if (cm_fail) emit(Property::CautiousMonotonicity);
            if (cut_fail) emit(Property::Cut);
            break;
          case Property::RationalMonotonicity:
            if (cm_fail) emit(Property::RationalMonotonicity);
            break;
          default: break;
        }
      }
    }
  }
}

}  // namespace detail

/// Re-evaluates a witness through `infers`; true iff the violation is reproduced.
template <OrderRelation Order = SupersetOrder>
bool replay(const Engine<Order>& engine, const Witness& w) {
  const auto& D = w.casebase;
  const auto& c = w.conclusion;
  switch (w.failed) {
    case Property::Completeness:
      return !infers(engine, D, c) && !infers(engine, D, c.negate());
    case Property::Consistency:
      return infers(engine, D, c) && infers(engine, D, c.negate());
    default: break;
  }
  if (!w.added || w.added->negated) return false;
  const Casebase extended = D.with(w.added->as_case());
  switch (w.failed) {
    case Property::CautiousMonotonicity:
      return infers(engine, D, *w.added) && infers(engine, D, c) && !infers(engine, extended, c);
    case Property::Cut:
      return infers(engine, D, *w.added) && infers(engine, extended, c) && !infers(engine, D, c);
    case Property::RationalMonotonicity:
      return infers(engine, D, c) && !infers(engine, D, w.added->negate()) &&
             !infers(engine, extended, c);
    default: return false;
  }
}

/// Exhaustively checks `property` over every casebase on the powerset of `atoms`
/// (bounded by options.max_cases) and every sentence pair the property schema names.
template <OrderRelation Order = SupersetOrder>
PropertyReport check_property(const Engine<Order>& engine, Property property,
                              const std::vector<std::string>& atoms,
                              const CheckOptions& options = {}) {
  const Universe u(atoms);
  const std::size_t expected = count_casebases(u.size(), options.max_cases, options.coherent_only);
  if (expected > options.max_casebases) {
    throw SizeLimitExceeded("enumeration would visit " + std::to_string(expected) +
                            " casebases (limit " + std::to_string(options.max_casebases) + ")");
  }
  const auto codes = enumerate_casebases(u.size(), options.max_cases, options.coherent_only);

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, codes.size()));
  std::vector<detail::Sink> sinks(jobs, detail::Sink(options.max_witnesses));
  auto work = [&](std::size_t shard) {
    const std::size_t lo = codes.size() * shard / jobs;
    const std::size_t hi = codes.size() * (shard + 1) / jobs;
    for (std::size_t i = lo; i < hi; ++i)
      detail::check_one(engine, property, u, decode_casebase(u, codes[i], options.labels),
                        sinks[shard]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t s = 0; s < jobs; ++s) pool.emplace_back(work, s);
  }

  PropertyReport report;
  report.property = property;
  report.engine = engine_name(engine.kind);
  report.universe = u.describe() + (options.coherent_only ? ", coherent" : "") +
                    (options.max_cases ? ", <= " + std::to_string(options.max_cases) + " cases"
                                       : std::string());
  report.casebases_examined = codes.size();
  for (auto& s : sinks) {
    report.checks += s.checks;
    report.violation_count += s.violation_count;
    report.completeness_violations += s.completeness_violations;
    report.consistency_violations += s.consistency_violations;
    for (auto& w : s.witnesses) {
      if (report.violations.size() >= options.max_witnesses) break;
      report.violations.push_back(std::move(w));
    }
  }
  return report;
}

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t max_cases = 8;
  bool coherent_only = false;
  /// Casebases examined before any random sample.
  std::vector<Casebase> planted;
  OutcomeLabels labels{};
};

/// Random casebase over the universe with at most `max_cases` cases.
inline Casebase random_casebase(const Universe& u, std::mt19937_64& rng, std::size_t max_cases,
                                bool coherent_only, const OutcomeLabels& labels = {}) {
  std::vector<std::pair<std::size_t, Outcome>> pool;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (Outcome y : {Outcome::Default, Outcome::NonDefault}) pool.emplace_back(i, y);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_cases)(rng);
  Casebase D(Characterisation{}, labels);
  std::vector<bool> used(u.size(), false);
  for (const auto& [i, y] : pool) {
    if (D.size() >= k) break;
    if (coherent_only && used[i]) continue;
    used[i] = true;
    D.add(u[i], y);
  }
  return D;
}

/// Samples casebases (planted ones first) until a violation turns up or the budget runs out.
template <OrderRelation Order = SupersetOrder>
std::optional<Witness> search_counterexample(const Engine<Order>& engine, Property property,
                                             const std::vector<std::string>& atoms,
                                             std::size_t budget, const SearchOptions& options = {}) {
  const Universe u(atoms);
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < budget; ++i) {
    const Casebase D = i < options.planted.size()
                           ? options.planted[i]
                           : random_casebase(u, rng, options.max_cases, options.coherent_only,
                                             options.labels);
    detail::Sink sink(1);
    detail::check_one(engine, property, u, D, sink);
    if (!sink.witnesses.empty()) return sink.witnesses.front();
  }
  return std::nullopt;
}

}  // namespace aacbr
