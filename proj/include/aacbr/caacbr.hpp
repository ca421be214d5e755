#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "aacbr/aacbr.hpp"
#include "aacbr/casebase.hpp"
#include "aacbr/errors.hpp"
#include "aacbr/framework.hpp"

namespace aacbr {

/// Removing `c` from D changes its own prediction.
template <OrderRelation Order = SupersetOrder>
bool is_surprising(const Case& c, const Casebase& D, const Order& order = {}) {
  return predict(D.without(c), c.characterisation, order) != c.outcome;
}

/// Adding `c` to D makes D predict it.
template <OrderRelation Order = SupersetOrder>
bool is_sufficient(const Case& c, const Casebase& D, const Order& order = {}) {
  return predict(D.with(c), c.characterisation, order) == c.outcome;
}

template <OrderRelation Order = SupersetOrder>
bool is_includable(const Case& c, const Casebase& D, const Order& order = {}) {
  return is_surprising(c, D, order) && is_sufficient(c, D, order);
}

/// Incrementally adds `c` to a framework mined from a coherent casebase alone.
///
/// The added case attacks exactly the arguments that a new case with its
/// characterisation would defend and whose outcome differs from its own. The result
/// equals mining the extended casebase from scratch provided no existing case is
/// strictly more specific than `c` and no case pairs the default characterisation
/// with the non-default outcome.
template <OrderRelation Order = SupersetOrder>
MinedFramework simple_add(const MinedFramework& mf, const Case& c, const Order& order = {}) {
  if (mf.new_characterisation)
    throw PreconditionViolation("simple_add expects a framework mined from a casebase alone");
  if (c.same_example(mf.casebase.default_case()))
    throw PreconditionViolation("case " + c.characterisation.str() +
                                " coincides with the default argument");
  for (const auto& existing : mf.casebase) {
    if (order(existing.characterisation, c.characterisation) == Ordering::Equal)
      throw PreconditionViolation("a case with characterisation " + c.characterisation.str() +
                                  " is already present");
  }

  const MinedFramework probe = with_new_case(mf, c.characterisation, order);
  const std::size_t probe_new = *probe.new_case_index();

  MinedFramework out;
  out.casebase = mf.casebase;
  out.casebase.add(c);
  out.framework = mf.framework;
  const std::size_t idx = out.framework.add_argument(ArgumentId::past_case(out.casebase.size() - 1));
  for (std::size_t i = 0; i < mf.framework.size(); ++i) {
    if (!defends(probe.framework, probe_new, i)) continue;
    if (mf.outcome(mf.framework.argument(i)) != c.outcome) out.framework.add_attack(idx, i);
  }
  return out;
}

struct AuditEntry {
  Case candidate;
  std::size_t stratum = 0;
  bool included = false;
  /// Outcome the framework under construction gave the candidate when it was tested.
  Outcome predicted_at_test = Outcome::Default;
};

struct ConciseBuild {
  Casebase selected;
  MinedFramework framework;
  std::vector<AuditEntry> audit;
};

/// Builds the cumulative casebase stratum by stratum. Every case of a stratum is
/// tested against the same framework; the mispredicted ones are then added with
/// simple_add. `on_add`, when set, sees the framework after every addition.
template <OrderRelation Order = SupersetOrder>
ConciseBuild build(const Casebase& D, const Order& order = {},
                   const std::function<void(const MinedFramework&)>& on_add = {}) {
  ConciseBuild result;
  MinedFramework current = mine(D.emptied(), std::nullopt, order);
  const auto layers = strata(D.cases(), order);
  for (std::size_t s = 0; s < layers.size(); ++s) {
    std::vector<const Case*> to_add;
    for (const auto& c : layers[s]) {
      const Outcome predicted = predict_in(current, c.characterisation, order);
      const bool include = predicted != c.outcome;
      result.audit.push_back({c, s, include, predicted});
      if (include) to_add.push_back(&c);
    }
    for (const Case* c : to_add) {
      current = simple_add(current, *c, order);
      if (on_add) on_add(current);
    }
  }
  result.selected = current.casebase;
  result.framework = std::move(current);
  return result;
}

/// Outcome for `n` using only the cases selected by build.
template <OrderRelation Order = SupersetOrder>
Outcome predict_c(const Casebase& D, const Characterisation& n, const Order& order = {}) {
  return predict_in(build(D, order).framework, n, order);
}

/// The cases of S that are includable w.r.t. `subset`.
template <OrderRelation Order = SupersetOrder>
Casebase includable_subset(const Casebase& S, const Casebase& subset, const Order& order = {}) {
  Casebase out = S.emptied();
  for (const auto& c : S)
    if (is_includable(c, subset, order)) out.add(c);
  return out;
}

inline constexpr std::size_t kConciseOracleLimit = 15;

/// Every subset of D that is a fixed point of includable_subset, by exhaustive search.
template <OrderRelation Order = SupersetOrder>
std::vector<Casebase> concise_subsets(const Casebase& D, const Order& order = {}) {
  if (D.size() > kConciseOracleLimit)
    throw SizeLimitExceeded("concise-subset enumeration is limited to " +
                            std::to_string(kConciseOracleLimit) + " cases");
  std::vector<Casebase> out;
  const std::uint32_t n = static_cast<std::uint32_t>(D.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Casebase subset = D.emptied();
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.add(D[i]);
    bool fixed = true;
    for (std::uint32_t i = 0; i < n && fixed; ++i) {
      const bool member = mask & (1u << i);
      fixed = is_includable(D[i], subset, order) == member;
    }
    if (fixed) out.push_back(std::move(subset));
  }
  return out;
}

/// The concise subset of D if one exists.
template <OrderRelation Order = SupersetOrder>
std::optional<Casebase> concise_oracle(const Casebase& D, const Order& order = {}) {
  auto all = concise_subsets(D, order);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

}  // namespace aacbr
