#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aacbr/casebase.hpp"
#include "aacbr/errors.hpp"
#include "aacbr/framework.hpp"

namespace aacbr {

/// A framework mined from a casebase, optionally with a new case.
///
/// Argument 0 is always the default argument. A past case identical to the default
/// argument (default characterisation, default outcome) is the default argument and
/// gets no node of its own.
struct MinedFramework {
  Framework framework;
  Casebase casebase;
  std::optional<Characterisation> new_characterisation;

  static constexpr std::size_t default_index = 0;

  std::optional<std::size_t> new_case_index() const {
    return framework.index_of(ArgumentId::new_case());
  }

  const Characterisation& characterisation(const ArgumentId& id) const {
    switch (id.kind) {
      case ArgumentId::Kind::Default: return casebase.default_characterisation();
      case ArgumentId::Kind::Case: return casebase[id.case_index].characterisation;
      case ArgumentId::Kind::NewCase: break;
    }
    return *new_characterisation;
  }

  /// Outcome of a past case or the default; nullopt for the new case.
  std::optional<Outcome> outcome(const ArgumentId& id) const {
    switch (id.kind) {
      case ArgumentId::Kind::Default: return Outcome::Default;
      case ArgumentId::Kind::Case: return casebase[id.case_index].outcome;
      case ArgumentId::Kind::NewCase: break;
    }
    return std::nullopt;
  }

  /// "{a,b}:+", "{}:-" for the default, "{a,b}:?" for the new case.
  std::string describe(const ArgumentId& id) const {
    const auto o = outcome(id);
    return characterisation(id).str() + ":" + (o ? casebase.labels()(*o) : std::string("?"));
  }
};

namespace detail {

template <OrderRelation Order>
void require_regular(const Casebase& D, const Characterisation& c, const Order& order,
                     const char* what) {
  if (!at_least(order, c, D.default_characterisation())) {
    throw RegularityViolation(std::string(what) + " " + c.str() +
                              " is not above the default characterisation " +
                              D.default_characterisation().str());
  }
}

struct Node {
  const Characterisation* characterisation;
  Outcome outcome;
  bool is_default;
};

inline bool attacks_among(const std::vector<Node>& nodes, const std::vector<std::vector<Ordering>>& cmp,
                   std::size_t a, std::size_t b) {
  // The default argument is a presumption: it is attacked but never attacks.
  if (nodes[a].is_default) return false;
  if (nodes[a].outcome == nodes[b].outcome) return false;
  if (cmp[a][b] != Ordering::Greater && cmp[a][b] != Ordering::Equal) return false;
  for (std::size_t g = 0; g < nodes.size(); ++g) {
    if (nodes[g].outcome != nodes[a].outcome) continue;
    if (cmp[a][g] == Ordering::Greater && cmp[g][b] == Ordering::Greater) return false;
  }
  return true;
}

}  // namespace detail

/// Whether past case `a` attacks `b` among the cases of D plus the default argument:
/// outcomes differ, `a` is at least as specific as `b`, and no case with `a`'s outcome
/// sits strictly between them. Either argument may be D.default_case().
template <OrderRelation Order = SupersetOrder>
bool attacks_condition(const Casebase& D, const Case& a, const Case& b, const Order& order = {}) {
  const Case def = D.default_case();
  if (a.same_example(def)) return false;
  if (a.outcome == b.outcome) return false;
  if (!at_least(order, a.characterisation, b.characterisation)) return false;
  auto blocks = [&](const Case& g) {
    return g.outcome == a.outcome && strictly_above(order, a.characterisation, g.characterisation) &&
           strictly_above(order, g.characterisation, b.characterisation);
  };
  if (blocks(def)) return false;
  for (const auto& g : D)
    if (blocks(g)) return false;
  return true;
}

/// Adds the new case `n` to a framework mined from D alone. The new case attacks every
/// argument irrelevant to it, i.e. whose characterisation `n` is not above.
template <OrderRelation Order = SupersetOrder>
MinedFramework with_new_case(MinedFramework base, const Characterisation& n,
                             const Order& order = {}) {
  if (base.new_characterisation) throw PreconditionViolation("framework already has a new case");
  detail::require_regular(base.casebase, n, order, "new case");
  const std::size_t existing = base.framework.size();
  const std::size_t idx = base.framework.add_argument(ArgumentId::new_case());
  for (std::size_t i = 0; i < existing; ++i) {
    if (!at_least(order, n, base.characterisation(base.framework.argument(i))))
      base.framework.add_attack(idx, i);
  }
  base.new_characterisation = n;
  return base;
}

/// The regular framework mined from D, plus the new case when given.
template <OrderRelation Order = SupersetOrder>
MinedFramework mine(const Casebase& D, const std::optional<Characterisation>& n = std::nullopt,
                    const Order& order = {}) {
  for (const auto& c : D) detail::require_regular(D, c.characterisation, order, "case");

  std::vector<ArgumentId> ids{ArgumentId::default_argument()};
  std::vector<detail::Node> nodes{{&D.default_characterisation(), Outcome::Default, true}};
  for (std::size_t i = 0; i < D.size(); ++i) {
    const auto& c = D[i];
    if (c.outcome == Outcome::Default &&
        order(c.characterisation, D.default_characterisation()) == Ordering::Equal)
      continue;
    ids.push_back(ArgumentId::past_case(i));
    nodes.push_back({&c.characterisation, c.outcome, false});
  }

  const std::size_t k = nodes.size();
  std::vector<std::vector<Ordering>> cmp(k, std::vector<Ordering>(k, Ordering::Equal));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b) cmp[a][b] = order(*nodes[a].characterisation, *nodes[b].characterisation);

  MinedFramework mf{Framework(std::move(ids)), D, std::nullopt};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (detail::attacks_among(nodes, cmp, a, b)) mf.framework.add_attack(a, b);

  if (n) return with_new_case(std::move(mf), *n, order);
  return mf;
}

inline Outcome outcome_of(const GroundedResult& g) {
  return g.in(MinedFramework::default_index) ? Outcome::Default : Outcome::NonDefault;
}

/// Outcome for `n` against a framework mined from a casebase alone.
template <OrderRelation Order = SupersetOrder>
Outcome predict_in(const MinedFramework& base, const Characterisation& n, const Order& order = {}) {
  if (base.new_characterisation) throw PreconditionViolation("framework already has a new case");
  detail::require_regular(base.casebase, n, order, "new case");
  Framework f = base.framework;
  const std::size_t idx = f.add_argument(ArgumentId::new_case());
  for (std::size_t i = 0; i < base.framework.size(); ++i)
    if (!at_least(order, n, base.characterisation(f.argument(i)))) f.add_attack(idx, i);
  return outcome_of(grounded(f));
}

/// Mines D once and answers predictions for many new cases.
template <OrderRelation Order = SupersetOrder>
class Predictor {
 public:
  explicit Predictor(const Casebase& D, Order order = {})
      : order_(std::move(order)), base_(mine(D, no_new_case(), order_)) {}

  Outcome operator()(const Characterisation& n) const {
    return predict_in(base_, n, order_);
  }

  const MinedFramework& base() const noexcept { return base_; }
  const Order& order() const noexcept { return order_; }

 private:
  static const std::optional<Characterisation>& no_new_case() {
    static const std::optional<Characterisation> none;
    return none;
  }

  Order order_;
  MinedFramework base_;
};

/// Default outcome iff the default argument is in the grounded extension.
template <OrderRelation Order = SupersetOrder>
Outcome predict(const Casebase& D, const Characterisation& n, const Order& order = {}) {
  return Predictor<Order>(D, order)(n);
}

/// Case arguments with no attack path to the default argument.
inline std::vector<ArgumentId> spikes(const MinedFramework& mf) {
  const auto reach = reaching(mf.framework, MinedFramework::default_index);
  std::vector<ArgumentId> out;
  for (std::size_t i = 0; i < mf.framework.size(); ++i) {
    const auto& id = mf.framework.argument(i);
    if (id.is_case() && !reach[i]) out.push_back(id);
  }
  return out;
}

/// Re-mines the casebase without its spikes, repeating until no spike remains.
/// The new case, if any, is carried over.
template <OrderRelation Order = SupersetOrder>
MinedFramework remove_spikes(const MinedFramework& mf, const Order& order = {}) {
  MinedFramework current = mf;
  while (true) {
    const auto found = spikes(current);
    if (found.empty()) return current;
    std::vector<bool> drop(current.casebase.size(), false);
    for (const auto& id : found) drop[id.case_index] = true;
    Casebase kept = current.casebase.emptied();
    for (std::size_t i = 0; i < current.casebase.size(); ++i)
      if (!drop[i]) kept.add(current.casebase[i]);
    current = mine(kept, current.new_characterisation, order);
  }
}

}  // namespace aacbr
