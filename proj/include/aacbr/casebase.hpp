#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aacbr/errors.hpp"

namespace aacbr {

// ---------------------------------------------------------------------------
// Characterisations
// ---------------------------------------------------------------------------

/// A finite set of atom labels, kept sorted and duplicate-free.
class Characterisation {
 public:
  Characterisation() = default;

  Characterisation(std::initializer_list<std::string_view> atoms) {
    for (auto a : atoms) atoms_.emplace_back(a);
    normalise();
  }

  explicit Characterisation(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    normalise();
  }

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  bool contains(std::string_view atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom);
  }

  /// True iff every atom of `other` is in this set.
  bool includes(const Characterisation& other) const {
    return std::includes(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end());
  }

  Characterisation united(const Characterisation& other) const {
    std::vector<std::string> out;
    out.reserve(atoms_.size() + other.atoms_.size());
    std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                   std::back_inserter(out));
    Characterisation c;
    c.atoms_ = std::move(out);
    return c;
  }

  /// Comma-separated rendering, e.g. "a,b". The empty set renders as "".
  std::string join(std::string_view sep = ",") const {
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) out += sep;
      out += atoms_[i];
    }
    return out;
  }

  /// Set-builder rendering, e.g. "{a,b}".
  std::string str() const { return "{" + join(",") + "}"; }

  friend bool operator==(const Characterisation&, const Characterisation&) = default;
  friend auto operator<=>(const Characterisation&, const Characterisation&) = default;

 private:
  void normalise() {
    for (const auto& a : atoms_)
      if (a.empty()) throw ParseError("atom labels must be non-empty");
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }

  std::vector<std::string> atoms_;
};

/// Parses "a,b,c" (whitespace around atoms is ignored; empty string is the empty set).
inline Characterisation parse_atom_list(std::string_view text) {
  std::vector<std::string> atoms;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return {};
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto atom = trim(text.substr(start, end - start));
    if (atom.empty()) throw ParseError("empty atom in list '" + std::string(text) + "'");
    atoms.emplace_back(atom);
    start = end + 1;
  }
  return Characterisation(std::move(atoms));
}

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

enum class Ordering { Less, Greater, Equal, Incomparable };

inline Ordering reverse(Ordering o) {
  switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    default: return o;
  }
}

/// A partial order on characterisations. `order(a, b)` answers how `a` relates to `b`,
/// where Greater means "more specific".
template <class O>
concept OrderRelation = std::copy_constructible<O> &&
    requires(const O& order, const Characterisation& a, const Characterisation& b) {
      { order(a, b) } -> std::same_as<Ordering>;
    };

/// a is more specific than b iff a is a superset of b.
struct SupersetOrder {
  Ordering operator()(const Characterisation& a, const Characterisation& b) const {
    const bool ab = a.includes(b);
    const bool ba = b.includes(a);
    if (ab && ba) return Ordering::Equal;
    if (ab) return Ordering::Greater;
    if (ba) return Ordering::Less;
    return Ordering::Incomparable;
  }
};

/// The dual order: a is more specific than b iff a is a subset of b.
struct SubsetOrder {
  Ordering operator()(const Characterisation& a, const Characterisation& b) const {
    return reverse(SupersetOrder{}(a, b));
  }
};

template <OrderRelation Order>
bool at_least(const Order& order, const Characterisation& a, const Characterisation& b) {
  const auto o = order(a, b);
  return o == Ordering::Greater || o == Ordering::Equal;
}

template <OrderRelation Order>
bool strictly_above(const Order& order, const Characterisation& a, const Characterisation& b) {
  return order(a, b) == Ordering::Greater;
}

template <OrderRelation Order = SupersetOrder>
Ordering compare(const Characterisation& a, const Characterisation& b, const Order& order = {}) {
  return order(a, b);
}

// ---------------------------------------------------------------------------
// Outcomes, cases, casebases
// ---------------------------------------------------------------------------

enum class Outcome { Default, NonDefault };

constexpr Outcome opposite(Outcome o) {
  return o == Outcome::Default ? Outcome::NonDefault : Outcome::Default;
}

/// Display renderings of the two outcomes.
struct OutcomeLabels {
  std::string default_label = "-";
  std::string nondefault_label = "+";

  const std::string& operator()(Outcome o) const {
    return o == Outcome::Default ? default_label : nondefault_label;
  }

  std::optional<Outcome> parse(std::string_view label) const {
    if (label == default_label) return Outcome::Default;
    if (label == nondefault_label) return Outcome::NonDefault;
    return std::nullopt;
  }

  friend bool operator==(const OutcomeLabels&, const OutcomeLabels&) = default;
};

struct Case {
  std::string id;
  Characterisation characterisation;
  Outcome outcome = Outcome::Default;

  /// Same labelled example, ignoring the id.
  bool same_example(const Case& other) const {
    return outcome == other.outcome && characterisation == other.characterisation;
  }
  bool same_example(const Characterisation& c, Outcome o) const {
    return outcome == o && characterisation == c;
  }

  friend bool operator==(const Case&, const Case&) = default;
};

/// A finite set of labelled cases plus the default argument (default characterisation,
/// default outcome). Ids are assigned in insertion order when not supplied.
class Casebase {
 public:
  explicit Casebase(Characterisation default_characterisation = {}, OutcomeLabels labels = {})
      : default_characterisation_(std::move(default_characterisation)), labels_(std::move(labels)) {}

  Casebase(std::initializer_list<std::pair<Characterisation, Outcome>> cases,
           Characterisation default_characterisation = {}, OutcomeLabels labels = {})
      : Casebase(std::move(default_characterisation), std::move(labels)) {
    for (const auto& [c, o] : cases) add(c, o);
  }

  const std::vector<Case>& cases() const noexcept { return cases_; }
  std::size_t size() const noexcept { return cases_.size(); }
  bool empty() const noexcept { return cases_.empty(); }
  const Case& operator[](std::size_t i) const { return cases_[i]; }
  auto begin() const noexcept { return cases_.begin(); }
  auto end() const noexcept { return cases_.end(); }

  const Characterisation& default_characterisation() const noexcept {
    return default_characterisation_;
  }
  const OutcomeLabels& labels() const noexcept { return labels_; }

  /// The default argument rendered as a case with the reserved id "default".
  Case default_case() const { return Case{"default", default_characterisation_, Outcome::Default}; }

  bool contains(const Characterisation& c, Outcome o) const {
    return find(c, o).has_value();
  }
  bool contains(const Case& c) const { return contains(c.characterisation, c.outcome); }

  std::optional<std::size_t> find(const Characterisation& c, Outcome o) const {
    for (std::size_t i = 0; i < cases_.size(); ++i)
      if (cases_[i].same_example(c, o)) return i;
    return std::nullopt;
  }

  /// Adds a case. Throws PreconditionViolation on a duplicate example or id.
  const Case& add(Case c) {
    if (contains(c)) {
      throw PreconditionViolation("duplicate case " + c.characterisation.str() + ":" +
                                  labels_(c.outcome));
    }
    if (c.id.empty()) {
      c.id = fresh_id();
    } else {
      for (const auto& existing : cases_)
        if (existing.id == c.id) throw PreconditionViolation("duplicate case id '" + c.id + "'");
    }
    cases_.push_back(std::move(c));
    return cases_.back();
  }

  const Case& add(Characterisation c, Outcome o, std::string id = {}) {
    return add(Case{std::move(id), std::move(c), o});
  }

  /// Copy with `c` added; a no-op if the example is already present.
  Casebase with(const Case& c) const {
    Casebase out = *this;
    if (!out.contains(c)) {
      Case copy = c;
      for (const auto& existing : out.cases_)
        if (existing.id == copy.id) copy.id.clear();
      out.add(std::move(copy));
    }
    return out;
  }

  /// Copy with the example (c, o) removed, if present.
  Casebase without(const Characterisation& c, Outcome o) const {
    Casebase out = *this;
    std::erase_if(out.cases_, [&](const Case& x) { return x.same_example(c, o); });
    return out;
  }
  Casebase without(const Case& c) const { return without(c.characterisation, c.outcome); }

  /// Same default argument and labels, no cases.
  Casebase emptied() const { return Casebase(default_characterisation_, labels_); }

  /// Set equality on labelled examples; ids and order are ignored.
  bool same_examples(const Casebase& other) const {
    if (size() != other.size()) return false;
    for (const auto& c : cases_)
      if (!other.contains(c)) return false;
    return true;
  }

 private:
  std::string fresh_id() const {
    for (std::size_t k = cases_.size() + 1;; ++k) {
      std::string id = "c" + std::to_string(k);
      bool taken = false;
      for (const auto& existing : cases_) taken = taken || existing.id == id;
      if (!taken) return id;
    }
  }

  std::vector<Case> cases_;
  Characterisation default_characterisation_;
  OutcomeLabels labels_;
};

// ---------------------------------------------------------------------------
// Primitives
// ---------------------------------------------------------------------------

/// No two cases share a characterisation with different outcomes.
inline bool is_coherent(const Casebase& D) {
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = i + 1; j < D.size(); ++j)
      if (D[i].characterisation == D[j].characterisation && D[i].outcome != D[j].outcome)
        return false;
  return true;
}

/// Repeatedly peels off the ⪯-minimal cases. Cases with equal characterisations always
/// land in the same stratum. Input order is preserved within each stratum.
template <OrderRelation Order = SupersetOrder>
std::vector<std::vector<Case>> strata(std::vector<Case> unprocessed, const Order& order = {}) {
  std::vector<std::vector<Case>> out;
  while (!unprocessed.empty()) {
    std::vector<Case> stratum;
    std::vector<Case> rest;
    for (const auto& c : unprocessed) {
      bool minimal = true;
      for (const auto& other : unprocessed) {
        if (order(other.characterisation, c.characterisation) == Ordering::Less) {
          minimal = false;
          break;
        }
      }
      (minimal ? stratum : rest).push_back(c);
    }
    out.push_back(std::move(stratum));
    unprocessed = std::move(rest);
  }
  return out;
}

/// Cases at or below `n` with no other case strictly between them and `n`.
template <OrderRelation Order = SupersetOrder>
std::vector<Case> nearest_cases(const Casebase& D, const Characterisation& n,
                                const Order& order = {}) {
  std::vector<Case> out;
  for (const auto& a : D) {
    if (!at_least(order, n, a.characterisation)) continue;
    bool maximal = true;
    for (const auto& b : D) {
      if (strictly_above(order, b.characterisation, a.characterisation) &&
          at_least(order, n, b.characterisation)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace aacbr
