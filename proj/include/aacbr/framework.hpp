#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "aacbr/errors.hpp"

namespace aacbr {

/// Identifies an argument of a mined framework: a past case (by its index in the
/// casebase), the default argument, or the new case.
struct ArgumentId {
  enum class Kind : std::uint8_t { Default, Case, NewCase };

  Kind kind = Kind::Default;
  std::size_t case_index = 0;

  static constexpr ArgumentId default_argument() { return {Kind::Default, 0}; }
  static constexpr ArgumentId new_case() { return {Kind::NewCase, 0}; }
  static constexpr ArgumentId past_case(std::size_t i) { return {Kind::Case, i}; }

  constexpr bool is_default() const { return kind == Kind::Default; }
  constexpr bool is_new_case() const { return kind == Kind::NewCase; }
  constexpr bool is_case() const { return kind == Kind::Case; }

  friend constexpr bool operator==(const ArgumentId&, const ArgumentId&) = default;
  friend constexpr auto operator<=>(const ArgumentId&, const ArgumentId&) = default;
};

/// A finite abstract argumentation framework. Arguments are addressed by dense
/// indices; each index carries an ArgumentId.
class Framework {
 public:
  Framework() = default;
  explicit Framework(std::vector<ArgumentId> arguments)
      : arguments_(std::move(arguments)),
        attackers_(arguments_.size()),
        targets_(arguments_.size()) {}

  std::size_t size() const noexcept { return arguments_.size(); }
  const std::vector<ArgumentId>& arguments() const noexcept { return arguments_; }
  const ArgumentId& argument(std::size_t i) const { return arguments_.at(i); }

  std::optional<std::size_t> index_of(const ArgumentId& id) const {
    for (std::size_t i = 0; i < arguments_.size(); ++i)
      if (arguments_[i] == id) return i;
    return std::nullopt;
  }

  std::size_t add_argument(ArgumentId id) {
    if (id.is_new_case() && index_of(id)) throw PreconditionViolation("new case already present");
    arguments_.push_back(id);
    attackers_.emplace_back();
    targets_.emplace_back();
    return arguments_.size() - 1;
  }

  void add_attack(std::size_t from, std::size_t to) {
    if (from >= size() || to >= size()) throw PreconditionViolation("attack endpoint out of range");
    if (attacks(from, to)) return;
    targets_[from].push_back(to);
    attackers_[to].push_back(from);
    ++attack_count_;
  }

  bool attacks(std::size_t from, std::size_t to) const {
    const auto& t = targets_[from];
    return std::find(t.begin(), t.end(), to) != t.end();
  }

  const std::vector<std::size_t>& attackers(std::size_t i) const { return attackers_.at(i); }
  const std::vector<std::size_t>& targets(std::size_t i) const { return targets_.at(i); }
  std::size_t attack_count() const noexcept { return attack_count_; }

  /// All attacks as (attacker, target) index pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> attack_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(attack_count_);
    for (std::size_t i = 0; i < size(); ++i)
      for (auto j : targets_[i]) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Attacks as ArgumentId pairs, sorted. Two frameworks with equal argument sets and
  /// equal labelled attacks are the same framework regardless of index layout.
  std::vector<std::pair<ArgumentId, ArgumentId>> labelled_attacks() const {
    std::vector<std::pair<ArgumentId, ArgumentId>> out;
    out.reserve(attack_count_);
    for (std::size_t i = 0; i < size(); ++i)
      for (auto j : targets_[i]) out.emplace_back(arguments_[i], arguments_[j]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ArgumentId> sorted_arguments() const {
    auto out = arguments_;
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool same_framework(const Framework& a, const Framework& b) {
    return a.sorted_arguments() == b.sorted_arguments() &&
           a.labelled_attacks() == b.labelled_attacks();
  }

 private:
  std::vector<ArgumentId> arguments_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> targets_;
  std::size_t attack_count_ = 0;
};

// ---------------------------------------------------------------------------
// Grounded semantics
// ---------------------------------------------------------------------------

enum class Label { In, Out, Undecided };

struct GroundedResult {
  /// Indexed like Framework::arguments().
  std::vector<Label> labels;
  /// G_0 ⊆ G_1 ⊆ ... as sorted index sets; the last entry is the fixpoint.
  std::vector<std::vector<std::size_t>> trace;

  bool in(std::size_t i) const { return labels.at(i) == Label::In; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == Label::In) out.push_back(i);
    return out;
  }
};

/// True iff every attacker of `target` is attacked by some member of `defenders`.
inline bool defends(const Framework& F, const std::vector<bool>& defenders, std::size_t target) {
  for (auto attacker : F.attackers(target)) {
    bool countered = false;
    for (auto counter : F.attackers(attacker)) {
      if (defenders[counter]) {
        countered = true;
        break;
      }
    }
    if (!countered) return false;
  }
  return true;
}

/// Singleton form: every attacker of `target` is attacked by `defender`.
inline bool defends(const Framework& F, std::size_t defender, std::size_t target) {
  for (auto attacker : F.attackers(target))
    if (!F.attacks(defender, attacker)) return false;
  return true;
}

/// Least fixpoint of the characteristic function, built as G_0 = unattacked arguments,
/// G_{i+1} = arguments defended by G_i.
inline GroundedResult grounded(const Framework& F) {
  const std::size_t n = F.size();
  std::vector<bool> current(n, false);
  for (std::size_t i = 0; i < n; ++i) current[i] = F.attackers(i).empty();

  auto as_indices = [n](const std::vector<bool>& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) out.push_back(i);
    return out;
  };

  GroundedResult result;
  result.trace.push_back(as_indices(current));
  while (true) {
    std::vector<bool> next(n, false);
    for (std::size_t i = 0; i < n; ++i) next[i] = defends(F, current, i);
    if (next == current) break;
    current = std::move(next);
    result.trace.push_back(as_indices(current));
  }

  result.labels.assign(n, Label::Undecided);
  for (std::size_t i = 0; i < n; ++i)
    if (current[i]) result.labels[i] = Label::In;
  for (std::size_t i = 0; i < n; ++i) {
    if (!current[i]) continue;
    for (auto t : F.targets(i))
      if (result.labels[t] != Label::In) result.labels[t] = Label::Out;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Graph structure
// ---------------------------------------------------------------------------

/// True iff a directed attack path leads from `from` to `to`. Every argument reaches itself.
inline bool reaches(const Framework& F, std::size_t from, std::size_t to) {
  if (from == to) return true;
  std::vector<bool> seen(F.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto t : F.targets(v)) {
      if (t == to) return true;
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return false;
}

/// Arguments with an attack path to `to` (including `to` itself).
inline std::vector<bool> reaching(const Framework& F, std::size_t to) {
  std::vector<bool> seen(F.size(), false);
  std::deque<std::size_t> queue{to};
  seen[to] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto a : F.attackers(v)) {
      if (!seen[a]) {
        seen[a] = true;
        queue.push_back(a);
      }
    }
  }
  return seen;
}

inline bool is_acyclic(const Framework& F) {
  // Kahn's algorithm; self-attacks count as cycles.
  std::vector<std::size_t> indegree(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) indegree[i] = F.attackers(i).size();
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < F.size(); ++i)
    if (indegree[i] == 0) queue.push_back(i);
  std::size_t removed = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    ++removed;
    for (auto t : F.targets(v))
      if (--indegree[t] == 0) queue.push_back(t);
  }
  return removed == F.size();
}

inline bool is_conflict_free(const Framework& F, const std::vector<std::size_t>& set) {
  for (auto a : set)
    for (auto b : set)
      if (F.attacks(a, b)) return false;
  return true;
}

inline bool is_admissible(const Framework& F, const std::vector<std::size_t>& set) {
  if (!is_conflict_free(F, set)) return false;
  std::vector<bool> member(F.size(), false);
  for (auto a : set) member[a] = true;
  for (auto a : set)
    if (!defends(F, member, a)) return false;
  return true;
}

}  // namespace aacbr
