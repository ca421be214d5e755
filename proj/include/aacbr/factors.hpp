#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aacbr/casebase.hpp"
#include "aacbr/errors.hpp"

namespace aacbr::factors {

enum class Side { Plaintiff, Defendant };

inline constexpr Side other(Side s) {
  return s == Side::Plaintiff ? Side::Defendant : Side::Plaintiff;
}

inline char side_letter(Side s) { return s == Side::Plaintiff ? 'P' : 'D'; }

inline std::optional<Side> parse_side(std::string_view s) {
  if (s == "P") return Side::Plaintiff;
  if (s == "D") return Side::Defendant;
  return std::nullopt;
}

struct Factor {
  int index = 0;
  Side side = Side::Plaintiff;
  std::string_view description;

  /// Atom label, e.g. "F18_P".
  std::string atom() const { return "F" + std::to_string(index) + "_" + side_letter(side); }
};

/// U.S. Trade Secrets factors (there is no F9).
inline constexpr std::array<Factor, 26> kTradeSecretsFactors{{
    {1, Side::Defendant, "plaintiff disclosed its product information in negotiations with defendant"},
    {2, Side::Plaintiff, "defendant paid plaintiff's former employee to switch employment, apparently in an attempt to induce the employee to bring plaintiff's information"},
    {3, Side::Defendant, "defendant's employee was the sole developer of plaintiff's product"},
    {4, Side::Plaintiff, "defendant entered into a nondisclosure agreement with plaintiff"},
    {5, Side::Defendant, "the nondisclosure agreement did not specify which information was to be treated as confidential"},
    {6, Side::Plaintiff, "plaintiff took active measures to limit access to and distribution of its information"},
    {7, Side::Plaintiff, "plaintiff's former employee brought product development information to defendant"},
    {8, Side::Plaintiff, "defendant's access to plaintiff's product information saved it time or expense"},
    {10, Side::Defendant, "plaintiff disclosed its product information to outsiders"},
    {11, Side::Defendant, "plaintiff's information was about customers and suppliers (i.e. it may have been available independently from customers or even in directories)"},
    {12, Side::Plaintiff, "plaintiff's disclosures to outsiders were subject to confidentiality restrictions"},
    {13, Side::Plaintiff, "plaintiff and defendant entered into a noncompetition agreement"},
    {14, Side::Plaintiff, "defendant used materials that were subject to confidentiality restrictions"},
    {15, Side::Plaintiff, "plaintiff's information was unique in that plaintiff was the only manufacturer making the product"},
    {16, Side::Defendant, "plaintiff's product information could be learned by reverse-engineering"},
    {17, Side::Defendant, "defendant developed its product by independent research"},
    {18, Side::Plaintiff, "defendant's product was identical to plaintiff's"},
    {19, Side::Defendant, "plaintiff did not adopt any security measures"},
    {20, Side::Defendant, "plaintiff's information was known to competitors"},
    {21, Side::Plaintiff, "defendant obtained plaintiff's information altough he knew that plaintiff's information was confidential"},
    {22, Side::Plaintiff, "defendant used invasive techniques to gain access to plaintiff's information"},
    {23, Side::Defendant, "plaintiff entered into an agreement waiving confidentiality"},
    {24, Side::Defendant, "the information could be obtained from publicly available sources"},
    {25, Side::Defendant, "defendant discovered plaintiff's information through reverse engineering"},
    {26, Side::Plaintiff, "defendant obtained plaintiff's information through deception"},
    {27, Side::Defendant, "plaintiff disclosed its information in a public forum"},
}};

inline std::optional<Factor> find_factor(int index) {
  for (const auto& f : kTradeSecretsFactors)
    if (f.index == index) return f;
  return std::nullopt;
}

/// The table entry for `index`, which must sit on `side`.
inline Factor lookup(int index, Side side) {
  const auto f = find_factor(index);
  if (!f) throw ParseError("unknown factor F" + std::to_string(index));
  if (f->side != side)
    throw ParseError("factor F" + std::to_string(index) + " favours " +
                     (f->side == Side::Plaintiff ? "the plaintiff" : "the defendant"));
  return *f;
}

/// Case-study outcome labels: the defendant wins by default.
inline OutcomeLabels labels() { return {"D", "P"}; }

inline Outcome outcome_for(Side winner) {
  return winner == Side::Defendant ? Outcome::Default : Outcome::NonDefault;
}

struct FactorCase {
  std::string name;
  std::set<int> plaintiff_factors;
  std::set<int> defendant_factors;
  Side winner = Side::Plaintiff;

  const std::set<int>& factors_of(Side s) const {
    return s == Side::Plaintiff ? plaintiff_factors : defendant_factors;
  }

  friend bool operator==(const FactorCase&, const FactorCase&) = default;
};

inline constexpr std::size_t kMaxOpposingFactors = 20;

/// The winner's factors together with every subset of the loser's factors.
inline std::vector<Case> expand_case(const FactorCase& fc) {
  const auto& own = fc.factors_of(fc.winner);
  const std::vector<int> opposing(fc.factors_of(other(fc.winner)).begin(),
                                  fc.factors_of(other(fc.winner)).end());
  if (opposing.size() > kMaxOpposingFactors)
    throw SizeLimitExceeded("case '" + fc.name + "' has " + std::to_string(opposing.size()) +
                            " opposing factors; expansion is limited to " +
                            std::to_string(kMaxOpposingFactors));

  std::vector<std::string> base;
  for (int k : own) base.push_back(lookup(k, fc.winner).atom());
  std::vector<std::string> opposing_atoms;
  for (int k : opposing) opposing_atoms.push_back(lookup(k, other(fc.winner)).atom());

  std::vector<Case> out;
  const std::size_t total = std::size_t{1} << opposing.size();
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    auto atoms = base;
    for (std::size_t i = 0; i < opposing.size(); ++i)
      if (mask & (std::size_t{1} << i)) atoms.push_back(opposing_atoms[i]);
    out.push_back(Case{{}, Characterisation(std::move(atoms)), outcome_for(fc.winner)});
  }
  return out;
}

struct ExpandedCasebase {
  Casebase casebase{Characterisation{}, labels()};
  /// One line per characterisation that received both outcomes.
  std::vector<std::string> warnings;
};

inline ExpandedCasebase expand_casebase(const std::vector<FactorCase>& fcs) {
  ExpandedCasebase out;
  for (const auto& fc : fcs) {
    for (auto& c : expand_case(fc)) {
      if (out.casebase.contains(c)) continue;
      if (out.casebase.contains(c.characterisation, opposite(c.outcome)))
        out.warnings.push_back("conflicting outcomes for " + c.characterisation.str() +
                               " (from '" + fc.name + "')");
      out.casebase.add(std::move(c));
    }
  }
  return out;
}

/// The eight cases of the published Trade Secrets framework, already expanded.
inline Casebase fixture() {
  const Outcome P = Outcome::NonDefault;
  const Outcome D = Outcome::Default;
  Casebase cb(Characterisation{}, labels());
  cb.add({"F15_P", "F26_P"}, P);
  cb.add({"F21_P"}, P);
  cb.add({"F18_P"}, P);
  cb.add({"F1_D", "F19_D", "F21_P", "F23_D"}, D);
  cb.add({"F1_D", "F10_D", "F18_P", "F19_D"}, D);
  cb.add({"F18_P", "F19_D", "F27_D"}, D);
  cb.add({"F4_P", "F6_P", "F10_D", "F11_D", "F12_P", "F20_D"}, D);
  cb.add({"F4_P", "F6_P", "F12_P"}, P);
  return cb;
}

inline Characterisation fixture_n1() { return {"F1_D", "F18_P", "F19_D", "F21_P", "F23_D"}; }
inline Characterisation fixture_n2() {
  return fixture_n1().united(Characterisation{"F10_D"});
}

}  // namespace aacbr::factors
