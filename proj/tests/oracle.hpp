#pragma once

// Brute-force reference implementations, written straight from the definitions and
// sharing no code with the library beyond the Casebase container.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aacbr/casebase.hpp"

namespace oracle {

using Atoms = std::set<std::string>;

inline Atoms atoms_of(const aacbr::Characterisation& c) {
  return Atoms(c.atoms().begin(), c.atoms().end());
}

inline bool subset(const Atoms& a, const Atoms& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline bool proper_subset(const Atoms& a, const Atoms& b) { return a != b && subset(a, b); }

struct Arg {
  Atoms x;
  int y = 0;  // 0 default outcome, 1 the other one
  bool is_default = false;
  bool is_new = false;
};

struct AF {
  std::vector<Arg> args;
  std::vector<std::vector<bool>> att;  // att[a][b]: a attacks b

  std::size_t size() const { return args.size(); }
};

/// Mined framework under the superset order, default argument first and the new case last.
inline AF mine(const aacbr::Casebase& D, const std::optional<aacbr::Characterisation>& n) {
  AF f;
  const Atoms def = atoms_of(D.default_characterisation());
  f.args.push_back({def, 0, true, false});
  for (const auto& c : D) {
    const int y = c.outcome == aacbr::Outcome::Default ? 0 : 1;
    const Atoms x = atoms_of(c.characterisation);
    if (y == 0 && x == def) continue;
    f.args.push_back({x, y, false, false});
  }
  Atoms N;
  if (n) {
    N = atoms_of(*n);
    f.args.push_back({N, -1, false, true});
  }
  const std::size_t k = f.args.size();
  f.att.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Arg& A = f.args[a];
      const Arg& B = f.args[b];
      if (B.is_new) continue;
      if (A.is_new) {
        f.att[a][b] = !subset(B.x, N);
        continue;
      }
      if (A.is_default || A.y == B.y || !subset(B.x, A.x)) continue;
      bool concise = true;
      for (const Arg& G : f.args) {
        if (G.is_new || G.y != A.y) continue;
        if (proper_subset(B.x, G.x) && proper_subset(G.x, A.x)) concise = false;
      }
      f.att[a][b] = concise;
    }
  }
  return f;
}

/// Grounded extension as the intersection of all complete extensions.
inline std::vector<bool> grounded(const AF& f) {
  const std::size_t k = f.size();
  std::vector<bool> result(k, true);
  auto defended = [&](std::uint32_t S, std::size_t a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!f.att[b][a]) continue;
      bool countered = false;
      for (std::size_t c = 0; c < k; ++c)
        if ((S >> c & 1u) && f.att[c][b]) countered = true;
      if (!countered) return false;
    }
    return true;
  };
  for (std::uint32_t S = 0; S < (1u << k); ++S) {
    bool complete = true;
    for (std::size_t a = 0; a < k && complete; ++a)
      for (std::size_t b = 0; b < k && complete; ++b)
        if ((S >> a & 1u) && (S >> b & 1u) && f.att[a][b]) complete = false;
    for (std::size_t a = 0; a < k && complete; ++a)
      if (((S >> a & 1u) != 0) != defended(S, a)) complete = false;
    if (!complete) continue;
    for (std::size_t a = 0; a < k; ++a)
      if (!(S >> a & 1u)) result[a] = false;
  }
  return result;
}

inline aacbr::Outcome predict(const aacbr::Casebase& D, const aacbr::Characterisation& n) {
  return grounded(mine(D, n))[0] ? aacbr::Outcome::Default : aacbr::Outcome::NonDefault;
}

/// Fixed points of the includability map, by enumeration of subsets.
inline std::vector<aacbr::Casebase> concise_subsets(const aacbr::Casebase& D) {
  auto includable = [](const aacbr::Case& c, const aacbr::Casebase& S) {
    const bool surprising = predict(S.without(c), c.characterisation) != c.outcome;
    const bool sufficient = predict(S.with(c), c.characterisation) == c.outcome;
    return surprising && sufficient;
  };
  std::vector<aacbr::Casebase> out;
  for (std::uint32_t mask = 0; mask < (1u << D.size()); ++mask) {
    aacbr::Casebase S = D.emptied();
    for (std::size_t i = 0; i < D.size(); ++i)
      if (mask >> i & 1u) S.add(D[i]);
    bool fixed = true;
    for (std::size_t i = 0; i < D.size() && fixed; ++i)
      fixed = includable(D[i], S) == ((mask >> i & 1u) != 0);
    if (fixed) out.push_back(S);
  }
  return out;
}

/// All casebases over the powerset of `atoms`; each characterisation is absent,
/// present with one outcome, or (when incoherent is allowed) with both.
inline std::vector<aacbr::Casebase> all_casebases(const std::vector<std::string>& atoms,
                                                  bool allow_incoherent) {
  std::vector<aacbr::Characterisation> X;
  for (std::uint32_t m = 0; m < (1u << atoms.size()); ++m) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (m >> i & 1u) v.push_back(atoms[i]);
    X.emplace_back(v);
  }
  const std::uint32_t states = allow_incoherent ? 4 : 3;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < X.size(); ++i) total *= states;
  std::vector<aacbr::Casebase> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    aacbr::Casebase D;
    std::uint64_t c = code;
    for (const auto& x : X) {
      const auto s = c % states;
      c /= states;
      if (s == 1 || s == 3) D.add(x, aacbr::Outcome::Default);
      if (s == 2 || s == 3) D.add(x, aacbr::Outcome::NonDefault);
    }
    out.push_back(D);
  }
  return out;
}

inline std::vector<aacbr::Characterisation> powerset(const std::vector<std::string>& atoms) {
  std::vector<aacbr::Characterisation> X;
  for (std::uint32_t m = 0; m < (1u << atoms.size()); ++m) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (m >> i & 1u) v.push_back(atoms[i]);
    X.emplace_back(v);
  }
  return X;
}

}  // namespace oracle
