#pragma once

#include <string>

#include "aacbr/casebase.hpp"

namespace fx {

using aacbr::Casebase;
using aacbr::Characterisation;
using aacbr::Outcome;

inline constexpr Outcome kPos = Outcome::NonDefault;
inline constexpr Outcome kNeg = Outcome::Default;

/// {({a},+), ({c},+), ({a,b},-), ({c,z},-)}, default (∅,-).
inline Casebase cm_counterexample() {
  return Casebase{{{"a"}, kPos}, {{"c"}, kPos}, {{"a", "b"}, kNeg}, {{"c", "z"}, kNeg}};
}

inline Characterisation n1() { return {"a", "b", "c"}; }
inline Characterisation n2() { return {"a", "b", "c", "z"}; }

/// The counterexample casebase together with ({a,b,c},+).
inline Casebase cm_extended() {
  auto D = cm_counterexample();
  D.add(n1(), kPos);
  return D;
}

inline Casebase homicide() { return Casebase{{{"hm"}, kPos}}; }
inline Casebase homicide_revised() { return Casebase{{{"hm"}, kPos}, {{"hm", "sd"}, kNeg}}; }
inline Casebase homicide_incoherent() { return Casebase{{{"hm"}, kPos}, {{"hm"}, kNeg}}; }
inline Characterisation homicide_query() { return {"hm", "sd"}; }

/// {({a},+), ({a,b},-), ({a,b},+)}: no concise subset exists.
inline Casebase no_concise_subset() {
  return Casebase{{{"a"}, kPos}, {{"a", "b"}, kNeg}, {{"a", "b"}, kPos}};
}

}  // namespace fx
