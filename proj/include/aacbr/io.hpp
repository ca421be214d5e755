#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aacbr/caacbr.hpp"
#include "aacbr/casebase.hpp"
#include "aacbr/errors.hpp"
#include "aacbr/factors.hpp"
#include "aacbr/nonmono.hpp"

namespace aacbr::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline Characterisation features(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": \"features\" must be an array");
  std::vector<std::string> atoms;
  for (const auto& a : j) atoms.push_back(as_string(a, where));
  auto sorted = atoms;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    throw ParseError(where + ": duplicate feature \"" + *it + "\"");
  try {
    return Characterisation(std::move(atoms));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Outcome outcome(const OutcomeLabels& labels, const json& j, const std::string& where) {
  const auto label = as_string(j, where);
  const auto o = labels.parse(label);
  if (!o) {
    throw ParseError(where + ": unknown outcome \"" + label + "\" (expected \"" +
                     labels.default_label + "\" or \"" + labels.nondefault_label + "\")");
  }
  return *o;
}

inline json parse_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<int> factor_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of factor numbers");
  std::vector<int> out;
  for (const auto& f : j) {
    if (!f.is_number_integer()) throw ParseError(where + ": factor numbers must be integers");
    out.push_back(f.get<int>());
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Casebases
// ---------------------------------------------------------------------------

inline Casebase casebase_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("casebase: expected a JSON object");
  OutcomeLabels labels;
  if (j.contains("outcomes")) {
    const auto& o = j.at("outcomes");
    labels.default_label = detail::as_string(detail::field(o, "default", "outcomes"), "outcomes.default");
    labels.nondefault_label =
        detail::as_string(detail::field(o, "nondefault", "outcomes"), "outcomes.nondefault");
    if (labels.default_label == labels.nondefault_label)
      throw ParseError("outcomes: the two labels must differ");
  }
  Characterisation def;
  if (j.contains("default")) {
    const auto& d = j.at("default");
    def = detail::features(detail::field(d, "features", "default"), "default");
    if (d.contains("outcome") &&
        detail::outcome(labels, d.at("outcome"), "default") != Outcome::Default)
      throw ParseError("default: outcome must be the default label \"" + labels.default_label + "\"");
  }
  Casebase D(def, labels);
  if (!j.contains("cases")) return D;
  const auto& cases = j.at("cases");
  if (!cases.is_array()) throw ParseError("cases: expected an array");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const std::string where = "cases[" + std::to_string(i) + "]";
    std::string id;
    if (c.contains("id")) id = detail::as_string(c.at("id"), where + ".id");
    const auto x = detail::features(detail::field(c, "features", where), where);
    const auto y = detail::outcome(labels, detail::field(c, "outcome", where), where);
    try {
      D.add(x, y, id);
    } catch (const PreconditionViolation& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return D;
}

inline Casebase parse_casebase(const std::string& text) {
  return casebase_from_json(detail::parse_text(text, "casebase"));
}

inline Casebase load_casebase(const std::string& path) {
  return casebase_from_json(detail::parse_text(detail::slurp(path), path));
}

inline json to_json(const Characterisation& c) { return json(c.atoms()); }

inline json to_json(const Casebase& D) {
  const auto& L = D.labels();
  json cases = json::array();
  for (const auto& c : D)
    cases.push_back({{"id", c.id}, {"features", to_json(c.characterisation)}, {"outcome", L(c.outcome)}});
  return {{"default", {{"features", to_json(D.default_characterisation())}, {"outcome", L.default_label}}},
          {"outcomes", {{"default", L.default_label}, {"nondefault", L.nondefault_label}}},
          {"cases", cases}};
}

// ---------------------------------------------------------------------------
// Factor casebases
// ---------------------------------------------------------------------------

inline std::vector<factors::FactorCase> factor_cases_from_json(const json& j) {
  const auto& cases = detail::field(j, "cases", "factor casebase");
  if (!cases.is_array()) throw ParseError("cases: expected an array");
  std::vector<factors::FactorCase> out;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const std::string where = "cases[" + std::to_string(i) + "]";
    factors::FactorCase fc;
    if (c.contains("name")) fc.name = detail::as_string(c.at("name"), where + ".name");
    const auto winner = detail::as_string(detail::field(c, "winner", where), where + ".winner");
    const auto side = factors::parse_side(winner);
    if (!side) throw ParseError(where + ": winner must be \"P\" or \"D\"");
    fc.winner = *side;
    for (auto [key, s] : {std::pair{"plaintiff_factors", factors::Side::Plaintiff},
                          std::pair{"defendant_factors", factors::Side::Defendant}}) {
      if (!c.contains(key)) continue;
      auto& target = s == factors::Side::Plaintiff ? fc.plaintiff_factors : fc.defendant_factors;
      for (int k : detail::factor_list(c.at(key), where + "." + key)) {
        try {
          factors::lookup(k, s);
        } catch (const ParseError& e) {
          throw ParseError(where + "." + key + ": " + e.what());
        }
        if (!target.insert(k).second)
          throw ParseError(where + "." + key + ": duplicate factor F" + std::to_string(k));
      }
    }
    out.push_back(std::move(fc));
  }
  return out;
}

inline std::vector<factors::FactorCase> load_factor_cases(const std::string& path) {
  return factor_cases_from_json(detail::parse_text(detail::slurp(path), path));
}

inline json factor_table_json() {
  json out = json::array();
  for (const auto& f : factors::kTradeSecretsFactors)
    out.push_back({{"index", f.index},
                   {"side", std::string(1, factors::side_letter(f.side))},
                   {"atom", f.atom()},
                   {"description", std::string(f.description)}});
  return {{"factors", out}};
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json to_json(const AuditEntry& e, const OutcomeLabels& L) {
  return {{"id", e.candidate.id},
          {"features", to_json(e.candidate.characterisation)},
          {"outcome", L(e.candidate.outcome)},
          {"stratum", e.stratum},
          {"predicted", L(e.predicted_at_test)},
          {"included", e.included}};
}

inline json audit_json(const ConciseBuild& b) {
  json entries = json::array();
  for (const auto& e : b.audit) entries.push_back(to_json(e, b.selected.labels()));
  return {{"selected", b.selected.size()}, {"examined", b.audit.size()}, {"audit", entries}};
}

inline json to_json(const Sentence& s, const OutcomeLabels& L) {
  return {{"negated", s.negated}, {"features", to_json(s.characterisation)}, {"outcome", L(s.outcome)}};
}

inline json to_json(const Witness& w) {
  const auto& L = w.casebase.labels();
  json out{{"failed", std::string(property_name(w.failed))},
           {"casebase", to_json(w.casebase)},
           {"conclusion", to_json(w.conclusion, L)}};
  out["added"] = w.added ? to_json(*w.added, L) : json(nullptr);
  return out;
}

inline json to_json(const PropertyReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.violations) witnesses.push_back(to_json(w));
  return {{"property", std::string(property_name(r.property))},
          {"engine", r.engine},
          {"universe", r.universe},
          {"casebases_examined", r.casebases_examined},
          {"checks", r.checks},
          {"violation_count", r.violation_count},
          {"witnesses_recorded", r.violations.size()},
          {"completeness_violations", r.completeness_violations},
          {"consistency_violations", r.consistency_violations},
          {"holds", r.clean()},
          {"violations", witnesses}};
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace aacbr::io
