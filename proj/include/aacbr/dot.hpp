#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "aacbr/aacbr.hpp"
#include "aacbr/framework.hpp"

namespace aacbr {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace detail

/// Graphviz rendering: new case as a hexagon, other arguments as ellipses, IN arguments
/// filled grey. Grounded labels are computed when not supplied.
inline std::string to_dot(const MinedFramework& mf,
                          const std::optional<GroundedResult>& labels = std::nullopt,
                          const std::string& name = "aacbr") {
  const GroundedResult g = labels ? *labels : grounded(mf.framework);
  std::ostringstream out;
  out << "digraph \"" << detail::dot_escape(name) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < mf.framework.size(); ++i) {
    const auto& id = mf.framework.argument(i);
    out << "  n" << i << " [label=\"" << detail::dot_escape(mf.describe(id)) << "\"";
    out << ", shape=" << (id.is_new_case() ? "hexagon" : "ellipse");
    if (g.in(i)) out << ", style=filled, fillcolor=grey";
    out << "];\n";
  }
  for (const auto& [a, b] : mf.framework.attack_list()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace aacbr
