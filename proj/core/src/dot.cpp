#include "kideal/dot.hpp"

#include <sstream>

namespace kideal {

std::string emit_dot(const KIdealLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"{";
    const std::vector<int>& members = lat.nodes[i].members;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) out << ",";
      out << members[k];
    }
    out << "}\"];\n";
  }
  for (const auto& e : lat.edges)
    out << "  n" << e.first << " -> n" << e.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kideal
