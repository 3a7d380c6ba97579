#ifndef KIDEAL_DOT_HPP
#define KIDEAL_DOT_HPP

#include <string>

#include "kideal/semimodule.hpp"

namespace kideal {

// Hasse diagram of the subtractive lattice as a DOT digraph: one node per
// lattice entry labeled by its member set, one edge per covering pair,
// drawn bottom to top.  Output is a pure function of the lattice, so equal
// lattices give byte-identical text.
std::string emit_dot(const KIdealLattice& lat);

}  // namespace kideal

#endif
