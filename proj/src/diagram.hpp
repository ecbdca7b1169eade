#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace keikit {

// One classical crossing, described by the arcs that meet it. Arcs are the
// maximal strand segments of the diagram, broken only where a strand passes
// under; they are numbered 1..arcs. `sign` is +1 or -1 by the right-hand
// rule. Virtual crossings never appear here: both strands pass through
// transparently, so parsing erases them.
struct Crossing {
    int sign = 0;
    int under_in = 0;
    int over = 0;
    int under_out = 0;

    bool operator==(const Crossing&) const = default;
};

struct LinkDiagram {
    int arcs = 0;
    std::vector<Crossing> crossings;
    int components = 0;
    std::vector<int> component_of; // arc id (1-based) -> component (1-based); [0] unused

    bool operator==(const LinkDiagram&) const = default;
};

// Planar-diagram code: "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]" or the compact
// "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)". Whitespace-insensitive; the PD[...]
// wrapper is optional. Entries are X (classical) or V (virtual).
//
// X[a,b,c,d] lists the edges counterclockwise starting from the incoming
// under-edge a; the under-strand leaves at c. Edges are numbered 1..2m
// consecutively along each component, so the over-strand runs from whichever
// of b, d the other one succeeds. When the over-strand's component has only
// two edges both cyclic successions hold and the numeric order decides, as
// in the standard tables. Planarity is never checked; a PD that does not
// embed in the plane is read as a virtual link.
LinkDiagram parse_pd(const std::string& text);

// Braid closure: "<strands>:<g1>,<g2>,...". Token i / -i is the Artin
// generator sigma_i^{+1/-1}; token vi is a virtual swap of strands i, i+1.
// "1:" is the zero-crossing unknot.
LinkDiagram parse_braid(const std::string& text);

// Reverses every strand: swaps under_in/under_out at each crossing.
// Signs are preserved.
LinkDiagram reverse_orientation(const LinkDiagram& d);

// Re-emits a PD code that parses back to the same structure. Fails on
// diagrams with a crossingless component (PD cannot express a free loop).
std::string to_pd_string(const LinkDiagram& d);

} // namespace keikit
