#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diagram.hpp"
#include "kei.hpp"
#include "keialg.hpp"
#include "labeling.hpp"
#include "modarith.hpp"

namespace keikit {

// One matrix entry: an integer constant plus signed occurrences of the
// formal symbols T(x,y), S(x,y) with kei elements x, y.
struct SymbolTerm {
    char kind = 'T'; // 'T' or 'S'
    int x = 0, y = 0;
    long long coeff = 0;

    bool operator==(const SymbolTerm&) const = default;
};

struct PresentationEntry {
    long long constant = 0;
    std::vector<SymbolTerm> terms; // t-terms before s-terms, then by (x, y); no zero coefficients

    void add_symbol(char kind, int x, int y, long long coeff);
    bool is_zero() const { return constant == 0 && terms.empty(); }
    std::string to_string() const; // e.g. "t(1,2)+s(1,2)-1", "0"
    bool operator==(const PresentationEntry&) const = default;
};

// One row per crossing, one column per arc.  A crossing with strands labeled
// x (incoming under), y (over), z (outgoing under) imposes the bead relation
// beads(z) = T(x,y) beads(x) + S(x,y) beads(y); rows are written against the
// strand direction the sign convention fixes, so a negative crossing swaps
// the roles of the under columns.  Coefficients landing on one column (kinks)
// accumulate.
struct PresentationMatrix {
    int rows = 0, cols = 0;
    std::vector<PresentationEntry> e;

    PresentationMatrix() = default;
    PresentationMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
    PresentationEntry& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const PresentationEntry& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
    bool operator==(const PresentationMatrix&) const = default;
};

// Throws DomainError when f is not a valid labeling of d.
PresentationMatrix presentation_matrix(const LinkDiagram& d, const FiniteKei& k, const Labeling& f);

// Replace every symbol by its module value; entries reduced into [0, m).
IntMatrix substitute(const PresentationMatrix& p, const KeiModule& mod);

// Number of solutions of the substituted homogeneous system over Z_m.
mpz_class labeling_signature(const LinkDiagram& d, const FiniteKei& k, const Labeling& f,
                             const KeiModule& mod);

// Multiset of labeling signatures: exponent -> multiplicity.  Rendered as the
// generating polynomial in u, ascending exponents: "3u^7 + 6u^49".
struct InvariantPolynomial {
    std::map<mpz_class, std::uint64_t> terms;

    std::uint64_t multiplicity_sum() const; // value at u = 1
    std::string render() const;
    bool operator==(const InvariantPolynomial&) const = default;
};

InvariantPolynomial enhanced_invariant(const LinkDiagram& d, const FiniteKei& k,
                                       const KeiModule& mod);

} // namespace keikit
