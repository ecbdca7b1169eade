#include "invariant.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace keikit {

void PresentationEntry::add_symbol(char kind, int x, int y, long long coeff) {
    if (coeff == 0) return;
    auto key = [](const SymbolTerm& t) { return std::tuple(t.kind == 'T' ? 0 : 1, t.x, t.y); };
    SymbolTerm want{kind, x, y, coeff};
    auto it = std::lower_bound(terms.begin(), terms.end(), want,
                               [&](const SymbolTerm& a, const SymbolTerm& b) { return key(a) < key(b); });
    if (it != terms.end() && key(*it) == key(want)) {
        it->coeff += coeff;
        if (it->coeff == 0) terms.erase(it);
    } else {
        terms.insert(it, want);
    }
}

std::string PresentationEntry::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        long long c = t.coeff;
        if (c < 0) {
            os << "-";
            c = -c;
        } else if (!first) {
            os << "+";
        }
        if (c != 1) os << c << "*";
        os << (t.kind == 'T' ? 't' : 's') << "(" << t.x << "," << t.y << ")";
        first = false;
    }
    if (constant != 0) {
        if (constant > 0 && !first) os << "+";
        os << constant;
    }
    return os.str();
}

PresentationMatrix presentation_matrix(const LinkDiagram& d, const FiniteKei& k, const Labeling& f) {
    if (!is_kei_labeling(d, k, f))
        throw DomainError("labeling does not satisfy the crossing relations of this diagram");
    PresentationMatrix p(static_cast<int>(d.crossings.size()), d.arcs);
    for (int i = 0; i < p.rows; ++i) {
        const Crossing& c = d.crossings[i];
        const int in = c.sign > 0 ? c.under_in : c.under_out;
        const int out = c.sign > 0 ? c.under_out : c.under_in;
        const int x = f[in], y = f[c.over];
        p.at(i, in - 1).add_symbol('T', x, y, 1);
        p.at(i, c.over - 1).add_symbol('S', x, y, 1);
        p.at(i, out - 1).constant -= 1;
    }
    return p;
}

IntMatrix substitute(const PresentationMatrix& p, const KeiModule& mod) {
    IntMatrix a(p.rows, p.cols);
    const long long m = mod.modulus;
    for (int i = 0; i < p.rows; ++i)
        for (int j = 0; j < p.cols; ++j) {
            const PresentationEntry& en = p.at(i, j);
            long long v = mod_reduce(en.constant, m);
            for (const auto& t : en.terms) {
                if (t.x < 1 || t.x > mod.order || t.y < 1 || t.y > mod.order)
                    throw DomainError("symbol index exceeds the module order " +
                                      std::to_string(mod.order));
                const long long val = t.kind == 'T' ? mod.t_at(t.x, t.y) : mod.s_at(t.x, t.y);
                v = mod_reduce(v + mod_reduce(t.coeff, m) * val, m);
            }
            a.at(i, j) = v;
        }
    return a;
}

mpz_class labeling_signature(const LinkDiagram& d, const FiniteKei& k, const Labeling& f,
                             const KeiModule& mod) {
    return count_homogeneous_solutions(substitute(presentation_matrix(d, k, f), mod),
                                       Modulus(mod.modulus));
}

std::uint64_t InvariantPolynomial::multiplicity_sum() const {
    std::uint64_t sum = 0;
    for (const auto& [exp, mult] : terms) sum += mult;
    return sum;
}

std::string InvariantPolynomial::render() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, mult] : terms) {
        if (!first) os << " + ";
        os << mult << "u";
        if (exp != 1) os << "^" << exp.get_str();
        first = false;
    }
    return os.str();
}

InvariantPolynomial enhanced_invariant(const LinkDiagram& d, const FiniteKei& k,
                                       const KeiModule& mod) {
    if (mod.order != k.order())
        throw DomainError("module order " + std::to_string(mod.order) + " does not match kei order " +
                          std::to_string(k.order()));
    InvariantPolynomial poly;
    for (const Labeling& f : kei_labelings(d, k))
        ++poly.terms[labeling_signature(d, k, f, mod)];
    return poly;
}

} // namespace keikit
