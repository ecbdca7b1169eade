#include "labeling.hpp"

#include <functional>

#include "errors.hpp"

namespace keikit {

namespace {

void check_arc_refs(const LinkDiagram& d) {
    auto ok = [&](int a) { return a >= 1 && a <= d.arcs; };
    for (const auto& c : d.crossings)
        if (!ok(c.under_in) || !ok(c.over) || !ok(c.under_out))
            throw DomainError("crossing references an arc outside 1.." + std::to_string(d.arcs));
}

// Propagate forced values: x,y known forces z = x > y, and z,y known forces
// x = z > y (involution).  Returns false on a contradiction.
bool propagate(const LinkDiagram& d, const FiniteKei& k, Labeling& f) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : d.crossings) {
            const int y = f[c.over];
            if (!y) continue;
            const int x = f[c.under_in], z = f[c.under_out];
            if (x) {
                const int w = k.op(x, y);
                if (!z) {
                    f[c.under_out] = w;
                    changed = true;
                } else if (z != w) {
                    return false;
                }
            } else if (z) {
                f[c.under_in] = k.op(z, y);
                changed = true;
            }
        }
    }
    return true;
}

} // namespace

bool is_kei_labeling(const LinkDiagram& d, const FiniteKei& k, const Labeling& f) {
    check_arc_refs(d);
    if (static_cast<int>(f.size()) != d.arcs + 1)
        throw DomainError("labeling has wrong length for this diagram");
    for (int a = 1; a <= d.arcs; ++a)
        if (f[a] < 1 || f[a] > k.order())
            throw DomainError("label out of range at arc " + std::to_string(a));
    for (const auto& c : d.crossings)
        if (f[c.under_out] != k.op(f[c.under_in], f[c.over])) return false;
    return true;
}

std::vector<Labeling> kei_labelings(const LinkDiagram& d, const FiniteKei& k,
                                    std::uint64_t limit) {
    check_arc_refs(d);
    std::vector<Labeling> out;
    const int n = k.order();
    std::function<void(const Labeling&)> dfs = [&](const Labeling& f) {
        int free_arc = 0;
        for (int a = 1; a <= d.arcs; ++a)
            if (!f[a]) {
                free_arc = a;
                break;
            }
        if (!free_arc) {
            if (out.size() >= limit)
                throw LimitError("more than " + std::to_string(limit) + " labelings");
            out.push_back(f);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            Labeling g = f;
            g[free_arc] = v;
            if (propagate(d, k, g)) dfs(g);
        }
    };
    dfs(Labeling(static_cast<size_t>(d.arcs) + 1, 0));
    return out;
}

std::uint64_t count_kei_labelings(const LinkDiagram& d, const FiniteKei& k) {
    check_arc_refs(d);
    std::uint64_t count = 0;
    const int n = k.order();
    std::function<void(const Labeling&)> dfs = [&](const Labeling& f) {
        int free_arc = 0;
        for (int a = 1; a <= d.arcs; ++a)
            if (!f[a]) {
                free_arc = a;
                break;
            }
        if (!free_arc) {
            ++count;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            Labeling g = f;
            g[free_arc] = v;
            if (propagate(d, k, g)) dfs(g);
        }
    };
    dfs(Labeling(static_cast<size_t>(d.arcs) + 1, 0));
    return count;
}

} // namespace keikit
