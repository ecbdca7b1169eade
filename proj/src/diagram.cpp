#include "diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace keikit {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

struct PdEntry {
    bool classical = true;
    int e[4] = {0, 0, 0, 0}; // a, b, c, d
};

std::vector<PdEntry> tokenize_pd(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty())
        throw ParseError("empty PD code");

    size_t pos = 0, end = s.size();
    if (s.rfind("PD[", 0) == 0) {
        if (s.back() != ']')
            throw ParseError("unterminated PD[...] wrapper");
        pos = 3;
        end = s.size() - 1;
    }

    std::vector<PdEntry> entries;
    while (pos < end) {
        PdEntry entry;
        char kind = s[pos];
        if (kind == 'X' || kind == 'x')
            entry.classical = true;
        else if (kind == 'V' || kind == 'v')
            entry.classical = false;
        else
            throw ParseError(std::string("expected crossing entry, got '") + kind + "'");
        ++pos;
        if (pos >= end || (s[pos] != '[' && s[pos] != '('))
            throw ParseError("expected '[' or '(' after crossing tag");
        const char close = s[pos] == '[' ? ']' : ')';
        ++pos;
        for (int i = 0; i < 4; ++i) {
            size_t start = pos;
            while (pos < end && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start)
                throw ParseError("expected edge number in crossing entry");
            entry.e[i] = std::stoi(s.substr(start, pos - start));
            if (i < 3) {
                if (pos >= end || s[pos] != ',')
                    throw ParseError("expected ',' between edge numbers");
                ++pos;
            }
        }
        if (pos >= end || s[pos] != close)
            throw ParseError("unterminated crossing entry");
        ++pos;
        entries.push_back(entry);
        if (pos < end && (s[pos] == ',' || s[pos] == ';')) ++pos;
    }
    if (entries.empty())
        throw ParseError("PD code has no crossing entries");
    return entries;
}

} // namespace

LinkDiagram parse_pd(const std::string& text) {
    const std::vector<PdEntry> entries = tokenize_pd(text);
    const int edge_count = 2 * static_cast<int>(entries.size());

    std::vector<int> uses(edge_count + 1, 0);
    for (const auto& en : entries)
        for (int v : en.e) {
            if (v < 1 || v > edge_count)
                throw ParseError("edge " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(edge_count));
            ++uses[v];
        }
    for (int e = 1; e <= edge_count; ++e)
        if (uses[e] != 2)
            throw ParseError("edge " + std::to_string(e) + " used " + std::to_string(uses[e]) +
                             " times, expected exactly 2");

    // Strand connectivity (components) and arc merging. Strands run through
    // a->c and b->d at every entry; only classical over-strands and virtual
    // pass-throughs keep the two edges on one arc.
    UnionFind strand(edge_count + 1), arc(edge_count + 1);
    for (const auto& en : entries) {
        strand.join(en.e[0], en.e[2]);
        strand.join(en.e[1], en.e[3]);
        arc.join(en.e[1], en.e[3]);
        if (!en.classical) arc.join(en.e[0], en.e[2]);
    }

    // Each component's edges must form a consecutive block, as in the
    // standard tables; succ() walks the block cyclically.
    std::map<int, std::pair<int, int>> comp_range; // root -> [lo, hi]
    for (int e = 1; e <= edge_count; ++e) {
        auto [it, fresh] = comp_range.try_emplace(strand.find(e), std::make_pair(e, e));
        if (!fresh) {
            it->second.first = std::min(it->second.first, e);
            it->second.second = std::max(it->second.second, e);
        }
    }
    std::map<int, int> comp_size;
    for (int e = 1; e <= edge_count; ++e) ++comp_size[strand.find(e)];
    for (const auto& [root, range] : comp_range)
        if (range.second - range.first + 1 != comp_size[root])
            throw ParseError("component edge numbers are not consecutive");
    auto succ = [&](int e) {
        const auto& range = comp_range[strand.find(e)];
        return e == range.second ? range.first : e + 1;
    };

    // Component numbering: ascending smallest edge.
    std::map<int, int> comp_id;
    for (int e = 1; e <= edge_count; ++e)
        comp_id.try_emplace(strand.find(e), 0);
    {
        int next = 0;
        std::vector<std::pair<int, int>> by_lo;
        for (const auto& [root, range] : comp_range) by_lo.emplace_back(range.first, root);
        std::sort(by_lo.begin(), by_lo.end());
        for (const auto& [lo, root] : by_lo) comp_id[root] = ++next;
    }

    // Arc numbering: first appearance in (under_in, over, under_out) scan
    // order, then any arcs left (virtual-only components) by smallest edge.
    std::map<int, int> arc_id;
    int next_arc = 0;
    auto touch = [&](int edge) {
        auto [it, fresh] = arc_id.try_emplace(arc.find(edge), 0);
        if (fresh) it->second = ++next_arc;
        return it->second;
    };

    LinkDiagram d;
    for (const auto& en : entries) {
        if (!en.classical) continue;
        const int a = en.e[0], b = en.e[1], c = en.e[2], dd = en.e[3];
        if (succ(a) != c)
            throw ParseError("under-strand must enter at the first slot of X[" + std::to_string(a) +
                             ",...]");
        bool positive;
        const auto& range = comp_range[strand.find(b)];
        if (range.second - range.first == 1) {
            positive = (b == dd + 1);
        } else if (succ(dd) == b) {
            positive = true;
        } else if (succ(b) == dd) {
            positive = false;
        } else {
            throw ParseError("over-strand edges not consecutive at X[" + std::to_string(a) + ",...]");
        }
        Crossing cr;
        cr.sign = positive ? 1 : -1;
        cr.under_in = touch(a);
        cr.over = touch(b);
        cr.under_out = touch(c);
        d.crossings.push_back(cr);
    }
    for (int e = 1; e <= edge_count; ++e) touch(e);

    d.arcs = next_arc;
    d.component_of.assign(static_cast<size_t>(d.arcs) + 1, 0);
    for (int e = 1; e <= edge_count; ++e)
        d.component_of[arc_id[arc.find(e)]] = comp_id[strand.find(e)];
    d.components = static_cast<int>(comp_range.size());
    return d;
}

LinkDiagram parse_braid(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("braid input must look like \"<strands>:<g1>,<g2>,...\"");
    int strands = 0;
    try {
        size_t used = 0;
        strands = std::stoi(text.substr(0, colon), &used);
        std::string head = text.substr(0, colon);
        head.erase(std::remove_if(head.begin(), head.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   head.end());
        if (used == 0 || std::to_string(strands) != head) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("bad strand count in braid input");
    }
    if (strands < 1)
        throw ParseError("braid needs at least one strand");

    struct Tok { bool virt; int index; int sign; };
    std::vector<Tok> word;
    std::string rest = text.substr(colon + 1);
    std::istringstream is(rest);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        piece.erase(std::remove_if(piece.begin(), piece.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    piece.end());
        if (piece.empty()) {
            if (word.empty() && is.eof()) break; // "1:" -> empty word
            throw ParseError("empty braid token");
        }
        Tok t{};
        std::string num = piece;
        if (piece[0] == 'v' || piece[0] == 'V') {
            t.virt = true;
            num = piece.substr(1);
        }
        try {
            size_t used = 0;
            int v = std::stoi(num, &used);
            if (used != num.size()) throw std::invalid_argument("");
            t.sign = v < 0 ? -1 : 1;
            t.index = std::abs(v);
        } catch (const std::exception&) {
            throw ParseError("bad braid token '" + piece + "'");
        }
        if (t.virt && t.sign < 0)
            throw ParseError("virtual generator cannot be negative: '" + piece + "'");
        if (t.index < 1 || t.index >= strands)
            throw ParseError("generator index out of range for " + std::to_string(strands) +
                             " strands: '" + piece + "'");
        word.push_back(t);
    }

    // Strands flow upward; sigma_i crosses the strand moving from position i
    // to i+1 over the one moving from i+1 to i, giving a +1 crossing.
    // Arcs are provisional ids, merged at the closure; the strand that keeps
    // flowing through an over-crossing keeps its arc.
    int next_arc = 0;
    std::vector<int> pos_arc(static_cast<size_t>(strands) + 1);
    std::vector<int> pos_origin(static_cast<size_t>(strands) + 1);
    std::vector<int> arc_origin; // provisional arc -> bottom strand index
    arc_origin.push_back(0);     // unused slot 0
    for (int i = 1; i <= strands; ++i) {
        pos_arc[i] = ++next_arc;
        pos_origin[i] = i;
        arc_origin.push_back(i);
    }

    struct ProtoCrossing { int sign, under_in, over, under_out; };
    std::vector<ProtoCrossing> proto;
    for (const Tok& t : word) {
        const int i = t.index;
        if (t.virt) {
            std::swap(pos_arc[i], pos_arc[i + 1]);
            std::swap(pos_origin[i], pos_origin[i + 1]);
            continue;
        }
        ProtoCrossing pc{};
        pc.sign = t.sign;
        const int fresh = ++next_arc;
        if (t.sign > 0) {
            pc.under_in = pos_arc[i + 1];
            pc.over = pos_arc[i];
            pc.under_out = fresh;
            arc_origin.push_back(pos_origin[i + 1]);
            pos_arc[i + 1] = pos_arc[i];
            pos_arc[i] = fresh;
        } else {
            pc.under_in = pos_arc[i];
            pc.over = pos_arc[i + 1];
            pc.under_out = fresh;
            arc_origin.push_back(pos_origin[i]);
            pos_arc[i] = pos_arc[i + 1];
            pos_arc[i + 1] = fresh;
        }
        std::swap(pos_origin[i], pos_origin[i + 1]);
        proto.push_back(pc);
    }

    // Trace closure: position j at the top reconnects to position j at the
    // bottom, merging arcs and joining strands into cycles.
    UnionFind arcs(next_arc + 1), strands_uf(strands + 1);
    for (int j = 1; j <= strands; ++j) {
        arcs.join(pos_arc[j], j);
        strands_uf.join(pos_origin[j], j);
    }

    std::map<int, int> arc_id;
    int canon = 0;
    auto touch = [&](int provisional) {
        auto [it, fresh] = arc_id.try_emplace(arcs.find(provisional), 0);
        if (fresh) it->second = ++canon;
        return it->second;
    };

    LinkDiagram d;
    for (const auto& pc : proto) {
        Crossing cr;
        cr.sign = pc.sign;
        cr.under_in = touch(pc.under_in);
        cr.over = touch(pc.over);
        cr.under_out = touch(pc.under_out);
        d.crossings.push_back(cr);
    }
    for (int a = 1; a <= next_arc; ++a) touch(a);
    d.arcs = canon;

    std::map<int, int> comp_id;
    int next_comp = 0;
    for (int j = 1; j <= strands; ++j)
        if (comp_id.try_emplace(strands_uf.find(j), 0).second)
            comp_id[strands_uf.find(j)] = ++next_comp;
    d.components = next_comp;
    d.component_of.assign(static_cast<size_t>(d.arcs) + 1, 0);
    for (int a = 1; a <= next_arc; ++a)
        d.component_of[arc_id[arcs.find(a)]] = comp_id[strands_uf.find(arc_origin[a])];
    return d;
}

LinkDiagram reverse_orientation(const LinkDiagram& d) {
    LinkDiagram r = d;
    for (auto& c : r.crossings) std::swap(c.under_in, c.under_out);
    return r;
}

std::string to_pd_string(const LinkDiagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    std::vector<int> death(static_cast<size_t>(d.arcs) + 1, -1);
    std::vector<int> birth(static_cast<size_t>(d.arcs) + 1, -1);
    std::vector<std::vector<int>> overs(static_cast<size_t>(d.arcs) + 1);
    for (int c = 0; c < n; ++c) {
        const auto& cr = d.crossings[c];
        if (death[cr.under_in] >= 0 || birth[cr.under_out] >= 0)
            throw DomainError("arc has more than one under passage");
        death[cr.under_in] = c;
        birth[cr.under_out] = c;
        overs[cr.over].push_back(c);
    }

    struct Passage { bool under; int crossing; };
    std::vector<std::array<int, 2>> under_edges(static_cast<size_t>(n)); // in, out
    std::vector<std::array<int, 2>> over_edges(static_cast<size_t>(n));

    int edge = 0;
    for (int comp = 1; comp <= d.components; ++comp) {
        int start_arc = 0;
        for (int a = 1; a <= d.arcs; ++a)
            if (d.component_of[a] == comp && (start_arc == 0 || death[a] >= 0)) {
                start_arc = a;
                if (death[a] >= 0) break;
            }
        std::vector<Passage> walk;
        if (death[start_arc] < 0) {
            // Component never goes under: a single arc passing over things.
            if (overs[start_arc].empty())
                throw DomainError("crossingless component cannot be written as a PD code");
            for (int c : overs[start_arc]) walk.push_back({false, c});
        } else {
            int a = start_arc, steps = 0;
            do {
                if (++steps > d.arcs)
                    throw DomainError("under-strand chain does not close up");
                for (int c : overs[a]) walk.push_back({false, c});
                walk.push_back({true, death[a]});
                a = d.crossings[death[a]].under_out;
            } while (a != start_arc);
        }
        const int base = edge + 1;
        for (size_t i = 0; i < walk.size(); ++i) {
            const int in = base + static_cast<int>(i);
            const int out = (i + 1 < walk.size()) ? in + 1 : base;
            if (walk[i].under)
                under_edges[walk[i].crossing] = {in, out};
            else
                over_edges[walk[i].crossing] = {in, out};
        }
        edge += static_cast<int>(walk.size());
    }

    std::ostringstream os;
    os << "PD[";
    for (int c = 0; c < n; ++c) {
        const auto& cr = d.crossings[c];
        const int a = under_edges[c][0], out = under_edges[c][1];
        int b, dd;
        if (cr.sign > 0) {
            dd = over_edges[c][0];
            b = over_edges[c][1];
        } else {
            b = over_edges[c][0];
            dd = over_edges[c][1];
        }
        os << (c ? "," : "") << "X[" << a << "," << b << "," << out << "," << dd << "]";
    }
    os << "]";
    return os.str();
}

} // namespace keikit
