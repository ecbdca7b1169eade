#include "keialg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "modarith.hpp"

namespace keikit {

std::string variant_name(ModuleVariant v) {
    return v == ModuleVariant::kei ? "kei" : "quandle";
}

ModuleVariant variant_from_name(const std::string& name) {
    if (name == "kei") return ModuleVariant::kei;
    if (name == "quandle") return ModuleVariant::quandle;
    throw ParseError("unknown module variant '" + name + "' (expected kei or quandle)");
}

KeiModule make_module(ModuleVariant variant, long long modulus,
                      const std::vector<std::vector<long long>>& t,
                      const std::vector<std::vector<long long>>& s) {
    if (modulus < 2)
        throw DomainError("modulus must be at least 2, got " + std::to_string(modulus));
    if (modulus > (1LL << 31)) // keeps residue products inside long long
        throw DomainError("modulus too large, supported range is [2, 2^31]");
    const int n = static_cast<int>(t.size());
    if (n == 0 || static_cast<int>(s.size()) != n)
        throw DomainError("t and s tables must be nonempty squares of equal order");
    KeiModule mod;
    mod.variant = variant;
    mod.modulus = modulus;
    mod.order = n;
    mod.t.reserve(static_cast<size_t>(n) * n);
    mod.s.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(t[i].size()) != n || static_cast<int>(s[i].size()) != n)
            throw DomainError("t and s tables must be nonempty squares of equal order");
        for (long long v : t[i]) mod.t.push_back(mod_reduce(v, modulus));
        for (long long v : s[i]) mod.s.push_back(mod_reduce(v, modulus));
    }
    return mod;
}

namespace {

enum class Rel { t_inverse, s_reversal, diagonal, tt_slide, ts_slide, ss_slide, t_unit };

const char* rel_name(Rel r) {
    switch (r) {
    case Rel::t_inverse: return "t-inverse";
    case Rel::s_reversal: return "s-reversal";
    case Rel::diagonal: return "diagonal";
    case Rel::tt_slide: return "tt-slide";
    case Rel::ts_slide: return "ts-slide";
    case Rel::ss_slide: return "ss-slide";
    case Rel::t_unit: return "t-unit";
    }
    return "?";
}

// Operands are reduced residues, so single products fit in long long as long
// as the modulus stays within the make_module cap; products are reduced
// before they are combined.
template <class TF, class SF>
bool rel_holds(Rel r, const FiniteKei& k, long long m, TF&& T, SF&& S, int x, int y, int z) {
    auto mul = [m](long long a, long long b) { return mod_reduce(a * b, m); };
    switch (r) {
    case Rel::t_inverse: return mul(T(x, y), T(k.op(x, y), y)) == 1;
    case Rel::s_reversal: return mod_reduce(mul(T(x, y), S(k.op(x, y), y)) + S(x, y), m) == 0;
    case Rel::diagonal: return mod_reduce(T(x, x) + S(x, x) - 1, m) == 0;
    case Rel::tt_slide:
        return mul(T(k.op(x, y), z), T(x, y)) == mul(T(k.op(x, z), k.op(y, z)), T(x, z));
    case Rel::ts_slide:
        return mul(T(k.op(x, y), z), S(x, y)) == mul(S(k.op(x, z), k.op(y, z)), T(y, z));
    case Rel::ss_slide:
        return S(k.op(x, y), z) == mod_reduce(mul(S(k.op(x, z), k.op(y, z)), S(y, z)) +
                                                  mul(T(k.op(x, z), k.op(y, z)), S(x, z)),
                                              m);
    case Rel::t_unit: return std::gcd(T(x, y), m) == 1;
    }
    return false;
}

} // namespace

std::vector<RelationViolation> verify_module(const FiniteKei& k, const KeiModule& mod) {
    if (mod.order != k.order())
        throw DomainError("module order " + std::to_string(mod.order) + " does not match kei order " +
                          std::to_string(k.order()));
    const int n = k.order();
    const long long m = mod.modulus;
    auto T = [&](int x, int y) { return mod.t_at(x, y); };
    auto S = [&](int x, int y) { return mod.s_at(x, y); };
    const bool kei = mod.variant == ModuleVariant::kei;

    std::vector<RelationViolation> out;
    auto check = [&](Rel r, int x, int y, int z) {
        if (!rel_holds(r, k, m, T, S, x, y, z)) out.push_back({rel_name(r), x, y, z});
    };
    for (int x = 1; x <= n; ++x) check(Rel::diagonal, x, 0, 0);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (kei) {
                check(Rel::t_inverse, x, y, 0);
                check(Rel::s_reversal, x, y, 0);
            } else {
                check(Rel::t_unit, x, y, 0);
            }
        }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                check(Rel::tt_slide, x, y, z);
                check(Rel::ts_slide, x, y, z);
                check(Rel::ss_slide, x, y, z);
            }
    return out;
}

std::string format_module_violations(const std::vector<RelationViolation>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << "\n";
        os << v[i].relation << " fails at (x";
        if (v[i].y) os << ",y";
        if (v[i].z) os << ",z";
        os << ")=(" << v[i].x;
        if (v[i].y) os << "," << v[i].y;
        if (v[i].z) os << "," << v[i].z;
        os << ")";
    }
    return os.str();
}

namespace {

// Backtracking state for enumerate_modules. Cells are indexed t(x,y) ->
// (x-1)*n+(y-1), s(x,y) -> n^2 + same. The search plan fixes, per column y:
// the t entries (orbit partners forced to inverses in the kei variant, since
// t-inverse leaves no choice), then the s entries (diagonal forced by the
// diagonal relation, orbit partners forced by s-reversal resp. the z=y case
// of ss-slide). Every relation instance is evaluated the moment its last
// cell is assigned, so dead branches die as early as possible.
struct Search {
    const FiniteKei& k;
    const long long m;
    const ModuleVariant variant;
    const int n;

    struct Instance {
        Rel rel;
        int x, y, z;
        std::vector<int> cells;
    };
    struct Forced {
        int target;
        enum class Rule { s_diag, t_partner, s_partner_kei, s_partner_quandle } rule;
        int x, y; // coordinates of the searched cell the value derives from
    };
    struct Step {
        int cell;
        bool unit_domain;
        std::vector<Forced> forced;
    };

    std::vector<long long> units, residues;
    std::vector<Instance> instances;
    std::vector<std::vector<int>> cell_instances;
    std::vector<int> remaining;
    std::vector<Step> plan;
    std::vector<long long> val;
    std::vector<char> assigned;
    std::vector<KeiModule> found;

    Search(const FiniteKei& kei, long long modulus, ModuleVariant var)
        : k(kei), m(modulus), variant(var), n(kei.order()) {
        for (long long u = 1; u < m; ++u)
            if (std::gcd(u, m) == 1) units.push_back(u);
        for (long long r = 0; r < m; ++r) residues.push_back(r);
        const int cells = 2 * n * n;
        val.assign(cells, 0);
        assigned.assign(cells, 0);
        cell_instances.assign(cells, {});
        build_instances();
        build_plan();
    }

    int tcell(int x, int y) const { return (x - 1) * n + (y - 1); }
    int scell(int x, int y) const { return n * n + (x - 1) * n + (y - 1); }

    void add_instance(Rel r, int x, int y, int z) {
        Instance ins{r, x, y, z, {}};
        auto use_t = [&](int a, int b) { ins.cells.push_back(tcell(a, b)); };
        auto use_s = [&](int a, int b) { ins.cells.push_back(scell(a, b)); };
        switch (r) {
        case Rel::t_inverse:
            use_t(x, y);
            use_t(k.op(x, y), y);
            break;
        case Rel::s_reversal:
            use_t(x, y);
            use_s(k.op(x, y), y);
            use_s(x, y);
            break;
        case Rel::diagonal:
            use_t(x, x);
            use_s(x, x);
            break;
        case Rel::tt_slide:
            use_t(k.op(x, y), z);
            use_t(x, y);
            use_t(k.op(x, z), k.op(y, z));
            use_t(x, z);
            break;
        case Rel::ts_slide:
            use_t(k.op(x, y), z);
            use_s(x, y);
            use_s(k.op(x, z), k.op(y, z));
            use_t(y, z);
            break;
        case Rel::ss_slide:
            use_s(k.op(x, y), z);
            use_s(k.op(x, z), k.op(y, z));
            use_s(y, z);
            use_t(k.op(x, z), k.op(y, z));
            use_s(x, z);
            break;
        case Rel::t_unit:
            use_t(x, y);
            break;
        }
        std::sort(ins.cells.begin(), ins.cells.end());
        ins.cells.erase(std::unique(ins.cells.begin(), ins.cells.end()), ins.cells.end());
        const int idx = static_cast<int>(instances.size());
        for (int c : ins.cells) cell_instances[c].push_back(idx);
        instances.push_back(std::move(ins));
    }

    void build_instances() {
        // t entries already range over units only, so t-unit needs no instance.
        for (int x = 1; x <= n; ++x) add_instance(Rel::diagonal, x, 0, 0);
        if (variant == ModuleVariant::kei)
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y) {
                    add_instance(Rel::t_inverse, x, y, 0);
                    add_instance(Rel::s_reversal, x, y, 0);
                }
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                for (int z = 1; z <= n; ++z) {
                    add_instance(Rel::tt_slide, x, y, z);
                    add_instance(Rel::ts_slide, x, y, z);
                    add_instance(Rel::ss_slide, x, y, z);
                }
        remaining.assign(instances.size(), 0);
        for (size_t i = 0; i < instances.size(); ++i)
            remaining[i] = static_cast<int>(instances[i].cells.size());
    }

    void build_plan() {
        std::vector<char> covered(val.size(), 0);
        for (int y = 1; y <= n; ++y) {
            { // diagonal first: t(y,y) searched, s(y,y) forced
                Step st{tcell(y, y), true, {}};
                st.forced.push_back({scell(y, y), Forced::Rule::s_diag, y, y});
                covered[st.cell] = 1;
                covered[scell(y, y)] = 1;
                plan.push_back(std::move(st));
            }
            for (int x = 1; x <= n; ++x) { // rest of the t column
                if (x == y || covered[tcell(x, y)]) continue;
                Step st{tcell(x, y), true, {}};
                covered[st.cell] = 1;
                const int xp = k.op(x, y);
                if (variant == ModuleVariant::kei && xp != x) {
                    st.forced.push_back({tcell(xp, y), Forced::Rule::t_partner, x, y});
                    covered[tcell(xp, y)] = 1;
                }
                plan.push_back(std::move(st));
            }
            for (int x = 1; x <= n; ++x) { // rest of the s column
                if (x == y || covered[scell(x, y)]) continue;
                Step st{scell(x, y), false, {}};
                covered[st.cell] = 1;
                const int xp = k.op(x, y);
                if (xp != x) {
                    st.forced.push_back({scell(xp, y),
                                         variant == ModuleVariant::kei
                                             ? Forced::Rule::s_partner_kei
                                             : Forced::Rule::s_partner_quandle,
                                         x, y});
                    covered[scell(xp, y)] = 1;
                }
                plan.push_back(std::move(st));
            }
        }
    }

    long long forced_value(const Forced& f, long long v) const {
        switch (f.rule) {
        case Forced::Rule::s_diag: return mod_reduce(1 - v, m);
        case Forced::Rule::t_partner: return mod_inverse(v, m);
        case Forced::Rule::s_partner_kei:
            return mod_reduce(-v * mod_inverse(val[tcell(f.x, f.y)], m), m);
        case Forced::Rule::s_partner_quandle:
            return mod_reduce(val[tcell(k.op(f.x, f.y), f.y)] * v % m *
                                  mod_inverse(val[tcell(f.y, f.y)], m),
                              m);
        }
        return 0;
    }

    bool eval_instance(const Instance& ins) const {
        auto T = [&](int a, int b) { return val[tcell(a, b)]; };
        auto S = [&](int a, int b) { return val[scell(a, b)]; };
        return rel_holds(ins.rel, k, m, T, S, ins.x, ins.y, ins.z);
    }

    bool assign(int cell, long long v, std::vector<int>& trail) {
        val[cell] = v;
        assigned[cell] = 1;
        trail.push_back(cell);
        bool ok = true;
        for (int ii : cell_instances[cell])
            if (--remaining[ii] == 0 && ok && !eval_instance(instances[ii])) ok = false;
        return ok;
    }

    void undo(const std::vector<int>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            assigned[*it] = 0;
            for (int ii : cell_instances[*it]) ++remaining[ii];
        }
    }

    void emit() {
        KeiModule mod;
        mod.variant = variant;
        mod.modulus = m;
        mod.order = n;
        mod.t.assign(val.begin(), val.begin() + n * n);
        mod.s.assign(val.begin() + n * n, val.end());
        found.push_back(std::move(mod));
    }

    void run(size_t step_idx = 0) {
        if (step_idx == plan.size()) {
            emit();
            return;
        }
        const Step& st = plan[step_idx];
        for (long long v : st.unit_domain ? units : residues) {
            std::vector<int> trail;
            bool ok = assign(st.cell, v, trail);
            for (const Forced& f : st.forced) {
                if (!ok) break;
                ok = assign(f.target, forced_value(f, v), trail);
            }
            if (ok) run(step_idx + 1);
            undo(trail);
        }
    }
};

} // namespace

std::vector<KeiModule> enumerate_modules(const FiniteKei& k, long long modulus,
                                         ModuleVariant variant, long long limit) {
    if (modulus < 2)
        throw DomainError("modulus must be at least 2, got " + std::to_string(modulus));
    if (limit < 1)
        throw DomainError("search limit must be positive");
    if (static_cast<long long>(k.order()) * modulus > limit)
        throw LimitError("module search guard: order " + std::to_string(k.order()) + " * modulus " +
                         std::to_string(modulus) + " exceeds the limit " + std::to_string(limit));
    Search search(k, modulus, variant);
    search.run();
    std::sort(search.found.begin(), search.found.end(), [&](const KeiModule& a, const KeiModule& b) {
        const int n = a.order;
        for (int x = 1; x <= n; ++x) { // block rows: t row x, then s row x
            for (int y = 1; y <= n; ++y)
                if (a.t_at(x, y) != b.t_at(x, y)) return a.t_at(x, y) < b.t_at(x, y);
            for (int y = 1; y <= n; ++y)
                if (a.s_at(x, y) != b.s_at(x, y)) return a.s_at(x, y) < b.s_at(x, y);
        }
        return false;
    });
    return search.found;
}

namespace {

std::vector<std::vector<long long>> json_table(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("module JSON needs an array field '") + key + "'");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j[key]) {
        if (!row.is_array())
            throw ParseError(std::string("module field '") + key + "' must be an array of rows");
        rows.emplace_back();
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw ParseError(std::string("module field '") + key + "' must hold integers");
            rows.back().push_back(v.get<long long>());
        }
    }
    return rows;
}

} // namespace

KeiModule parse_module(const std::string& text, std::optional<long long> modulus,
                       std::optional<ModuleVariant> variant) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw ParseError("empty module input");
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad module JSON: ") + e.what());
        }
        long long m;
        if (modulus) {
            m = *modulus;
        } else {
            if (!j.contains("modulus") || !j["modulus"].is_number_integer())
                throw ParseError("module JSON needs an integer 'modulus'");
            m = j["modulus"].get<long long>();
        }
        ModuleVariant var = ModuleVariant::kei;
        if (variant)
            var = *variant;
        else if (j.contains("variant"))
            var = variant_from_name(j["variant"].get<std::string>());
        return make_module(var, m, json_table(j, "t"), json_table(j, "s"));
    }

    // Text form: n rows of 2n integers, the [T|S] block.
    if (!modulus)
        throw ParseError("text module input needs a modulus (use --mod)");
    std::vector<std::vector<long long>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream is(line);
        std::vector<long long> row;
        long long v;
        while (is >> v) row.push_back(v);
        std::string tail;
        if (is.clear(), is >> tail)
            throw ParseError("bad module table entry '" + tail + "'");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    if (n == 0)
        throw ParseError("empty module table");
    std::vector<std::vector<long long>> t(n), s(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != 2 * n)
            throw ParseError("module table must have 2n entries per row (n rows)");
        t[i].assign(rows[i].begin(), rows[i].begin() + n);
        s[i].assign(rows[i].begin() + n, rows[i].end());
    }
    return make_module(variant.value_or(ModuleVariant::kei), *modulus, t, s);
}

std::string module_to_json(const KeiModule& mod) {
    nlohmann::json t = nlohmann::json::array(), s = nlohmann::json::array();
    for (int x = 1; x <= mod.order; ++x) {
        nlohmann::json tr = nlohmann::json::array(), sr = nlohmann::json::array();
        for (int y = 1; y <= mod.order; ++y) {
            tr.push_back(mod.t_at(x, y));
            sr.push_back(mod.s_at(x, y));
        }
        t.push_back(std::move(tr));
        s.push_back(std::move(sr));
    }
    nlohmann::json j;
    j["modulus"] = mod.modulus;
    j["variant"] = variant_name(mod.variant);
    j["t"] = std::move(t);
    j["s"] = std::move(s);
    return j.dump();
}

std::string module_to_text(const KeiModule& mod) {
    std::ostringstream os;
    for (int x = 1; x <= mod.order; ++x) {
        for (int y = 1; y <= mod.order; ++y) os << (y > 1 ? " " : "") << mod.t_at(x, y);
        for (int y = 1; y <= mod.order; ++y) os << " " << mod.s_at(x, y);
        os << "\n";
    }
    return os.str();
}

} // namespace keikit
