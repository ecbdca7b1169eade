#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kei.hpp"

namespace keikit {

enum class ModuleVariant { kei, quandle };

std::string variant_name(ModuleVariant v);
ModuleVariant variant_from_name(const std::string& name); // throws ParseError

// Scalar actions t_{x,y}, s_{x,y} on Z_m making the crossing rule
// c = t_{x,y} a + s_{x,y} b into a module over the kei's coefficient algebra.
// The relation families, written with > for the kei operation:
//
//   t-inverse   t_{x,y} t_{x>y,y} = 1
//   s-reversal  t_{x,y} s_{x>y,y} + s_{x,y} = 0
//   diagonal    t_{x,x} + s_{x,x} = 1
//   tt-slide    t_{x>y,z} t_{x,y} = t_{x>z,y>z} t_{x,z}
//   ts-slide    t_{x>y,z} s_{x,y} = s_{x>z,y>z} t_{y,z}
//   ss-slide    s_{x>y,z} = s_{x>z,y>z} s_{y,z} + t_{x>z,y>z} s_{x,z}
//
// The kei variant imposes all six; the quandle variant drops t-inverse and
// s-reversal but still requires every t entry to be a unit ("t-unit").
struct KeiModule {
    ModuleVariant variant = ModuleVariant::kei;
    long long modulus = 2;
    int order = 1;
    std::vector<long long> t, s; // n*n row-major, values in [0, m)

    long long t_at(int x, int y) const { return t[static_cast<size_t>(x - 1) * order + (y - 1)]; }
    long long s_at(int x, int y) const { return s[static_cast<size_t>(x - 1) * order + (y - 1)]; }
    bool operator==(const KeiModule&) const = default;
};

// Shape-checks and reduces entries into [0, m); does not check relations.
KeiModule make_module(ModuleVariant variant, long long modulus,
                      const std::vector<std::vector<long long>>& t,
                      const std::vector<std::vector<long long>>& s);

struct RelationViolation {
    std::string relation;
    int x = 0, y = 0, z = 0; // z = 0 for relations in fewer than three elements
};

std::string format_module_violations(const std::vector<RelationViolation>& v);

// Every failed relation instance; empty result means the structure is valid
// for its variant.  Throws DomainError on order mismatch with the kei.
std::vector<RelationViolation> verify_module(const FiniteKei& k, const KeiModule& mod);

// All module structures for the variant, ordered lexicographically on the
// n x 2n block rows (t row 1, s row 1, t row 2, ...).  Backtracking search:
// t entries range over units, diagonal s and orbit partners are propagated,
// every relation instance is checked the moment its last entry is assigned.
// Guard: order * modulus must stay within `limit` (LimitError otherwise).
inline constexpr long long default_module_search_limit = 44;

std::vector<KeiModule> enumerate_modules(const FiniteKei& k, long long modulus,
                                         ModuleVariant variant,
                                         long long limit = default_module_search_limit);

// JSON form {"modulus": m, "t": [[...]], "s": [[...]], "variant": "kei"} or
// text form: n rows of 2n integers (the [T|S] block), which needs `modulus`.
// Explicit arguments override the file's own fields.
KeiModule parse_module(const std::string& text,
                       std::optional<long long> modulus = std::nullopt,
                       std::optional<ModuleVariant> variant = std::nullopt);
std::string module_to_json(const KeiModule& mod);
std::string module_to_text(const KeiModule& mod);

} // namespace keikit
