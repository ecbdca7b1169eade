#include "keikit.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digest.hpp"
#include "errors.hpp"
#include "invariant.hpp"

#include "json.hpp"

struct keikit_kei {
    keikit::FiniteKei k;
};
struct keikit_diagram {
    keikit::LinkDiagram d;
};
struct keikit_module {
    keikit::KeiModule m;
};
struct keikit_module_list {
    std::vector<keikit_module> items;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Run f(), translating the library's exceptions into status codes.
template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const keikit::ParseError& e) {
        return fail(KEIKIT_ERROR_PARSE, e.what());
    } catch (const keikit::LimitError& e) {
        return fail(KEIKIT_ERROR_LIMIT, e.what());
    } catch (const keikit::DomainError& e) {
        return fail(KEIKIT_ERROR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(KEIKIT_ERROR_INVALID_ARGUMENT, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int require(bool ok, const char* what) {
    if (ok) return KEIKIT_OK;
    return fail(KEIKIT_ERROR_INVALID_ARGUMENT, what);
}

int parse_variant(const char* name, std::optional<keikit::ModuleVariant>& out) {
    if (!name) return KEIKIT_OK;
    return guarded([&] {
        out = keikit::variant_from_name(name);
        return KEIKIT_OK;
    });
}

} // namespace

extern "C" {

const char* keikit_last_error(void) { return g_last_error.c_str(); }

void keikit_string_free(char* s) { std::free(s); }

/* ---- kei ------------------------------------------------------------- */

int keikit_kei_parse(const char* text, keikit_kei** out) {
    if (int rc = require(text && out, "keikit_kei_parse: NULL argument")) return rc;
    return guarded([&] {
        *out = new keikit_kei{keikit::parse_kei(text)};
        return KEIKIT_OK;
    });
}

int keikit_kei_takasaki(int n, keikit_kei** out) {
    if (int rc = require(out != nullptr, "keikit_kei_takasaki: NULL output")) return rc;
    return guarded([&] {
        *out = new keikit_kei{keikit::takasaki_kei(n)};
        return KEIKIT_OK;
    });
}

int keikit_kei_alexander(int n, long long t, keikit_kei** out) {
    if (int rc = require(out != nullptr, "keikit_kei_alexander: NULL output")) return rc;
    return guarded([&] {
        *out = new keikit_kei{keikit::alexander_kei(n, t)};
        return KEIKIT_OK;
    });
}

void keikit_kei_free(keikit_kei* k) { delete k; }

int keikit_kei_order(const keikit_kei* k) { return k ? k->k.order() : 0; }

int keikit_kei_op(const keikit_kei* k, int x, int y, int* out) {
    if (int rc = require(k && out, "keikit_kei_op: NULL argument")) return rc;
    if (x < 1 || y < 1 || x > k->k.order() || y > k->k.order())
        return fail(KEIKIT_ERROR_INVALID_ARGUMENT, "keikit_kei_op: element out of range");
    *out = k->k.op(x, y);
    return KEIKIT_OK;
}

int keikit_kei_to_json(const keikit_kei* k, char** out) {
    if (int rc = require(k && out, "keikit_kei_to_json: NULL argument")) return rc;
    *out = dup_string(keikit::kei_to_json(k->k));
    return KEIKIT_OK;
}

int keikit_kei_digest(const keikit_kei* k, char** out) {
    if (int rc = require(k && out, "keikit_kei_digest: NULL argument")) return rc;
    *out = dup_string(keikit::hex_digest(keikit::kei_to_json(k->k)));
    return KEIKIT_OK;
}

/* ---- diagrams -------------------------------------------------------- */

int keikit_diagram_parse_pd(const char* text, keikit_diagram** out) {
    if (int rc = require(text && out, "keikit_diagram_parse_pd: NULL argument")) return rc;
    return guarded([&] {
        *out = new keikit_diagram{keikit::parse_pd(text)};
        return KEIKIT_OK;
    });
}

int keikit_diagram_parse_braid(const char* text, keikit_diagram** out) {
    if (int rc = require(text && out, "keikit_diagram_parse_braid: NULL argument")) return rc;
    return guarded([&] {
        *out = new keikit_diagram{keikit::parse_braid(text)};
        return KEIKIT_OK;
    });
}

void keikit_diagram_free(keikit_diagram* d) { delete d; }

int keikit_diagram_reverse(const keikit_diagram* d, keikit_diagram** out) {
    if (int rc = require(d && out, "keikit_diagram_reverse: NULL argument")) return rc;
    *out = new keikit_diagram{keikit::reverse_orientation(d->d)};
    return KEIKIT_OK;
}

int keikit_diagram_to_pd(const keikit_diagram* d, char** out) {
    if (int rc = require(d && out, "keikit_diagram_to_pd: NULL argument")) return rc;
    return guarded([&] {
        *out = dup_string(keikit::to_pd_string(d->d));
        return KEIKIT_OK;
    });
}

int keikit_diagram_crossings(const keikit_diagram* d) {
    return d ? static_cast<int>(d->d.crossings.size()) : 0;
}

int keikit_diagram_arcs(const keikit_diagram* d) { return d ? d->d.arcs : 0; }

int keikit_diagram_components(const keikit_diagram* d) { return d ? d->d.components : 0; }

/* ---- counting invariant ---------------------------------------------- */

int keikit_count_labelings(const keikit_diagram* d, const keikit_kei* k,
                           unsigned long long* out) {
    if (int rc = require(d && k && out, "keikit_count_labelings: NULL argument")) return rc;
    return guarded([&] {
        *out = keikit::count_kei_labelings(d->d, k->k);
        return KEIKIT_OK;
    });
}

/* ---- kei modules ------------------------------------------------------ */

int keikit_module_parse(const char* text, long long modulus, const char* variant,
                        keikit_module** out) {
    if (int rc = require(text && out, "keikit_module_parse: NULL argument")) return rc;
    std::optional<keikit::ModuleVariant> var;
    if (int rc = parse_variant(variant, var)) return rc;
    std::optional<long long> mod;
    if (modulus > 0) mod = modulus;
    return guarded([&] {
        *out = new keikit_module{keikit::parse_module(text, mod, var)};
        return KEIKIT_OK;
    });
}

void keikit_module_free(keikit_module* m) { delete m; }

long long keikit_module_modulus(const keikit_module* m) { return m ? m->m.modulus : 0; }

int keikit_module_order(const keikit_module* m) { return m ? m->m.order : 0; }

const char* keikit_module_variant(const keikit_module* m) {
    if (!m) return "";
    return m->m.variant == keikit::ModuleVariant::kei ? "kei" : "quandle";
}

int keikit_module_verify(const keikit_kei* k, const keikit_module* m, int* valid,
                         char** report) {
    if (int rc = require(k && m && valid, "keikit_module_verify: NULL argument")) return rc;
    return guarded([&] {
        auto violations = keikit::verify_module(k->k, m->m);
        *valid = violations.empty() ? 1 : 0;
        if (report) *report = dup_string(keikit::format_module_violations(violations));
        return KEIKIT_OK;
    });
}

int keikit_module_to_json(const keikit_module* m, char** out) {
    if (int rc = require(m && out, "keikit_module_to_json: NULL argument")) return rc;
    *out = dup_string(keikit::module_to_json(m->m));
    return KEIKIT_OK;
}

int keikit_module_to_text(const keikit_module* m, char** out) {
    if (int rc = require(m && out, "keikit_module_to_text: NULL argument")) return rc;
    *out = dup_string(keikit::module_to_text(m->m));
    return KEIKIT_OK;
}

int keikit_module_digest(const keikit_module* m, char** out) {
    if (int rc = require(m && out, "keikit_module_digest: NULL argument")) return rc;
    *out = dup_string(keikit::hex_digest(keikit::module_to_json(m->m)));
    return KEIKIT_OK;
}

int keikit_enumerate_modules(const keikit_kei* k, long long modulus, const char* variant,
                             long long limit, keikit_module_list** out) {
    if (int rc = require(k && variant && out, "keikit_enumerate_modules: NULL argument"))
        return rc;
    std::optional<keikit::ModuleVariant> var;
    if (int rc = parse_variant(variant, var)) return rc;
    return guarded([&] {
        auto found = keikit::enumerate_modules(
            k->k, modulus, *var, limit > 0 ? limit : keikit::default_module_search_limit);
        auto* list = new keikit_module_list;
        list->items.reserve(found.size());
        for (auto& m : found) list->items.push_back(keikit_module{std::move(m)});
        *out = list;
        return KEIKIT_OK;
    });
}

void keikit_module_list_free(keikit_module_list* l) { delete l; }

long long keikit_module_list_size(const keikit_module_list* l) {
    return l ? static_cast<long long>(l->items.size()) : 0;
}

const keikit_module* keikit_module_list_get(const keikit_module_list* l, long long i) {
    if (!l || i < 0 || i >= static_cast<long long>(l->items.size())) return nullptr;
    return &l->items[static_cast<size_t>(i)];
}

/* ---- enhanced invariant ----------------------------------------------- */

int keikit_enhanced_invariant(const keikit_diagram* d, const keikit_kei* k,
                              const keikit_module* m, char** out) {
    if (int rc = require(d && k && m && out, "keikit_enhanced_invariant: NULL argument"))
        return rc;
    return guarded([&] {
        *out = dup_string(keikit::enhanced_invariant(d->d, k->k, m->m).render());
        return KEIKIT_OK;
    });
}

int keikit_enhanced_invariant_json(const keikit_diagram* d, const keikit_kei* k,
                                   const keikit_module* m, const char* link_name,
                                   char** out) {
    if (int rc = require(d && k && m && out, "keikit_enhanced_invariant_json: NULL argument"))
        return rc;
    return guarded([&] {
        keikit::InvariantPolynomial poly = keikit::enhanced_invariant(d->d, k->k, m->m);
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [exp, mult] : poly.terms) {
            nlohmann::json t;
            if (exp.fits_ulong_p())
                t["exp"] = static_cast<unsigned long long>(exp.get_ui());
            else
                t["exp"] = exp.get_str();
            t["mult"] = mult;
            terms.push_back(std::move(t));
        }
        nlohmann::json j{{"link", link_name ? link_name : ""},
                         {"kei", keikit::hex_digest(keikit::kei_to_json(k->k))},
                         {"module", keikit::hex_digest(keikit::module_to_json(m->m))},
                         {"terms", std::move(terms)},
                         {"countingInvariant", poly.multiplicity_sum()}};
        *out = dup_string(j.dump());
        return KEIKIT_OK;
    });
}

} /* extern "C" */
