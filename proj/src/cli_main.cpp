// Command-line front end.  Everything flows through the public C API in
// keikit.h; no internal headers.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "keikit.h"

#include "CLI11.hpp"
#include "json.hpp"

namespace {

// Exit contract: 0 success, 1 domain/limit refusal, 2 parse or I/O trouble.
int status_to_exit(int rc) {
    switch (rc) {
    case KEIKIT_OK:
        return 0;
    case KEIKIT_ERROR_DOMAIN:
    case KEIKIT_ERROR_LIMIT:
        return 1;
    default:
        return 2;
    }
}

struct KeiDel {
    void operator()(keikit_kei* p) const { keikit_kei_free(p); }
};
struct DiagramDel {
    void operator()(keikit_diagram* p) const { keikit_diagram_free(p); }
};
struct ModuleDel {
    void operator()(keikit_module* p) const { keikit_module_free(p); }
};
struct ListDel {
    void operator()(keikit_module_list* p) const { keikit_module_list_free(p); }
};
using KeiPtr = std::unique_ptr<keikit_kei, KeiDel>;
using DiagramPtr = std::unique_ptr<keikit_diagram, DiagramDel>;
using ModulePtr = std::unique_ptr<keikit_module, ModuleDel>;
using ListPtr = std::unique_ptr<keikit_module_list, ListDel>;

std::string take(char* s) {
    std::string out = s ? s : "";
    keikit_string_free(s);
    return out;
}

std::string fixtures_dir() {
    const char* env = std::getenv("KEIKIT_FIXTURES");
    return env && *env ? env : "fixtures";
}

// Literal path first, then relative to the fixture directory.
std::optional<std::string> read_file(const std::string& path, std::string& err) {
    namespace fs = std::filesystem;
    fs::path p(path);
    if (!fs::exists(p)) {
        fs::path alt = fs::path(fixtures_dir()) / path;
        if (fs::exists(alt))
            p = alt;
        else {
            err = "cannot find '" + path + "' (also tried " + alt.string() + ")";
            return std::nullopt;
        }
    }
    std::ifstream in(p);
    if (!in) {
        err = "cannot read '" + p.string() + "'";
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int complain(int rc, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return status_to_exit(rc);
}

int complain(int rc) { return complain(rc, keikit_last_error()); }

// --kei mini-grammar: takasaki:<n> | alexander:<n>:<t> | file:<path>.
// Returns a KEIKIT status; `err` carries the message.
int resolve_kei(const std::string& ref, KeiPtr& out, std::string& err) {
    keikit_kei* raw = nullptr;
    int rc;
    if (ref.rfind("takasaki:", 0) == 0) {
        int n;
        try {
            n = std::stoi(ref.substr(9));
        } catch (const std::exception&) {
            err = "bad kei argument '" + ref + "'";
            return KEIKIT_ERROR_PARSE;
        }
        rc = keikit_kei_takasaki(n, &raw);
    } else if (ref.rfind("alexander:", 0) == 0) {
        int n;
        long long t;
        size_t colon = ref.find(':', 10);
        if (colon == std::string::npos) {
            err = "bad kei argument '" + ref + "' (want alexander:<n>:<t>)";
            return KEIKIT_ERROR_PARSE;
        }
        try {
            n = std::stoi(ref.substr(10, colon - 10));
            t = std::stoll(ref.substr(colon + 1));
        } catch (const std::exception&) {
            err = "bad kei argument '" + ref + "'";
            return KEIKIT_ERROR_PARSE;
        }
        rc = keikit_kei_alexander(n, t, &raw);
    } else if (ref.rfind("file:", 0) == 0) {
        auto text = read_file(ref.substr(5), err);
        if (!text) return KEIKIT_ERROR_PARSE;
        rc = keikit_kei_parse(text->c_str(), &raw);
    } else {
        err = "bad kei argument '" + ref + "' (want takasaki:<n>, alexander:<n>:<t> or file:<path>)";
        return KEIKIT_ERROR_PARSE;
    }
    if (rc != KEIKIT_OK) {
        err = keikit_last_error();
        return rc;
    }
    out.reset(raw);
    return KEIKIT_OK;
}

int load_kei(const std::string& ref, KeiPtr& out) {
    std::string err;
    int rc = resolve_kei(ref, out, err);
    return rc == KEIKIT_OK ? 0 : complain(rc, err);
}

struct Options {
    std::string kei, module_path, pd, braid, table_path;
    long long modulus = 0;
    std::string variant;
    std::string orientation = "forward";
    std::string format = "text";
    long long limit = 0;
};

int load_module(const Options& opt, ModulePtr& out) {
    std::string err;
    auto text = read_file(opt.module_path, err);
    if (!text) return complain(KEIKIT_ERROR_PARSE, err);
    keikit_module* raw = nullptr;
    int rc = keikit_module_parse(text->c_str(), opt.modulus,
                                 opt.variant.empty() ? nullptr : opt.variant.c_str(), &raw);
    if (rc != KEIKIT_OK) return complain(rc);
    out.reset(raw);
    return 0;
}

// One diagram to process: batch entries carry their table name.
struct Entry {
    std::string name;
    std::string text; // pd or braid source
    bool is_braid = false;
};

int collect_entries(const Options& opt, bool allow_table, std::vector<Entry>& out,
                    bool& batch) {
    int sources = !opt.pd.empty() + !opt.braid.empty() + !opt.table_path.empty();
    if (sources != 1)
        return complain(KEIKIT_ERROR_INVALID_ARGUMENT,
                        allow_table ? "need exactly one of --pd, --braid, --table"
                                    : "need exactly one of --pd, --braid");
    batch = !opt.table_path.empty();
    if (!batch) {
        out.push_back(Entry{opt.pd.empty() ? opt.braid : opt.pd,
                            opt.pd.empty() ? opt.braid : opt.pd, opt.pd.empty()});
        return 0;
    }
    if (!allow_table)
        return complain(KEIKIT_ERROR_INVALID_ARGUMENT, "--table is not accepted here");
    std::string err;
    auto text = read_file(opt.table_path, err);
    if (!text) return complain(KEIKIT_ERROR_PARSE, err);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(*text);
        if (!j.is_array()) throw std::runtime_error("top level must be an array");
        for (const auto& rec : j) {
            Entry e;
            e.name = rec.at("name").get<std::string>();
            if (rec.contains("pd")) {
                e.text = rec["pd"].get<std::string>();
            } else {
                e.text = rec.at("braid").get<std::string>();
                e.is_braid = true;
            }
            out.push_back(std::move(e));
        }
    } catch (const std::exception& e) {
        return complain(KEIKIT_ERROR_PARSE,
                        "bad link table '" + opt.table_path + "': " + e.what());
    }
    return 0;
}

int load_diagram(const Entry& e, const std::string& orientation, DiagramPtr& out) {
    keikit_diagram* raw = nullptr;
    int rc = e.is_braid ? keikit_diagram_parse_braid(e.text.c_str(), &raw)
                        : keikit_diagram_parse_pd(e.text.c_str(), &raw);
    if (rc != KEIKIT_OK) return status_to_exit(rc);
    out.reset(raw);
    if (orientation == "reversed") {
        keikit_diagram* rev = nullptr;
        rc = keikit_diagram_reverse(out.get(), &rev);
        if (rc != KEIKIT_OK) return status_to_exit(rc);
        out.reset(rev);
    }
    return 0;
}

/* ---- commands ---------------------------------------------------------- */

int cmd_check_kei(const Options& opt) {
    KeiPtr k;
    std::string err;
    int rc = resolve_kei(opt.kei, k, err);
    if (rc == KEIKIT_ERROR_DOMAIN) {
        // Structurally fine but not a kei: the witnesses are the message.
        if (opt.format == "json") {
            nlohmann::json j{{"valid", false}, {"violations", err}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "invalid kei:\n" << err << "\n";
        }
        return 1;
    }
    if (rc != KEIKIT_OK) return complain(rc, err);
    char* digest = nullptr;
    keikit_kei_digest(k.get(), &digest);
    if (opt.format == "json") {
        nlohmann::json j{
            {"valid", true}, {"order", keikit_kei_order(k.get())}, {"digest", take(digest)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "valid kei, order " << keikit_kei_order(k.get()) << "\n";
        take(digest);
    }
    return 0;
}

int cmd_count(const Options& opt) {
    KeiPtr k;
    if (int code = load_kei(opt.kei, k)) return code;
    std::vector<Entry> entries;
    bool batch = false;
    if (int code = collect_entries(opt, true, entries, batch)) return code;

    char* kd = nullptr;
    keikit_kei_digest(k.get(), &kd);
    std::string kei_digest = take(kd);

    int worst = 0;
    nlohmann::json records = nlohmann::json::array();
    for (const Entry& e : entries) {
        DiagramPtr d;
        unsigned long long n = 0;
        int code = load_diagram(e, opt.orientation, d);
        if (code == 0) {
            int rc = keikit_count_labelings(d.get(), k.get(), &n);
            code = status_to_exit(rc);
        }
        worst = std::max(worst, code);
        if (opt.format == "json") {
            nlohmann::json rec{{"link", e.name}, {"kei", kei_digest}};
            if (code == 0)
                rec["countingInvariant"] = n;
            else
                rec["error"] = keikit_last_error();
            records.push_back(std::move(rec));
        } else if (code == 0) {
            if (batch)
                std::cout << e.name << ": " << n << "\n";
            else
                std::cout << n << "\n";
        } else {
            if (batch)
                std::cout << e.name << ": error: " << keikit_last_error() << "\n";
            else
                std::cerr << "error: " << keikit_last_error() << "\n";
        }
    }
    if (opt.format == "json")
        std::cout << (batch ? records : records.at(0)).dump() << "\n";
    return worst;
}

int cmd_enum_modules(const Options& opt) {
    KeiPtr k;
    if (int code = load_kei(opt.kei, k)) return code;
    if (opt.modulus <= 0)
        return complain(KEIKIT_ERROR_INVALID_ARGUMENT, "enum-modules needs --mod");
    std::string variant = opt.variant.empty() ? "kei" : opt.variant;
    keikit_module_list* raw = nullptr;
    int rc = keikit_enumerate_modules(k.get(), opt.modulus, variant.c_str(), opt.limit, &raw);
    if (rc != KEIKIT_OK) return complain(rc);
    ListPtr list(raw);
    long long n = keikit_module_list_size(list.get());

    if (opt.format == "json") {
        nlohmann::json mods = nlohmann::json::array();
        for (long long i = 0; i < n; ++i) {
            char* mj = nullptr;
            keikit_module_to_json(keikit_module_list_get(list.get(), i), &mj);
            mods.push_back(nlohmann::json::parse(take(mj)));
        }
        nlohmann::json j{{"count", n},
                         {"modulus", opt.modulus},
                         {"variant", variant},
                         {"modules", std::move(mods)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << n << "\n";
        for (long long i = 0; i < n; ++i) {
            char* mt = nullptr;
            keikit_module_to_text(keikit_module_list_get(list.get(), i), &mt);
            std::cout << "\n" << take(mt);
        }
    }
    return 0;
}

int cmd_verify_module(const Options& opt) {
    KeiPtr k;
    if (int code = load_kei(opt.kei, k)) return code;
    ModulePtr m;
    if (int code = load_module(opt, m)) return code;
    int valid = 0;
    char* report = nullptr;
    int rc = keikit_module_verify(k.get(), m.get(), &valid, &report);
    if (rc != KEIKIT_OK) return complain(rc);
    std::string text = take(report);
    if (opt.format == "json") {
        nlohmann::json j{{"valid", valid == 1},
                         {"variant", keikit_module_variant(m.get())},
                         {"order", keikit_module_order(m.get())},
                         {"modulus", keikit_module_modulus(m.get())}};
        if (valid != 1) j["violations"] = text;
        std::cout << j.dump() << "\n";
    } else if (valid == 1) {
        std::cout << "valid " << keikit_module_variant(m.get()) << " module, order "
                  << keikit_module_order(m.get()) << " mod " << keikit_module_modulus(m.get())
                  << "\n";
    } else {
        std::cout << "invalid " << keikit_module_variant(m.get()) << " module:\n" << text;
    }
    return valid == 1 ? 0 : 1;
}

int cmd_enhanced(const Options& opt, bool table_command) {
    KeiPtr k;
    if (int code = load_kei(opt.kei, k)) return code;
    ModulePtr m;
    if (int code = load_module(opt, m)) return code;
    std::vector<Entry> entries;
    bool batch = false;
    if (int code = collect_entries(opt, true, entries, batch)) return code;
    if (table_command && !batch)
        return complain(KEIKIT_ERROR_INVALID_ARGUMENT, "table needs --table <file>");

    int worst = 0;
    nlohmann::json records = nlohmann::json::array();
    for (const Entry& e : entries) {
        DiagramPtr d;
        int code = load_diagram(e, opt.orientation, d);
        std::string rendered, record;
        if (code == 0) {
            char* s = nullptr;
            int rc = keikit_enhanced_invariant(d.get(), k.get(), m.get(), &s);
            code = status_to_exit(rc);
            if (code == 0) {
                rendered = take(s);
                char* rj = nullptr;
                keikit_enhanced_invariant_json(d.get(), k.get(), m.get(), e.name.c_str(), &rj);
                record = take(rj);
            }
        }
        worst = std::max(worst, code);
        if (opt.format == "json") {
            if (code == 0)
                records.push_back(nlohmann::json::parse(record));
            else
                records.push_back(nlohmann::json{{"link", e.name}, {"error", keikit_last_error()}});
        } else if (code == 0) {
            if (batch)
                std::cout << e.name << ": " << rendered << "\n";
            else
                std::cout << rendered << "\n";
        } else {
            if (batch)
                std::cout << e.name << ": error: " << keikit_last_error() << "\n";
            else
                std::cerr << "error: " << keikit_last_error() << "\n";
        }
    }
    if (opt.format == "json")
        std::cout << (batch ? records : records.at(0)).dump() << "\n";
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting and kei-module enhanced invariants of unoriented links"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* c, bool kei_required = true) {
        auto* o = c->add_option("--kei", opt.kei, "takasaki:<n>, alexander:<n>:<t> or file:<path>");
        if (kei_required) o->required();
        c->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_diagram_flags = [&](CLI::App* c) {
        c->add_option("--pd", opt.pd, "planar diagram code");
        c->add_option("--braid", opt.braid, "braid word <strands>:<g1>,<g2>,...");
        c->add_option("--table", opt.table_path, "JSON link table [{\"name\",\"pd\"|\"braid\"},...]");
        c->add_option("--orientation", opt.orientation, "forward or reversed")
            ->check(CLI::IsMember({"forward", "reversed"}));
    };
    auto add_module_flags = [&](CLI::App* c) {
        c->add_option("--module", opt.module_path, "module file (JSON or [T|S] text block)")
            ->required();
        c->add_option("--mod", opt.modulus, "modulus override for text module files");
        c->add_option("--variant", opt.variant, "kei or quandle")
            ->check(CLI::IsMember({"kei", "quandle"}));
    };

    CLI::App* check = app.add_subcommand("check-kei", "validate an operation table");
    add_common(check);

    CLI::App* count = app.add_subcommand("count", "kei counting invariant of a link");
    add_common(count);
    add_diagram_flags(count);

    CLI::App* enumc = app.add_subcommand("enum-modules", "list all module structures on Z_m");
    add_common(enumc);
    enumc->add_option("--mod", opt.modulus, "modulus")->required();
    enumc->add_option("--variant", opt.variant, "kei or quandle")
        ->check(CLI::IsMember({"kei", "quandle"}));
    enumc->add_option("--limit", opt.limit, "guard on order*modulus (default 44)");

    CLI::App* verify = app.add_subcommand("verify-module", "check module relations against a kei");
    add_common(verify);
    add_module_flags(verify);

    CLI::App* enhanced = app.add_subcommand("enhanced", "kei-module enhanced invariant");
    add_common(enhanced);
    add_diagram_flags(enhanced);
    add_module_flags(enhanced);

    CLI::App* table = app.add_subcommand("table", "batch enhanced invariant over a link table");
    add_common(table);
    add_diagram_flags(table);
    add_module_flags(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (check->parsed()) return cmd_check_kei(opt);
    if (count->parsed()) return cmd_count(opt);
    if (enumc->parsed()) return cmd_enum_modules(opt);
    if (verify->parsed()) return cmd_verify_module(opt);
    if (enhanced->parsed()) return cmd_enhanced(opt, false);
    if (table->parsed()) {
        if (opt.table_path.empty()) opt.table_path = "links.json";
        return cmd_enhanced(opt, true);
    }
    return 2;
}
