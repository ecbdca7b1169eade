#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "invariant.hpp"
#include "json.hpp"
#include "support/matrix_match.hpp"

using namespace keikit;
using matchsup::build;
using matchsup::lit;
using matchsup::sym;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(KEIKIT_FIXTURES_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing fixture ", name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// name -> diagram for every bundled link.
std::vector<std::pair<std::string, LinkDiagram>> bundled_links() {
    auto j = nlohmann::json::parse(slurp("links.json"));
    std::vector<std::pair<std::string, LinkDiagram>> out;
    for (const auto& rec : j)
        out.emplace_back(rec["name"].get<std::string>(),
                         parse_pd(rec["pd"].get<std::string>()));
    return out;
}

KeiModule fixture_module(const std::string& name) { return parse_module(slurp(name)); }

Labeling constant_labeling(const LinkDiagram& d, int x) {
    return Labeling(static_cast<size_t>(d.arcs) + 1, x);
}

} // namespace

TEST_CASE("a kink's only relation collapses once the diagonal rule holds") {
    LinkDiagram kink = parse_pd("PD[X[1,2,2,1]]");
    FiniteKei k = takasaki_kei(3);
    PresentationMatrix p = presentation_matrix(kink, k, constant_labeling(kink, 1));
    REQUIRE(p.rows == 1);
    REQUIRE(p.cols == 1);
    CHECK(p.at(0, 0).to_string() == "t(1,1)+s(1,1)-1");

    KeiModule m = fixture_module("module_z5_kei.json");
    IntMatrix sub = substitute(p, m);
    CHECK(sub.a == std::vector<long long>{0});
    CHECK(labeling_signature(kink, k, constant_labeling(kink, 1), m) == 5);
}

TEST_CASE("unknot and figure eight separate under the Z_5 module") {
    FiniteKei k = takasaki_kei(3);
    KeiModule m = fixture_module("module_z5_kei.json");

    // Zero-crossing and one-kink unknot diagrams land on the same value.
    CHECK(enhanced_invariant(parse_braid("1:"), k, m).render() == "3u^5");
    CHECK(enhanced_invariant(parse_pd("PD[X[1,2,2,1]]"), k, m).render() == "3u^5");

    LinkDiagram fig8 = parse_braid("3:1,-2,1,-2");
    CHECK(enhanced_invariant(fig8, k, m).render() == "3u^25");
    CHECK(count_kei_labelings(fig8, k) == 3);
    for (const auto& f : kei_labelings(fig8, k))
        CHECK(labeling_signature(fig8, k, f, m) == 25);
}

TEST_CASE("figure eight constant labeling reproduces the printed presentation") {
    FiniteKei k = takasaki_kei(3);
    LinkDiagram fig8 = parse_braid("3:1,-2,1,-2");
    REQUIRE(fig8.arcs == 4);

    // The bundled PD code is the same diagram, re-encoded.
    auto links = bundled_links();
    auto it = std::find_if(links.begin(), links.end(),
                           [](const auto& r) { return r.first == "4_1"; });
    REQUIRE(it != links.end());
    CHECK(it->second == fig8);

    PresentationMatrix got = presentation_matrix(fig8, k, constant_labeling(fig8, 1));
    PresentationMatrix want = build({
        {sym('T', 1, 1), lit(-1), sym('S', 1, 1), lit(0)},
        {lit(0), sym('S', 1, 1), sym('T', 1, 1), lit(-1)},
        {lit(-1), lit(0), sym('T', 1, 1), sym('S', 1, 1)},
        {sym('S', 1, 1), sym('T', 1, 1), lit(0), lit(-1)},
    });
    // Crossing and arc order differ from the printed matrix, and two rows are
    // read against the opposite strand direction (harmless for kei modules).
    CHECK(matchsup::matches_up_to_relabeling(got, want, true));
    CHECK_FALSE(matchsup::matches_up_to_relabeling(got, want, false));

    KeiModule m = fixture_module("module_z5_kei.json");
    CHECK(count_homogeneous_solutions(substitute(got, m), Modulus(5)) == 25);
}

TEST_CASE("torus link labeling drives the symbol subscripts") {
    FiniteKei k = kei_from_table(3, {1, 1, 2, 2, 2, 1, 3, 3, 3});
    LinkDiagram d = parse_braid("2:1,1,1,1");
    REQUIRE(d.arcs == 4);
    REQUIRE(d.components == 2);

    Labeling f{0, 1, 3, 2, 3};
    REQUIRE(is_kei_labeling(d, k, f));
    PresentationMatrix got = presentation_matrix(d, k, f);
    PresentationMatrix want = build({
        {sym('T', 1, 3), sym('S', 1, 3), lit(-1), lit(0)},
        {lit(0), sym('T', 3, 2), sym('S', 3, 2), lit(-1)},
        {lit(-1), lit(0), sym('T', 2, 3), sym('S', 2, 3)},
        {sym('S', 3, 1), lit(-1), lit(0), sym('T', 3, 1)},
    });
    CHECK(got == want);
}

TEST_CASE("non-labelings are rejected before a matrix is built") {
    LinkDiagram tre = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
    FiniteKei k = takasaki_kei(3);
    CHECK_THROWS_AS(presentation_matrix(tre, k, Labeling{0, 1, 1, 2}), DomainError);
    CHECK_THROWS_AS(presentation_matrix(tre, k, Labeling{0, 1, 1}), DomainError);
}

TEST_CASE("virtual knot: orientations agree on counting, split on the quandle module") {
    FiniteKei k = takasaki_kei(3);
    KeiModule quandle = fixture_module("module_z5_quandle.json");

    auto j = nlohmann::json::parse(slurp("virtual_497.json"));
    LinkDiagram fwd = parse_pd(j["pd"].get<std::string>());
    LinkDiagram rev = reverse_orientation(fwd);

    CHECK(count_kei_labelings(fwd, k) == 3);
    CHECK(count_kei_labelings(rev, k) == 3);
    for (const auto& d : {fwd, rev})
        for (const auto& f : kei_labelings(d, k)) {
            CHECK(f[1] == f[2]);
            CHECK(f[2] == f[3]);
            CHECK(f[3] == f[4]); // constant labelings only
        }

    CHECK(enhanced_invariant(fwd, k, quandle).render() == "3u^25");
    CHECK(enhanced_invariant(rev, k, quandle).render() == "3u^5");

    // The two constant-labeling presentations, matched against the published
    // pair without row flips: arc discovery order is the only freedom.
    PresentationMatrix down = build({
        {sym('S', 1, 1), lit(-1), sym('T', 1, 1), lit(0)},
        {sym('S', 1, 1), lit(0), lit(-1), sym('T', 1, 1)},
        {sym('T', 1, 1), lit(-1), lit(0), sym('S', 1, 1)},
        {lit(-1), lit(0), sym('S', 1, 1), sym('T', 1, 1)},
    });
    PresentationMatrix up = build({
        {sym('S', 1, 1), sym('T', 1, 1), lit(-1), lit(0)},
        {sym('S', 1, 1), lit(0), sym('T', 1, 1), lit(-1)},
        {lit(-1), sym('T', 1, 1), lit(0), sym('S', 1, 1)},
        {sym('T', 1, 1), lit(0), sym('S', 1, 1), lit(-1)},
    });
    PresentationMatrix got_fwd = presentation_matrix(fwd, k, constant_labeling(fwd, 1));
    PresentationMatrix got_rev = presentation_matrix(rev, k, constant_labeling(rev, 1));
    CHECK(matchsup::matches_up_to_relabeling(got_fwd, down, false));
    CHECK(matchsup::matches_up_to_relabeling(got_rev, up, false));
    CHECK_FALSE(matchsup::matches_up_to_relabeling(got_fwd, up, false));

    // Signature cardinalities behind 3u^25 vs 3u^5.
    CHECK(count_homogeneous_solutions(substitute(got_fwd, quandle), Modulus(5)) == 25);
    CHECK(count_homogeneous_solutions(substitute(got_rev, quandle), Modulus(5)) == 5);
}

TEST_CASE("published table of values over the Z_7 module") {
    FiniteKei k = parse_kei(slurp("takasaki3.json"));
    KeiModule m = fixture_module("module_z7.json");
    const std::map<std::string, std::string> expected{
        {"unknot", "3u^7"},        {"3_1", "3u^7 + 6u^49"},  {"4_1", "3u^7"},
        {"5_1", "3u^7"},           {"5_2", "3u^49"},         {"6_1", "3u^7 + 6u^49"},
        {"6_2", "3u^7"},           {"6_3", "3u^7"},          {"7_1", "3u^49"},
        {"7_2", "3u^7"},           {"7_3", "3u^7"},          {"7_4", "3u^7 + 6u^49"},
        {"7_5", "3u^7"},           {"7_6", "3u^7"},          {"7_7", "9u^49"},
        {"8_1", "3u^7"},           {"8_2", "3u^7"},          {"8_3", "3u^7"},
        {"8_4", "3u^7"},           {"8_5", "9u^49"},         {"8_11", "3u^7 + 6u^49"},
        {"8_12", "3u^7"},          {"8_13", "3u^7"},         {"8_14", "3u^7"},
        {"8_18", "3u^7 + 24u^49"}, {"8_19", "3u^7 + 6u^49"}, {"8_20", "3u^7 + 6u^49"},
        {"L2a1", "3u^7"},          {"L4a1", "3u^7"},         {"L6a1", "3u^7 + 6u^49"},
        {"L6a2", "3u^7"},          {"L6a3", "3u^7 + 6u^49"}, {"L6a4", "3u^7"},
        {"L6n1", "3u^7"},          {"L7a6", "3u^49"},
    };
    auto links = bundled_links();
    REQUIRE(links.size() == expected.size());
    for (const auto& [name, d] : links) {
        auto it = expected.find(name);
        REQUIRE_MESSAGE(it != expected.end(), "unexpected bundled link ", name);
        CHECK_MESSAGE(enhanced_invariant(d, k, m).render() == it->second, "link ", name);
    }
}

TEST_CASE("reversal and isotopic re-drawings leave the invariant alone") {
    FiniteKei k = takasaki_kei(3);
    KeiModule z7 = fixture_module("module_z7.json");
    KeiModule z5 = fixture_module("module_z5_kei.json");

    for (const auto& [name, d] : bundled_links()) {
        LinkDiagram r = reverse_orientation(d);
        CHECK_MESSAGE(enhanced_invariant(d, k, z7) == enhanced_invariant(r, k, z7), name);
        CHECK_MESSAGE(enhanced_invariant(d, k, z5) == enhanced_invariant(r, k, z5), name);
    }

    // Same knot, different diagrams: 2-strand trefoil vs one with an extra kink.
    InvariantPolynomial plain = enhanced_invariant(parse_braid("2:1,1,1"), k, z7);
    InvariantPolynomial kinked = enhanced_invariant(parse_braid("3:1,1,1,2"), k, z7);
    CHECK(plain == kinked);
    CHECK(plain.render() == "3u^7 + 6u^49");
}

TEST_CASE("evaluating at u = 1 recovers the counting invariant") {
    FiniteKei k = takasaki_kei(3);
    for (const auto& mod :
         {fixture_module("module_z7.json"), fixture_module("module_z5_kei.json"),
          fixture_module("module_z5_quandle.json")})
        for (const auto& [name, d] : bundled_links())
            CHECK_MESSAGE(enhanced_invariant(d, k, mod).multiplicity_sum() ==
                              count_kei_labelings(d, k),
                          name);
}

TEST_CASE("the trivial module only sees the component count") {
    FiniteKei k = takasaki_kei(3);
    for (long long m : {2, 5}) {
        std::vector<std::vector<long long>> ones(3, std::vector<long long>(3, 1));
        std::vector<std::vector<long long>> zeros(3, std::vector<long long>(3, 0));
        KeiModule triv = make_module(ModuleVariant::kei, m, ones, zeros);
        REQUIRE(verify_module(k, triv).empty());
        for (const auto& [name, d] : bundled_links()) {
            mpz_class exp;
            mpz_ui_pow_ui(exp.get_mpz_t(), static_cast<unsigned long>(m),
                          static_cast<unsigned long>(d.components));
            InvariantPolynomial got = enhanced_invariant(d, k, triv);
            REQUIRE_MESSAGE(got.terms.size() == 1, name);
            CHECK_MESSAGE(got.terms.begin()->first == exp, name);
            CHECK_MESSAGE(got.terms.begin()->second == count_kei_labelings(d, k), name);
        }
    }
}

TEST_CASE("rendering rules: ascending exponents, u^1 printed as u") {
    InvariantPolynomial p;
    p.terms[mpz_class(49)] = 6;
    p.terms[mpz_class(7)] = 3;
    CHECK(p.render() == "3u^7 + 6u^49");
    InvariantPolynomial q;
    q.terms[mpz_class(1)] = 2;
    CHECK(q.render() == "2u");
    InvariantPolynomial zero;
    CHECK(zero.render() == "0");
    CHECK(zero.multiplicity_sum() == 0);
}
