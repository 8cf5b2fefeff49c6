#include <doctest.h>

#include <array>
#include <functional>

#include "kodcalc/report_io.hpp"
#include "kodcalc/verifier.hpp"

using namespace kodcalc;

namespace {

KodPair pair_of(const char* low, const char* high) {
    const auto parse = [](const char* s) {
        return std::string(s) == "-inf" ? KodairaDim::minus_infinity()
                                        : KodairaDim::finite(s[0] - '0');
    };
    return make_kod_pair(parse(low), parse(high));
}

} // namespace

TEST_CASE("theorem A example reports") {
    const VerificationReport a3 = verify_theorem_A(ExampleId::A3, 5, 2);
    CHECK(a3.passed());
    CHECK(a3.rows.size() == 6);
    for (const ReportRow& row : a3.rows) {
        CHECK(row.verdict.outcome == Outcome::diffeomorphic_via_s_cobordism);
        CHECK(row.chern_equal);
        CHECK(make_kod_pair(row.kod_left, row.kod_right) == pair_of("-inf", "3"));
    }

    const VerificationReport a1 = verify_theorem_A(ExampleId::A1, 5, 1);
    CHECK(a1.passed());
    for (const ReportRow& row : a1.rows)
        CHECK(make_kod_pair(row.kod_left, row.kod_right) == pair_of("-inf", "1"));

    const VerificationReport a5 = verify_theorem_A(ExampleId::A5, 3, 2);
    CHECK(a5.passed());
    CHECK(a5.k_min == 1); // balanced route starts at k = 1
    for (const ReportRow& row : a5.rows)
        CHECK(make_kod_pair(row.kod_left, row.kod_right) == pair_of("2", "3"));
}

TEST_CASE("theorem A kod pairs across both regimes") {
    const std::array<std::pair<ExampleId, std::array<KodPair, 2>>, 5> expected = {{
        {ExampleId::A1, {pair_of("-inf", "1"), pair_of("-inf", "2")}},
        {ExampleId::A2, {pair_of("0", "1"), pair_of("1", "2")}},
        {ExampleId::A3, {pair_of("-inf", "2"), pair_of("-inf", "3")}},
        {ExampleId::A4, {pair_of("0", "2"), pair_of("1", "3")}},
        {ExampleId::A5, {pair_of("1", "2"), pair_of("2", "3")}},
    }};
    for (const auto& [id, pairs] : expected) {
        for (int regime = 0; regime < 2; ++regime) {
            CAPTURE(example_name(id));
            CAPTURE(regime);
            const VerificationReport report =
                verify_theorem_A(id, 2, regime == 0 ? 1 : 2);
            CHECK(report.passed());
            for (const ReportRow& row : report.rows)
                CHECK(make_kod_pair(row.kod_left, row.kod_right) == pairs[regime]);
        }
    }
}

TEST_CASE("theorem A rejects bad arguments") {
    CHECK_THROWS_AS(verify_theorem_A(ExampleId::B1, 3, 1), error);
    CHECK_THROWS_AS(verify_theorem_A(ExampleId::A1, 3, 0), error);
    CHECK_THROWS_AS(verify_theorem_A(ExampleId::A4, 0, 1), error); // below minimal k
}

TEST_CASE("coverage of theorem A") {
    const std::vector<KodPair> pairs = coverage_theorem_A();
    const std::vector<KodPair> expected = {
        pair_of("-inf", "1"), pair_of("-inf", "2"), pair_of("-inf", "3"),
        pair_of("0", "1"),    pair_of("0", "2"),    pair_of("1", "2"),
        pair_of("1", "3"),    pair_of("2", "3"),
    };
    CHECK(pairs.size() == 8);
    CHECK(pairs == expected);
}

TEST_CASE("coverage gaps under hypothetical removals") {
    SUBCASE("without A4") {
        const std::array included = {ExampleId::A1, ExampleId::A2, ExampleId::A3,
                                     ExampleId::A5};
        try {
            coverage_theorem_A(included);
            FAIL("expected a coverage gap");
        } catch (const coverage_error& e) {
            CHECK(e.missing() == std::vector<KodPair>{pair_of("0", "2"), pair_of("1", "3")});
        }
    }
    SUBCASE("without A1") {
        const std::array included = {ExampleId::A2, ExampleId::A3, ExampleId::A4,
                                     ExampleId::A5};
        try {
            coverage_theorem_A(included);
            FAIL("expected a coverage gap");
        } catch (const coverage_error& e) {
            CHECK(e.missing() == std::vector<KodPair>{pair_of("-inf", "1")});
        }
    }
}

TEST_CASE("theorem B example reports") {
    const VerificationReport b1 = verify_theorem_B(ExampleId::B1, 5, 0, 12);
    CHECK(b1.passed());
    for (const ReportRow& row : b1.rows) {
        CHECK(row.verdict.outcome == Outcome::diffeomorphic_via_smale);
        CHECK(row.evidence.kind == DeformationEvidence::Kind::external_theorem);
        CHECK(row.evidence.citation == "Kodaira stability");
        CHECK(row.kod_left == KodairaDim::minus_infinity());
        CHECK(row.kod_right == KodairaDim::minus_infinity());
    }

    const VerificationReport b2 = verify_theorem_B(ExampleId::B2, 3, 1, 12);
    CHECK(b2.passed());
    CHECK(b2.k_min == 1);
    for (const ReportRow& row : b2.rows) {
        CHECK(row.evidence.kind == DeformationEvidence::Kind::plurigenus_differs_at);
        CHECK(row.evidence.m == 2);
        CHECK(row.evidence.left_value == 27);
        CHECK(row.evidence.right_value == 35);
        CHECK(row.kod_left == KodairaDim::finite(2));
        CHECK(row.kod_right == KodairaDim::finite(2));
    }

    const VerificationReport b2g2 = verify_theorem_B(ExampleId::B2, 2, 2, 12);
    CHECK(b2g2.passed());
    for (const ReportRow& row : b2g2.rows) {
        CHECK(row.evidence.m == 2);
        CHECK(row.kod_left == KodairaDim::finite(3));
    }

    const VerificationReport b3 = verify_theorem_B(ExampleId::B3, 0, 1, 12);
    CHECK(b3.passed());
    CHECK(b3.rows.size() == 11 * 10 / 2); // coprime grid up to 7 has 11 members
    for (const ReportRow& row : b3.rows) {
        CHECK(row.verdict.outcome == Outcome::diffeomorphic_via_s_cobordism);
        CHECK(row.chern_equal);
        CHECK(row.kod_left == KodairaDim::finite(1));
    }
}

TEST_CASE("theorem B genus restrictions") {
    CHECK_THROWS_AS(verify_theorem_B(ExampleId::B1, 3, 1, 12), error);
    CHECK_THROWS_AS(verify_theorem_B(ExampleId::B2, 3, 0, 12), error);
    CHECK_THROWS_AS(verify_theorem_B(ExampleId::B3, 3, 2, 12), error);
    CHECK_THROWS_AS(verify_theorem_B(ExampleId::A1, 3, 1, 12), error);
}

TEST_CASE("the (2,3) vs (2,5) products split at the fourth plurigenus") {
    const auto x23 = product(instantiate(SurfaceFamily::dolgachev(2, 3)), Curve{1});
    const auto x25 = product(instantiate(SurfaceFamily::dolgachev(2, 5)), Curve{1});
    const auto m = min_distinguishing_plurigenus(x23, x25, 12);
    REQUIRE(m.has_value());
    CHECK(*m == 4);
    CHECK(threefold_plurigenus(x23, 4) == 1);
    CHECK(threefold_plurigenus(x25, 4) == 2);

    CHECK(!min_distinguishing_plurigenus(x23, x23, 12).has_value());

    const auto hor = product(instantiate(SurfaceFamily::horikawa()), Curve{1});
    const auto sex8 = product(blow_up(instantiate(SurfaceFamily::sextic()), 8), Curve{1});
    CHECK(min_distinguishing_plurigenus(hor, sex8, 12) == 2);
}

TEST_CASE("minimal distinguishing exponent is symmetric") {
    const std::array surfaces = {
        product(instantiate(SurfaceFamily::dolgachev(2, 3)), Curve{1}),
        product(instantiate(SurfaceFamily::dolgachev(2, 5)), Curve{1}),
        product(instantiate(SurfaceFamily::dolgachev(3, 4)), Curve{1}),
        product(instantiate(SurfaceFamily::elliptic_mn(4)), Curve{1}),
        product(instantiate(SurfaceFamily::horikawa()), Curve{2}),
    };
    for (const auto& a : surfaces)
        for (const auto& b : surfaces)
            CHECK(min_distinguishing_plurigenus(a, b, 40) ==
                  min_distinguishing_plurigenus(b, a, 40));
}

TEST_CASE("B1 never fabricates plurigenera evidence") {
    // every plurigenus of a ruled product vanishes; evidence must stay external
    const auto left = product(instantiate(SurfaceFamily::barlow()), Curve{0});
    CHECK(threefold_plurigenus(left, 1) == 0);
    CHECK_THROWS_AS(threefold_plurigenus(left, 2), error); // surface rule is partial
}

TEST_CASE("anomaly scan recomputes the three prose slips") {
    const std::vector<AnomalyFlag> flags = anomaly_scan();
    REQUIRE(flags.size() == 3);
    CHECK(flags[0].id == "A2-header");
    CHECK(flags[1].id == "A3-text");
    CHECK(flags[2].id == "A5-balancing");

    CHECK(flags[0].recomputed.find("(0, 1)") != std::string::npos);
    CHECK(flags[0].recomputed.find("(1, 2)") != std::string::npos);
    CHECK(flags[1].recomputed.find("2 at genus 1") != std::string::npos);
    CHECK(flags[1].recomputed.find("3 at genus >= 2") != std::string::npos);
    CHECK(flags[2].recomputed.find("131") != std::string::npos);
    CHECK(flags[2].recomputed.find("130") != std::string::npos);
}

TEST_CASE("reports serialize deterministically") {
    const auto dump = [] {
        return json_document(to_json(verify_theorem_B(ExampleId::B3, 0, 1, 20))).dump();
    };
    const std::string first = dump();
    const std::string second = dump();
    CHECK(first == second);
    CHECK(first.find("\"schema\":1") != std::string::npos);

    const auto a_dump = [] { return to_json(verify_theorem_A(ExampleId::A2, 4, 2)).dump(); };
    CHECK(a_dump() == a_dump());
}

TEST_CASE("report rows carry printable expressions") {
    const VerificationReport report = verify_theorem_A(ExampleId::A3, 1, 2);
    REQUIRE(!report.rows.empty());
    CHECK(report.rows[0].left_expr == "product(blowup(barlow, 0), curve(2))");
    CHECK(report.rows[0].right_expr == "product(blowup(cp2, 8), curve(2))");
    CHECK(report.rows[1].left_expr == "product(blowup(barlow, 1), curve(2))");
    CHECK(report.rows[1].right_expr == "product(blowup(cp2, 9), curve(2))");
}

TEST_CASE("failing rows sink the report and render their reasons") {
    VerificationReport report;
    report.example = "A1";
    report.theorem = "A";
    ReportRow good;
    good.label = "k=0";
    good.ok = true;
    ReportRow bad;
    bad.label = "k=1";
    bad.failures = {"Chern triples differ"};
    bad.ok = false;
    report.rows = {good, bad};
    CHECK(!report.passed());
    const std::string table = report_table(report);
    CHECK(table.find("! Chern triples differ") != std::string::npos);
    CHECK(table.find("SOME ROWS FAILED") != std::string::npos);
    CHECK(to_json(report)["passed"] == false);
}

TEST_CASE("error codes carry their stable names") {
    CHECK(std::string(errc_name(errc::not_coprime)) == "NotCoprime");
    CHECK(std::string(errc_name(errc::rule_unavailable)) == "RuleUnavailable");
    CHECK(std::string(errc_name(errc::definite_form_unsupported)) ==
          "DefiniteFormUnsupported");
    CHECK(std::string(errc_name(errc::genus_mismatch)) == "GeometricGenusMismatch");
    CHECK(std::string(errc_name(errc::type_error)) == "TypeError");
    CHECK(std::string(errc_name(errc::coverage_gap)) == "CoverageGap");
}

TEST_CASE("report tables render every row") {
    const VerificationReport report = verify_theorem_B(ExampleId::B2, 2, 1, 12);
    const std::string table = report_table(report);
    CHECK(table.find("k=1") != std::string::npos);
    CHECK(table.find("k=2") != std::string::npos);
    CHECK(table.find("PlurigenusDiffersAt(2): 27 vs 35") != std::string::npos);
    CHECK(table.find("all rows verified") != std::string::npos);
}
