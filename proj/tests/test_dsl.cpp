#include <doctest.h>

#include <functional>
#include <random>

#include "kodcalc/dsl.hpp"

using namespace kodcalc;

namespace {

error capture(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e;
    }
    FAIL("expected an error");
    return error(errc::internal, "unreachable");
}

void check_span_inside(const error& e, std::string_view input) {
    REQUIRE(e.span().has_value());
    CHECK(e.span()->begin <= e.span()->end);
    CHECK(e.span()->end <= input.size());
}

dsl::Expr random_expr(std::mt19937& rng, int depth, bool allow_product) {
    std::uniform_int_distribution<int> pick_kind(0, allow_product ? 3 : 2);
    std::uniform_int_distribution<std::int64_t> small(0, 40);
    const int kind = depth <= 0 ? 0 : pick_kind(rng);
    switch (kind) {
    case 1:
        return dsl::blowup(random_expr(rng, depth - 1, false), small(rng));
    case 2:
        return dsl::logtransform(random_expr(rng, depth - 1, false), small(rng), small(rng));
    case 3:
        return dsl::product(random_expr(rng, depth - 1, false), small(rng));
    default: {
        std::uniform_int_distribution<int> pick_family(0, 9);
        switch (pick_family(rng)) {
        case 0: return dsl::family("cp2");
        case 1: return dsl::family("rational_elliptic");
        case 2: return dsl::family("dolgachev", {small(rng), small(rng)});
        case 3: return dsl::family("k3");
        case 4: return dsl::family("homotopy_k3", {small(rng), small(rng)});
        case 5: return dsl::family("barlow");
        case 6: return dsl::family("catanese");
        case 7: return dsl::family("elliptic_mn", {small(rng)});
        case 8: return dsl::family("horikawa");
        default: return dsl::family("sextic");
        }
    }
    }
}

} // namespace

TEST_CASE("parsing the grammar examples") {
    const dsl::Expr e = dsl::parse("product(blowup(barlow, 3), curve(2))");
    const auto& prod = std::get<dsl::ProductNode>(e.node);
    CHECK(prod.genus == 2);
    const auto& blow = std::get<dsl::BlowUpNode>(prod.child->node);
    CHECK(blow.k == 3);
    const auto& fam = std::get<dsl::FamilyRef>(blow.child->node);
    CHECK(fam.name == "barlow");
    CHECK(e.span == SourceSpan{0, 36});

    const dsl::Expr lt = dsl::parse("logtransform(rational_elliptic, 2, 3)");
    const auto& node = std::get<dsl::LogTransformNode>(lt.node);
    CHECK(node.p == 2);
    CHECK(node.q == 3);
    CHECK(std::get<dsl::FamilyRef>(node.child->node).name == "rational_elliptic");
}

TEST_CASE("nested products are a type error") {
    const std::string text = "blowup(product(k3, curve(1)), 2)";
    const error e = capture([&] { dsl::parse(text); });
    CHECK(e.code() == errc::type_error);
    check_span_inside(e, text);
    // the span points at the offending product call
    CHECK(e.span()->begin == 7);
    CHECK(e.span()->end == 28);
}

TEST_CASE("parse error kinds carry usable spans") {
    SUBCASE("syntax") {
        const std::string text = "blowup(barlow 3)";
        const error e = capture([&] { dsl::parse(text); });
        CHECK(e.code() == errc::syntax_error);
        check_span_inside(e, text);
    }
    SUBCASE("unknown family") {
        const std::string text = "blowup(barloww, 1)";
        const error e = capture([&] { dsl::parse(text); });
        CHECK(e.code() == errc::unknown_family);
        check_span_inside(e, text);
    }
    SUBCASE("arity") {
        const std::string text = "dolgachev(2)";
        const error e = capture([&] { dsl::parse(text); });
        CHECK(e.code() == errc::arity_error);
        check_span_inside(e, text);
    }
    SUBCASE("curve outside a product") {
        const std::string text = "blowup(curve(1), 2)";
        const error e = capture([&] { dsl::parse(text); });
        CHECK(e.code() == errc::type_error);
        check_span_inside(e, text);
    }
    SUBCASE("trailing input") {
        const std::string text = "barlow k3";
        const error e = capture([&] { dsl::parse(text); });
        CHECK(e.code() == errc::syntax_error);
        check_span_inside(e, text);
    }
    SUBCASE("stray character") {
        const std::string text = "blowup(barlow, 3);";
        const error e = capture([&] { dsl::parse(text); });
        CHECK(e.code() == errc::syntax_error);
        check_span_inside(e, text);
    }
}

TEST_CASE("evaluation") {
    const auto plane8 = std::get<SurfaceModel>(dsl::evaluate(dsl::parse("blowup(cp2, 8)")));
    CHECK(plane8.chern.c1_sq == 1);
    CHECK(plane8.chern.c2 == 11);

    const auto x = std::get<ThreefoldModel>(
        dsl::evaluate(dsl::parse("product(horikawa, curve(1))")));
    CHECK(x.kod == KodairaDim::finite(2));
    CHECK(x.chern3 == ChernTriple{0, 0, 0});

    const auto lt = std::get<SurfaceModel>(
        dsl::evaluate(dsl::parse("logtransform(k3, 2, 3)")));
    CHECK(lt.family == SurfaceFamily::homotopy_k3(2, 3));
}

TEST_CASE("evaluation errors carry the offending span") {
    const std::string text = "dolgachev(2,4)";
    const error e = capture([&] { dsl::evaluate(dsl::parse(text)); });
    CHECK(e.code() == errc::not_coprime);
    check_span_inside(e, text);
    CHECK(e.span()->begin == 0);
    CHECK(e.span()->end == text.size());

    const std::string nested = "product(blowup(dolgachev(2, 4), 1), curve(2))";
    const error e2 = capture([&] { dsl::evaluate(dsl::parse(nested)); });
    CHECK(e2.code() == errc::not_coprime);
    check_span_inside(e2, nested);

    const std::string not_elliptic = "logtransform(barlow, 2, 3)";
    const error e3 = capture([&] { dsl::evaluate(dsl::parse(not_elliptic)); });
    CHECK(e3.code() == errc::not_elliptic);
    check_span_inside(e3, not_elliptic);
}

TEST_CASE("pretty printing is canonical") {
    CHECK(dsl::pretty_print(dsl::product(dsl::family("k3"), 2)) == "product(k3, curve(2))");
    CHECK(dsl::pretty_print(dsl::blowup(dsl::family("barlow"), 0)) == "blowup(barlow, 0)");
    CHECK(dsl::pretty_print(dsl::logtransform(dsl::family("rational_elliptic"), 2, 3)) ==
          "logtransform(rational_elliptic, 2, 3)");
    CHECK(dsl::pretty_print(dsl::family("dolgachev", {2, 3})) == "dolgachev(2, 3)");
}

TEST_CASE("whitespace never changes the parse") {
    const dsl::Expr tight = dsl::parse("product(blowup(dolgachev(2,3),4),curve(2))");
    const dsl::Expr airy =
        dsl::parse("  product ( blowup ( dolgachev ( 2 , 3 ) , 4 ) , curve ( 2 ) )  ");
    CHECK(dsl::structurally_equal(tight, airy));
}

TEST_CASE("round trip over generated expressions") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> depth(0, 4);
    for (int trial = 0; trial < 1500; ++trial) {
        const dsl::Expr e = random_expr(rng, depth(rng), true);
        const std::string text = dsl::pretty_print(e);
        CAPTURE(text);
        const dsl::Expr back = dsl::parse(text);
        CHECK(dsl::structurally_equal(e, back));
        CHECK(dsl::pretty_print(back) == text);
    }
}

TEST_CASE("clone is deep and structural equality sees differences") {
    const dsl::Expr e = dsl::parse("product(blowup(dolgachev(2, 3), 4), curve(2))");
    const dsl::Expr copy = e.clone();
    CHECK(dsl::structurally_equal(e, copy));
    CHECK(!dsl::structurally_equal(e, dsl::parse("product(blowup(dolgachev(2, 3), 5), curve(2))")));
    CHECK(!dsl::structurally_equal(e, dsl::parse("blowup(dolgachev(2, 3), 4)")));
}
