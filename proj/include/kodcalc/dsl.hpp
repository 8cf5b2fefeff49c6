#ifndef KODCALC_DSL_HPP
#define KODCALC_DSL_HPP

// Construction-expression language:
//
//   expr    := surface | product ;
//   product := "product" "(" surface "," "curve" "(" INT ")" ")" ;
//   surface := family
//            | "blowup" "(" surface "," INT ")"
//            | "logtransform" "(" surface "," INT "," INT ")" ;
//   family  := IDENT | IDENT "(" INT { "," INT } ")" ;
//
// Family identifiers: cp2, rational_elliptic, dolgachev, k3, homotopy_k3,
// barlow, catanese, elliptic_mn, horikawa, sextic. Integers are decimal and
// non-negative; whitespace between tokens is ignored.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kodcalc/constructions.hpp"

namespace kodcalc::dsl {

struct Expr;

struct FamilyRef {
    std::string name;
    std::vector<std::int64_t> params;
};

struct BlowUpNode {
    std::unique_ptr<Expr> child;
    std::int64_t k = 0;
};

struct LogTransformNode {
    std::unique_ptr<Expr> child;
    std::int64_t p = 0;
    std::int64_t q = 0;
};

struct ProductNode {
    std::unique_ptr<Expr> child;
    std::int64_t genus = 0;
};

struct Expr {
    std::variant<FamilyRef, BlowUpNode, LogTransformNode, ProductNode> node;
    SourceSpan span;

    Expr clone() const;
};

// Structural equality, spans ignored.
bool structurally_equal(const Expr& a, const Expr& b);

// Builders for programmatic construction (spans left empty).
Expr family(std::string name, std::vector<std::int64_t> params = {});
Expr blowup(Expr child, std::int64_t k);
Expr logtransform(Expr child, std::int64_t p, std::int64_t q);
Expr product(Expr child, std::int64_t genus);

// Parses one expression. Errors (SyntaxError, UnknownFamily, ArityError,
// TypeError) carry a span into `text`; products may appear only outermost.
Expr parse(std::string_view text);

// Canonical lowercase form; parse(pretty_print(e)) is structurally equal to e.
std::string pretty_print(const Expr& e);

using Model = std::variant<SurfaceModel, ThreefoldModel>;

// Evaluates a well-formed expression; construction errors are re-raised with
// the offending node's span.
Model evaluate(const Expr& e);

} // namespace kodcalc::dsl

#endif
