#include "kodcalc/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <utility>

namespace kodcalc::dsl {

namespace {

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

} // namespace

Expr Expr::clone() const {
    using Node = std::variant<FamilyRef, BlowUpNode, LogTransformNode, ProductNode>;
    Expr out;
    out.span = span;
    out.node = std::visit(
        overloaded{
            [](const FamilyRef& f) -> Node { return FamilyRef{f.name, f.params}; },
            [](const BlowUpNode& b) -> Node {
                return BlowUpNode{std::make_unique<Expr>(b.child->clone()), b.k};
            },
            [](const LogTransformNode& t) -> Node {
                return LogTransformNode{std::make_unique<Expr>(t.child->clone()), t.p, t.q};
            },
            [](const ProductNode& p) -> Node {
                return ProductNode{std::make_unique<Expr>(p.child->clone()), p.genus};
            },
        },
        node);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        overloaded{
            [&](const FamilyRef& fa) {
                const auto& fb = std::get<FamilyRef>(b.node);
                return fa.name == fb.name && fa.params == fb.params;
            },
            [&](const BlowUpNode& ba) {
                const auto& bb = std::get<BlowUpNode>(b.node);
                return ba.k == bb.k && structurally_equal(*ba.child, *bb.child);
            },
            [&](const LogTransformNode& ta) {
                const auto& tb = std::get<LogTransformNode>(b.node);
                return ta.p == tb.p && ta.q == tb.q &&
                       structurally_equal(*ta.child, *tb.child);
            },
            [&](const ProductNode& pa) {
                const auto& pb = std::get<ProductNode>(b.node);
                return pa.genus == pb.genus && structurally_equal(*pa.child, *pb.child);
            },
        },
        a.node);
}

Expr family(std::string name, std::vector<std::int64_t> params) {
    return Expr{FamilyRef{std::move(name), std::move(params)}, {}};
}

Expr blowup(Expr child, std::int64_t k) {
    return Expr{BlowUpNode{std::make_unique<Expr>(std::move(child)), k}, {}};
}

Expr logtransform(Expr child, std::int64_t p, std::int64_t q) {
    return Expr{LogTransformNode{std::make_unique<Expr>(std::move(child)), p, q}, {}};
}

Expr product(Expr child, std::int64_t genus) {
    return Expr{ProductNode{std::make_unique<Expr>(std::move(child)), genus}, {}};
}

namespace {

const std::map<std::string, std::size_t, std::less<>>& family_arities() {
    static const std::map<std::string, std::size_t, std::less<>> table = {
        {"cp2", 0},      {"rational_elliptic", 0}, {"dolgachev", 2},
        {"k3", 0},       {"homotopy_k3", 2},       {"barlow", 0},
        {"catanese", 0}, {"elliptic_mn", 1},       {"horikawa", 0},
        {"sextic", 0},
    };
    return table;
}

enum class TokKind { ident, integer, lparen, rparen, comma, eof };

struct Token {
    TokKind kind = TokKind::eof;
    SourceSpan span;
    std::string_view text;
    std::int64_t value = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ >= src_.size())
            return Token{TokKind::eof, {src_.size(), src_.size()}, {}, 0};

        const std::size_t start = pos_;
        const char c = src_[pos_];
        if (c == '(' || c == ')' || c == ',') {
            ++pos_;
            const TokKind kind = c == '(' ? TokKind::lparen
                                 : c == ')' ? TokKind::rparen
                                            : TokKind::comma;
            return Token{kind, {start, pos_}, src_.substr(start, 1), 0};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            const std::string_view text = src_.substr(start, pos_ - start);
            std::int64_t value = 0;
            const auto [ptr, ec] =
                std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw error(errc::syntax_error, "integer literal out of range",
                            {start, pos_});
            return Token{TokKind::integer, {start, pos_}, text, value};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                ++pos_;
            return Token{TokKind::ident, {start, pos_}, src_.substr(start, pos_ - start), 0};
        }
        throw error(errc::syntax_error,
                    std::string("unexpected character '") + c + "'", {start, start + 1});
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Expr parse_expression() {
        Expr e = parse_node(/*allow_product=*/true);
        if (current_.kind != TokKind::eof)
            throw error(errc::syntax_error, "unexpected trailing input", current_.span);
        return e;
    }

private:
    void advance() { current_ = lexer_.next(); }

    Token expect(TokKind kind, const char* what) {
        if (current_.kind != kind)
            throw error(errc::syntax_error, std::string("expected ") + what,
                        current_.span);
        Token tok = current_;
        advance();
        return tok;
    }

    std::int64_t expect_integer() {
        return expect(TokKind::integer, "an integer").value;
    }

    Expr parse_node(bool allow_product) {
        const Token head = expect(TokKind::ident, "an expression");
        const std::string_view name = head.text;

        if (name == "product") {
            Expr e = parse_product(head);
            if (!allow_product)
                throw error(errc::type_error,
                            "a product cannot appear inside a surface construction",
                            e.span);
            return e;
        }
        if (name == "blowup") return parse_blowup(head);
        if (name == "logtransform") return parse_logtransform(head);
        if (name == "curve")
            throw error(errc::type_error,
                        "curve(...) is only valid as the second argument of product",
                        head.span);
        return parse_family(head);
    }

    Expr parse_product(const Token& head) {
        expect(TokKind::lparen, "'('");
        Expr child = parse_node(/*allow_product=*/false);
        expect(TokKind::comma, "','");
        const Token curve_tok = expect(TokKind::ident, "curve(genus)");
        if (curve_tok.text != "curve")
            throw error(errc::syntax_error, "expected curve(genus)", curve_tok.span);
        expect(TokKind::lparen, "'('");
        const std::int64_t genus = expect_integer();
        expect(TokKind::rparen, "')'");
        const Token close = expect(TokKind::rparen, "')'");
        return Expr{ProductNode{std::make_unique<Expr>(std::move(child)), genus},
                    {head.span.begin, close.span.end}};
    }

    Expr parse_blowup(const Token& head) {
        expect(TokKind::lparen, "'('");
        Expr child = parse_node(/*allow_product=*/false);
        expect(TokKind::comma, "','");
        const std::int64_t k = expect_integer();
        const Token close = expect(TokKind::rparen, "')'");
        return Expr{BlowUpNode{std::make_unique<Expr>(std::move(child)), k},
                    {head.span.begin, close.span.end}};
    }

    Expr parse_logtransform(const Token& head) {
        expect(TokKind::lparen, "'('");
        Expr child = parse_node(/*allow_product=*/false);
        expect(TokKind::comma, "','");
        const std::int64_t p = expect_integer();
        expect(TokKind::comma, "','");
        const std::int64_t q = expect_integer();
        const Token close = expect(TokKind::rparen, "')'");
        return Expr{LogTransformNode{std::make_unique<Expr>(std::move(child)), p, q},
                    {head.span.begin, close.span.end}};
    }

    Expr parse_family(const Token& head) {
        std::vector<std::int64_t> params;
        SourceSpan span = head.span;
        if (current_.kind == TokKind::lparen) {
            advance();
            params.push_back(expect_integer());
            while (current_.kind == TokKind::comma) {
                advance();
                params.push_back(expect_integer());
            }
            const Token close = expect(TokKind::rparen, "')'");
            span.end = close.span.end;
        }
        const auto& table = family_arities();
        const auto it = table.find(head.text);
        if (it == table.end())
            throw error(errc::unknown_family,
                        "unknown family '" + std::string(head.text) + "'", span);
        if (params.size() != it->second)
            throw error(errc::arity_error,
                        "family '" + std::string(head.text) + "' takes " +
                            std::to_string(it->second) + " parameter(s), got " +
                            std::to_string(params.size()),
                        span);
        return Expr{FamilyRef{std::string(head.text), std::move(params)}, span};
    }

    Lexer lexer_;
    Token current_;
};

} // namespace

Expr parse(std::string_view text) {
    return Parser(text).parse_expression();
}

std::string pretty_print(const Expr& e) {
    return std::visit(
        overloaded{
            [](const FamilyRef& f) {
                std::string out = f.name;
                if (!f.params.empty()) {
                    out += "(";
                    for (std::size_t i = 0; i < f.params.size(); ++i) {
                        if (i) out += ", ";
                        out += std::to_string(f.params[i]);
                    }
                    out += ")";
                }
                return out;
            },
            [](const BlowUpNode& b) {
                return "blowup(" + pretty_print(*b.child) + ", " + std::to_string(b.k) + ")";
            },
            [](const LogTransformNode& t) {
                return "logtransform(" + pretty_print(*t.child) + ", " +
                       std::to_string(t.p) + ", " + std::to_string(t.q) + ")";
            },
            [](const ProductNode& p) {
                return "product(" + pretty_print(*p.child) + ", curve(" +
                       std::to_string(p.genus) + "))";
            },
        },
        e.node);
}

namespace {

// Re-raise construction errors with the location of the offending node.
template <class F>
auto at_span(SourceSpan span, F&& op) -> decltype(op()) {
    try {
        return op();
    } catch (const error& e) {
        if (!e.span()) throw e.with_span(span);
        throw;
    }
}

SurfaceFamily family_from_ref(const FamilyRef& ref) {
    const auto& table = family_arities();
    const auto it = table.find(ref.name);
    if (it == table.end())
        throw error(errc::unknown_family, "unknown family '" + ref.name + "'");
    if (ref.params.size() != it->second)
        throw error(errc::arity_error,
                    "family '" + ref.name + "' takes " + std::to_string(it->second) +
                        " parameter(s), got " + std::to_string(ref.params.size()));
    if (ref.name == "cp2") return SurfaceFamily::projective_plane();
    if (ref.name == "rational_elliptic") return SurfaceFamily::rational_elliptic();
    if (ref.name == "dolgachev") return SurfaceFamily::dolgachev(ref.params[0], ref.params[1]);
    if (ref.name == "k3") return SurfaceFamily::k3_elliptic();
    if (ref.name == "homotopy_k3") return SurfaceFamily::homotopy_k3(ref.params[0], ref.params[1]);
    if (ref.name == "barlow") return SurfaceFamily::barlow();
    if (ref.name == "catanese") return SurfaceFamily::catanese();
    if (ref.name == "elliptic_mn") return SurfaceFamily::elliptic_mn(ref.params[0]);
    if (ref.name == "horikawa") return SurfaceFamily::horikawa();
    if (ref.name == "sextic") return SurfaceFamily::sextic();
    throw error(errc::internal, "family table out of sync");
}

SurfaceModel evaluate_surface(const Expr& e) {
    return std::visit(
        overloaded{
            [&](const FamilyRef& f) {
                return at_span(e.span, [&] { return instantiate(family_from_ref(f)); });
            },
            [&](const BlowUpNode& b) {
                SurfaceModel child = evaluate_surface(*b.child);
                return at_span(e.span, [&] { return blow_up(child, b.k); });
            },
            [&](const LogTransformNode& t) {
                SurfaceModel child = evaluate_surface(*t.child);
                return at_span(e.span, [&] { return log_transform(child, t.p, t.q); });
            },
            [&](const ProductNode&) -> SurfaceModel {
                throw error(errc::type_error, "a product is not a surface", e.span);
            },
        },
        e.node);
}

} // namespace

Model evaluate(const Expr& e) {
    if (const auto* p = std::get_if<ProductNode>(&e.node)) {
        SurfaceModel s = evaluate_surface(*p->child);
        return at_span(e.span, [&] { return kodcalc::product(s, make_curve(p->genus)); });
    }
    return evaluate_surface(e);
}

} // namespace kodcalc::dsl
