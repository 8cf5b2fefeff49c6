#include "kodcalc/catalog.hpp"

#include <vector>

namespace kodcalc {

namespace {

void check_multiplicities(std::int64_t p, std::int64_t q) {
    if (p < 2)
        throw error(errc::bad_parameter, "multiplicities require p >= 2");
    if (p >= q)
        throw error(errc::bad_parameter, "multiplicities require p < q");
    if (gcd64(p, q) != 1)
        throw error(errc::not_coprime, "multiplicities must be relatively prime");
}

} // namespace

SurfaceFamily SurfaceFamily::dolgachev(std::int64_t p, std::int64_t q) {
    check_multiplicities(p, q);
    return SurfaceFamily(FamilyTag::dolgachev, p, q);
}

SurfaceFamily SurfaceFamily::homotopy_k3(std::int64_t p, std::int64_t q) {
    check_multiplicities(p, q);
    return SurfaceFamily(FamilyTag::homotopy_k3, p, q);
}

SurfaceFamily SurfaceFamily::elliptic_mn(std::int64_t n) {
    if (n < 3)
        throw error(errc::bad_parameter,
                    "elliptic_mn requires n >= 3 (n = 2 is the K3 surface)");
    return SurfaceFamily(FamilyTag::elliptic_mn, n);
}

std::int64_t SurfaceFamily::p() const {
    if (tag_ != FamilyTag::dolgachev && tag_ != FamilyTag::homotopy_k3)
        throw error(errc::bad_parameter, "family carries no multiplicities");
    return a_;
}

std::int64_t SurfaceFamily::q() const {
    if (tag_ != FamilyTag::dolgachev && tag_ != FamilyTag::homotopy_k3)
        throw error(errc::bad_parameter, "family carries no multiplicities");
    return b_;
}

std::int64_t SurfaceFamily::n() const {
    if (tag_ != FamilyTag::elliptic_mn)
        throw error(errc::bad_parameter, "family carries no degree parameter");
    return a_;
}

std::string SurfaceFamily::name() const {
    switch (tag_) {
    case FamilyTag::projective_plane: return "cp2";
    case FamilyTag::rational_elliptic: return "rational_elliptic";
    case FamilyTag::dolgachev: return "dolgachev";
    case FamilyTag::k3_elliptic: return "k3";
    case FamilyTag::homotopy_k3: return "homotopy_k3";
    case FamilyTag::barlow: return "barlow";
    case FamilyTag::catanese: return "catanese";
    case FamilyTag::elliptic_mn: return "elliptic_mn";
    case FamilyTag::horikawa: return "horikawa";
    case FamilyTag::sextic: return "sextic";
    }
    throw error(errc::internal, "unhandled family tag");
}

std::vector<std::int64_t> SurfaceFamily::params() const {
    switch (tag_) {
    case FamilyTag::dolgachev:
    case FamilyTag::homotopy_k3: return {a_, b_};
    case FamilyTag::elliptic_mn: return {a_};
    default: return {};
    }
}

std::string SurfaceFamily::display() const {
    std::string out = name();
    const auto ps = params();
    if (!ps.empty()) {
        out += "(";
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(ps[i]);
        }
        out += ")";
    }
    return out;
}

namespace {

struct CatalogRow {
    std::int64_t c1_sq;
    std::int64_t c2;
    std::int64_t p_g;
    bool spin;
    KodairaDim kod;
    std::optional<EllipticMarker> elliptic;
};

CatalogRow catalog_row(const SurfaceFamily& f) {
    const auto minus_inf = KodairaDim::minus_infinity();
    switch (f.tag()) {
    case FamilyTag::projective_plane:
        return {9, 3, 0, false, minus_inf, std::nullopt};
    case FamilyTag::rational_elliptic:
        return {0, 12, 0, false, minus_inf, EllipticMarker{}};
    case FamilyTag::dolgachev:
        return {0, 12, 0, false, KodairaDim::finite(1), EllipticMarker{f.p(), f.q()}};
    case FamilyTag::k3_elliptic:
        return {0, 24, 1, true, KodairaDim::finite(0), EllipticMarker{}};
    case FamilyTag::homotopy_k3:
        return {0, 24, 1, true, KodairaDim::finite(1), EllipticMarker{f.p(), f.q()}};
    case FamilyTag::barlow:
        return {1, 11, 0, false, KodairaDim::finite(2), std::nullopt};
    case FamilyTag::catanese:
        return {1, 23, 1, false, KodairaDim::finite(2), std::nullopt};
    case FamilyTag::elliptic_mn: {
        const std::int64_t n = f.n();
        // c1 paired with the hyperplane 3-section is 3(2 - n): even iff n is.
        const bool spin = (3 * (2 - n)) % 2 == 0;
        return {0, checked_mul(12, n), n - 1, spin, KodairaDim::finite(1),
                EllipticMarker{}};
    }
    case FamilyTag::horikawa:
        return {16, 116, 10, false, KodairaDim::finite(2), std::nullopt};
    case FamilyTag::sextic:
        return {24, 108, 10, true, KodairaDim::finite(2), std::nullopt};
    }
    throw error(errc::internal, "unhandled family tag");
}

} // namespace

SurfaceModel instantiate(const SurfaceFamily& family) {
    const CatalogRow row = catalog_row(family);
    SurfaceModel s;
    s.family = family;
    s.blowups = 0;
    s.chern = ChernPair{row.c1_sq, row.c2};
    s.hodge = hodge_from_pg(row.p_g);
    s.spin = row.spin;
    s.kod = row.kod;
    s.elliptic = row.elliptic;
    if (family.tag() == FamilyTag::projective_plane)
        s.c1_coords = std::vector<std::int64_t>{3};
    validate_surface(s);
    return s;
}

std::vector<SurfaceFamily> catalog_families() {
    return {
        SurfaceFamily::projective_plane(),
        SurfaceFamily::rational_elliptic(),
        SurfaceFamily::dolgachev(2, 3),
        SurfaceFamily::k3_elliptic(),
        SurfaceFamily::homotopy_k3(2, 3),
        SurfaceFamily::barlow(),
        SurfaceFamily::catanese(),
        SurfaceFamily::elliptic_mn(3),
        SurfaceFamily::horikawa(),
        SurfaceFamily::sextic(),
    };
}

bool has_full_plurigenera_rule(const SurfaceModel& s) noexcept {
    return s.family.tag() != FamilyTag::barlow && s.family.tag() != FamilyTag::catanese;
}

namespace {

// C(n, 3); a product of three consecutive integers is divisible by 6.
std::int64_t binom3(std::int64_t n) {
    if (n < 3) return 0;
    return checked_mul(checked_mul(n, n - 1), n - 2) / 6;
}

// Sections of the m-th canonical power of a minimal elliptic surface over the
// projective line with chi(O) = chi and two multiple fibers (p, q):
// the canonical bundle pushes down to degree m(chi - 2) + [m(p-1)/p] + [m(q-1)/q].
std::int64_t elliptic_sections(std::int64_t chi, std::int64_t p, std::int64_t q,
                               std::int64_t m) {
    const std::int64_t deg =
        checked_add(checked_add(checked_mul(m, chi - 2), checked_mul(m, p - 1) / p),
                    checked_mul(m, q - 1) / q);
    return deg >= 0 ? checked_add(deg, 1) : 0;
}

} // namespace

std::int64_t plurigenus(const SurfaceModel& s, std::int64_t m) {
    if (m < 1) throw error(errc::bad_parameter, "plurigenera are defined for m >= 1");
    switch (s.family.tag()) {
    case FamilyTag::projective_plane:
    case FamilyTag::rational_elliptic:
        return 0;
    case FamilyTag::k3_elliptic:
        return 1;
    case FamilyTag::dolgachev:
        return elliptic_sections(1, s.family.p(), s.family.q(), m);
    case FamilyTag::homotopy_k3:
        return elliptic_sections(2, s.family.p(), s.family.q(), m);
    case FamilyTag::elliptic_mn:
        return checked_add(checked_mul(m, s.family.n() - 2), 1);
    case FamilyTag::horikawa:
        if (m <= 2)
            return checked_mul(checked_add(m, 1), checked_add(checked_mul(4, m), 1));
        return checked_add(
            checked_sub(checked_mul(8, checked_mul(m, m)), checked_mul(8, m)), 11);
    case FamilyTag::sextic:
        if (m <= 2) return binom3(checked_add(checked_mul(2, m), 3));
        return checked_add(
            checked_sub(checked_mul(12, checked_mul(m, m)), checked_mul(12, m)), 11);
    case FamilyTag::barlow:
        if (m == 1) return 0;
        throw error(errc::rule_unavailable,
                    "Barlow plurigenera beyond m = 1 are not tabulated");
    case FamilyTag::catanese:
        if (m == 1) return 1;
        throw error(errc::rule_unavailable,
                    "Catanese plurigenera beyond m = 1 are not tabulated");
    }
    throw error(errc::internal, "unhandled family tag");
}

KodairaDim kodaira_dimension(const SurfaceModel& s, std::int64_t growth_bound) {
    if (growth_bound < 8)
        throw error(errc::bad_parameter, "growth bound must be at least 8");
    if (has_full_plurigenera_rule(s)) {
        std::vector<std::int64_t> seq;
        seq.reserve(static_cast<std::size_t>(growth_bound));
        for (std::int64_t m = 1; m <= growth_bound; ++m)
            seq.push_back(plurigenus(s, m));
        if (growth_class(seq) != s.kod)
            throw error(errc::inconsistent_kod,
                        "stored Kodaira dimension of " + s.family.display() +
                            " disagrees with the growth of its plurigenera");
    }
    return s.kod;
}

void validate_surface(const SurfaceModel& s) {
    if (s.hodge.q != 0)
        throw error(errc::bad_parameter,
                    "irregularity must vanish: only simply connected surfaces are admitted");
    if (s.blowups < 0)
        throw error(errc::internal, "negative blow-up count");

    const std::int64_t chi = chi_from_noether(s.chern);
    if (chi != s.hodge.chi_o || chi != checked_add(1, s.hodge.p_g))
        throw error(errc::internal,
                    "Noether integrality violated for " + s.family.display());

    const BettiData b = betti_data(s.hodge.p_g, s.chern.c2);
    const std::int64_t lhs = checked_mul(3, checked_sub(b.b_plus, b.b_minus));
    const std::int64_t rhs = checked_sub(s.chern.c1_sq, checked_mul(2, s.chern.c2));
    if (lhs != rhs)
        throw error(errc::internal,
                    "signature identity violated for " + s.family.display());

    if (s.spin && (s.blowups >= 1 || s.chern.c1_sq % 2 != 0))
        throw error(errc::internal,
                    "spin flag inconsistent with blow-ups for " + s.family.display());
    if (s.spin)
        make_intersection_form(b.b_plus, b.b_minus, Parity::even);
}

} // namespace kodcalc
