#include "kodcalc/constructions.hpp"

namespace kodcalc {

Curve make_curve(std::int64_t genus) {
    if (genus < 0) throw error(errc::bad_parameter, "curve genus must be non-negative");
    return Curve{genus};
}

SurfaceModel blow_up(const SurfaceModel& s, std::int64_t k) {
    if (k < 0) throw error(errc::bad_parameter, "blow-up count must be non-negative");
    SurfaceModel out = s;
    out.chern.c1_sq = checked_sub(s.chern.c1_sq, k);
    out.chern.c2 = checked_add(s.chern.c2, k);
    out.blowups = checked_add(s.blowups, k);
    out.spin = s.spin && k == 0;
    if (out.c1_coords)
        out.c1_coords->insert(out.c1_coords->end(), static_cast<std::size_t>(k), -1);
    validate_surface(out);
    return out;
}

SurfaceModel log_transform(const SurfaceModel& s, std::int64_t p, std::int64_t q) {
    const FamilyTag tag = s.family.tag();
    if (tag != FamilyTag::rational_elliptic && tag != FamilyTag::k3_elliptic)
        throw error(errc::not_elliptic,
                    s.family.display() + " carries no marked elliptic fibration");
    if (s.blowups != 0)
        throw error(errc::already_blown_up,
                    "logarithmic transformations act on the unblown fibration");
    if (tag == FamilyTag::rational_elliptic)
        return instantiate(SurfaceFamily::dolgachev(p, q));
    return instantiate(SurfaceFamily::homotopy_k3(p, q));
}

std::int64_t curve_plurigenus(const Curve& c, std::int64_t m) {
    if (c.genus < 0) throw error(errc::bad_parameter, "curve genus must be non-negative");
    if (m < 1) throw error(errc::bad_parameter, "plurigenera are defined for m >= 1");
    if (c.genus == 0) return 0;
    if (c.genus == 1) return 1;
    if (m == 1) return c.genus;
    return checked_mul(checked_sub(checked_mul(2, m), 1), checked_sub(c.genus, 1));
}

KodairaDim curve_kod(const Curve& c) {
    if (c.genus < 0) throw error(errc::bad_parameter, "curve genus must be non-negative");
    if (c.genus == 0) return KodairaDim::minus_infinity();
    return KodairaDim::finite(c.genus == 1 ? 0 : 1);
}

ChernTriple product_chern(const ChernPair& surface, std::int64_t genus) {
    const std::int64_t six = checked_sub(6, checked_mul(6, genus));
    const std::int64_t two = checked_sub(2, checked_mul(2, genus));
    return ChernTriple{
        checked_mul(six, surface.c1_sq),
        checked_mul(two, checked_add(surface.c1_sq, surface.c2)),
        checked_mul(two, surface.c2),
    };
}

ThreefoldModel product(const SurfaceModel& s, const Curve& c) {
    if (c.genus < 0) throw error(errc::bad_parameter, "curve genus must be non-negative");
    ThreefoldModel x;
    x.surface = s;
    x.curve = c;
    x.chern3 = product_chern(s.chern, c.genus);
    x.kod = s.kod + curve_kod(c);
    x.pi1 = c.genus == 0 ? FundamentalGroup::trivial()
                         : FundamentalGroup::surface_group(c.genus);
    return x;
}

std::int64_t threefold_plurigenus(const ThreefoldModel& x, std::int64_t m) {
    const std::int64_t surface_part = plurigenus(x.surface, m);
    return checked_mul(surface_part, curve_plurigenus(x.curve, m));
}

} // namespace kodcalc
