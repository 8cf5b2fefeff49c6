#ifndef KODCALC_CONSTRUCTIONS_HPP
#define KODCALC_CONSTRUCTIONS_HPP

// Construction operators: blow-up, logarithmic transformation, Cartesian
// product with a curve. Invariants propagate exactly.

#include <cstdint>

#include "kodcalc/catalog.hpp"

namespace kodcalc {

struct Curve {
    std::int64_t genus = 0;
};

Curve make_curve(std::int64_t genus); // genus >= 0

struct ChernTriple {
    std::int64_t c1_cubed = 0;
    std::int64_t c1c2 = 0;
    std::int64_t c3 = 0;

    friend bool operator==(const ChernTriple&, const ChernTriple&) = default;
};

struct ThreefoldModel {
    SurfaceModel surface;
    Curve curve;
    ChernTriple chern3;
    KodairaDim kod;
    FundamentalGroup pi1 = FundamentalGroup::trivial();
};

// Blow up at k distinct points: c1^2 -= k, c2 += k, spin dies for k >= 1,
// plurigenera and Kodaira dimension are untouched.
SurfaceModel blow_up(const SurfaceModel& s, std::int64_t k);

// Logarithmic transformation on two smooth fibers of a marked, unblown
// elliptic surface. Sends the rational elliptic surface to dolgachev(p, q)
// and the elliptic K3 to homotopy_k3(p, q).
SurfaceModel log_transform(const SurfaceModel& s, std::int64_t p, std::int64_t q);

// Sections of the m-th canonical power of a genus-g curve.
std::int64_t curve_plurigenus(const Curve& c, std::int64_t m);

// genus 0 -> -infinity, 1 -> 0, >= 2 -> 1.
KodairaDim curve_kod(const Curve& c);

// Chern numbers (c1^3, c1 c2, c3) of surface x curve:
// ((6-6g) a, (2-2g)(a+b), (2-2g) b) for surface Chern pair (a, b).
ChernTriple product_chern(const ChernPair& surface, std::int64_t genus);

// Cartesian product with a curve; Kodaira dimensions add with -infinity
// absorbing, pi1 is the curve's fundamental group.
ThreefoldModel product(const SurfaceModel& s, const Curve& c);

// P_m of the product = P_m(surface) * P_m(curve). RuleUnavailable propagates
// from the surface factor.
std::int64_t threefold_plurigenus(const ThreefoldModel& x, std::int64_t m);

} // namespace kodcalc

#endif
