#include "kodcalc/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kodcalc/catalog.hpp"

namespace kodcalc {

std::int64_t chi_from_noether(const ChernPair& c) {
    const std::int64_t sum = checked_add(c.c1_sq, c.c2);
    return exact_div(sum, 12, errc::not_divisible,
                     "c1^2 + c2 is not divisible by 12; no surface realizes these invariants");
}

HodgeSummary hodge_from_pg(std::int64_t p_g) {
    if (p_g < 0) throw error(errc::bad_parameter, "geometric genus must be non-negative");
    return HodgeSummary{p_g, 0, checked_add(1, p_g)};
}

BettiData betti_data(std::int64_t p_g, std::int64_t c2) {
    if (p_g < 0) throw error(errc::bad_parameter, "geometric genus must be non-negative");
    const std::int64_t b2 = checked_sub(c2, 2);
    const std::int64_t b_plus = checked_add(checked_mul(2, p_g), 1);
    if (b2 < b_plus)
        throw error(errc::negative_betti,
                    "b2 = c2 - 2 is smaller than b+ = 2 p_g + 1; invariants are inconsistent");
    return BettiData{b2, b_plus, checked_sub(b2, b_plus)};
}

const char* parity_name(Parity p) noexcept {
    return p == Parity::even ? "even" : "odd";
}

IntersectionForm make_intersection_form(std::int64_t b_plus, std::int64_t b_minus,
                                        Parity parity) {
    if (b_plus < 0 || b_minus < 0)
        throw error(errc::bad_parameter, "b+ and b- must be non-negative");
    IntersectionForm f{checked_add(b_plus, b_minus), b_plus, b_minus, parity};
    if (parity == Parity::even && f.signature() % 8 != 0)
        throw error(errc::internal,
                    "even unimodular form with signature not divisible by 8");
    return f;
}

KodairaDim KodairaDim::finite(int value) {
    if (value < 0 || value > 3)
        throw error(errc::bad_parameter, "finite Kodaira dimension must lie in 0..3");
    KodairaDim d;
    d.v_ = value;
    return d;
}

int KodairaDim::value() const {
    if (!is_finite()) throw error(errc::bad_parameter, "Kodaira dimension is -infinity");
    return v_;
}

std::string KodairaDim::str() const {
    return is_finite() ? std::to_string(v_) : "-inf";
}

KodairaDim operator+(KodairaDim a, KodairaDim b) {
    if (!a.is_finite() || !b.is_finite()) return KodairaDim::minus_infinity();
    return KodairaDim::finite(a.value() + b.value());
}

FundamentalGroup FundamentalGroup::surface_group(std::int64_t genus) {
    if (genus < 1)
        throw error(errc::bad_parameter, "surface groups require genus >= 1");
    FundamentalGroup g;
    g.genus_ = genus;
    return g;
}

std::int64_t FundamentalGroup::genus() const {
    if (is_trivial())
        throw error(errc::bad_parameter, "the trivial group carries no genus");
    return genus_;
}

std::string FundamentalGroup::str() const {
    return is_trivial() ? "trivial" : "surface_group(" + std::to_string(genus_) + ")";
}

IntersectionForm intersection_form(const SurfaceModel& s) {
    const BettiData b = betti_data(s.hodge.p_g, s.chern.c2);
    return make_intersection_form(b.b_plus, b.b_minus,
                                  s.spin ? Parity::even : Parity::odd);
}

KodairaDim growth_class(std::span<const std::int64_t> plurigenera) {
    if (plurigenera.size() < 8)
        throw error(errc::bad_parameter, "growth classification needs at least 8 terms");
    const std::int64_t peak = *std::max_element(plurigenera.begin(), plurigenera.end());
    if (peak == 0) return KodairaDim::minus_infinity();
    if (peak <= 1) return KodairaDim::finite(0);

    // Partial sums of a degree-d sequence scale like B^(d+1); halving the
    // range divides them by 2^(d+1), which floor noise cannot hide.
    const std::size_t n = plurigenera.size();
    std::int64_t whole = 0, half = 0;
    for (std::size_t i = 0; i < n; ++i) {
        whole = checked_add(whole, plurigenera[i]);
        if (i < n / 2) half = checked_add(half, plurigenera[i]);
    }
    if (half <= 0)
        throw error(errc::inconsistent_kod, "plurigenera grow but vanish on the first half");
    const double ratio = static_cast<double>(whole) / static_cast<double>(half);
    const long degree = std::lround(std::log2(ratio)) - 1;
    return KodairaDim::finite(static_cast<int>(std::clamp(degree, 1L, 3L)));
}

} // namespace kodcalc
