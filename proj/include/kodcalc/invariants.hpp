#ifndef KODCALC_INVARIANTS_HPP
#define KODCALC_INVARIANTS_HPP

// Exact invariant arithmetic for simply connected compact complex surfaces:
// Noether's formula, Betti/Hodge bookkeeping, intersection-form extraction.

#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "kodcalc/checked.hpp"
#include "kodcalc/errors.hpp"

namespace kodcalc {

struct ChernPair {
    std::int64_t c1_sq = 0; // self-intersection of the canonical class
    std::int64_t c2 = 0;    // topological Euler number

    friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

// chi(O) = (c1^2 + c2)/12; NotDivisible marks a non-realizable invariant set.
std::int64_t chi_from_noether(const ChernPair& c);

struct HodgeSummary {
    std::int64_t p_g = 0;   // geometric genus
    std::int64_t q = 0;     // irregularity, identically zero in this calculus
    std::int64_t chi_o = 1; // holomorphic Euler characteristic

    friend bool operator==(const HodgeSummary&, const HodgeSummary&) = default;
};

// chi(O) = 1 - q + p_g with q pinned to zero.
HodgeSummary hodge_from_pg(std::int64_t p_g);

struct BettiData {
    std::int64_t b2 = 0;
    std::int64_t b_plus = 0;
    std::int64_t b_minus = 0;
};

// Simply connected surface: b2 = c2 - 2, b+ = 2 p_g + 1, b- the remainder.
BettiData betti_data(std::int64_t p_g, std::int64_t c2);

enum class Parity { even, odd };

const char* parity_name(Parity p) noexcept;

struct IntersectionForm {
    std::int64_t rank = 0;
    std::int64_t b_plus = 0;
    std::int64_t b_minus = 0;
    Parity parity = Parity::odd;

    std::int64_t signature() const noexcept { return b_plus - b_minus; }
    bool indefinite() const noexcept { return b_plus >= 1 && b_minus >= 1; }

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;
};

// Validates the unimodular constraints (an even form has signature = 0 mod 8).
IntersectionForm make_intersection_form(std::int64_t b_plus, std::int64_t b_minus,
                                        Parity parity);

// Kodaira dimension: -infinity or a small non-negative integer (<= 3 here).
class KodairaDim {
public:
    constexpr KodairaDim() noexcept = default;

    static constexpr KodairaDim minus_infinity() noexcept { return KodairaDim(); }
    static KodairaDim finite(int value);

    bool is_finite() const noexcept { return v_ != kMinusInf; }
    int value() const; // requires is_finite()
    std::string str() const;

    // -infinity is absorbing for addition.
    friend KodairaDim operator+(KodairaDim a, KodairaDim b);

    friend constexpr bool operator==(KodairaDim, KodairaDim) = default;
    friend constexpr auto operator<=>(KodairaDim a, KodairaDim b) noexcept {
        return a.v_ <=> b.v_;
    }

private:
    static constexpr int kMinusInf = -1000;
    int v_ = kMinusInf;
};

class FundamentalGroup {
public:
    static FundamentalGroup trivial() noexcept { return FundamentalGroup(); }
    static FundamentalGroup surface_group(std::int64_t genus);

    bool is_trivial() const noexcept { return genus_ == 0; }
    std::int64_t genus() const; // requires !is_trivial()
    std::string str() const;

    friend bool operator==(const FundamentalGroup&, const FundamentalGroup&) = default;

private:
    FundamentalGroup() = default;
    std::int64_t genus_ = 0; // 0 encodes the trivial group
};

struct SurfaceModel;

// Form summary of a simply connected surface; parity is even exactly when the
// surface is spin.
IntersectionForm intersection_form(const SurfaceModel& s);

// Growth class of a plurigenera sequence P_1..P_B: all zero -> -infinity,
// bounded by one -> 0, otherwise the polynomial degree (1..3) read off the tail.
KodairaDim growth_class(std::span<const std::int64_t> plurigenera);

} // namespace kodcalc

#endif
