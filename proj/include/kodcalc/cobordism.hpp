#ifndef KODCALC_COBORDISM_HPP
#define KODCALC_COBORDISM_HPP

// Decision procedures: intersection-form isomorphism, h-cobordism, blow-up
// balancing, Whitehead-group vanishing, and the diffeomorphism verdict for
// products with curves.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kodcalc/catalog.hpp"

namespace kodcalc {

// Stable identifiers for the justification chain of a verdict.
namespace theorem_tag {
inline constexpr const char* form_h_cobordism = "Thm2.1";  // forms isomorphic <=> h-cobordant
inline constexpr const char* form_classification = "Thm2.2"; // rank, signature, parity
inline constexpr const char* s_cobordism = "Thm2.3";
inline constexpr const char* farrell_jones = "Thm2.4";
inline constexpr const char* wh_riemann_surface = "Cor2.5";
inline constexpr const char* product_h_cobordism = "Cor2.6";
inline constexpr const char* smale = "Smale";
} // namespace theorem_tag

enum class Outcome {
    diffeomorphic_via_s_cobordism,
    diffeomorphic_via_smale,
    no_conclusion,
};

const char* outcome_name(Outcome o) noexcept;

struct Verdict {
    Outcome outcome = Outcome::no_conclusion;
    std::vector<std::string> chain;

    bool diffeomorphic() const noexcept { return outcome != Outcome::no_conclusion; }
};

// Indefinite unimodular forms are isomorphic exactly when rank, signature
// and parity agree. Definite forms are out of scope and rejected.
bool forms_isomorphic(const IntersectionForm& a, const IntersectionForm& b);

// Simply connected surfaces are h-cobordant iff their forms are isomorphic.
bool h_cobordant(const SurfaceModel& a, const SurfaceModel& b);

// Given p_g(m) = p_g(m2) and defect d = c1^2(m) - c1^2(m2) >= 0, blow up m at
// k + d points and m2 at k points (k >= 1). The results are h-cobordant; that
// postcondition is asserted.
std::pair<SurfaceModel, SurfaceModel>
balance_blowups(const SurfaceModel& m, const SurfaceModel& m2, std::int64_t k);

// Vanishing of the Whitehead group over the closed fundamental-group type:
// trivially for the trivial group, via nonpositive curvature for surface groups.
bool wh_vanishes(const FundamentalGroup& pi);

// Verdict for m x Sigma_g vs m2 x Sigma_g. A failed form test yields
// NoConclusion: the machinery proves nothing negative.
Verdict diffeomorphic_product(const SurfaceModel& m, const SurfaceModel& m2,
                              std::int64_t genus);

// True iff gcd of the entries is 1; an all-zero (or empty) vector is rejected.
bool c1_primitive(std::span<const std::int64_t> v);

} // namespace kodcalc

#endif
