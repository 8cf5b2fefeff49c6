#include "kodcalc/cobordism.hpp"

#include "kodcalc/constructions.hpp"

namespace kodcalc {

const char* outcome_name(Outcome o) noexcept {
    switch (o) {
    case Outcome::diffeomorphic_via_s_cobordism: return "DiffeomorphicViaSCobordism";
    case Outcome::diffeomorphic_via_smale: return "DiffeomorphicViaSmale";
    case Outcome::no_conclusion: return "NoConclusion";
    }
    return "NoConclusion";
}

bool forms_isomorphic(const IntersectionForm& a, const IntersectionForm& b) {
    if (!a.indefinite() || !b.indefinite())
        throw error(errc::definite_form_unsupported,
                    "only indefinite forms are classified by rank, signature and parity");
    return a.rank == b.rank && a.signature() == b.signature() && a.parity == b.parity;
}

bool h_cobordant(const SurfaceModel& a, const SurfaceModel& b) {
    return forms_isomorphic(intersection_form(a), intersection_form(b));
}

std::pair<SurfaceModel, SurfaceModel>
balance_blowups(const SurfaceModel& m, const SurfaceModel& m2, std::int64_t k) {
    if (m.hodge.p_g != m2.hodge.p_g)
        throw error(errc::genus_mismatch,
                    "blow-up balancing requires equal geometric genus");
    const std::int64_t defect = checked_sub(m.chern.c1_sq, m2.chern.c1_sq);
    if (defect < 0)
        throw error(errc::negative_defect,
                    "c1^2 defect is negative; swap the arguments");
    if (k < 1) throw error(errc::bad_k, "balancing requires k >= 1");

    auto left = blow_up(m, checked_add(k, defect));
    auto right = blow_up(m2, k);
    if (!h_cobordant(left, right))
        throw error(errc::internal, "balanced blow-ups failed the h-cobordism postcondition");
    return {std::move(left), std::move(right)};
}

bool wh_vanishes(const FundamentalGroup& pi) {
    if (pi.is_trivial()) return true;
    // surface groups: nonpositive curvature kills the Whitehead group
    return pi.genus() >= 1;
}

Verdict diffeomorphic_product(const SurfaceModel& m, const SurfaceModel& m2,
                              std::int64_t genus) {
    if (genus < 0) throw error(errc::bad_parameter, "curve genus must be non-negative");
    if (!h_cobordant(m, m2)) return Verdict{Outcome::no_conclusion, {}};
    if (genus == 0)
        return Verdict{Outcome::diffeomorphic_via_smale,
                       {theorem_tag::form_h_cobordism, theorem_tag::smale}};
    if (!wh_vanishes(FundamentalGroup::surface_group(genus)))
        return Verdict{Outcome::no_conclusion, {}};
    return Verdict{Outcome::diffeomorphic_via_s_cobordism,
                   {theorem_tag::form_h_cobordism, theorem_tag::wh_riemann_surface,
                    theorem_tag::s_cobordism}};
}

bool c1_primitive(std::span<const std::int64_t> v) {
    std::int64_t g = 0;
    for (const std::int64_t entry : v) g = gcd64(g, entry);
    if (g == 0)
        throw error(errc::zero_vector, "primitivity is undefined for the zero vector");
    return g == 1;
}

} // namespace kodcalc
