#ifndef KODCALC_CATALOG_HPP
#define KODCALC_CATALOG_HPP

// Registry of the surface families in scope, with exact invariants and
// per-family plurigenera rules.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kodcalc/invariants.hpp"

namespace kodcalc {

enum class FamilyTag {
    projective_plane,
    rational_elliptic,
    dolgachev,
    k3_elliptic,
    homotopy_k3,
    barlow,
    catanese,
    elliptic_mn,
    horikawa,
    sextic,
};

class SurfaceFamily {
public:
    static SurfaceFamily projective_plane() noexcept { return SurfaceFamily(FamilyTag::projective_plane); }
    static SurfaceFamily rational_elliptic() noexcept { return SurfaceFamily(FamilyTag::rational_elliptic); }
    static SurfaceFamily k3_elliptic() noexcept { return SurfaceFamily(FamilyTag::k3_elliptic); }
    static SurfaceFamily barlow() noexcept { return SurfaceFamily(FamilyTag::barlow); }
    static SurfaceFamily catanese() noexcept { return SurfaceFamily(FamilyTag::catanese); }
    static SurfaceFamily horikawa() noexcept { return SurfaceFamily(FamilyTag::horikawa); }
    static SurfaceFamily sextic() noexcept { return SurfaceFamily(FamilyTag::sextic); }

    // Multiplicities must satisfy 2 <= p < q with gcd(p, q) = 1.
    static SurfaceFamily dolgachev(std::int64_t p, std::int64_t q);
    static SurfaceFamily homotopy_k3(std::int64_t p, std::int64_t q);

    // Elliptic surfaces of holomorphic Euler characteristic n >= 3.
    static SurfaceFamily elliptic_mn(std::int64_t n);

    FamilyTag tag() const noexcept { return tag_; }
    std::int64_t p() const; // log-transform multiplicity, dolgachev/homotopy_k3
    std::int64_t q() const;
    std::int64_t n() const; // elliptic_mn parameter

    // CLI identifier ("cp2", "dolgachev", "k3", ...).
    std::string name() const;
    // Identifier with parameters, e.g. "dolgachev(2, 3)".
    std::string display() const;

    std::vector<std::int64_t> params() const;

    friend bool operator==(const SurfaceFamily&, const SurfaceFamily&) = default;

private:
    explicit SurfaceFamily(FamilyTag tag, std::int64_t a = 0, std::int64_t b = 0)
        : tag_(tag), a_(a), b_(b) {}

    FamilyTag tag_;
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
};

// Marked elliptic fibration; multiplicities (1, 1) mean no multiple fibers.
struct EllipticMarker {
    std::int64_t p = 1;
    std::int64_t q = 1;

    friend bool operator==(const EllipticMarker&, const EllipticMarker&) = default;
};

struct SurfaceModel {
    SurfaceFamily family = SurfaceFamily::projective_plane();
    std::int64_t blowups = 0;
    ChernPair chern;
    HodgeSummary hodge;
    bool spin = false;
    KodairaDim kod;
    std::optional<EllipticMarker> elliptic;
    // First Chern class in the standard basis, kept only for blow-ups of the
    // projective plane: (3, -1, ..., -1).
    std::optional<std::vector<std::int64_t>> c1_coords;
};

// Catalog row for a family instance. Rejects invalid parameters.
SurfaceModel instantiate(const SurfaceFamily& family);

// Representative instances of every family, for catalog dumps.
std::vector<SurfaceFamily> catalog_families();

// True when the family has a closed plurigenera rule for every m >= 1.
bool has_full_plurigenera_rule(const SurfaceModel& s) noexcept;

// P_m(S), m >= 1. Blow-up invariant. RuleUnavailable where only partial data
// exists (Barlow and Catanese beyond m = 1).
std::int64_t plurigenus(const SurfaceModel& s, std::int64_t m);

// Stored Kodaira dimension, cross-checked against the growth class of P_m on
// m <= growth_bound whenever a full rule exists.
KodairaDim kodaira_dimension(const SurfaceModel& s, std::int64_t growth_bound = 60);

// Integrity checks every construction runs: Noether integrality, the
// signature identity 3(b+ - b-) = c1^2 - 2 c2, q = 0, spin consistency.
void validate_surface(const SurfaceModel& s);

} // namespace kodcalc

#endif
