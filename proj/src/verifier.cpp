#include "kodcalc/verifier.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace kodcalc {

const char* example_name(ExampleId id) noexcept {
    switch (id) {
    case ExampleId::A1: return "A1";
    case ExampleId::A2: return "A2";
    case ExampleId::A3: return "A3";
    case ExampleId::A4: return "A4";
    case ExampleId::A5: return "A5";
    case ExampleId::B1: return "B1";
    case ExampleId::B2: return "B2";
    case ExampleId::B3: return "B3";
    }
    return "?";
}

std::optional<ExampleId> example_from_name(std::string_view name) noexcept {
    static constexpr std::array<ExampleId, 8> ids = {
        ExampleId::A1, ExampleId::A2, ExampleId::A3, ExampleId::A4,
        ExampleId::A5, ExampleId::B1, ExampleId::B2, ExampleId::B3};
    for (const ExampleId id : ids)
        if (name == example_name(id)) return id;
    return std::nullopt;
}

KodPair make_kod_pair(KodairaDim a, KodairaDim b) {
    return a <= b ? KodPair{a, b} : KodPair{b, a};
}

std::string KodPair::str() const {
    return "(" + low.str() + ", " + high.str() + ")";
}

std::string DeformationEvidence::str() const {
    switch (kind) {
    case Kind::none:
        return "-";
    case Kind::plurigenus_differs_at:
        return "PlurigenusDiffersAt(" + std::to_string(m) + "): " +
               std::to_string(left_value) + " vs " + std::to_string(right_value);
    case Kind::external_theorem:
        return "ExternalTheorem(" + citation + ")";
    case Kind::indistinguishable_within_bound:
        return "indistinguishable for m <= " + std::to_string(bound);
    }
    return "-";
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ReportRow& r) { return r.ok; });
}

coverage_error::coverage_error(std::vector<KodPair> missing)
    : error(errc::coverage_gap,
            [&missing] {
                std::string msg = "coverage gap, missing pairs:";
                for (const KodPair& p : missing) msg += " " + p.str();
                return msg;
            }()),
      missing_(std::move(missing)) {}

std::optional<std::int64_t>
min_distinguishing_plurigenus(const ThreefoldModel& x, const ThreefoldModel& y,
                              std::int64_t m_bound) {
    if (m_bound < 1)
        throw error(errc::bad_parameter, "the search bound must be at least 1");
    for (std::int64_t m = 1; m <= m_bound; ++m)
        if (threefold_plurigenus(x, m) != threefold_plurigenus(y, m)) return m;
    return std::nullopt;
}

namespace {

dsl::Expr base_family(ExampleId id, bool left) {
    using dsl::family;
    switch (id) {
    case ExampleId::A1:
        return left ? family("rational_elliptic") : family("dolgachev", {2, 3});
    case ExampleId::A2:
        return left ? family("k3") : family("homotopy_k3", {2, 3});
    case ExampleId::A3:
    case ExampleId::B1:
        return left ? family("barlow") : family("cp2");
    case ExampleId::A4:
        return left ? family("catanese") : family("k3");
    case ExampleId::A5:
        return left ? family("elliptic_mn", {11}) : family("sextic");
    case ExampleId::B2:
        return left ? family("horikawa") : family("sextic");
    case ExampleId::B3:
        break;
    }
    throw error(errc::internal, "example has no fixed base pair");
}

// Extra blow-ups on top of k: the c1^2 defect moves entirely to one side.
std::pair<std::int64_t, std::int64_t> blowup_offsets(ExampleId id) {
    switch (id) {
    case ExampleId::A1:
    case ExampleId::A2: return {0, 0};
    case ExampleId::A3:
    case ExampleId::B1: return {0, 8};  // plane blown up at 8 + k points
    case ExampleId::A4: return {1, 0};  // defect 1 toward the K3 side
    case ExampleId::A5: return {0, 24}; // sextic absorbs the defect of 24
    case ExampleId::B2: return {0, 8};
    case ExampleId::B3: break;
    }
    throw error(errc::internal, "example has no fixed base pair");
}

bool uses_balancing(ExampleId id) {
    return id == ExampleId::A4 || id == ExampleId::A5 || id == ExampleId::B2;
}

PairSpec pair_spec(ExampleId id, std::int64_t k_max, std::int64_t genus) {
    const auto [off_left, off_right] = blowup_offsets(id);
    PairSpec spec;
    spec.example_id = example_name(id);
    spec.k_min = uses_balancing(id) ? 1 : 0;
    spec.k_max = k_max;
    spec.genus = genus;
    spec.left = [id, off_left = off_left, genus](std::int64_t k) {
        return dsl::product(dsl::blowup(base_family(id, true), k + off_left), genus);
    };
    spec.right = [id, off_right = off_right, genus](std::int64_t k) {
        return dsl::product(dsl::blowup(base_family(id, false), k + off_right), genus);
    };
    return spec;
}

struct RowModels {
    ThreefoldModel left;
    ThreefoldModel right;
};

ReportRow begin_row(std::string label, std::int64_t k, const dsl::Expr& left_expr,
                    const dsl::Expr& right_expr, std::int64_t genus, RowModels& out) {
    ReportRow row;
    row.label = std::move(label);
    row.k = k;
    row.left_expr = dsl::pretty_print(left_expr);
    row.right_expr = dsl::pretty_print(right_expr);

    out.left = std::get<ThreefoldModel>(dsl::evaluate(left_expr));
    out.right = std::get<ThreefoldModel>(dsl::evaluate(right_expr));

    row.verdict = diffeomorphic_product(out.left.surface, out.right.surface, genus);
    row.chern_left = out.left.chern3;
    row.chern_right = out.right.chern3;
    row.chern_equal = out.left.chern3 == out.right.chern3;
    row.kod_left = out.left.kod;
    row.kod_right = out.right.kod;
    row.expected_kod = make_kod_pair(out.left.surface.kod + curve_kod(out.left.curve),
                                     out.right.surface.kod + curve_kod(out.right.curve));
    return row;
}

void require(ReportRow& row, bool condition, const std::string& failure) {
    if (!condition) row.failures.push_back(failure);
}

void finish_row(ReportRow& row) { row.ok = row.failures.empty(); }

// Balanced examples must agree with the balancing operator itself; the side
// with the larger unblown c1^2 absorbs the defect.
void check_balancing(ReportRow& row, ExampleId id, std::int64_t k,
                     const RowModels& models) {
    if (!uses_balancing(id)) return;
    const SurfaceModel base_left = instantiate(models.left.surface.family);
    const SurfaceModel base_right = instantiate(models.right.surface.family);
    const bool left_is_big = base_left.chern.c1_sq >= base_right.chern.c1_sq;
    const auto [bal_big, bal_small] = balance_blowups(
        left_is_big ? base_left : base_right, left_is_big ? base_right : base_left, k);
    const auto matches = [](const SurfaceModel& a, const SurfaceModel& b) {
        return a.family == b.family && a.blowups == b.blowups && a.chern == b.chern;
    };
    const SurfaceModel& blown_big = left_is_big ? models.left.surface : models.right.surface;
    const SurfaceModel& blown_small = left_is_big ? models.right.surface : models.left.surface;
    require(row, matches(bal_big, blown_big) && matches(bal_small, blown_small),
            "balancing operator disagrees with the construction");
}

std::string range_note(const PairSpec& spec) {
    return "finite check over k = " + std::to_string(spec.k_min) + ".." +
           std::to_string(spec.k_max) +
           "; the family extends to every larger k, so the pair count is unbounded";
}

} // namespace

VerificationReport verify_theorem_A(ExampleId example, std::int64_t k_max,
                                    std::int64_t genus) {
    const bool is_a = std::find(std::begin(theorem_a_examples), std::end(theorem_a_examples),
                                example) != std::end(theorem_a_examples);
    if (!is_a)
        throw error(errc::bad_parameter, "verify_theorem_A accepts examples A1..A5");
    if (genus < 1)
        throw error(errc::bad_parameter,
                    "the s-cobordism route needs a curve of positive genus");

    const PairSpec spec = pair_spec(example, k_max, genus);
    if (k_max < spec.k_min)
        throw error(errc::bad_parameter, "k_max is below the example's minimal k");

    VerificationReport report;
    report.example = spec.example_id;
    report.theorem = "A";
    report.genus = genus;
    report.k_min = spec.k_min;
    report.k_max = k_max;
    report.note = range_note(spec);

    for (std::int64_t k = spec.k_min; k <= k_max; ++k) {
        RowModels models;
        ReportRow row = begin_row("k=" + std::to_string(k), k, spec.left(k),
                                  spec.right(k), genus, models);
        require(row, row.verdict.diffeomorphic(), "expected a diffeomorphic verdict");
        require(row, row.chern_equal, "Chern triples differ");
        require(row, row.kod_left != row.kod_right,
                "Kodaira dimensions coincide; the pair is not a counterexample");
        require(row, make_kod_pair(row.kod_left, row.kod_right) == row.expected_kod,
                "Kodaira pair differs from the product arithmetic");
        check_balancing(row, example, k, models);
        finish_row(row);
        report.rows.push_back(std::move(row));
    }
    return report;
}

VerificationReport verify_theorem_B(ExampleId example, std::int64_t k_max,
                                    std::int64_t genus, std::int64_t m_bound) {
    if (m_bound < 1)
        throw error(errc::bad_parameter, "m_bound must be at least 1");

    VerificationReport report;
    report.theorem = "B";
    report.m_bound = m_bound;

    if (example == ExampleId::B1) {
        if (genus != 0)
            throw error(errc::bad_parameter,
                        "B1 is defined over the projective line; use genus 0");
        const PairSpec spec = pair_spec(example, k_max, 0);
        if (k_max < spec.k_min)
            throw error(errc::bad_parameter, "k_max is below the example's minimal k");
        report.example = spec.example_id;
        report.genus = 0;
        report.k_min = spec.k_min;
        report.k_max = k_max;
        report.note = range_note(spec);
        for (std::int64_t k = spec.k_min; k <= k_max; ++k) {
            RowModels models;
            ReportRow row = begin_row("k=" + std::to_string(k), k, spec.left(k),
                                      spec.right(k), 0, models);
            require(row, row.verdict.outcome == Outcome::diffeomorphic_via_smale,
                    "expected the simply connected route");
            require(row, row.chern_equal, "Chern triples differ");
            require(row, row.kod_left == row.kod_right,
                    "Kodaira dimensions differ; the pair leaves the fixed dimension");
            // Every plurigenus vanishes on both sides, so the plurigenera
            // criterion is silent; distinctness is on record elsewhere.
            row.evidence = DeformationEvidence{
                DeformationEvidence::Kind::external_theorem, 0, 0, 0,
                "Kodaira stability", 0};
            finish_row(row);
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    if (example == ExampleId::B2) {
        if (genus < 1)
            throw error(errc::bad_parameter, "B2 needs a curve of positive genus");
        const PairSpec spec = pair_spec(example, k_max, genus);
        if (k_max < spec.k_min)
            throw error(errc::bad_parameter, "k_max is below the example's minimal k");
        report.example = spec.example_id;
        report.genus = genus;
        report.k_min = spec.k_min;
        report.k_max = k_max;
        report.note = range_note(spec);
        for (std::int64_t k = spec.k_min; k <= k_max; ++k) {
            RowModels models;
            ReportRow row = begin_row("k=" + std::to_string(k), k, spec.left(k),
                                      spec.right(k), genus, models);
            require(row, row.verdict.diffeomorphic(), "expected a diffeomorphic verdict");
            require(row, row.chern_equal, "Chern triples differ");
            require(row, row.kod_left == row.kod_right,
                    "Kodaira dimensions differ; the pair leaves the fixed dimension");
            const auto m = min_distinguishing_plurigenus(models.left, models.right, m_bound);
            if (m) {
                row.evidence = DeformationEvidence{
                    DeformationEvidence::Kind::plurigenus_differs_at, *m,
                    threefold_plurigenus(models.left, *m),
                    threefold_plurigenus(models.right, *m), "", 0};
            } else {
                row.evidence = DeformationEvidence{
                    DeformationEvidence::Kind::indistinguishable_within_bound,
                    0, 0, 0, "", m_bound};
            }
            require(row, m.has_value() && *m == 2,
                    "expected the second plurigenus to separate the pair");
            check_balancing(row, example, k, models);
            finish_row(row);
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    if (example == ExampleId::B3) {
        if (genus != 1)
            throw error(errc::bad_parameter,
                        "B3 is defined over an elliptic curve; use genus 1");
        report.example = example_name(example);
        report.genus = 1;
        report.k_min = 0;
        report.k_max = 0;
        report.note =
            "grid of coprime multiplicities 2 <= p < q <= 7; blow-ups play no role";

        std::vector<std::pair<std::int64_t, std::int64_t>> grid;
        for (std::int64_t p = 2; p < 7; ++p)
            for (std::int64_t q = p + 1; q <= 7; ++q)
                if (gcd64(p, q) == 1) grid.emplace_back(p, q);

        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (std::size_t j = i + 1; j < grid.size(); ++j) {
                const auto [p1, q1] = grid[i];
                const auto [p2, q2] = grid[j];
                const dsl::Expr left =
                    dsl::product(dsl::family("dolgachev", {p1, q1}), 1);
                const dsl::Expr right =
                    dsl::product(dsl::family("dolgachev", {p2, q2}), 1);
                RowModels models;
                ReportRow row = begin_row("(" + std::to_string(p1) + "," +
                                              std::to_string(q1) + ") vs (" +
                                              std::to_string(p2) + "," +
                                              std::to_string(q2) + ")",
                                          0, left, right, 1, models);
                require(row, row.verdict.diffeomorphic(),
                        "expected a diffeomorphic verdict");
                require(row, row.chern_equal, "Chern triples differ");
                require(row, row.kod_left == row.kod_right,
                        "Kodaira dimensions differ; the pair leaves the fixed dimension");
                const auto m =
                    min_distinguishing_plurigenus(models.left, models.right, m_bound);
                if (m) {
                    row.evidence = DeformationEvidence{
                        DeformationEvidence::Kind::plurigenus_differs_at, *m,
                        threefold_plurigenus(models.left, *m),
                        threefold_plurigenus(models.right, *m), "", 0};
                } else {
                    row.evidence = DeformationEvidence{
                        DeformationEvidence::Kind::indistinguishable_within_bound,
                        0, 0, 0, "", m_bound};
                }
                finish_row(row);
                report.rows.push_back(std::move(row));
            }
        }
        return report;
    }

    throw error(errc::bad_parameter, "verify_theorem_B accepts examples B1..B3");
}

std::vector<KodPair> coverage_theorem_A(std::span<const ExampleId> included) {
    std::set<KodPair> achieved;
    for (const ExampleId id : included) {
        const bool is_a =
            std::find(std::begin(theorem_a_examples), std::end(theorem_a_examples),
                      id) != std::end(theorem_a_examples);
        if (!is_a)
            throw error(errc::bad_parameter, "coverage runs over examples A1..A5");
        for (const std::int64_t genus : {std::int64_t{1}, std::int64_t{2}}) {
            const PairSpec spec = pair_spec(id, /*k_max=*/1, genus);
            const auto left =
                std::get<ThreefoldModel>(dsl::evaluate(spec.left(spec.k_min)));
            const auto right =
                std::get<ThreefoldModel>(dsl::evaluate(spec.right(spec.k_min)));
            achieved.insert(make_kod_pair(left.kod, right.kod));
        }
    }

    // Every unordered pair of distinct dimensions from {-inf, 0, 1, 2, 3},
    // minus the two unattainable ones.
    std::set<KodPair> expected;
    std::vector<KodairaDim> dims = {KodairaDim::minus_infinity()};
    for (int v = 0; v <= 3; ++v) dims.push_back(KodairaDim::finite(v));
    for (std::size_t i = 0; i < dims.size(); ++i)
        for (std::size_t j = i + 1; j < dims.size(); ++j)
            expected.insert(make_kod_pair(dims[i], dims[j]));
    expected.erase(make_kod_pair(KodairaDim::minus_infinity(), KodairaDim::finite(0)));
    expected.erase(make_kod_pair(KodairaDim::finite(0), KodairaDim::finite(3)));

    std::vector<KodPair> missing;
    for (const KodPair& p : expected)
        if (!achieved.contains(p)) missing.push_back(p);
    if (!missing.empty()) throw coverage_error(std::move(missing));

    for (const KodPair& p : achieved)
        if (!expected.contains(p))
            throw error(errc::internal, "achieved pair outside the allowed set: " + p.str());

    return {achieved.begin(), achieved.end()};
}

std::vector<KodPair> coverage_theorem_A() {
    return coverage_theorem_A(theorem_a_examples);
}

namespace {

std::string kod_pair_text(std::int64_t genus, const SurfaceModel& a,
                          const SurfaceModel& b) {
    const Curve sigma{genus};
    return make_kod_pair(product(a, sigma).kod, product(b, sigma).kod).str();
}

} // namespace

std::vector<AnomalyFlag> anomaly_scan() {
    std::vector<AnomalyFlag> flags;

    {
        const SurfaceModel k3 = instantiate(SurfaceFamily::k3_elliptic());
        const SurfaceModel hk3 = instantiate(SurfaceFamily::homotopy_k3(2, 3));
        flags.push_back(AnomalyFlag{
            "A2-header",
            "header states Kodaira pairs (0, 1) for genus 1 and (0, 2) for genus >= 2",
            "product arithmetic gives " + kod_pair_text(1, k3, hk3) +
                " for genus 1 and " + kod_pair_text(2, k3, hk3) + " for genus >= 2"});
    }

    {
        const SurfaceModel barlow = instantiate(SurfaceFamily::barlow());
        const KodairaDim g1 = product(barlow, Curve{1}).kod;
        const KodairaDim g2 = product(barlow, Curve{2}).kod;
        flags.push_back(AnomalyFlag{
            "A3-text",
            "text assigns the general-type factor Kodaira dimension 3 at genus 1 "
            "and 2 at genus >= 2",
            "product arithmetic gives " + g1.str() + " at genus 1 and " + g2.str() +
                " at genus >= 2 (the header's (-inf, 2) and (-inf, 3) are correct)"});
    }

    {
        const SurfaceModel m11 = instantiate(SurfaceFamily::elliptic_mn(11));
        const SurfaceModel sextic = instantiate(SurfaceFamily::sextic());
        const std::int64_t stated_rank = intersection_form(blow_up(m11, 1)).rank;
        const std::int64_t sextic_rank = intersection_form(blow_up(sextic, 24)).rank;
        const std::int64_t balanced_rank = intersection_form(blow_up(m11, 0)).rank;
        flags.push_back(AnomalyFlag{
            "A5-balancing",
            "text blows up the minimal elliptic side at k + 1 points against "
            "24 + k on the sextic side",
            "k + 1 gives b2 = " + std::to_string(stated_rank) + " + k versus " +
                std::to_string(sextic_rank) + " + k (mismatch 1); balancing with k "
                "points equalizes b2 at " + std::to_string(balanced_rank) +
                " + k on both sides"});
    }

    return flags;
}

} // namespace kodcalc
