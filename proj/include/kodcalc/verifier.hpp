#ifndef KODCALC_VERIFIER_HPP
#define KODCALC_VERIFIER_HPP

// Mechanical verification of the example pair families behind the two
// headline theorems (A: diffeomorphic threefolds in every achievable pair of
// distinct Kodaira dimensions; B: diffeomorphic, non-deformation-equivalent
// threefolds in every Kodaira dimension), with reports and prose-anomaly flags.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kodcalc/cobordism.hpp"
#include "kodcalc/dsl.hpp"

namespace kodcalc {

enum class ExampleId { A1, A2, A3, A4, A5, B1, B2, B3 };

const char* example_name(ExampleId id) noexcept;
std::optional<ExampleId> example_from_name(std::string_view name) noexcept;

inline constexpr ExampleId theorem_a_examples[] = {
    ExampleId::A1, ExampleId::A2, ExampleId::A3, ExampleId::A4, ExampleId::A5};
inline constexpr ExampleId theorem_b_examples[] = {
    ExampleId::B1, ExampleId::B2, ExampleId::B3};

// Unordered Kodaira-dimension pair, stored ascending.
struct KodPair {
    KodairaDim low;
    KodairaDim high;

    std::string str() const;

    friend bool operator==(const KodPair&, const KodPair&) = default;
    friend auto operator<=>(const KodPair&, const KodPair&) = default;
};

KodPair make_kod_pair(KodairaDim a, KodairaDim b);

struct DeformationEvidence {
    enum class Kind {
        none,
        plurigenus_differs_at,
        external_theorem,
        indistinguishable_within_bound,
    };

    Kind kind = Kind::none;
    std::int64_t m = 0;          // distinguishing exponent
    std::int64_t left_value = 0; // plurigenera at the exponent
    std::int64_t right_value = 0;
    std::string citation;        // external-theorem evidence
    std::int64_t bound = 0;      // search bound for the indistinguishable case

    std::string str() const;
};

struct ReportRow {
    std::string label;
    std::int64_t k = 0;
    std::string left_expr;
    std::string right_expr;
    Verdict verdict;
    ChernTriple chern_left;
    ChernTriple chern_right;
    bool chern_equal = false;
    KodairaDim kod_left;
    KodairaDim kod_right;
    KodPair expected_kod;
    DeformationEvidence evidence;
    std::vector<std::string> failures;
    bool ok = false;
};

struct VerificationReport {
    std::string example;
    std::string theorem; // "A" or "B"
    std::int64_t genus = 0;
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;
    std::int64_t m_bound = 0;
    std::string note;
    std::vector<ReportRow> rows;

    bool passed() const noexcept;
};

// One example pair family: construction-expression templates over the
// blow-up index k, the valid k range, and the prescribed genus handling.
struct PairSpec {
    std::string example_id;
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;
    std::int64_t genus = 0;
    std::function<dsl::Expr(std::int64_t)> left;
    std::function<dsl::Expr(std::int64_t)> right;
};

// Checks one example family for 0 (or the mandated minimum) <= k <= k_max:
// diffeomorphic verdict, equal Chern triples, and the expected pair of
// distinct Kodaira dimensions. Requires genus >= 1.
VerificationReport verify_theorem_A(ExampleId example, std::int64_t k_max,
                                    std::int64_t genus);

// Same-dimension pairs with deformation-distinctness evidence. Genus is fixed
// per example: B1 runs over the projective line (genus 0), B3 over an
// elliptic curve (genus 1); B2 admits any genus >= 1.
VerificationReport verify_theorem_B(ExampleId example, std::int64_t k_max,
                                    std::int64_t genus, std::int64_t m_bound);

// Union of the Kodaira pairs realized by the listed examples at both genus
// regimes. Throws coverage_error when a required pair is missing.
std::vector<KodPair> coverage_theorem_A(std::span<const ExampleId> included);
std::vector<KodPair> coverage_theorem_A();

// Smallest 1 <= m <= m_bound whose plurigenera differ, if any.
std::optional<std::int64_t>
min_distinguishing_plurigenus(const ThreefoldModel& x, const ThreefoldModel& y,
                              std::int64_t m_bound);

struct AnomalyFlag {
    std::string id;         // "A2-header", "A3-text", "A5-balancing"
    std::string stated;     // the claim as printed
    std::string recomputed; // what the calculus yields
};

// Recomputes the three documented prose slips in the example sections and
// returns them with the corrected values.
std::vector<AnomalyFlag> anomaly_scan();

class coverage_error : public error {
public:
    explicit coverage_error(std::vector<KodPair> missing);
    const std::vector<KodPair>& missing() const noexcept { return missing_; }

private:
    std::vector<KodPair> missing_;
};

} // namespace kodcalc

#endif
