#include "kodcalc/report_io.hpp"

#include <sstream>

namespace kodcalc {

using nlohmann::json;

namespace {

std::string pad(std::string text, std::size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    return text;
}

const char* evidence_kind_name(DeformationEvidence::Kind kind) {
    switch (kind) {
    case DeformationEvidence::Kind::none: return "None";
    case DeformationEvidence::Kind::plurigenus_differs_at: return "PlurigenusDiffersAt";
    case DeformationEvidence::Kind::external_theorem: return "ExternalTheorem";
    case DeformationEvidence::Kind::indistinguishable_within_bound:
        return "IndistinguishableWithinBound";
    }
    return "None";
}

} // namespace

json to_json(const IntersectionForm& f) {
    return json{{"rank", f.rank},
                {"b_plus", f.b_plus},
                {"b_minus", f.b_minus},
                {"signature", f.signature()},
                {"parity", parity_name(f.parity)}};
}

json to_json(const SurfaceModel& s) {
    json out{
        {"type", "surface"},
        {"family", s.family.name()},
        {"params", s.family.params()},
        {"blowups", s.blowups},
        {"c1_sq", s.chern.c1_sq},
        {"c2", s.chern.c2},
        {"p_g", s.hodge.p_g},
        {"q", s.hodge.q},
        {"chi", s.hodge.chi_o},
        {"kod", s.kod.str()},
        {"spin", s.spin},
        {"form", to_json(intersection_form(s))},
    };
    if (s.elliptic)
        out["elliptic_multiplicities"] = json::array({s.elliptic->p, s.elliptic->q});
    if (s.c1_coords) out["c1_coords"] = *s.c1_coords;
    return out;
}

json to_json(const ChernTriple& t) {
    return json{{"c1_cubed", t.c1_cubed}, {"c1c2", t.c1c2}, {"c3", t.c3}};
}

json to_json(const ThreefoldModel& x) {
    return json{
        {"type", "threefold"}, {"surface", to_json(x.surface)},
        {"genus", x.curve.genus}, {"chern", to_json(x.chern3)},
        {"kod", x.kod.str()},   {"pi1", x.pi1.str()},
    };
}

json to_json(const Verdict& v) {
    return json{{"outcome", outcome_name(v.outcome)}, {"chain", v.chain}};
}

json to_json(const DeformationEvidence& e) {
    json out{{"kind", evidence_kind_name(e.kind)}};
    switch (e.kind) {
    case DeformationEvidence::Kind::plurigenus_differs_at:
        out["m"] = e.m;
        out["left"] = e.left_value;
        out["right"] = e.right_value;
        break;
    case DeformationEvidence::Kind::external_theorem:
        out["citation"] = e.citation;
        break;
    case DeformationEvidence::Kind::indistinguishable_within_bound:
        out["bound"] = e.bound;
        break;
    case DeformationEvidence::Kind::none:
        break;
    }
    return out;
}

json to_json(const ReportRow& row) {
    const KodPair pair = make_kod_pair(row.kod_left, row.kod_right);
    return json{
        {"label", row.label},
        {"k", row.k},
        {"left", row.left_expr},
        {"right", row.right_expr},
        {"verdict", to_json(row.verdict)},
        {"chern_left", to_json(row.chern_left)},
        {"chern_right", to_json(row.chern_right)},
        {"chern_equal", row.chern_equal},
        {"kod_left", row.kod_left.str()},
        {"kod_right", row.kod_right.str()},
        {"kod_pair", json::array({pair.low.str(), pair.high.str()})},
        {"expected_kod_pair",
         json::array({row.expected_kod.low.str(), row.expected_kod.high.str()})},
        {"evidence", to_json(row.evidence)},
        {"failures", row.failures},
        {"ok", row.ok},
    };
}

json to_json(const VerificationReport& report) {
    json rows = json::array();
    for (const ReportRow& row : report.rows) rows.push_back(to_json(row));
    return json{
        {"example", report.example}, {"theorem", report.theorem},
        {"genus", report.genus},     {"k_min", report.k_min},
        {"k_max", report.k_max},     {"m_bound", report.m_bound},
        {"note", report.note},       {"passed", report.passed()},
        {"rows", rows},
    };
}

json to_json(const AnomalyFlag& flag) {
    return json{{"id", flag.id}, {"stated", flag.stated}, {"recomputed", flag.recomputed}};
}

json catalog_json() {
    json rows = json::array();
    for (const SurfaceFamily& family : catalog_families()) {
        const SurfaceModel s = instantiate(family);
        json row = to_json(s);
        row.erase("type");
        if (family.tag() == FamilyTag::dolgachev || family.tag() == FamilyTag::homotopy_k3)
            row["note"] = "any coprime 2 <= p < q; invariants shown for (2, 3)";
        if (family.tag() == FamilyTag::elliptic_mn)
            row["note"] = "any n >= 3, shown for n = 3: c2 = 12n, p_g = n - 1, spin iff n even";
        rows.push_back(std::move(row));
    }
    return json{{"families", rows}};
}

json json_document(json payload) {
    payload["schema"] = 1;
    return payload;
}

std::string report_table(const VerificationReport& report) {
    std::ostringstream out;
    out << "example " << report.example << "  genus " << report.genus;
    if (report.m_bound > 0) out << "  m_bound " << report.m_bound;
    out << "\n" << report.note << "\n";
    out << pad("label", 18) << pad("verdict", 28) << pad("chern", 7)
        << pad("kod pair", 14) << pad("evidence", 37) << "status\n";
    for (const ReportRow& row : report.rows) {
        out << pad(row.label, 18) << pad(outcome_name(row.verdict.outcome), 28)
            << pad(row.chern_equal ? "equal" : "DIFFER", 7)
            << pad(make_kod_pair(row.kod_left, row.kod_right).str(), 14)
            << pad(row.evidence.str(), 37) << (row.ok ? "ok" : "FAIL");
        for (const std::string& failure : row.failures) out << "\n    ! " << failure;
        out << "\n";
    }
    out << (report.passed() ? "all rows verified" : "SOME ROWS FAILED") << "\n";
    return out.str();
}

std::string surface_table(const SurfaceModel& s) {
    const IntersectionForm f = intersection_form(s);
    std::ostringstream out;
    out << pad("family", 12) << s.family.display() << "\n"
        << pad("blowups", 12) << s.blowups << "\n"
        << pad("c1^2", 12) << s.chern.c1_sq << "\n"
        << pad("c2", 12) << s.chern.c2 << "\n"
        << pad("p_g", 12) << s.hodge.p_g << "\n"
        << pad("q", 12) << s.hodge.q << "\n"
        << pad("chi", 12) << s.hodge.chi_o << "\n"
        << pad("kod", 12) << s.kod.str() << "\n"
        << pad("spin", 12) << (s.spin ? "yes" : "no") << "\n"
        << pad("form", 12) << "rank " << f.rank << ", b+ " << f.b_plus << ", b- "
        << f.b_minus << ", signature " << f.signature() << ", "
        << parity_name(f.parity) << "\n";
    if (s.elliptic)
        out << pad("fibration", 12) << "multiplicities (" << s.elliptic->p << ", "
            << s.elliptic->q << ")\n";
    if (s.c1_coords) {
        out << pad("c1 coords", 12) << "(";
        for (std::size_t i = 0; i < s.c1_coords->size(); ++i) {
            if (i) out << ", ";
            out << (*s.c1_coords)[i];
        }
        out << ")\n";
    }
    return out.str();
}

std::string threefold_table(const ThreefoldModel& x) {
    std::ostringstream out;
    out << pad("surface", 12) << x.surface.family.display() << " + "
        << x.surface.blowups << " blow-up(s)\n"
        << pad("curve", 12) << "genus " << x.curve.genus << "\n"
        << pad("c1^3", 12) << x.chern3.c1_cubed << "\n"
        << pad("c1.c2", 12) << x.chern3.c1c2 << "\n"
        << pad("c3", 12) << x.chern3.c3 << "\n"
        << pad("kod", 12) << x.kod.str() << "\n"
        << pad("pi1", 12) << x.pi1.str() << "\n";
    return out.str();
}

std::string catalog_table() {
    std::ostringstream out;
    out << pad("family", 20) << pad("c1^2", 6) << pad("c2", 5) << pad("p_g", 5)
        << pad("chi", 5) << pad("kod", 6) << pad("spin", 6) << "notes\n";
    for (const SurfaceFamily& family : catalog_families()) {
        const SurfaceModel s = instantiate(family);
        std::string note;
        if (family.tag() == FamilyTag::dolgachev || family.tag() == FamilyTag::homotopy_k3)
            note = "any coprime 2 <= p < q";
        if (family.tag() == FamilyTag::elliptic_mn)
            note = "any n >= 3: c2 = 12n, p_g = n - 1, spin iff n even";
        out << pad(family.display(), 20) << pad(std::to_string(s.chern.c1_sq), 6)
            << pad(std::to_string(s.chern.c2), 5) << pad(std::to_string(s.hodge.p_g), 5)
            << pad(std::to_string(s.hodge.chi_o), 5) << pad(s.kod.str(), 6)
            << pad(s.spin ? "yes" : "no", 6) << note << "\n";
    }
    return out.str();
}

} // namespace kodcalc
