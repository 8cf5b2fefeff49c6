// Command-line front end: construction expressions in, invariants, verdicts,
// verification reports and catalog dumps out (text or JSON).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "kodcalc/report_io.hpp"

namespace {

using namespace kodcalc;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct ExitNow {
    int code;
};

int exit_code_for(errc code) {
    switch (code) {
    case errc::internal:
    case errc::inconsistent_kod:
    case errc::overflow:
    case errc::coverage_gap:
        return kExitInternal;
    default:
        return kExitUsage;
    }
}

void print_error(const error& e, const std::string& source) {
    std::cerr << "error[" << errc_name(e.code()) << "]: " << e.what() << "\n";
    if (e.span() && !source.empty() && e.span()->end <= source.size()) {
        const auto [begin, end] = *e.span();
        std::cerr << "  " << source << "\n  ";
        for (std::size_t i = 0; i < begin; ++i) std::cerr << ' ';
        const std::size_t width = end > begin ? end - begin : 1;
        for (std::size_t i = 0; i < width; ++i) std::cerr << '^';
        std::cerr << "\n";
    }
}

// Parse and evaluate one expression; on failure, report against this
// expression's own text and abort with the usage exit code.
dsl::Model eval_text(const std::string& text) {
    try {
        return dsl::evaluate(dsl::parse(text));
    } catch (const error& e) {
        print_error(e, text);
        throw ExitNow{exit_code_for(e.code())};
    }
}

void emit(const json& payload, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << json_document(payload).dump(2) << "\n";
    else
        std::cout << text;
}

int run_invariants(const dsl::Model& model, bool as_json) {
    if (const auto* s = std::get_if<SurfaceModel>(&model)) {
        kodaira_dimension(*s); // growth cross-check
        emit(to_json(*s), as_json, surface_table(*s));
    } else {
        const auto& x = std::get<ThreefoldModel>(model);
        emit(to_json(x), as_json, threefold_table(x));
    }
    return kExitOk;
}

int run_plurigenera(const dsl::Model& model, const std::string& text,
                    std::int64_t max, bool as_json) {
    if (max < 1) throw error(errc::bad_parameter, "--max must be at least 1");

    json values = json::array();
    std::string table;
    std::optional<std::int64_t> unavailable_from;
    for (std::int64_t m = 1; m <= max; ++m) {
        try {
            const std::int64_t value =
                std::holds_alternative<SurfaceModel>(model)
                    ? plurigenus(std::get<SurfaceModel>(model), m)
                    : threefold_plurigenus(std::get<ThreefoldModel>(model), m);
            values.push_back(json{{"m", m}, {"value", value}});
            table += "P_" + std::to_string(m) + " = " + std::to_string(value) + "\n";
        } catch (const error& e) {
            if (e.code() != errc::rule_unavailable) throw;
            unavailable_from = m;
            table += "P_" + std::to_string(m) + " and beyond: rule unavailable (" +
                     std::string(e.what()) + ")\n";
            break;
        }
    }
    json payload{{"expr", text}, {"values", values}};
    if (unavailable_from) payload["rule_unavailable_from"] = *unavailable_from;
    emit(payload, as_json, table);
    return kExitOk;
}

int run_compare(const dsl::Model& left, const dsl::Model& right,
                const std::string& text_a, const std::string& text_b,
                std::int64_t max, bool as_json) {
    if (max < 1) throw error(errc::bad_parameter, "--max must be at least 1");
    if (std::holds_alternative<SurfaceModel>(left) !=
        std::holds_alternative<SurfaceModel>(right))
        throw error(errc::bad_parameter, "cannot compare a surface with a threefold");

    json payload{{"left", text_a}, {"right", text_b}};
    std::string table;

    const auto report_plurigenera = [&](auto value_at) {
        try {
            std::optional<std::int64_t> found;
            for (std::int64_t m = 1; m <= max && !found; ++m)
                if (value_at(true, m) != value_at(false, m)) found = m;
            if (found) {
                payload["min_distinguishing_plurigenus"] =
                    json{{"kind", "PlurigenusDiffersAt"},
                         {"m", *found},
                         {"left", value_at(true, *found)},
                         {"right", value_at(false, *found)}};
                table += "plurigenera     differ first at m = " + std::to_string(*found) +
                         " (" + std::to_string(value_at(true, *found)) + " vs " +
                         std::to_string(value_at(false, *found)) + ")\n";
            } else {
                payload["min_distinguishing_plurigenus"] =
                    json{{"kind", "IndistinguishableWithinBound"}, {"bound", max}};
                table += "plurigenera     agree for m <= " + std::to_string(max) + "\n";
            }
        } catch (const error& e) {
            if (e.code() != errc::rule_unavailable) throw;
            payload["min_distinguishing_plurigenus"] = "RuleUnavailable";
            table += "plurigenera     rule unavailable\n";
        }
    };

    if (const auto* sa = std::get_if<SurfaceModel>(&left)) {
        const auto& sb = std::get<SurfaceModel>(right);
        const bool cobordant = h_cobordant(*sa, sb);
        const bool chern_equal = sa->chern == sb.chern;
        payload["h_cobordant"] = cobordant;
        payload["chern_equal"] = chern_equal;
        payload["form_left"] = to_json(intersection_form(*sa));
        payload["form_right"] = to_json(intersection_form(sb));
        table += std::string("h-cobordant     ") + (cobordant ? "yes" : "no") + "\n";
        table += std::string("chern equal     ") + (chern_equal ? "yes" : "no") + "\n";
        report_plurigenera([&](bool take_left, std::int64_t m) {
            return plurigenus(take_left ? *sa : sb, m);
        });
        emit(payload, as_json, table);
        return kExitOk;
    }

    const auto& xa = std::get<ThreefoldModel>(left);
    const auto& xb = std::get<ThreefoldModel>(right);
    if (xa.curve.genus != xb.curve.genus)
        throw error(errc::bad_parameter,
                    "product comparison needs the same curve factor on both sides");
    const Verdict verdict = diffeomorphic_product(xa.surface, xb.surface, xa.curve.genus);
    const bool chern_equal = xa.chern3 == xb.chern3;
    payload["verdict"] = to_json(verdict);
    payload["chern_equal"] = chern_equal;
    payload["kod_pair"] = json::array({xa.kod.str(), xb.kod.str()});
    table += std::string("verdict         ") + outcome_name(verdict.outcome) + "\n";
    table += std::string("chern equal     ") + (chern_equal ? "yes" : "no") + "\n";
    table += "kod pair        (" + xa.kod.str() + ", " + xb.kod.str() + ")\n";
    report_plurigenera([&](bool take_left, std::int64_t m) {
        return threefold_plurigenus(take_left ? xa : xb, m);
    });
    emit(payload, as_json, table);
    return kExitOk;
}

std::int64_t default_genus(ExampleId id) {
    switch (id) {
    case ExampleId::B1: return 0;
    case ExampleId::B3: return 1;
    default: return 1;
    }
}

int run_verify(const std::string& theorem, const std::string& example,
               std::int64_t kmax, std::optional<std::int64_t> genus,
               std::int64_t mbound, bool as_json) {
    if (theorem != "A" && theorem != "B")
        throw error(errc::bad_parameter, "verify expects theorem A or B");

    std::vector<ExampleId> selected;
    if (!example.empty()) {
        const auto id = example_from_name(example);
        if (!id) throw error(errc::bad_parameter, "unknown example '" + example + "'");
        const bool is_a = example_name(*id)[0] == 'A';
        if (is_a != (theorem == "A"))
            throw error(errc::bad_parameter,
                        "example " + example + " does not belong to theorem " + theorem);
        selected.push_back(*id);
    } else if (theorem == "A") {
        selected.assign(std::begin(theorem_a_examples), std::end(theorem_a_examples));
    } else {
        selected.assign(std::begin(theorem_b_examples), std::end(theorem_b_examples));
    }

    bool all_passed = true;
    json reports = json::array();
    std::string table;

    for (const ExampleId id : selected) {
        const std::int64_t g = genus.value_or(default_genus(id));
        const VerificationReport report = theorem == "A"
                                              ? verify_theorem_A(id, kmax, g)
                                              : verify_theorem_B(id, kmax, g, mbound);
        all_passed = all_passed && report.passed();
        reports.push_back(to_json(report));
        table += report_table(report) + "\n";
    }

    json payload{{"theorem", theorem}, {"reports", reports}};
    if (theorem == "A" && example.empty()) {
        const auto pairs = coverage_theorem_A();
        json coverage = json::array();
        std::string line = "coverage:";
        for (const KodPair& p : pairs) {
            coverage.push_back(json::array({p.low.str(), p.high.str()}));
            line += " " + p.str();
        }
        payload["coverage"] = coverage;
        table += line + "\n";
    }
    payload["passed"] = all_passed;
    emit(payload, as_json, table);
    return all_passed ? kExitOk : kExitVerificationFailure;
}

int run_catalog(bool as_json) {
    emit(catalog_json(), as_json, catalog_table());
    return kExitOk;
}

int run_anomalies(bool as_json) {
    const auto flags = anomaly_scan();
    json list = json::array();
    std::string table;
    for (const AnomalyFlag& flag : flags) {
        list.push_back(to_json(flag));
        table += flag.id + "\n  stated:     " + flag.stated +
                 "\n  recomputed: " + flag.recomputed + "\n";
    }
    emit(json{{"anomalies", list}}, as_json, table);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant calculus for compact complex surfaces and "
                 "surface x curve threefolds"};
    app.require_subcommand(1);

    std::string expr_a, expr_b, theorem, example;
    std::int64_t max_m = 40, kmax = 20, mbound = 40;
    std::optional<std::int64_t> genus;
    bool as_json = false;

    auto* invariants = app.add_subcommand("invariants", "invariants of a construction");
    invariants->add_option("expr", expr_a, "construction expression")->required();
    invariants->add_flag("--json", as_json, "emit JSON");

    auto* plurigenera = app.add_subcommand("plurigenera", "table of P_1..P_max");
    plurigenera->add_option("expr", expr_a, "construction expression")->required();
    plurigenera->add_option("--max", max_m, "largest exponent")->required();
    plurigenera->add_flag("--json", as_json, "emit JSON");

    auto* compare = app.add_subcommand("compare", "h-cobordism / diffeomorphism verdict");
    compare->add_option("exprA", expr_a, "left construction")->required();
    compare->add_option("exprB", expr_b, "right construction")->required();
    compare->add_option("--max", max_m, "plurigenera search bound");
    compare->add_flag("--json", as_json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "run the theorem verification suites");
    verify->add_option("theorem", theorem, "A or B")->required();
    verify->add_option("--example", example, "single example id (A1..A5, B1..B3)");
    verify->add_option("--kmax", kmax, "largest blow-up index");
    verify->add_option("--genus", genus, "curve genus (per-example default otherwise)");
    verify->add_option("--mbound", mbound, "plurigenera search bound (theorem B)");
    verify->add_flag("--json", as_json, "emit JSON");

    auto* catalog = app.add_subcommand("catalog", "dump the family table");
    catalog->add_flag("--json", as_json, "emit JSON");

    auto* anomalies = app.add_subcommand("anomalies", "recomputed prose corrections");
    anomalies->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (invariants->parsed()) return run_invariants(eval_text(expr_a), as_json);
        if (plurigenera->parsed())
            return run_plurigenera(eval_text(expr_a), expr_a, max_m, as_json);
        if (compare->parsed()) {
            const dsl::Model left = eval_text(expr_a);
            const dsl::Model right = eval_text(expr_b);
            return run_compare(left, right, expr_a, expr_b, max_m, as_json);
        }
        if (verify->parsed())
            return run_verify(theorem, example, kmax, genus, mbound, as_json);
        if (catalog->parsed()) return run_catalog(as_json);
        if (anomalies->parsed()) return run_anomalies(as_json);
    } catch (const ExitNow& stop) {
        return stop.code;
    } catch (const error& e) {
        print_error(e, "");
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
