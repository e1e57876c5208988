#include "cli_app.hpp"

#include <hurwitz/hurwitz.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace hurwitz::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
    std::vector<std::string> coefficients;
    std::string poly_string;
    bool ascending = false;
    std::string backend = "auto";
    double tolerance = -1.0;  // <0: default / HURWITZ_TOL
    std::string format = "json";
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_coeffs = true) {
    if (with_coeffs) {
        cmd->add_option("coefficients", opt.coefficients,
                        "polynomial coefficients, descending powers (a_0 first)");
        cmd->add_option("--poly", opt.poly_string, "coefficients as one whitespace-separated string");
        cmd->add_flag("--ascending", opt.ascending, "interpret the coefficients in ascending order");
        cmd->add_option("--backend", opt.backend, "arithmetic backend: auto|exact|float")
            ->check(CLI::IsMember({"auto", "exact", "float"}));
    }
    cmd->add_option("--tolerance", opt.tolerance, "float-backend tolerance (default 1e-9)");
    cmd->add_option("--format", opt.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
}

Tolerances resolve_tolerances(const CommonOptions& opt) {
    Tolerances tol;
    double value = opt.tolerance;
    if (value < 0.0) {
        if (const char* env = std::getenv("HURWITZ_TOL")) {
            try {
                value = std::stod(env);
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "HURWITZ_TOL is not a number");
            }
        }
    }
    if (value > 0.0) {
        tol.rel = value;
        tol.minor_band = value;
    }
    return tol;
}

std::vector<std::string> coefficient_tokens(const CommonOptions& opt) {
    std::vector<std::string> tokens = opt.coefficients;
    if (!opt.poly_string.empty()) {
        std::istringstream is(opt.poly_string);
        std::string tok;
        while (is >> tok) tokens.push_back(tok);
    }
    require(!tokens.empty(), ErrorCode::ParseError, "no coefficients given");
    if (opt.ascending) std::reverse(tokens.begin(), tokens.end());
    return tokens;
}

/// Integer and rational literals select the exact backend; decimal or
/// scientific notation selects float. --backend overrides.
Polynomial parse_polynomial(const CommonOptions& opt) {
    const std::vector<std::string> tokens = coefficient_tokens(opt);
    bool any_float = false;
    for (const std::string& t : tokens) any_float = any_float || is_float_literal(t);
    const bool use_float = opt.backend == "float" || (opt.backend == "auto" && any_float);
    if (use_float) {
        std::vector<double> c;
        for (const std::string& t : tokens) c.push_back(to_double(rational_from_string(t)));
        return Polynomial::approx(std::move(c));
    }
    std::vector<Rational> c;
    for (const std::string& t : tokens) c.push_back(rational_from_string(t));
    return Polynomial::exact(std::move(c));
}

Json json_poly(const Polynomial& p) {
    Json j = Json::array();
    for (const std::string& s : p.coeff_strings()) j.push_back(s);
    return j;
}

Json json_roots(const RootSet& roots) {
    Json arr = Json::array();
    for (const auto& r : roots.roots) {
        Json e;
        e["re"] = r.value.real();
        e["im"] = r.value.imag();
        e["multiplicity"] = r.multiplicity;
        arr.push_back(std::move(e));
    }
    return arr;
}

Json json_minors(const MinorSequence& s) {
    Json j;
    Json values = Json::array();
    if (s.backend == Backend::ExactRational) {
        for (const Rational& v : s.exact) values.push_back(to_string(v));
    } else {
        for (double v : s.approx) values.push_back(v);
    }
    j["values"] = std::move(values);
    j["signs"] = s.signs;
    return j;
}

Json json_witness(const std::optional<MinorWitness>& w) {
    if (!w) return nullptr;
    Json j;
    j["rows"] = w->rows;
    j["cols"] = w->cols;
    j["value"] = w->value_string();
    return j;
}

struct Request {
    std::string command;
    Json echo;
};

Json envelope(const Request& request, Json results, std::vector<std::string> warnings = {}) {
    Json j;
    j["schema_version"] = "v1";
    j["command"] = request.command;
    j["request"] = request.echo;
    j["results"] = std::move(results);
    j["warnings"] = warnings;
    return j;
}

void print_text(std::ostream& out, const Json& j, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            out << pad << it.key() << ":\n";
            print_text(out, *it, indent + 1);
        } else if (it->is_array()) {
            out << pad << it.key() << ": " << it->dump() << "\n";
        } else {
            out << pad << it.key() << ": " << it->dump() << "\n";
        }
    }
}

void emit(std::ostream& out, const std::string& format, const Json& report) {
    if (format == "text") {
        print_text(out, report);
    } else {
        out << report.dump(2) << "\n";
    }
}

std::string class_string(const ClassificationReport& report) {
    switch (report.stability_class) {
        case StabilityClass::Stable: return "Stable";
        case StabilityClass::QuasiStable: return "QuasiStable";
        case StabilityClass::NotQuasiStable: return "NotQuasiStable";
        case StabilityClass::FiniteTnnOnly: return "FiniteTnnOnly";
    }
    return "NotQuasiStable";
}

Json run_classify(const Polynomial& p, const Tolerances& tol, std::vector<std::string>& warnings) {
    const ClassificationReport report = classify(p, tol);
    Json r;
    r["stability_class"] = class_string(report);
    r["stability_index"] = report.stability_index ? Json(*report.stability_index) : Json(nullptr);
    r["degeneracy_index"] = report.degeneracy_index ? Json(*report.degeneracy_index) : Json(nullptr);
    r["finite_tnn"] = report.finite_tnn;
    r["hurwitz_rank"] = report.hurwitz_rank;
    r["delta"] = json_minors(report.delta);
    r["eta"] = json_minors(report.eta);
    r["factor_q"] = json_poly(report.factor_q);
    r["factor_g"] = json_poly(report.factor_g);
    r["factorization_residual"] = report.factorization_residual;
    r["roots"] = json_roots(report.roots);
    r["roots_available"] = report.roots_available;
    Json agreement;
    for (const auto& [k, v] : report.criteria_agreement) agreement[k] = v;
    r["criteria_agreement"] = std::move(agreement);
    r["routes_agree"] = report.routes_agree();
    warnings = report.warnings;
    return r;
}

Json run_tnn(const Polynomial& p, bool infinite, int depth) {
    const StructuredMatrix m =
        infinite ? infinite_hurwitz_truncation(p, depth > 0 ? depth : p.degree() + 2)
                 : finite_hurwitz(p);
    const TnnReport report = is_totally_nonnegative(m);
    Json r;
    r["matrix"] = m.recipe().describe();
    r["rows"] = m.rows();
    r["cols"] = m.cols();
    r["verdict"] =
        report.verdict == TnnVerdict::TotallyNonnegative ? "TotallyNonnegative" : "NotTN";
    r["witness"] = json_witness(report.witness);
    r["minors_checked"] = report.minors_checked;
    r["max_order_checked"] = report.max_order_checked;
    return r;
}

Json run_minors(const Polynomial& p, int depth, const Tolerances& tol) {
    const int eta_depth = depth > 0 ? depth : p.degree() + 2;
    const MinorSequence delta = hurwitz_minors(p, tol);
    const MinorSequence eta = eta_minors(p, eta_depth, tol);
    Json r;
    r["delta"] = json_minors(delta);
    r["eta"] = json_minors(eta);
    const auto m = stability_index_from_minors(delta);
    r["stability_index_pattern"] = m ? Json(*m) : Json(nullptr);
    const auto prefix = eta_positive_prefix(eta);
    r["eta_positive_prefix"] = prefix ? Json(*prefix) : Json(nullptr);
    return r;
}

Json run_sector(const Polynomial& p, const std::string& rule_name, std::optional<int> m_opt,
                std::optional<double> half_angle_opt, const std::string& csv_path,
                const Tolerances& tol) {
    const int n = p.degree();
    SectorRule rule = SectorRule::Custom;
    double half_angle = 0.0;
    int m_used = -1;
    if (rule_name == "nec") {
        rule = SectorRule::NecessaryTn;
        m_used = m_opt ? *m_opt : (n % 2 == 0 ? 0 : 1);
        half_angle = necessary_sector_halfangle(n, m_used);
    } else if (rule_name == "suf") {
        rule = SectorRule::SufficientTn;
        m_used = m_opt ? *m_opt : n - 4;
        half_angle = sufficient_sector_halfangle(n, m_used);
    } else if (rule_name == "universal") {
        rule = SectorRule::UniversalQuarterPi;
        half_angle = std::numbers::pi / 4.0;
    } else {
        require(half_angle_opt.has_value(), ErrorCode::ParseError,
                "custom sector rule needs --half-angle");
        half_angle = *half_angle_opt;
    }

    const SectorVerdict verdict = check_zero_free_sector(p, half_angle, rule, tol);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        require(csv.good(), ErrorCode::ParseError, "cannot open csv file: " + csv_path);
        csv << "re,im,modulus,arg_radians\n";
        csv.precision(17);
        auto dump = [&](const std::vector<RootSet::Root>& roots) {
            for (const auto& r : roots)
                csv << r.value.real() << ',' << r.value.imag() << ',' << std::abs(r.value) << ','
                    << std::atan2(r.value.imag(), r.value.real()) << "\n";
        };
        dump(verdict.roots_inside);
        dump(verdict.roots_on_boundary);
        dump(verdict.roots_outside);
    }

    Json r;
    r["rule"] = to_string(rule);
    r["half_angle"] = half_angle;
    if (m_used >= 0) r["m"] = m_used;
    r["zero_free"] = verdict.zero_free();
    auto roots_json = [](const std::vector<RootSet::Root>& roots) {
        RootSet rs;
        rs.roots = roots;
        return json_roots(rs);
    };
    r["roots_inside"] = roots_json(verdict.roots_inside);
    r["roots_on_boundary"] = roots_json(verdict.roots_on_boundary);
    r["roots_outside"] = roots_json(verdict.roots_outside);
    return r;
}

Json run_factor(const Polynomial& p, const Tolerances& tol) {
    const Factorization f = factor_quasistable(p, tol);
    Json r;
    r["q"] = json_poly(f.q);
    r["g"] = json_poly(f.g);
    r["residual"] = f.residual;
    r["q_degree"] = f.q.degree();
    r["g_degree"] = f.g.degree();
    return r;
}

Json run_pf(const Polynomial& g, int r_order, bool all_orders, const Tolerances& tol) {
    const PfReport report =
        is_pf_r(g, r_order, all_orders ? PfMode::AllOrders : PfMode::OrderROnly, tol);
    Json r;
    r["r"] = report.r;
    r["verdict"] = report.verdict;
    r["witness"] = json_witness(report.witness);
    r["reduction_used"] = report.reduction_used == PfMode::OrderROnly ? "order_r_only" : "all_orders";
    r["minors_checked"] = report.minors_checked;
    return r;
}

Json run_spectrum(const Polynomial& p, const Tolerances& tol) {
    const SpectralReport report = spectral_analysis(p, tol);
    Json r;
    Json eigs = Json::array();
    for (const auto& e : report.eigenvalues) {
        Json je;
        je["re"] = e.value.real();
        je["im"] = e.value.imag();
        je["algebraic"] = e.algebraic;
        eigs.push_back(std::move(je));
    }
    r["eigenvalues"] = std::move(eigs);
    r["rank"] = report.rank;
    r["zero_algebraic"] = report.zero_algebraic;
    r["zero_geometric"] = report.zero_geometric;
    r["positive_count"] = report.positive_count;
    if (report.p0_eigen) {
        Json p0;
        p0["value"] = report.p0_eigen->value;
        p0["algebraic"] = report.p0_eigen->algebraic;
        p0["geometric"] = report.p0_eigen->geometric;
        r["p0_eigen"] = std::move(p0);
    } else {
        r["p0_eigen"] = nullptr;
    }
    r["jordan_consistent"] = report.jordan_consistent;
    r["tn_verified"] = report.tn_verified;
    r["out_of_theorem_scope"] = report.out_of_theorem_scope;
    r["simplicity_flagged"] = report.simplicity_flagged;
    r["trace_residual"] = report.trace_residual;
    return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stability and quasi-stability of real polynomials via total nonnegativity "
                 "of Hurwitz matrices"};
    app.require_subcommand(1);

    CommonOptions classify_opt, tnn_opt, minors_opt, sector_opt, factor_opt, pf_opt, spectrum_opt,
        gen_opt, verify_opt;

    auto* cmd_classify = app.add_subcommand("classify", "stability classification via four routes");
    add_common_flags(cmd_classify, classify_opt);

    auto* cmd_tnn = app.add_subcommand("tnn", "total nonnegativity of the Hurwitz matrix");
    add_common_flags(cmd_tnn, tnn_opt);
    bool tnn_infinite = false;
    int tnn_depth = 0;
    cmd_tnn->add_flag("--infinite", tnn_infinite, "use a window of the infinite Hurwitz matrix");
    cmd_tnn->add_option("--depth", tnn_depth, "window size for --infinite (default n+2)");

    auto* cmd_minors = app.add_subcommand("minors", "Hurwitz determinants and eta minors");
    add_common_flags(cmd_minors, minors_opt);
    int minors_depth = 0;
    cmd_minors->add_option("--depth", minors_depth, "eta depth (default n+2)");

    auto* cmd_sector = app.add_subcommand("sector", "zero-free sector verdicts");
    add_common_flags(cmd_sector, sector_opt);
    std::string sector_rule = "universal";
    int sector_m = -1;
    double sector_half_angle = -1.0;
    std::string sector_csv;
    cmd_sector->add_option("--rule", sector_rule, "nec|suf|universal|custom")
        ->check(CLI::IsMember({"nec", "suf", "universal", "custom"}));
    cmd_sector->add_option("--m", sector_m, "minor pattern index m");
    cmd_sector->add_option("--half-angle", sector_half_angle, "half angle in radians (custom rule)");
    cmd_sector->add_option("--emit-csv", sector_csv, "write root arguments to a csv file");

    auto* cmd_factor = app.add_subcommand("factor", "factor p = q * g(z^2) with g = gcd(p0, p1)");
    add_common_flags(cmd_factor, factor_opt);

    auto* cmd_pf = app.add_subcommand("pf", "Polya frequency class membership of a coefficient sequence");
    add_common_flags(cmd_pf, pf_opt);
    int pf_r = 1;
    bool pf_all_orders = false;
    cmd_pf->add_option("--r", pf_r, "PF order r")->required();
    cmd_pf->add_flag("--all-orders", pf_all_orders, "audit mode: check minors of every order");

    auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenstructure of the finite Hurwitz matrix");
    add_common_flags(cmd_spectrum, spectrum_opt);

    auto* cmd_gen = app.add_subcommand("gen-sharp", "generate the sharp boundary example families");
    add_common_flags(cmd_gen, gen_opt, false);
    std::string gen_theorem;
    int gen_n = 0, gen_m = 0, gen_r = 0, gen_k = 0;
    double gen_epsilon = 0.01;
    cmd_gen->add_option("--theorem", gen_theorem, "nec|suf|pf")
        ->required()
        ->check(CLI::IsMember({"nec", "suf", "pf"}));
    cmd_gen->add_option("--n", gen_n, "degree n");
    cmd_gen->add_option("--m", gen_m, "index m");
    cmd_gen->add_option("--epsilon", gen_epsilon, "offset past the boundary (suf family)");
    cmd_gen->add_option("--r", gen_r, "number of factors (pf family)");
    cmd_gen->add_option("--k", gen_k, "PF order (pf family)");

    auto* cmd_verify = app.add_subcommand("verify-factorization",
                                          "check the Hurwitz-type factorization identities");
    add_common_flags(cmd_verify, verify_opt, false);
    std::string verify_p, verify_q, verify_g;
    cmd_verify->add_option("--p", verify_p, "denominator polynomial of the pair (optional)");
    cmd_verify->add_option("--q", verify_q, "numerator polynomial / stable factor")->required();
    cmd_verify->add_option("--g", verify_g, "common factor g")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hurwitz");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    Request request;
    Json results;
    std::vector<std::string> warnings;
    std::string format = "json";

    try {
        if (cmd_classify->parsed()) {
            const Tolerances tol = resolve_tolerances(classify_opt);
            format = classify_opt.format;
            const Polynomial p = parse_polynomial(classify_opt);
            request.command = "classify";
            request.echo["coefficients"] = coefficient_tokens(classify_opt);
            request.echo["backend"] = to_string(p.backend());
            results = run_classify(p, tol, warnings);
        } else if (cmd_tnn->parsed()) {
            const Tolerances tol = resolve_tolerances(tnn_opt);
            (void)tol;
            format = tnn_opt.format;
            const Polynomial p = parse_polynomial(tnn_opt);
            request.command = "tnn";
            request.echo["coefficients"] = coefficient_tokens(tnn_opt);
            request.echo["backend"] = to_string(p.backend());
            request.echo["infinite"] = tnn_infinite;
            results = run_tnn(p, tnn_infinite, tnn_depth);
        } else if (cmd_minors->parsed()) {
            const Tolerances tol = resolve_tolerances(minors_opt);
            format = minors_opt.format;
            const Polynomial p = parse_polynomial(minors_opt);
            request.command = "minors";
            request.echo["coefficients"] = coefficient_tokens(minors_opt);
            request.echo["backend"] = to_string(p.backend());
            results = run_minors(p, minors_depth, tol);
        } else if (cmd_sector->parsed()) {
            const Tolerances tol = resolve_tolerances(sector_opt);
            format = sector_opt.format;
            const Polynomial p = parse_polynomial(sector_opt);
            request.command = "sector";
            request.echo["coefficients"] = coefficient_tokens(sector_opt);
            request.echo["rule"] = sector_rule;
            results = run_sector(p, sector_rule,
                                 sector_m >= 0 ? std::optional<int>(sector_m) : std::nullopt,
                                 sector_half_angle > 0.0 ? std::optional<double>(sector_half_angle)
                                                         : std::nullopt,
                                 sector_csv, tol);
        } else if (cmd_factor->parsed()) {
            const Tolerances tol = resolve_tolerances(factor_opt);
            format = factor_opt.format;
            const Polynomial p = parse_polynomial(factor_opt);
            request.command = "factor";
            request.echo["coefficients"] = coefficient_tokens(factor_opt);
            request.echo["backend"] = to_string(p.backend());
            results = run_factor(p, tol);
        } else if (cmd_pf->parsed()) {
            const Tolerances tol = resolve_tolerances(pf_opt);
            format = pf_opt.format;
            const Polynomial g = parse_polynomial(pf_opt);
            request.command = "pf";
            request.echo["coefficients"] = coefficient_tokens(pf_opt);
            request.echo["r"] = pf_r;
            results = run_pf(g, pf_r, pf_all_orders, tol);
        } else if (cmd_spectrum->parsed()) {
            const Tolerances tol = resolve_tolerances(spectrum_opt);
            format = spectrum_opt.format;
            const Polynomial p = parse_polynomial(spectrum_opt);
            request.command = "spectrum";
            request.echo["coefficients"] = coefficient_tokens(spectrum_opt);
            request.echo["backend"] = to_string(p.backend());
            results = run_spectrum(p, tol);
        } else if (cmd_gen->parsed()) {
            format = gen_opt.format;
            request.command = "gen-sharp";
            request.echo["theorem"] = gen_theorem;
            Polynomial p;
            if (gen_theorem == "nec") {
                request.echo["n"] = gen_n;
                request.echo["m"] = gen_m;
                p = sharp_necessary_example(gen_n, gen_m);
            } else if (gen_theorem == "suf") {
                request.echo["n"] = gen_n;
                request.echo["m"] = gen_m;
                request.echo["epsilon"] = gen_epsilon;
                p = sharp_sufficient_counterexample(gen_n, gen_m, gen_epsilon);
            } else {
                require(gen_r >= 1 && gen_k >= 1, ErrorCode::ParseError,
                        "pf family needs --r and --k");
                request.echo["r"] = gen_r;
                request.echo["k"] = gen_k;
                p = schoenberg_sharp_polynomial(gen_r, gen_k);
            }
            results["coefficients"] = json_poly(p);
            results["backend"] = to_string(p.backend());
            results["degree"] = p.degree();
        } else if (cmd_verify->parsed()) {
            format = verify_opt.format;
            request.command = "verify-factorization";
            auto parse_tokens = [](const std::string& s) {
                CommonOptions o;
                o.poly_string = s;
                return parse_polynomial(o);
            };
            const Polynomial q = parse_tokens(verify_q);
            const Polynomial g = parse_tokens(verify_g);
            request.echo["q"] = verify_q;
            request.echo["g"] = verify_g;
            FactorizationCheck details;
            bool ok;
            if (!verify_p.empty()) {
                const Polynomial p = parse_tokens(verify_p);
                request.echo["p"] = verify_p;
                ok = verify_factorization(p, q, g, &details);
                results["mode"] = "pair";
            } else {
                ok = verify_hn_factorization(q, g, &details);
                results["mode"] = "finite_hurwitz";
            }
            results["holds"] = ok;
            results["window"] = details.window;
            results["infinite_identity"] = details.infinite_identity;
            results["finite_identity"] =
                details.finite_identity ? Json(*details.finite_identity) : Json(nullptr);
            results["rank_claim"] = details.rank_claim ? Json(*details.rank_claim) : Json(nullptr);
            results["expected_rank"] =
                details.expected_rank ? Json(*details.expected_rank) : Json(nullptr);
            results["observed_rank"] =
                details.observed_rank ? Json(*details.observed_rank) : Json(nullptr);
        }
    } catch (const Error& e) {
        Json payload;
        payload["schema_version"] = "v1";
        payload["error"]["code"] = to_string(e.code());
        payload["error"]["message"] = e.what();
        out << payload.dump(2) << "\n";
        return e.code() == ErrorCode::ParseError ? 2 : 3;
    } catch (const std::exception& e) {
        Json payload;
        payload["schema_version"] = "v1";
        payload["error"]["code"] = "Internal";
        payload["error"]["message"] = e.what();
        out << payload.dump(2) << "\n";
        return 3;
    }

    emit(out, format, envelope(request, std::move(results), std::move(warnings)));
    return 0;
}

} // namespace hurwitz::cli
