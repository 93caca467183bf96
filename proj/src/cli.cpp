#include "hankelforge/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hankelforge/forms.hpp"
#include "hankelforge/hankel.hpp"
#include "hankelforge/identities.hpp"
#include "hankelforge/json_io.hpp"
#include "hankelforge/symbol_parser.hpp"
#include "hankelforge/sym_tensor.hpp"
#include "hankelforge/tensor_rep.hpp"
#include "hankelforge/verify.hpp"

namespace hankelforge {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_matrix(std::ostream& out, int s, const std::string& symbol, int rows, int cols,
               const std::string& format, bool paper) {
    const SymbolExpr expr = parse_symbol(symbol);
    const OperatorWindow w = matrix_window(s, expr.poly, rows, cols);
    if (format == "csv") {
        out << window_to_csv(w, paper);
        return 0;
    }
    Json j = to_json(w, paper);
    j["symbol"] = expr.source;
    emit(out, j);
    return 0;
}

int run_apply(std::ostream& out, int s, const std::string& symbol, const std::string& input,
              const std::string& route) {
    const SymbolExpr x = parse_symbol(symbol);
    const SymbolExpr f = parse_symbol(input);
    const Section in{HalfWeight::half(), f.poly};
    Section result;
    if (route == "tensor")
        result = apply_tensor(b_as_tensor(s, x.poly), in);
    else
        result = apply_B(s, x.poly, in);
    Json j{{"s", s}, {"kind", "section"}, {"route", route}};
    j.update(to_json(result));
    emit(out, j);
    return 0;
}

int run_section(std::ostream& out, int s, int p) {
    const bool whole_chain = p >= 0;
    const SymTensor t = whole_chain ? section_sigma(s, p) : build_v(s);
    Json j{{"s", s}, {"kind", "sym_tensor"}};
    if (whole_chain)
        j["p"] = p;
    else
        j["vector"] = "v" + std::to_string(2 * s + 1);
    j["entries"] = to_json(t);
    emit(out, j);
    return 0;
}

int run_lowest(std::ostream& out, int s) {
    Json j{{"s", s}, {"kind", "tensor"}, {"entries", to_json(lowest_weight(s))}};
    emit(out, j);
    return 0;
}

int run_transvect(std::ostream& out, int s, const std::string& fs, const std::string& gs,
                  bool from_one) {
    const Section t = transvect(s, parse_symbol(fs).poly, parse_symbol(gs).poly, from_one);
    Json j{{"s", s}, {"kind", "section"}};
    j.update(to_json(t));
    emit(out, j);
    return 0;
}

int run_adjoint(std::ostream& out, int s, int k_max) {
    const BilinearReport report = adjointness_report(s, k_max);
    emit(out, to_json(report));
    return report.consistent() ? 0 : 1;
}

int run_identity(std::ostream& out, const std::string& family, int max_s, int k_margin,
                 int max_ij) {
    bool all_equal = true;
    for (int s = 1; s <= max_s; ++s) {
        if (family == "A" || family == "all")
            for (int k = 2 * s + 1; k <= 2 * s + k_margin; ++k)
                for (int l = 0; l <= k - s; ++l) {
                    const IdentityResult r = identity_A(s, k, l);
                    all_equal = all_equal && r.equal;
                    out << to_json(r).dump() << "\n";
                }
        if (family == "B" || family == "all")
            for (int i = 0; i <= max_ij; ++i)
                for (int j = 0; j <= max_ij; ++j) {
                    if (i + j < s) continue;
                    const IdentityResult r = identity_B(s, i, j);
                    all_equal = all_equal && r.equal;
                    out << to_json(r).dump() << "\n";
                }
    }
    return all_equal ? 0 : 1;
}

int run_solve_a(std::ostream& out, int s) {
    Json entries = Json::array();
    for (const auto& c : solve_for_a(s)) entries.push_back(to_json(c));
    Json j{{"s", s}, {"kind", "coefficients"}, {"entries", std::move(entries)}};
    emit(out, j);
    return 0;
}

int run_verify(std::ostream& out, const std::vector<std::string>& suites, int max_s,
               bool sequential) {
    std::vector<std::string> names;
    for (const auto& s : suites) {
        if (s == "all") {
            names = suite_names();
            break;
        }
        names.push_back(s);
    }
    VerifyOptions options;
    options.max_s = max_s;
    options.parallel = !sequential;
    const auto results = run_suites(names, options);

    bool passed = true;
    Json jsuites = Json::array();
    for (const auto& r : results) {
        passed = passed && r.passed;
        Json js{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}};
        if (!r.failures.empty()) js["failures"] = r.failures;
        if (!r.details.empty()) js["details"] = r.details;
        jsuites.push_back(std::move(js));
    }
    Json j{{"kind", "verify"}, {"max_s", max_s}, {"passed", passed},
           {"suites", std::move(jsuites)}};
    emit(out, j);
    return passed ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for higher-order Hankel operators"};
    app.require_subcommand(1);

    int exit_code = 0;

    // matrix
    int m_s = 0, m_rows = 6, m_cols = 6;
    std::string m_symbol, m_format = "json";
    bool m_paper = false;
    auto* matrix = app.add_subcommand("matrix", "window of B_{s+1}(x) on the z^{-(n+1)} basis");
    matrix->add_option("--s", m_s, "operator order parameter s")->required();
    matrix->add_option("--symbol", m_symbol, "symbol polynomial, e.g. \"z^3+z^4\"")->required();
    matrix->add_option("--rows", m_rows, "rows of the window");
    matrix->add_option("--cols", m_cols, "columns of the window");
    matrix->add_option("--format", m_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    matrix->add_flag("--paper-orientation", m_paper, "draw row m = 0 at the bottom");
    matrix->callback([&] { exit_code = run_matrix(out, m_s, m_symbol, m_rows, m_cols, m_format, m_paper); });

    // apply
    int a_s = 0;
    std::string a_symbol, a_input, a_route = "diffop";
    auto* apply = app.add_subcommand("apply", "apply B_{s+1}(x) to a negative-power section");
    apply->add_option("--s", a_s)->required();
    apply->add_option("--symbol", a_symbol)->required();
    apply->add_option("--input", a_input, "weight-1/2 input, exponents <= -1")->required();
    apply->add_option("--via", a_route, "computation route")
        ->check(CLI::IsMember({"diffop", "tensor"}));
    apply->callback([&] { exit_code = run_apply(out, a_s, a_symbol, a_input, a_route); });

    // section
    int sec_s = 1, sec_p = -1;
    auto* section = app.add_subcommand("section", "cross-section vectors in S^s(H^{-1})");
    section->add_option("--s", sec_s)->required();
    section->add_option("--p", sec_p, "basis exponent; omit for the v_{2s+1} vector");
    section->callback([&] { exit_code = run_section(out, sec_s, sec_p); });

    // lowest
    int l_s = 0;
    auto* lowest = app.add_subcommand("lowest", "lowest-weight vector l_s of the tensor square");
    lowest->add_option("--s", l_s)->required();
    lowest->callback([&] { exit_code = run_lowest(out, l_s); });

    // transvect
    int t_s = 0;
    std::string t_f, t_g;
    bool t_from_one = false;
    auto* trans = app.add_subcommand("transvect", "transvectant tau_{s+1}(f,g)");
    trans->add_option("--s", t_s)->required();
    trans->add_option("--f", t_f)->required();
    trans->add_option("--g", t_g)->required();
    trans->add_flag("--from-one", t_from_one, "start the sum at j = 1");
    trans->callback([&] { exit_code = run_transvect(out, t_s, t_f, t_g, t_from_one); });

    // adjoint
    int adj_s = 0, adj_kmax = -1;
    auto* adjoint = app.add_subcommand("adjoint", "proportionality report of the two Hankel forms");
    adjoint->add_option("--s", adj_s)->required();
    adjoint->add_option("--k-max", adj_kmax, "largest symbol exponent (default 2s+9)");
    adjoint->callback([&] {
        exit_code = run_adjoint(out, adj_s, adj_kmax < 0 ? 2 * adj_s + 9 : adj_kmax);
    });

    // identity
    std::string id_family = "all";
    int id_max_s = 8, id_k_margin = 12, id_max_ij = 12;
    auto* identity = app.add_subcommand("identity", "verify the binomial identity families");
    identity->add_option("--family", id_family)->check(CLI::IsMember({"A", "B", "all"}));
    identity->add_option("--max-s", id_max_s);
    identity->add_option("--k-margin", id_k_margin, "family A: k runs 2s+1 .. 2s+margin");
    identity->add_option("--max-ij", id_max_ij, "family B: i, j run 0 .. max-ij");
    identity->callback(
        [&] { exit_code = run_identity(out, id_family, id_max_s, id_k_margin, id_max_ij); });

    // solve-a
    int sa_s = 0;
    auto* solve = app.add_subcommand("solve-a", "coefficients a_s via the factored linear solve");
    solve->add_option("--s", sa_s)->required();
    solve->callback([&] { exit_code = run_solve_a(out, sa_s); });

    // verify
    std::vector<std::string> v_suites{"all"};
    int v_max_s = 6;
    bool v_sequential = false;
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("--suite", v_suites, "suite name or 'all'")
        ->check(CLI::IsMember(allowed));
    verify->add_option("--max-s", v_max_s, "upper bound of the s sweeps");
    verify->add_flag("--sequential", v_sequential, "do not fan suites out across threads");
    verify->callback([&] { exit_code = run_verify(out, v_suites, v_max_s, v_sequential); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace hankelforge
