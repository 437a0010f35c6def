// Command line surface: computations and verification sweeps with JSON
// output (--pretty appends a human rendering).
#include "qsymcat/composition.hpp"
#include "qsymcat/gfunction.hpp"
#include "qsymcat/ideal.hpp"
#include "qsymcat/qsym.hpp"
#include "qsymcat/reports.hpp"
#include "qsymcat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;
using namespace qsymcat;

void emit(const std::string& command, const ordered_json& params, const ordered_json& result,
          bool passed, bool with_json, const std::string& pretty) {
    if (with_json) {
        ordered_json report;
        report["command"] = command;
        report["params"] = params;
        report["result"] = result;
        report["passed"] = passed;
        std::cout << report.dump(2) << '\n';
    }
    if (!pretty.empty()) std::cout << pretty;
}

std::string pretty_hilbert(const HilbertTable& table, const ordered_json& payload) {
    std::ostringstream out;
    out << "degree  dim\n";
    for (size_t d = 0; d < table.dims.size(); ++d)
        out << std::setw(6) << d << "  " << table.dims[d] << '\n';
    out << "total " << table.total().str() << "  bound "
        << payload["catalan_bound"].dump() << "  equality "
        << (payload["equality"].get<bool>() ? "yes" : "no") << '\n';
    return out.str();
}

std::string pretty_paths(int n, int e, bool list) {
    std::ostringstream out;
    out << "count " << count_e_catalan(n, e).str() << '\n';
    if (list)
        for (const GenComposition& alpha : enumerate_e_catalan(n, e)) {
            out << alpha.str() << '\n';
            std::string text = render_path(alpha).text;
            if (!text.empty()) out << text << '\n';
        }
    return out.str();
}

std::string pretty_verify(const std::vector<VerifyReport>& reports) {
    std::ostringstream out;
    for (const VerifyReport& r : reports) {
        out << std::left << std::setw(14) << r.suite << " instances " << std::setw(8)
            << r.instances << (r.passed() ? " pass" : " FAIL") << '\n';
        for (const std::string& f : r.failures) out << "    " << f << '\n';
    }
    return out.str();
}

ordered_json poly_result(const Polynomial& p) {
    ordered_json out;
    out["window"] = p.window();
    out["text"] = p.str();
    out["terms"] = polynomial_terms(p);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-symmetric quotient calculator"};
    app.require_subcommand(1);

    // hilbert
    auto* hilbert_cmd = app.add_subcommand("hilbert", "quotient dimensions per degree");
    int h_n = 0, h_e = 0, h_dmax = -1;
    bool h_pretty = false, h_json = false;
    hilbert_cmd->add_option("--n", h_n, "window (number of variables)")->required();
    hilbert_cmd->add_option("--e", h_e, "level");
    hilbert_cmd->add_option("--max-deg", h_dmax, "top degree (default n+e)");
    hilbert_cmd->add_flag("--pretty", h_pretty, "append aligned table");
    hilbert_cmd->add_flag("--json", h_json, "emit JSON (default)");

    // paths
    auto* paths_cmd = app.add_subcommand("paths", "count/list e-Catalan paths");
    int p_n = 0, p_e = 0;
    bool p_list = false, p_pretty = false, p_json = false;
    paths_cmd->add_option("--n", p_n, "path length")->required();
    paths_cmd->add_option("--e", p_e, "level");
    paths_cmd->add_flag("--list", p_list, "list the paths");
    paths_cmd->add_flag("--pretty", p_pretty, "append ASCII diagrams");
    paths_cmd->add_flag("--json", p_json, "emit JSON (default)");

    // gfun
    auto* gfun_cmd = app.add_subcommand("gfun", "generator polynomial of an index");
    std::string g_alpha;
    int g_n = 0;
    bool g_pretty = false, g_json = false;
    gfun_cmd->add_option("alpha", g_alpha, "generalized composition, e.g. 1,0,1")->required();
    gfun_cmd->add_option("--n", g_n, "window")->required();
    gfun_cmd->add_flag("--pretty", g_pretty, "append polynomial text");
    gfun_cmd->add_flag("--json", g_json, "emit JSON (default)");

    // normal-form
    auto* nf_cmd = app.add_subcommand("normal-form", "reduce a monomial modulo the ideal");
    std::string nf_mono;
    int nf_n = 0, nf_e = 0;
    bool nf_pretty = false, nf_json = false;
    nf_cmd->add_option("monomial", nf_mono, "exponent vector, e.g. 1,0")->required();
    nf_cmd->add_option("--n", nf_n, "window")->required();
    nf_cmd->add_option("--e", nf_e, "level");
    nf_cmd->add_flag("--pretty", nf_pretty, "append polynomial text");
    nf_cmd->add_flag("--json", nf_json, "emit JSON (default)");

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "monomial/fundamental basis element");
    std::string x_alpha, x_basis = "F";
    int x_n = 0;
    bool x_pretty = false, x_json = false;
    expand_cmd->add_option("alpha", x_alpha, "composition, e.g. 2,1")->required();
    expand_cmd->add_option("--n", x_n, "window")->required();
    expand_cmd->add_option("--basis", x_basis, "M or F")->check(CLI::IsMember({"M", "F"}));
    expand_cmd->add_flag("--pretty", x_pretty, "append polynomial text");
    expand_cmd->add_flag("--json", x_json, "emit JSON (default)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite = "all";
    VerifyOptions v_options;
    bool v_pretty = false, v_json = false;
    long long v_seed = -1;
    verify_cmd->add_option("suite", v_suite,
                           "frel|lm|shift|syzygy|lattice|filtration|pairing|reduce-equiv|all");
    verify_cmd->add_option("--max-deg", v_options.max_deg, "degree bound");
    verify_cmd->add_option("--max-len", v_options.max_len, "length bound");
    verify_cmd->add_option("--max-n", v_options.max_n, "window bound");
    verify_cmd->add_option("--max-e", v_options.max_e, "level bound");
    verify_cmd->add_option("--n", v_options.window, "window override");
    verify_cmd->add_option("--samples", v_options.samples, "random sample count");
    verify_cmd->add_option("--seed", v_seed, "random seed");
    verify_cmd->add_option("--threads", v_options.threads, "worker threads");
    verify_cmd->add_flag("--pretty", v_pretty, "append per-suite table");
    verify_cmd->add_flag("--json", v_json, "emit JSON (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    try {
        if (*hilbert_cmd) {
            if (h_n < 1) {
                std::cerr << "error: --n must be at least 1\n";
                return 2;
            }
            if (h_e < 0) {
                std::cerr << "error: --e must be nonnegative\n";
                return 2;
            }
            int d_max = h_dmax < 0 ? h_n + h_e : h_dmax;
            HilbertTable table = hilbert_function(h_n, h_e, d_max);
            ordered_json payload = hilbert_json(table);
            ordered_json params{{"n", h_n}, {"e", h_e}, {"d_max", d_max}};
            emit("hilbert", params, payload, true, true,
                 h_pretty ? pretty_hilbert(table, payload) : "");
            return 0;
        }
        if (*paths_cmd) {
            if (p_n < 0 || p_e < 0) {
                std::cerr << "error: --n and --e must be nonnegative\n";
                return 2;
            }
            ordered_json payload = paths_json(p_n, p_e, p_list);
            ordered_json params{{"n", p_n}, {"e", p_e}, {"list", p_list}};
            emit("paths", params, payload, true, true,
                 p_pretty ? pretty_paths(p_n, p_e, p_list) : "");
            return 0;
        }
        if (*gfun_cmd) {
            GenComposition alpha = GenComposition::parse(g_alpha);
            Polynomial g = gfun(alpha, g_n);
            ordered_json params{{"alpha", alpha.str()}, {"n", g_n}};
            emit("gfun", params, poly_result(g), true, true,
                 g_pretty ? g.str() + "\n" : "");
            return 0;
        }
        if (*nf_cmd) {
            GenComposition exponents = GenComposition::parse(nf_mono);
            if (nf_e < 0) {
                std::cerr << "error: --e must be nonnegative\n";
                return 2;
            }
            Polynomial input =
                Polynomial::monomial(Monomial::from_composition(exponents, nf_n));
            Polynomial reduced = normal_form(input, nf_n, nf_e);
            ordered_json params{{"monomial", exponents.str()}, {"n", nf_n}, {"e", nf_e}};
            emit("normal-form", params, poly_result(reduced), true, true,
                 nf_pretty ? reduced.str() + "\n" : "");
            return 0;
        }
        if (*expand_cmd) {
            Composition alpha = Composition::parse(x_alpha);
            Polynomial p = x_basis == "M" ? monomial_qsym(alpha, x_n)
                                          : fundamental_qsym(alpha, x_n);
            ordered_json params{{"alpha", alpha.str()}, {"n", x_n}, {"basis", x_basis}};
            emit("expand", params, poly_result(p), true, true,
                 x_pretty ? p.str() + "\n" : "");
            return 0;
        }
        if (*verify_cmd) {
            if (v_seed >= 0) v_options.seed = static_cast<unsigned long long>(v_seed);
            std::vector<VerifyReport> reports;
            if (v_suite == "all")
                reports = verify_all(v_options);
            else
                reports.push_back(verify_suite(v_suite, v_options));
            bool passed = true;
            ordered_json result;
            if (v_suite == "all") {
                ordered_json suites = ordered_json::array();
                for (const VerifyReport& r : reports) {
                    suites.push_back(verify_json(r));
                    passed = passed && r.passed();
                }
                result["suites"] = std::move(suites);
                result["passed"] = passed;
            } else {
                result = verify_json(reports.front());
                passed = reports.front().passed();
            }
            ordered_json params{{"suite", v_suite}};
            emit("verify", params, result, passed, true,
                 v_pretty ? pretty_verify(reports) : "");
            return passed ? 0 : 1;
        }
    } catch (const parse_error& error) {
        std::cerr << "parse error: " << error.what() << '\n';
        return 2;
    } catch (const precondition_error& error) {
        std::cerr << "precondition violated: " << error.what() << '\n';
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 3;
    }
    return 0;
}
