#include "skeinlab/cli_app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "skeinlab/arc_products.hpp"
#include "skeinlab/audit.hpp"
#include "skeinlab/verify.hpp"

namespace skeinlab {

namespace {

// SKEINLAB_MAX_DEGREE, when set, caps every degree-like argument.
int apply_degree_cap(int value) {
    const char* cap_text = std::getenv("SKEINLAB_MAX_DEGREE");
    if (cap_text == nullptr || *cap_text == '\0') return value;
    try {
        int cap = std::stoi(cap_text);
        if (cap >= 0 && value > cap) return cap;
    } catch (const std::exception&) {
        // unreadable cap: ignore
    }
    return value;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char ch : field) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CommandResult run_cheb(const std::string& kind, int n) {
    PolyX poly;
    if (kind == "T") {
        poly = cheb_T(n);
    } else if (kind == "S") {
        poly = cheb_S(n);
    } else if (kind == "Tbar") {
        poly = cheb_Tbar(n);
    } else if (kind == "U") {
        poly = seq_U(n);
    } else {
        throw UsageError("--kind must be one of T, S, Tbar, U");
    }
    return {"cheb", "value", Json{{"kind", kind}, {"n", n}, {"poly", to_json(poly)}}, 0};
}

CommandResult run_basis(const std::string& from, const std::string& to, int max) {
    BasisMatrix matrix = change_of_basis(named_sequence(from), named_sequence(to), max);
    return {"basis", "value",
            Json{{"from", from}, {"to", to}, {"max", max}, {"matrix", to_json(matrix)}}, 0};
}

CommandResult run_dominates(const std::string& a, const std::string& b, int max) {
    NormalizedSequence seq_a = named_sequence(a);
    NormalizedSequence seq_b = named_sequence(b);
    Json payload{{"a", a}, {"b", b}, {"max", max}};
    for (int n = 0; n <= max; ++n) {
        auto row = expand_in_sequence(seq_a.at(n), seq_b);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!row[i].is_nonneg()) {
                payload["dominates"] = false;
                payload["counterexample"] =
                    Json{{"n", n}, {"i", static_cast<int>(i)}, {"entry", to_json(row[i])}};
                return {"dominates", "fail", std::move(payload), 0};
            }
        }
    }
    payload["dominates"] = true;
    return {"dominates", "pass", std::move(payload), 0};
}

CommandResult run_products(int max, const std::string& csv_path, bool embed_table) {
    CheckResult check = check_products(max);
    Json payload = check.detail;
    if (!csv_path.empty() || embed_table) {
        Json rows = Json::array();
        std::ofstream csv;
        if (!csv_path.empty()) {
            csv.open(csv_path);
            if (!csv) throw UsageError("cannot open --csv path '" + csv_path + "'");
            csv << "m,n,k,coefficient_json\n";
        }
        for (int m = 0; m <= max; ++m) {
            for (int n = 0; n <= max; ++n) {
                for (const auto& [k, coeff] : product_in_Tbar_basis(m, n)) {
                    if (csv.is_open()) {
                        csv << m << ',' << n << ',' << k << ','
                            << csv_quote(to_json(coeff).dump()) << '\n';
                    }
                    if (embed_table) {
                        rows.push_back(Json::array({m, n, k, to_json(coeff)}));
                    }
                }
            }
        }
        if (embed_table) payload["rows"] = std::move(rows);
        if (!csv_path.empty()) payload["csv"] = csv_path;
    }
    return {"products", check.pass ? "pass" : "fail", std::move(payload), 0};
}

CommandResult run_annulus(const std::string& op, int n) {
    SkeinElement element;
    bool matches = false;
    if (op == "Tn") {
        element = beta_mul_Tn_p(n);
        matches = element == beta_mul_Tn_p_recurrence(n);
    } else if (op == "SnSm") {
        element = beta_mul_SnSm_alpha(n);
        matches = element == beta_mul_SnSm_alpha_recurrence(n);
    } else if (op == "Tbar") {
        element = beta_mul_Tbar(n);
        matches = element == beta_mul_Tbar_recurrence(n);
    } else {
        throw UsageError("--op must be one of Tn, SnSm, Tbar");
    }
    return {"annulus", "value",
            Json{{"op", op},
                 {"n", n},
                 {"element", to_json(element)},
                 {"recurrence_matches", matches}}, 0};
}

CommandResult run_disk(const std::string& op, int n) {
    SkeinElement element;
    if (op == "closed") {
        element = z_mul_Tbar_closed(n);
    } else if (op == "rewrite") {
        element = z_mul_Tbar_rewrite(n);
    } else if (op == "right") {
        element = Tbar_mul_z(n);
    } else {
        throw UsageError("--op must be one of closed, rewrite, right");
    }
    return {"disk", "value", Json{{"op", op}, {"n", n}, {"element", to_json(element)}}, 0};
}

CommandResult run_audit(const std::string& a_text, const std::string& c_text) {
    Json a_json = Json::parse(a_text, nullptr, false);
    Json c_json = Json::parse(c_text, nullptr, false);
    if (a_json.is_discarded()) throw UsageError("--a is not valid JSON");
    if (c_json.is_discarded() || !c_json.is_array()) {
        throw UsageError("--c must be a JSON array of Laurent polynomials");
    }
    LaurentPoly a = laurent_from_json(a_json);
    std::vector<LaurentPoly> c;
    for (const auto& entry : c_json) c.push_back(laurent_from_json(entry));
    AuditReport report = audit_R1_Rn(a, c);
    return {"audit", "value", to_json(report), 0};
}

CommandResult run_transparency(int order, int modulus) {
    TransparencyReport report = transparency_report(order, modulus);
    Json payload{{"order", report.order},
                 {"modulus", report.modulus},
                 {"transparent", report.transparent()}};
    if (!report.transparent()) {
        payload["counterexample"] =
            Json{{"z_commutator_reduced", to_json(report.z_commutator_reduced)},
                 {"beta_commutator_reduced", to_json(report.beta_commutator_reduced)}};
    }
    return {"transparency", report.transparent() ? "pass" : "fail", std::move(payload), 0};
}

CommandResult run_identities(int max) {
    CheckResult check = check_identities(max);
    return {"identities", check.pass ? "pass" : "fail", check.detail, 0};
}

CommandResult run_verify_all(int max) {
    std::vector<CheckResult> checks = verify_all(max);
    bool all = true;
    Json list = Json::array();
    for (const auto& check : checks) {
        all = all && check.pass;
        list.push_back(Json{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    }
    return {"verify-all", all ? "pass" : "fail", Json{{"max", max}, {"checks", std::move(list)}}, 0};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"skeinlab: exact verification toolkit for Chebyshev-basis skein calculus"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    std::string cheb_kind = "T";
    int cheb_n = 0;
    auto* cheb = app.add_subcommand("cheb", "print one polynomial of a named family");
    cheb->add_option("--kind", cheb_kind, "family: T, S, Tbar or U")->required();
    cheb->add_option("--n", cheb_n, "index")->required();

    int identities_max = 16;
    auto* identities = app.add_subcommand("identities", "verify the product identities");
    identities->add_option("--max", identities_max, "largest index")->required();

    std::string basis_from, basis_to;
    int basis_max = 8;
    auto* basis = app.add_subcommand("basis", "change-of-basis matrix between families");
    basis->add_option("--from", basis_from, "source family")->required();
    basis->add_option("--to", basis_to, "target family")->required();
    basis->add_option("--max", basis_max, "matrix size minus one")->required();

    std::string dom_a, dom_b;
    int dom_max = 8;
    auto* dom = app.add_subcommand("dominates", "test the dominance order between families");
    dom->add_option("--a", dom_a, "candidate dominating family")->required();
    dom->add_option("--b", dom_b, "candidate dominated family")->required();
    dom->add_option("--max", dom_max, "largest degree")->required();

    int products_max = 16;
    std::string products_csv;
    bool products_table = false;
    auto* products = app.add_subcommand("products", "structure constants of the Tbar basis");
    products->add_option("--max", products_max, "largest index")->required();
    products->add_option("--csv", products_csv, "write the table to this CSV file");
    products->add_flag("--table", products_table, "embed the table in the JSON payload");

    std::string annulus_op;
    int annulus_n = 1;
    auto* annulus = app.add_subcommand("annulus", "annulus-model products");
    annulus->add_option("--op", annulus_op, "Tn, SnSm or Tbar")->required();
    annulus->add_option("--n", annulus_n, "index (>= 1)")->required();

    std::string disk_op;
    int disk_n = 0;
    auto* disk = app.add_subcommand("disk", "disk-model products");
    disk->add_option("--op", disk_op, "closed, rewrite or right")->required();
    disk->add_option("--n", disk_n, "index (>= 0)")->required();

    std::string audit_a, audit_c;
    auto* audit = app.add_subcommand("audit", "lower-bound coefficient audit");
    audit->add_option("--a", audit_a, "LaurentPoly JSON for the constant of R_1")->required();
    audit->add_option("--c", audit_c, "JSON array of LaurentPoly coefficients")->required();

    int transparency_order = 1;
    int transparency_modulus = 0;
    auto* transparency = app.add_subcommand("transparency", "root-of-unity transparency check");
    transparency->add_option("--order", transparency_order, "order N of q^2")->required();
    transparency->add_option("--modulus", transparency_modulus,
                             "override the reduction modulus (default 4N)");

    int verify_max = 32;
    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    verify->add_option("--max", verify_max, "global degree bound")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& parse_error) {
        err << "skeinlab: " << parse_error.what() << "\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    CommandResult result;
    try {
        if (cheb->parsed()) {
            int lo = cheb_kind == "S" ? -1 : 0;
            if (cheb_n < lo) throw UsageError("--n out of range for kind " + cheb_kind);
            result = run_cheb(cheb_kind, apply_degree_cap(cheb_n));
        } else if (identities->parsed()) {
            if (identities_max < 0) throw UsageError("--max must be >= 0");
            result = run_identities(apply_degree_cap(identities_max));
        } else if (basis->parsed()) {
            if (basis_max < 0) throw UsageError("--max must be >= 0");
            result = run_basis(basis_from, basis_to, apply_degree_cap(basis_max));
        } else if (dom->parsed()) {
            if (dom_max < 0) throw UsageError("--max must be >= 0");
            result = run_dominates(dom_a, dom_b, apply_degree_cap(dom_max));
        } else if (products->parsed()) {
            if (products_max < 0) throw UsageError("--max must be >= 0");
            result = run_products(apply_degree_cap(products_max), products_csv, products_table);
        } else if (annulus->parsed()) {
            if (annulus_n < 1) throw UsageError("--n must be >= 1");
            result = run_annulus(annulus_op, apply_degree_cap(annulus_n));
        } else if (disk->parsed()) {
            if (disk_n < 0) throw UsageError("--n must be >= 0");
            result = run_disk(disk_op, apply_degree_cap(disk_n));
        } else if (audit->parsed()) {
            result = run_audit(audit_a, audit_c);
        } else if (transparency->parsed()) {
            if (transparency_order < 1) throw UsageError("--order must be >= 1");
            result = run_transparency(transparency_order, transparency_modulus);
        } else if (verify->parsed()) {
            if (verify_max < 0) throw UsageError("--max must be >= 0");
            result = run_verify_all(apply_degree_cap(verify_max));
        } else {
            err << "skeinlab: no subcommand selected\n";
            return 2;
        }
    } catch (const UsageError& usage) {
        err << "skeinlab: " << usage.what() << "\n";
        return 2;
    } catch (const std::domain_error& domain) {
        err << "skeinlab: " << domain.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& invalid) {
        err << "skeinlab: " << invalid.what() << "\n";
        return 2;
    } catch (const std::exception& unexpected) {
        err << "skeinlab: internal error: " << unexpected.what() << "\n";
        return 1;
    }
    auto finished = std::chrono::steady_clock::now();
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count();

    Json document{{"command", result.command}, {"status", result.status},
                  {"payload", result.payload}};
    out << (pretty ? document.dump(2) : document.dump()) << "\n";
    err << "skeinlab: " << result.command << " finished in " << result.elapsed_ms << " ms\n";
    return result.status == "fail" ? 1 : 0;
}

}  // namespace skeinlab
