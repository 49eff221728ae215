// fermat: command-line front end over the C API.
//
// Exit codes: 0 success / verified, 1 refuted or failed construction,
// 2 usage, parse or evaluation error, 3 empty or degenerate family.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/fermat.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;
constexpr int kExitEmpty = 3;

struct CString {
    char* p = nullptr;
    ~CString() { fermat_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

int report_error(int status, const std::string& context) {
    std::cerr << "error: ";
    if (!context.empty()) std::cerr << context << ": ";
    std::cerr << fermat_last_error_message();
    long off = fermat_last_error_offset();
    if (status == FERMAT_ERR_PARSE && off >= 0) std::cerr << " (offset " << off << ")";
    std::cerr << " [" << fermat_status_name(status) << "]\n";
    return kExitError;
}

// Parses each flag separately so a diagnostic can name the offending flag.
int check_expressions(const std::vector<std::pair<std::string, std::string>>& flags) {
    for (const auto& [name, text] : flags) {
        fermat_expr* e = nullptr;
        int st = fermat_expr_parse(text.c_str(), &e);
        fermat_expr_free(e);
        if (st != FERMAT_OK) return report_error(st, "--" + name);
    }
    return kExitOk;
}

struct EquationFlags {
    unsigned m = 0, n = 0, k = 0;
    std::string R = "1", Q = "1", alpha = "0";

    void add_to(CLI::App* app) {
        app->add_option("--m", m, "exponent of f")->required()->check(CLI::PositiveNumber);
        app->add_option("--n", n, "exponent of R f^(k)")->required()->check(CLI::PositiveNumber);
        app->add_option("--k", k, "derivative order")->required()->check(CLI::PositiveNumber);
        app->add_option("--R", R, "rational function R")->capture_default_str();
        app->add_option("--Q", Q, "rational function Q")->capture_default_str();
        app->add_option("--alpha", alpha, "polynomial exponent alpha")->capture_default_str();
    }

    // Returns an exit code on failure and leaves out null.
    int create(fermat_equation** out) const {
        *out = nullptr;
        if (int rc = check_expressions({{"R", R}, {"Q", Q}, {"alpha", alpha}})) return rc;
        int st = fermat_equation_create(m, n, k, R.c_str(), Q.c_str(), alpha.c_str(), out);
        if (st != FERMAT_OK) return report_error(st, "equation");
        return kExitOk;
    }
};

using EquationPtr = std::unique_ptr<fermat_equation, decltype(&fermat_equation_free)>;
using ReportPtr = std::unique_ptr<fermat_report, decltype(&fermat_report_free)>;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void print_list(const char* label, const json& items) {
    for (const auto& s : items) std::cout << "  " << label << s.get<std::string>() << "\n";
}

std::string text_field(const json& v, const char* key) {
    return v.contains(key) && v[key].is_string() ? v[key].get<std::string>() : std::string();
}

std::string format_complex(double re, double im) {
    if (im < 0) return format_double(re) + " - " + format_double(-im) + "i";
    return format_double(re) + " + " + format_double(im) + "i";
}

void print_verdict_text(const json& v) {
    std::cout << "verdict: " << text_field(v, "verdict") << "\n";
    if (auto t = text_field(v, "theorem"); !t.empty()) std::cout << "theorem: " << t << "\n";
    if (auto r = text_field(v, "reason"); !r.empty()) std::cout << "reason: " << r << "\n";
    if (auto q = text_field(v, "open_question"); !q.empty()) std::cout << "open question: " << q << "\n";
    for (const auto& fam : v["families"]) {
        std::cout << "family " << text_field(fam, "tag") << " (theorem " << text_field(fam, "theorem")
                  << "): f = " << text_field(fam, "template") << "\n";
        print_list("constraint: ", fam["constraints"]);
        print_list("side condition: ", fam["side_conditions"]);
    }
    if (!v["hypotheses"].empty()) {
        std::cout << "hypotheses:\n";
        print_list("", v["hypotheses"]);
    }
    if (!v["notes"].empty()) {
        std::cout << "notes:\n";
        print_list("", v["notes"]);
    }
}

void print_construction_text(const json& c) {
    std::cout << c["tag"].get<std::string>() << " (theorem " << c["theorem"].get<std::string>() << ")\n";
    std::cout << "  f = " << c["template"].get<std::string>() << "\n";
    if (c.contains("exact") && c["exact"].is_string()) std::cout << "  exact: " << c["exact"].get<std::string>() << "\n";
    const auto& eq = c["equation"];
    std::cout << "  equation: m=" << eq["m"] << " n=" << eq["n"] << " k=" << eq["k"]
              << " R=" << eq["R"].get<std::string>() << " Q=" << eq["Q"].get<std::string>()
              << " alpha=" << eq["alpha"].get<std::string>() << "\n";
    for (const auto& [name, val] : c["bindings"].items())
        std::cout << "  " << name << " = " << format_complex(val[0].get<double>(), val[1].get<double>()) << "\n";
    print_list("constraint: ", c["constraints"]);
    print_list("side condition: ", c["side_conditions"]);
    print_list("note: ", c["notes"]);
    const auto& rep = c["verification"];
    std::cout << "  " << rep["verdict"].get<std::string>() << " (" << rep["mode"].get<std::string>() << ")\n";
}

int run_verify(const EquationFlags& eqf, const std::string& f, bool numeric, double tol, unsigned points,
               std::uint64_t seed, bool as_json) {
    fermat_equation* raw = nullptr;
    if (int rc = eqf.create(&raw)) return rc;
    EquationPtr eq(raw, fermat_equation_free);
    if (int rc = check_expressions({{"f", f}})) return rc;

    fermat_report* rep_raw = nullptr;
    int st = numeric ? fermat_verify_numeric(eq.get(), f.c_str(), tol, points, seed, &rep_raw)
                     : fermat_verify_exact(eq.get(), f.c_str(), &rep_raw);
    if (st != FERMAT_OK) return report_error(st, "verify");
    ReportPtr rep(rep_raw, fermat_report_free);

    bool ok = fermat_report_verified(rep.get()) == 1;
    if (as_json) {
        CString js;
        if ((st = fermat_report_json(rep.get(), &js.p)) != FERMAT_OK) return report_error(st, "verify");
        std::cout << js.str() << "\n";
    } else {
        std::cout << (ok ? "verified" : "refuted") << " (" << (numeric ? "numeric" : "exact") << ")\n";
        if (numeric) {
            std::cout << "max residual: " << format_double(fermat_report_max_residual(rep.get())) << "\n";
        } else if (!ok) {
            CString res;
            if ((st = fermat_report_residual_text(rep.get(), &res.p)) != FERMAT_OK) return report_error(st, "verify");
            std::cout << "residual: " << res.str() << "\n";
        }
    }
    return ok ? kExitOk : kExitRefuted;
}

int run_classify(const EquationFlags& eqf, bool as_json) {
    fermat_equation* raw = nullptr;
    if (int rc = eqf.create(&raw)) return rc;
    EquationPtr eq(raw, fermat_equation_free);
    CString js;
    int st = fermat_classify(eq.get(), &js.p);
    if (st != FERMAT_OK) return report_error(st, "classify");
    if (as_json) {
        std::cout << js.str() << "\n";
    } else {
        print_verdict_text(json::parse(js.str()));
    }
    return kExitOk;
}

int run_construct(const std::string& family, const std::vector<std::pair<std::string, std::string>>& params,
                  bool as_json) {
    std::vector<const char*> keys, values;
    for (const auto& [k, v] : params) {
        keys.push_back(k.c_str());
        values.push_back(v.c_str());
    }
    CString js;
    int st = fermat_construct(family.c_str(), keys.data(), values.data(), keys.size(), &js.p);
    switch (st) {
        case FERMAT_OK: break;
        case FERMAT_ERR_NO_SOLUTION_IN_FAMILY:
        case FERMAT_ERR_FAMILY_DEGENERATE:
        case FERMAT_ERR_EMPTY_FAMILY:
            std::cerr << "empty: " << fermat_last_error_message() << " [" << fermat_status_name(st) << "]\n";
            return kExitEmpty;
        case FERMAT_ERR_SIDE_CONDITION_FAILED:
        case FERMAT_ERR_VERIFICATION_FAILED:
            std::cerr << "failed: " << fermat_last_error_message() << " [" << fermat_status_name(st) << "]\n";
            return kExitRefuted;
        default: return report_error(st, "construct");
    }
    json arr = json::parse(js.str());
    if (arr.empty()) {
        std::cerr << "empty: no candidate produced\n";
        return kExitEmpty;
    }
    if (as_json) {
        std::cout << js.str() << "\n";
    } else {
        for (const auto& c : arr) print_construction_text(c);
    }
    return kExitOk;
}

int run_degree(const std::string& expr, bool as_json) {
    fermat_expr* raw = nullptr;
    int st = fermat_expr_parse(expr.c_str(), &raw);
    if (st != FERMAT_OK) return report_error(st, "--expr");
    std::unique_ptr<fermat_expr, decltype(&fermat_expr_free)> e(raw, fermat_expr_free);
    CString deg;
    if ((st = fermat_expr_degree(e.get(), &deg.p)) != FERMAT_OK) return report_error(st, "--expr");
    if (as_json) {
        std::cout << json{{"degree", deg.str()}}.dump() << "\n";
    } else {
        std::cout << deg.str() << "\n";
    }
    return kExitOk;
}

int run_roots(const std::string& w, unsigned k, bool as_json) {
    if (int rc = check_expressions({{"w", w}})) return rc;
    std::vector<double> out(2 * static_cast<std::size_t>(k));
    int st = fermat_kth_roots(w.c_str(), k, out.data());
    if (st != FERMAT_OK) return report_error(st, "roots");
    if (as_json) {
        json arr = json::array();
        for (unsigned j = 0; j < k; ++j) arr.push_back({out[2 * j], out[2 * j + 1]});
        std::cout << arr.dump() << "\n";
    } else {
        for (unsigned j = 0; j < k; ++j)
            std::cout << format_double(out[2 * j]) << " " << format_double(out[2 * j + 1]) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponential-polynomial solver for f^m + (R f^(k))^n = Q e^alpha"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON");

    double tol = 1e-9;
    unsigned points = 20;
    std::uint64_t seed = 42;

    EquationFlags verify_eq;
    std::string f;
    bool numeric = false;
    auto* verify = app.add_subcommand("verify", "check a candidate solution");
    verify_eq.add_to(verify);
    verify->add_option("--f", f, "candidate exponential polynomial")->required();
    verify->add_flag("--numeric", numeric, "sample instead of exact identity test");
    verify->add_option("--tol", tol, "numeric tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--points", points, "numeric sample count")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "numeric sampling seed")->capture_default_str();
    verify->add_flag("--json", as_json, "emit JSON");

    EquationFlags classify_eq;
    auto* classify = app.add_subcommand("classify", "classify an equation");
    classify_eq.add_to(classify);
    classify->add_flag("--json", as_json, "emit JSON");

    std::string family;
    auto* construct = app.add_subcommand("construct", "build and verify members of a solution family");
    construct->add_option("--family", family, "family tag")->required();
    const std::vector<std::string> param_names = {"m",  "k",  "A",  "a",  "b",  "d",  "c",  "a1", "a2",
                                                  "b1", "b2", "t",  "R",  "Q",  "R1", "Q1", "Q2", "P",
                                                  "alpha", "root1", "root2"};
    std::vector<std::string> param_values(param_names.size());
    std::vector<CLI::Option*> param_opts;
    for (std::size_t i = 0; i < param_names.size(); ++i)
        param_opts.push_back(construct->add_option("--" + param_names[i], param_values[i], "family parameter"));
    construct->add_flag("--json", as_json, "emit JSON");

    std::string expr;
    auto* degree = app.add_subcommand("degree", "degree of a rational function");
    degree->add_option("--expr", expr, "rational function")->required();
    degree->add_flag("--json", as_json, "emit JSON");

    std::string w;
    unsigned root_k = 0;
    auto* roots = app.add_subcommand("roots", "k-th roots of a Gaussian rational");
    roots->add_option("--w", w, "Gaussian rational")->required();
    roots->add_option("--k", root_k, "root order")->required()->check(CLI::Range(1u, 100000u));
    roots->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (*verify) return run_verify(verify_eq, f, numeric, tol, points, seed, as_json);
    if (*classify) return run_classify(classify_eq, as_json);
    if (*construct) {
        std::vector<std::pair<std::string, std::string>> params;
        for (std::size_t i = 0; i < param_names.size(); ++i)
            if (param_opts[i]->count() > 0) params.emplace_back(param_names[i], param_values[i]);
        return run_construct(family, params, as_json);
    }
    if (*degree) return run_degree(expr, as_json);
    if (*roots) return run_roots(w, root_k, as_json);
    return kExitError;
}
