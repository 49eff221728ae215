// Acceptance criteria 1-10: one PASS/FAIL line each, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fermat/classify.hpp"
#include "fermat/engine.hpp"
#include "fermat/error.hpp"
#include "fermat/parser.hpp"
#include "fixtures.hpp"
#include "support.hpp"
#include "sweeps.hpp"

using namespace fermat;
using testgen::Gen;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kSweepSeconds = 60.0;
constexpr int kSweepInstances = 50;
constexpr double kNumericTol = 1e-9;
constexpr unsigned kNumericPoints = 20;
constexpr std::uint64_t kSeed = 42;
constexpr double kDerivativeRelTol = 1e-6;
constexpr double kFiniteDifferenceStep = 1e-5;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome verify_fixture(const fixtures::Fixture& fx) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = verify_exact(fx.equation(), fx.candidate());
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << rep.verdict_text() << ", residual " << print_canonical(rep.residual) << ", " << dt << " s";
    return {rep.verified && rep.residual.is_zero() && dt < kExampleSeconds, os.str()};
}

Degree growth_degree(const RatFun& r) {
    if (r.is_zero()) return Degree::neg_infinity();
    Complex z1 = std::polar(1e3, 0.41), z2 = std::polar(1e5, 0.41);
    return Degree(std::lround((std::log(std::abs(r.eval(z2))) - std::log(std::abs(r.eval(z1)))) / std::log(1e2)));
}

std::pair<Degree, Degree> balance_oracle(const FermatEquation& eq, const RatFun& R1) {
    Degree lhs = static_cast<long>(eq.m * eq.k) * growth_degree(RatFun(eq.alpha.derivative()));
    Degree rhs = growth_degree(eq.Q - pow(R1, eq.m)) - static_cast<long>(eq.m) * growth_degree(eq.R * R1);
    return {lhs, rhs};
}

Outcome criterion1() { return verify_fixture(fixtures::example1()); }
Outcome criterion2() { return verify_fixture(fixtures::example2(true)); }
Outcome criterion3() { return verify_fixture(fixtures::intro_example()); }

Outcome criterion4() {
    auto ex1 = fixtures::example1().equation();
    auto ex2 = fixtures::example2(true).equation();
    RatFun r1 = parse_ratfun("(z-1)/(z+1)"), r2 = parse_ratfun("z+1"), one(1);
    auto d1 = degree_condition(ex1, r1);
    auto d2 = degree_condition(ex2, r2);
    auto dc = degree_condition(ex2, one);
    auto o1 = balance_oracle(ex1, r1), o2 = balance_oracle(ex2, r2), oc = balance_oracle(ex2, one);
    bool ok = d1.lhs == Degree(0) && d1.rhs == Degree(0) && d2.lhs == Degree(6) && d2.rhs == Degree(6) &&
              d1.lhs == o1.first && d1.rhs == o1.second && d2.lhs == o2.first && d2.rhs == o2.second &&
              !dc.equal() && dc.lhs == oc.first && dc.rhs == oc.second;
    auto d1c = degree_condition(ex1, one);
    std::ostringstream os;
    os << "first example " << d1.lhs.to_string() << "=" << d1.rhs.to_string() << ", second example "
       << d2.lhs.to_string() << "=" << d2.rhs.to_string() << ", R1 = 1 on second example " << dc.lhs.to_string()
       << " vs " << dc.rhs.to_string() << " (on first example " << d1c.lhs.to_string() << " vs "
       << d1c.rhs.to_string() << ")";
    return {ok, os.str()};
}

Outcome criterion5() {
    int cells = 0, mismatches = 0;
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned n = 1; n <= 5; ++n)
            for (unsigned k = 1; k <= 3; ++k) {
                if (m == n || m + n <= 2) continue;
                ++cells;
                bool none = (m > n && n > 1) || (n > m && m > 1) || (m > n && n == 1) ||
                            (n > m && m == 1 && n >= k + 1);
                Verdict::Kind expected = none ? Verdict::Kind::NoTranscendentalSolution : Verdict::Kind::Unclassified;
                Verdict v = classify({m, n, k, RatFun(1), RatFun(1), Poly(2)});
                if (v.kind != expected || (!none && v.open_question != "Question 3")) ++mismatches;
            }
    return {mismatches == 0, std::to_string(cells) + " cells, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream os;
    bool ok = true;
    for (const auto& fam : sweeps::families()) {
        Gen g(kSeed + fam.tag.size() * 7919 + static_cast<unsigned char>(fam.tag.back()));
        int instances = 0, candidates = 0, exact = 0, bad = 0, attempts = 0;
        while (instances < kSweepInstances && attempts < 4 * kSweepInstances) {
            ++attempts;
            std::vector<Construction> out;
            try {
                out = construct(fam.tag, fam.draw(g));
            } catch (const FamilyError& e) {
                if (!e.is_empty_family()) ++bad;
                continue;
            }
            ++instances;
            for (const auto& c : out) {
                ++candidates;
                bool verified;
                if (c.exact) {
                    ++exact;
                    verified = verify_exact(*c.exact_equation, *c.exact).verified;
                } else {
                    auto rep = verify_numeric(c.equation, c.candidate, {kNumericTol, kNumericPoints, kSeed});
                    verified = rep.verified && rep.max_residual < kNumericTol;
                }
                if (!verified) ++bad;
            }
        }
        if (instances < kSweepInstances || bad > 0) ok = false;
        os << fam.tag << " " << instances << "/" << candidates << "/" << exact << "/" << bad << " ";
    }
    double dt = seconds_since(t0);
    os << "(instances/candidates/exact/failed), " << dt << " s";
    return {ok && dt < kSweepSeconds, os.str()};
}

Outcome criterion7() {
    auto fx = fixtures::sine();
    auto rep = verify_exact(fx.equation(), fx.candidate());
    auto d = canonical_decompose(fx.equation(), fx.candidate());
    bool pair = d.u == parse_exppoly("exp(i*z)") && d.v == parse_exppoly("exp(-i*z)");
    bool product = (d.u * d.v - rhs_expand(fx.equation())).is_zero();
    return {rep.verified && pair && product && d.product_matches,
            "u = " + print_canonical(d.u) + ", v = " + print_canonical(d.v)};
}

Outcome criterion8() {
    auto fx = fixtures::t24e_example();
    auto rep = verify_exact(fx.equation(), fx.candidate());
    FamilyParams p;
    p.R = parse_ratfun(fx.R);
    p.P = parse_poly("z^2");
    auto out = construct("T24_E", p);
    if (out.size() != 1) return {false, "expected one construction"};
    const auto& c = out[0];
    auto has = [](const std::vector<std::string>& v, const std::string& s) {
        for (const auto& x : v)
            if (x.find(s) != std::string::npos) return true;
        return false;
    };
    Complex t = c.candidate.bindings.at("t");
    bool t_minus_one = std::abs(t + 1.0) == 0.0;
    bool sides = has(c.side_conditions, "t = -1, k = 1 odd") && has(c.side_conditions, "k*deg(P') = -deg(R) = 1");
    bool flagged = has(c.notes, "R = 1/P'");
    bool same = c.exact && *c.exact == fx.candidate();
    return {rep.verified && t_minus_one && sides && flagged && same && c.report.verified,
            "note: " + (c.notes.empty() ? std::string("none") : c.notes[0])};
}

Outcome criterion9() {
    std::vector<std::string> failed;
    Gen g(kSeed);
    // degree rules
    for (int t = 0; t < 500; ++t) {
        RatFun r = g.ratfun(4, 3, true), s = g.ratfun(4, 3, true);
        Degree dmax = r.degree() < s.degree() ? s.degree() : r.degree();
        if (!((r * s).degree() == r.degree() + s.degree() && (r / s).degree() == r.degree() - s.degree() &&
              r.derivative().degree() <= r.degree() - Degree(1) && (r.derivative() / r).degree() <= Degree(-1) &&
              (r + s).degree() <= dmax)) {
            failed.push_back("degree rules");
            break;
        }
    }
    // Leibniz and finite differences
    for (int t = 0; t < 100; ++t) {
        ExpPoly a = g.exppoly(4, 3, true), b = g.exppoly(4, 3, true);
        if (!((a * b).derivative() == a.derivative() * b + a * b.derivative())) {
            failed.push_back("Leibniz");
            break;
        }
        bool fd_ok = true;
        for (int s = 0; s < 10; ++s) {
            Complex z = g.disc(1.0);
            const double h = kFiniteDifferenceStep;
            Complex fd = (a.eval(z + h) - a.eval(z - h)) / (2.0 * h);
            if (testgen::rel_err(fd, a.derivative().eval(z)) >= kDerivativeRelTol) fd_ok = false;
        }
        if (!fd_ok) {
            failed.push_back("finite differences");
            break;
        }
    }
    // Lindemann fixture
    if (!parse_exppoly("exp(z+1) - exp(1)*exp(z)").is_zero()) failed.push_back("Lindemann");
    // round trips
    for (int t = 0; t < 500; ++t) {
        ParsedExpr p = g.poly(6, false, 20, 9);
        ParsedExpr r = g.proper_ratfun();
        ParsedExpr e = minimal(g.exppoly());
        if (!(parse(print_canonical(p)) == p && parse(print_canonical(r)) == r && parse(print_canonical(e)) == e)) {
            failed.push_back("round trip");
            break;
        }
    }
    // leading term (P')^k
    for (int t = 0; t < 50 && failed.empty(); ++t) {
        Poly P = g.poly_of_degree(static_cast<unsigned>(g.integer(1, 4)), 3, 2).without_constant();
        if (P.is_constant()) continue;
        ExpPoly e = ExpPoly::from_term(RatFun(1), P);
        for (unsigned k = 1; k <= 5; ++k) {
            ExpPoly dk = e.derivative(k);
            const RatFun& ck = dk.terms().begin()->second.terms().begin()->second;
            Poly top = pow(P.derivative(), k);
            if (!dk.is_single_term() || !ck.is_polynomial() || ck.degree() != top.degree() ||
                !(ck.num().leading() / ck.den().leading() == top.leading())) {
                failed.push_back("leading term");
                break;
            }
        }
    }
    std::string detail = failed.empty() ? "all suites hold" : "failed:";
    for (const auto& f : failed) detail += " " + f;
    return {failed.empty(), detail};
}

Outcome criterion10() {
    std::ostringstream os;
    bool ok = true;
    for (const auto& fx : {fixtures::example1(), fixtures::example2(true), fixtures::intro_example(), fixtures::sine(),
                           fixtures::t24e_example()}) {
        auto eq = fx.equation();
        bool exact = verify_exact(eq, fx.candidate()).verified;
        auto num = verify_numeric(eq, NumericCandidate::from_exact(fx.candidate()), {kNumericTol, kNumericPoints, kSeed});
        if (num.verified != exact) ok = false;
        os << fx.name << " " << (exact ? "V" : "R") << (num.verified ? "V" : "R") << " ";
    }
    return {ok, os.str() + "(exact/numeric)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"example m=2 verifies exactly", criterion1},
        {"example m=3 verifies exactly", criterion2},
        {"m=n=1 example verifies exactly", criterion3},
        {"degree balance", criterion4},
        {"nonexistence truth table", criterion5},
        {"constructor soundness sweep", criterion6},
        {"sine instance and decomposition", criterion7},
        {"T24_E exact instance", criterion8},
        {"property suites", criterion9},
        {"exact/numeric agreement", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
