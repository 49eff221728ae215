#include <algorithm>
#include <json.hpp>

#include "fermat/classify.hpp"
#include "fermat/error.hpp"

namespace fermat {

namespace {

const std::map<std::string, FamilyDescriptor>& descriptors() {
    static const std::map<std::string, FamilyDescriptor> table = {
        {"T23_A1",
         {"T23_A1",
          "2.3",
          {{"a", "nonzero constant"}, {"b", "constant"}, {"d", "nonzero constant"}},
          {"d^2*(R*(a/2)^k - i) = R*(a/2)^k + i"},
          {"m = 2", "Q = 1", "R nonzero constant", "alpha = a*z + b"},
          "(d^2 - 1)/(2*i*d)*exp((a*z + b)/2)"}},
        {"T23_A2",
         {"T23_A2",
          "2.3",
          {{"a1", "constant"}, {"a2", "constant"}, {"b1", "nonzero constant"}, {"b2", "constant"}},
          {"R*(a1/2 + i*b1)^k = i", "R*(a1/2 - i*b1)^k = -i"},
          {"m = 2", "Q = 1", "R nonzero constant", "alpha = a1*z + a2", "k odd if a1 = 0"},
          "exp((a1*z + a2)/2)*sin(b1*z + b2)"}},
        {"T23_B",
         {"T23_B",
          "2.3",
          {{"a", "nonzero constant"}, {"b", "constant"}, {"c", "nonzero constant"}},
          {"c^m*(R^m*(a/m)^(k*m) + 1) = 1"},
          {"m >= 3", "Q = 1", "R nonzero constant", "alpha = a*z + b"},
          "c*exp((a*z + b)/m)"}},
        {"T24_A",
         {"T24_A",
          "2.4",
          {{"R1", "nonzero rational function"}},
          {"m*k*deg(alpha') = deg(Q - R1^m) - m*deg(R*R1)",
           "R1^m + R^m*exp(-alpha)*((R1*exp(alpha/m))^(k))^m = Q"},
          {"m = n >= 2", "alpha nonconstant"},
          "R1*exp(alpha/m)"}},
        {"T24_B",
         {"T24_B",
          "2.4",
          {{"Q1", "rational function"}, {"Q2", "rational function"}, {"d", "nonzero constant"}},
          {"Q1*Q2 = Q", "d^2*Q1 - Q2 != 0"},
          {"m = 2", "alpha nonconstant"},
          "(d^2*Q1 - Q2)/(2*i*d)*exp(alpha/2)"}},
        {"T24_C",
         {"T24_C",
          "2.4",
          {{"a1", "constant"},
           {"a2", "constant"},
           {"b1", "constant"},
           {"b2", "constant"},
           {"Q1", "constant"},
           {"Q2", "constant"}},
          {"A*a1^k = i", "A*a2^k = -i", "Q1*Q2 = Q", "alpha = (a1 + a2)*z + b1 + b2"},
          {"m = 2", "R = A constant", "Q constant", "k odd if alpha constant"},
          "(Q1*exp(a1*z + b1) - Q2*exp(a2*z + b2))/(2*i)"}},
        {"T24_D",
         {"T24_D",
          "2.4",
          {{"a1", "nonzero constant"},
           {"a2", "nonzero constant"},
           {"b1", "constant"},
           {"b2", "constant"},
           {"Q1", "nonconstant rational function"},
           {"Q2", "nonconstant rational function"}},
          {"a1^k + a2^k = 0", "Q1*Q2 = Q", "alpha = (a1 + a2)*z + b1 + b2"},
          {"m = 2", "deg(R) = 0", "R nonconstant", "Q = B constant", "k odd if alpha constant"},
          "(Q1*exp(a1*z + b1) - Q2*exp(a2*z + b2))/(2*i)"}},
        {"T24_E",
         {"T24_E",
          "2.4",
          {{"P", "nonconstant polynomial"},
           {"t", "constant"},
           {"c", "constant"},
           {"Q1", "rational function"},
           {"Q2", "rational function"}},
          {"t^k = -1", "(t + 1)*P' = alpha'", "k*deg(P') = -deg(R)", "Q1*Q2 = Q"},
          {"m = 2", "deg(R) < 0", "t = -1 and k odd if alpha constant",
           "Q1, Q2, Q polynomials if every zero of R has multiplicity <= k - 1",
           "Q constant if k = 1"},
          "(Q1*exp(t*P + c) - Q2*exp(P))/(2*i)"}},
    };
    return table;
}

const std::vector<std::string> kHypotheses = {"(i) ρ(f)=∞", "(ii) deg α = 0", "(iii) deg α < μ(f)"};

nlohmann::json descriptor_json(const FamilyDescriptor& d) {
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : d.free_parameters) params.push_back({{"name", p.name}, {"domain", p.domain}});
    return {{"tag", d.tag},
            {"theorem", d.theorem},
            {"free_parameters", params},
            {"constraints", d.constraints},
            {"side_conditions", d.side_conditions},
            {"template", d.template_text}};
}

bool is_polynomial_nonconstant(const RatFun& r) { return r.is_polynomial() && !r.is_constant(); }

}  // namespace

const std::vector<std::string>& family_tags() {
    static const std::vector<std::string> tags = {"T23_A1", "T23_A2", "T23_B", "T24_A",
                                                  "T24_B",  "T24_C",  "T24_D", "T24_E"};
    return tags;
}

FamilyDescriptor family_descriptor(const std::string& tag) {
    auto it = descriptors().find(tag);
    if (it == descriptors().end()) throw PreconditionViolated("unknown family tag " + tag);
    return it->second;
}

std::string Verdict::kind_text() const {
    switch (kind) {
        case Kind::NoTranscendentalSolution: return "NoTranscendentalSolution";
        case Kind::NoRationalSolution: return "NoRationalSolution";
        case Kind::Families: return "Families";
        case Kind::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::string Verdict::to_json() const {
    nlohmann::json j;
    j["verdict"] = kind_text();
    j["theorem"] = theorem.empty() ? nlohmann::json(nullptr) : nlohmann::json(theorem);
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : families) fams.push_back(descriptor_json(f));
    j["families"] = fams;
    j["hypotheses"] = hypotheses;
    j["reason"] = reason;
    j["notes"] = notes;
    j["open_question"] = open_question.empty() ? nlohmann::json(nullptr) : nlohmann::json(open_question);
    return j.dump();
}

bool exponent_gate(unsigned m, unsigned n) {
    // 1/m + 1/n >= 1  <=>  m + n >= m n
    return static_cast<unsigned long long>(m) + n >= static_cast<unsigned long long>(m) * n;
}

Verdict nonexistence(unsigned m, unsigned n, unsigned k, bool alpha_constant) {
    if (m == 0 || n == 0 || k == 0) throw PreconditionViolated("m, n and k must be positive");
    if (m == n) throw PreconditionViolated("nonexistence gate requires m != n");
    if (m + n <= 2) throw PreconditionViolated("nonexistence gate requires m + n > 2");
    Verdict v;
    v.theorem = "2.1";
    std::string clause;
    if ((m > n && n > 1) || (n > m && m > 1)) {
        clause = "(i) m > n > 1 or n > m > 1";
    } else if (m > n) {
        clause = "(ii) m > n = 1";
    } else if (n >= k + 1) {
        clause = "(ii) n > m = 1 and n >= k + 1";
    } else {
        v.kind = Verdict::Kind::Unclassified;
        v.reason = "n > m = 1 and n <= k is not decided";
        v.open_question = "Question 3";
        return v;
    }
    v.kind = Verdict::Kind::NoTranscendentalSolution;
    if (alpha_constant) {
        v.reason = "no transcendental meromorphic solution: " + clause;
    } else {
        v.reason = "no transcendental meromorphic solution satisfying one of the growth hypotheses: " + clause;
        v.hypotheses = kHypotheses;
        v.notes.push_back("the case 0 < deg(alpha) = mu(f) is not decided (Question 2)");
    }
    return v;
}

std::optional<Verdict> preliminary(const FermatEquation& eq) {
    if (eq.alpha.is_constant()) return std::nullopt;
    Verdict v;
    v.kind = Verdict::Kind::NoRationalSolution;
    v.reason = "no rational solution since alpha is nonconstant";
    return v;
}

Verdict classify(const FermatEquation& eq) {
    eq.validate();
    std::vector<std::string> notes;
    if (auto pre = preliminary(eq)) notes.push_back(pre->reason);
    bool alpha_const = eq.alpha.is_constant();

    if (eq.m != eq.n) {
        Verdict v = nonexistence(eq.m, eq.n, eq.k, alpha_const);
        v.notes.insert(v.notes.begin(), notes.begin(), notes.end());
        return v;
    }
    if (eq.m == 1) {
        Verdict v;
        v.kind = Verdict::Kind::Unclassified;
        v.reason = "m = n = 1 lies outside m + n > 2; candidates can still be verified";
        v.notes = notes;
        return v;
    }

    notes.push_back("no meromorphic solution of infinite order");
    if (alpha_const) notes.push_back("rational solutions are not excluded when alpha is constant");

    if (eq.Q == RatFun(1) && is_polynomial_nonconstant(eq.R)) {
        Verdict v;
        v.kind = Verdict::Kind::NoTranscendentalSolution;
        v.theorem = "2.3";
        v.reason = "Q = 1 and R is a polynomial, so a solution forces R to be constant, but R is nonconstant";
        v.notes = notes;
        return v;
    }

    const unsigned m = eq.m;
    const unsigned k = eq.k;
    const Degree deg_alpha = eq.alpha.degree();
    const Degree deg_R = eq.R.degree();
    const bool R_const = eq.R.is_constant();
    const bool Q_const = eq.Q.is_constant();
    const bool k_odd = k % 2 == 1;
    const bool linear_alpha = deg_alpha <= Degree(1);
    const std::string parity = alpha_const ? "k = " + std::to_string(k) + " odd (alpha constant)" : "";

    std::vector<FamilyDescriptor> fams;
    auto emit = [&](const std::string& tag, std::vector<std::string> extra) {
        FamilyDescriptor d = family_descriptor(tag);
        for (auto& e : extra) {
            if (!e.empty()) d.side_conditions.push_back(std::move(e));
        }
        fams.push_back(std::move(d));
    };

    if (eq.Q == RatFun(1) && R_const) {
        if (m == 2 && deg_alpha == Degree(1)) emit("T23_A1", {});
        if (m == 2 && linear_alpha && (!alpha_const || k_odd)) emit("T23_A2", {parity});
        if (m >= 3 && deg_alpha == Degree(1)) emit("T23_B", {});
    }
    if (!alpha_const) emit("T24_A", {});
    if (m == 2) {
        if (!alpha_const) emit("T24_B", {});
        if (R_const && Q_const && linear_alpha && (!alpha_const || k_odd)) emit("T24_C", {parity});
        if (deg_R == Degree(0) && !R_const && Q_const && linear_alpha && (!alpha_const || k_odd)) {
            emit("T24_D", {parity});
        }
        if (deg_R < Degree(0)) {
            long r = -deg_R.value();
            bool ok = r % static_cast<long>(k) == 0;
            std::vector<std::string> extra;
            if (alpha_const) {
                ok = ok && k_odd;
                extra.push_back("t = -1, " + parity);
            } else {
                long p_deg = 1 + r / static_cast<long>(k);
                ok = ok && deg_alpha == Degree(p_deg);
                extra.push_back("deg(P) = deg(alpha) = " + std::to_string(p_deg));
            }
            if (k == 1) {
                ok = ok && Q_const;
                extra.push_back("Q constant (k = 1)");
            }
            if (max_root_multiplicity(eq.R.num()) + 1 <= k) {
                ok = ok && eq.Q.is_polynomial();
                extra.push_back("Q polynomial (zeros of R have multiplicity <= k - 1)");
            }
            if (ok) emit("T24_E", std::move(extra));
        }
    }

    Verdict v;
    v.notes = notes;
    if (fams.empty()) {
        v.kind = Verdict::Kind::NoTranscendentalSolution;
        v.theorem = "2.4";
        v.reason = "no solution family is compatible with R, Q and alpha";
        return v;
    }
    v.kind = Verdict::Kind::Families;
    v.theorem = std::min_element(fams.begin(), fams.end(), [](const auto& a, const auto& b) {
                    return a.theorem < b.theorem;
                })->theorem;
    v.reason = "candidate families: " + std::to_string(fams.size());
    v.families = std::move(fams);
    return v;
}

}  // namespace fermat
