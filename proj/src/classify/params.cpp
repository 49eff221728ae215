#include <json.hpp>

#include "fermat/classify.hpp"
#include "fermat/error.hpp"
#include "fermat/parser.hpp"

namespace fermat {

namespace {

unsigned parse_unsigned(const std::string& name, const std::string& text) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || v > 1000000) {
        throw PreconditionViolated("parameter " + name + " must be a nonnegative integer");
    }
    return static_cast<unsigned>(v);
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json cpoly_json(const CPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (Complex c : p) out.push_back(complex_json(c));
    return out;
}

nlohmann::json construction_json(const Construction& c) {
    nlohmann::json j;
    j["tag"] = c.tag;
    j["theorem"] = c.theorem;
    j["template"] = c.candidate.shape;
    j["exact"] = c.exact ? nlohmann::json(print_canonical(*c.exact)) : nlohmann::json(nullptr);
    nlohmann::json bindings = nlohmann::json::object();
    for (const auto& [name, value] : c.candidate.bindings) bindings[name] = complex_json(value);
    j["bindings"] = bindings;
    nlohmann::json constraints = nlohmann::json::array();
    for (const auto& con : c.candidate.constraints) constraints.push_back(con.to_string());
    j["constraints"] = constraints;
    j["side_conditions"] = c.side_conditions;
    j["notes"] = c.notes;
    nlohmann::json eq;
    eq["m"] = c.equation.m;
    eq["n"] = c.equation.n;
    eq["k"] = c.equation.k;
    eq["R"] = c.equation.R.to_string();
    eq["Q"] = c.equation.Q.to_string();
    eq["alpha"] = c.exact_equation ? nlohmann::json(c.exact_equation->alpha.to_string())
                                   : cpoly_json(c.equation.alpha);
    j["equation"] = eq;
    j["verification"] = nlohmann::json::parse(c.report.to_json());
    return j;
}

}  // namespace

FamilyParams FamilyParams::from_text(const std::map<std::string, std::string>& values) {
    FamilyParams p;
    const std::map<std::string, std::optional<GaussianRational> FamilyParams::*> constants = {
        {"A", &FamilyParams::A},   {"a", &FamilyParams::a},   {"b", &FamilyParams::b},   {"d", &FamilyParams::d},
        {"c", &FamilyParams::c},   {"a1", &FamilyParams::a1}, {"a2", &FamilyParams::a2}, {"b1", &FamilyParams::b1},
        {"b2", &FamilyParams::b2}, {"t", &FamilyParams::t}};
    const std::map<std::string, std::optional<RatFun> FamilyParams::*> ratfuns = {
        {"R", &FamilyParams::R}, {"Q", &FamilyParams::Q}, {"R1", &FamilyParams::R1},
        {"Q1", &FamilyParams::Q1}, {"Q2", &FamilyParams::Q2}};
    const std::map<std::string, std::optional<Poly> FamilyParams::*> polys = {{"P", &FamilyParams::P},
                                                                             {"alpha", &FamilyParams::alpha}};
    const std::map<std::string, std::optional<unsigned> FamilyParams::*> ints = {
        {"m", &FamilyParams::m}, {"k", &FamilyParams::k}, {"root1", &FamilyParams::root1},
        {"root2", &FamilyParams::root2}};
    for (const auto& [name, text] : values) {
        if (auto it = constants.find(name); it != constants.end()) {
            p.*(it->second) = parse_constant(text);
        } else if (auto it = ratfuns.find(name); it != ratfuns.end()) {
            p.*(it->second) = parse_ratfun(text);
        } else if (auto it = polys.find(name); it != polys.end()) {
            p.*(it->second) = parse_poly(text);
        } else if (auto it = ints.find(name); it != ints.end()) {
            p.*(it->second) = parse_unsigned(name, text);
        } else {
            throw PreconditionViolated("unknown family parameter " + name);
        }
    }
    return p;
}

std::string Construction::to_json() const { return construction_json(*this).dump(); }

std::string constructions_to_json(const std::vector<Construction>& cs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cs) arr.push_back(construction_json(c));
    return arr.dump();
}

}  // namespace fermat
