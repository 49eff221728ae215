#include <json.hpp>

#include "fermat/engine.hpp"
#include "fermat/parser.hpp"

namespace fermat {

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["mode"] = mode_text();
    j["verdict"] = verdict_text();
    if (mode == Mode::Exact) {
        j["residual"] = print_canonical(residual);
    } else {
        j["residual"] = max_residual;
    }
    nlohmann::json samples_json = nlohmann::json::array();
    for (Complex z : samples) samples_json.push_back({z.real(), z.imag()});
    j["samples"] = samples_json;
    return j.dump();
}

}  // namespace fermat
