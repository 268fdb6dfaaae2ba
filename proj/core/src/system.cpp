#include "mazer/system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mazer {

void validate(const SystemParams& params) {
    if (params.n_atoms < 1) {
        throw std::invalid_argument("n_atoms must be >= 1, got " +
                                    std::to_string(params.n_atoms));
    }
    if (!std::isfinite(params.u) || params.u <= 0.0) {
        // u = 0 is singular in the internal momenta, not a limit we take.
        throw std::invalid_argument("u must be finite and > 0, got " +
                                    std::to_string(params.u));
    }
    if (!std::isfinite(params.s) || params.s < 0.0) {
        throw std::invalid_argument("s must be finite and >= 0, got " +
                                    std::to_string(params.s));
    }
}

}  // namespace mazer
