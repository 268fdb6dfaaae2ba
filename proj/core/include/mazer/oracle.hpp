#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

#include "mazer/scattering.hpp"
#include "mazer/system.hpp"

namespace mazer {

struct OracleConfig {
    int steps = 4096;      // fixed integration steps across [0, s]
    int scheme_order = 4;  // nominal order of the stepping scheme
};

// Throws std::invalid_argument (steps < 100 or scheme_order != 4).
void validate(const OracleConfig& config);

// The boundary-matching system is numerically singular: either the barrier
// is so opaque that the evanescent growth swamps double precision, or the
// grid is too coarse near a resonance. Carries the condition estimate.
class SingularMatchingError : public std::runtime_error {
public:
    SingularMatchingError(const std::string& what, double condition)
        : std::runtime_error(what), condition_(condition) {}

    double condition_number() const { return condition_; }

private:
    double condition_;
};

// Brute-force cross-check of the closed forms: integrates the stationary
// coupled equations psi'' = (M - u^2 I) psi across the cavity in the bare
// basis (no dressed-state diagonalization anywhere) and matches plane waves
// on both sides for the six amplitudes.
ChannelAmplitudes solve_coupled_channels(const SystemParams& params,
                                         const OracleConfig& config = {});

struct ConvergencePoint {
    int steps;
    double max_amplitude_error;  // max modulus difference vs the closed forms
};

// Runs the solver at each rung of a strictly increasing step ladder and
// reports the worst amplitude error against channel_amplitudes().
std::vector<ConvergencePoint> convergence_study(const SystemParams& params,
                                                const std::vector<int>& step_ladder);

namespace detail {

struct OracleAmplitudes {
    Eigen::Vector3cd reflection;
    Eigen::Vector3cd transmission;
};

// Same machinery for an arbitrary symmetric channel matrix and incoming
// state vector; amplitudes come back in the basis of `coupling`.
OracleAmplitudes solve_channels(const Eigen::Matrix3d& coupling,
                                const Eigen::Vector3cd& incoming, double u, double s,
                                const OracleConfig& config);

}  // namespace detail

}  // namespace mazer
