#pragma once

#include "mazer/scattering.hpp"

namespace mazer {

// Gaussian momentum distribution |A(chi)|^2 of the incident wave packet,
// in units of kappa.
struct PacketSpec {
    double u_mean = 1.0;
    double u_sigma = 0.0;
    int quadrature_points = 129;
};

// Throws std::invalid_argument naming the offending field.
void validate(const PacketSpec& packet);

// Incoherent average of the stationary scattering probabilities over the
// packet's momentum distribution. The grid spans u_mean +/- 5 sigma clipped
// to u > 0, with trapezoid-weighted Gaussian weights renormalized to sum to
// one; u_sigma = 0 degenerates to the point evaluation at u_mean.
ChannelProbabilities averaged_probabilities(const PacketSpec& packet, int n_atoms,
                                            double s);

}  // namespace mazer
