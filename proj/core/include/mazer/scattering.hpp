#pragma once

#include <complex>

#include "mazer/system.hpp"

namespace mazer {

using Complex = std::complex<double>;

// Dressed channel selector: `plus` is the induced barrier +sqrt(N), `minus`
// the induced well -sqrt(N).
enum class Branch { plus, minus };

// Reflection/transmission of a single rectangular potential of height
// -/+ sqrt(N) and width s, seen at outside momentum u. Flux-conserving:
// |rho|^2 + |tau|^2 = 1.
struct MesaAmplitudes {
    Complex rho;  // reflection amplitude
    Complex tau;  // transmission amplitude
    Complex xi;   // internal wave number, principal sqrt(u^2 -/+ sqrt(N))
};

// Bare-basis scattering amplitudes of the full three-channel problem.
struct ChannelAmplitudes {
    Complex r1, rj, r0;  // reflected into |1>, |j>, |0>
    Complex t1, tj, t0;  // transmitted into |1>, |j>, |0>
};

struct ChannelProbabilities {
    double p_t1, p_r1, p_tj, p_rj, p_t0, p_r0;
    double p1, pj, p0;  // per-state totals |R(s)|^2 + |T(s)|^2
};

MesaAmplitudes mesa_amplitudes(Branch branch, const SystemParams& params);

ChannelAmplitudes channel_amplitudes(const SystemParams& params);

ChannelProbabilities channel_probabilities(const ChannelAmplitudes& amps);

// Slow-atom (u^2 << sqrt(N)) closed form for the excited-atom transmission
// probability. Computed unconditionally; validity is the caller's concern.
double slow_limit_transmission(const SystemParams& params);

// Envelope of the slow-atom transmission for N > 1:
// maxima (1 - 1/(2N))^2 at s*N^(1/4) = 2*pi*n,
// minima (1 - 3/(2N))^2 at s*N^(1/4) = (2n+1)*pi.
struct TransmissionExtrema {
    double p_max;
    double p_min;
};

// Throws std::invalid_argument for n_atoms <= 1.
TransmissionExtrema transmission_extrema(int n_atoms);

// Fast-atom (u^2 >> sqrt(N)) state populations after crossing, from the
// interaction phase phi = s*sqrt(N)/(2u).
struct FastLimitProbabilities {
    double p1;
    double pj;
    double p0;
};

FastLimitProbabilities fast_limit_probabilities(const SystemParams& params);

namespace detail {

// Rectangular-potential amplitudes as a function of the internal wave
// number. rho and tau depend on xi only through even combinations, so
// flipping the sign of xi must leave them unchanged.
MesaAmplitudes mesa_from_xi(Complex xi, double u, double s);

}  // namespace detail

}  // namespace mazer
