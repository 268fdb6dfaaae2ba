#pragma once

namespace mazer {

// Dimensionless description of one scattering scenario: an excited atom with
// incident momentum hbar*chi crossing a cavity of length L that holds N-1
// ground-state atoms. Momenta are measured in units of the CM wave vector
// kappa (defined by (hbar*kappa)^2 / 2mu = hbar*g), lengths in units of
// 1/kappa and energies in units of hbar*g, so every observable depends on
// (n_atoms, u, s) alone.
struct SystemParams {
    int n_atoms = 1;  // total atom count N (moving atom + N-1 trapped atoms)
    double u = 1.0;   // incident momentum chi/kappa; must be > 0
    double s = 0.0;   // cavity length kappa*L; must be >= 0
};

// Throws std::invalid_argument naming the offending field.
void validate(const SystemParams& params);

}  // namespace mazer
