#include "mazer/dressed.hpp"

#include <cmath>

namespace mazer {

CouplingMatrix coupling_matrix(const SystemParams& params) {
    validate(params);
    const double root_nm1 = std::sqrt(params.n_atoms - 1.0);
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(0, 2) = 1.0;
    m(1, 2) = root_nm1;
    m(2, 0) = 1.0;
    m(2, 1) = root_nm1;
    return {m};
}

DressedEigensystem dressed_eigensystem(const SystemParams& params) {
    validate(params);
    const double n = params.n_atoms;
    const double root_n = std::sqrt(n);
    const double inv_root_2n = 1.0 / std::sqrt(2.0 * n);
    const double root_nm1 = std::sqrt(n - 1.0);
    const double inv_root_2 = 1.0 / std::sqrt(2.0);

    DressedEigensystem sys;
    sys.values = {root_n, 0.0, -root_n};
    // |Psi(+-)> = (|1> + sqrt(N-1)|j>)/sqrt(2N) +- |0>/sqrt(2)
    sys.vectors.col(0) << inv_root_2n, root_nm1 * inv_root_2n, inv_root_2;
    // |Psi(0)> = (sqrt(N-1)|1> - |j>)/sqrt(N), photonless dark state
    sys.vectors.col(1) << root_nm1 / root_n, -1.0 / root_n, 0.0;
    sys.vectors.col(2) << inv_root_2n, root_nm1 * inv_root_2n, -inv_root_2;
    return sys;
}

std::array<double, 3> bare_state_decomposition(const SystemParams& params) {
    validate(params);
    const double n = params.n_atoms;
    const double inv_root_2n = 1.0 / std::sqrt(2.0 * n);
    return {inv_root_2n, std::sqrt((n - 1.0) / n), inv_root_2n};
}

}  // namespace mazer
