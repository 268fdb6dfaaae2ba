#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mazer/oracle.hpp"
#include "mazer/scattering.hpp"
#include "mazer/wavepacket.hpp"

namespace mazer {

enum class SweepMode { exact, slow_limit, fast_limit, averaged, oracle };

struct SRange {
    double start = 0.0;
    double stop = 12.0;
    int points = 1201;
};

struct SweepSpec {
    std::vector<int> n_values;
    std::vector<double> u_values;
    SRange s_range;
    SweepMode mode = SweepMode::exact;
    // Averaged mode only; u_mean is taken from the sweep's u grid.
    std::optional<PacketSpec> packet;
    // Oracle mode only.
    std::optional<OracleConfig> oracle;
};

// One row of the flat CSV schema. Modes that model only part of the
// quantities leave the others at zero (slow fills p_t1 alone, fast fills the
// per-state totals alone).
struct SweepRecord {
    int n_atoms = 0;
    double u = 0.0;
    double s = 0.0;
    double p_t1 = 0.0, p_r1 = 0.0, p_tj = 0.0, p_rj = 0.0, p_t0 = 0.0, p_r0 = 0.0;
    double p1 = 0.0, pj = 0.0, p0 = 0.0;
    double unitarity_residual = 0.0;
};

// Throws std::invalid_argument naming the offending field.
void validate(const SweepSpec& spec);

// Evaluates the Cartesian product of (n, u, s) in the requested mode.
// Records come back in lexicographic (n, u, s) grid order regardless of how
// many workers ran; MAZER_THREADS caps the pool (0 or unset = auto).
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

enum class FigureId { fig2, fig3 };

// Canned sweeps behind the `figure` CLI subcommand: fig2 is the exact
// transmission at u = 0.03 for N in {1, 3, 8, 100}; fig3 pairs (N=100,
// u=1.01) with (N=2000, u=5). Both use s in [0, 12] at 1201 points.
std::vector<SweepRecord> figure(FigureId which);

std::string csv_header();
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

}  // namespace mazer
