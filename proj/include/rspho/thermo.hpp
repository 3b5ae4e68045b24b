// Canonical thermodynamics over the non-relativistic bound spectrum.
//
// Sums are evaluated with energies shifted by the ground level E_0, so that
// Z = e^(-beta E_0) Z~ with Z~ = sum exp(-beta (E_n - E_0)) >= 1.  For N
// independent particles ln Z_N = N ln Z, which gives
//
//   F = -N ln Z / beta,  U = N <E>,  S = N k_B (ln Z + beta <E>),
//   C = N k_B beta^2 (<E^2> - <E>^2).
#ifndef RSPHO_THERMO_HPP
#define RSPHO_THERMO_HPP

#include <functional>
#include <span>
#include <stdexcept>

#include "rspho/model.hpp"

namespace rspho::thermo {

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTailTol = 1e-14;
inline constexpr int kMaxLevels = 1'000'000;

/// Energy of level n for n = 0, 1, 2, ...; must be strictly increasing.
using LevelSource = std::function<double(int)>;

struct PartitionSum {
    double Z = 0.0;
    double ln_Z = 0.0;
    int levels_used = 0;
};

struct ThermoPoint {
    double T = 0.0;
    double beta = 0.0;
    double Z = 0.0;
    double ln_Z = 0.0;
    double F = 0.0;
    double U = 0.0;
    double S = 0.0;
    double C = 0.0;
    int levels_used = 0;
};

struct ThermoOptions {
    int N = 1;
    double k_B = 1.0;
    double rel_tail_tol = kDefaultTailTol;
};

/// Z over finitely many levels (strictly ascending), truncated by the tail test.
PartitionSum partition_function(std::span<const double> levels, double beta, double rel_tail_tol = kDefaultTailTol);

/// Z over levels generated on demand; NonConvergence if kMaxLevels is reached.
PartitionSum partition_function(const LevelSource& levels, double beta, double rel_tail_tol = kDefaultTailTol);

ThermoPoint thermo_point(std::span<const double> levels, double T, const ThermoOptions& options = {});
ThermoPoint thermo_point(const LevelSource& levels, double T, const ThermoOptions& options = {});

/// Non-relativistic spectrum at fixed m with n_r = n_theta = n.
LevelSource nonrelativistic_levels(const PotentialParams& params, double mu, int m, BranchSign branch,
                                   Convention convention);

}  // namespace rspho::thermo

#endif  // RSPHO_THERMO_HPP
