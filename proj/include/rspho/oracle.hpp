// Finite-difference Sturm-Liouville eigensolver used as an independent check
// on the closed-form spectra.
//
// -u'' + V(x) u = E u with Dirichlet ends is discretized on the interior
// points x_i = lower + i h, h = (upper - lower) / (points + 1), giving a
// symmetric tridiagonal matrix (diag 2/h^2 + V(x_i), off-diag -1/h^2).  The
// lowest eigenvalues are isolated by bisection on the Sturm count.
#ifndef RSPHO_ORACLE_HPP
#define RSPHO_ORACLE_HPP

#include <functional>
#include <span>
#include <vector>

namespace rspho::oracle {

struct GridSpec {
    double lower = 0.0;
    double upper = 1.0;
    int points = 2000;

    double step() const { return (upper - lower) / (points + 1); }
    double node(int i) const { return lower + (i + 1) * step(); }  ///< i-th interior point, 0-based
};

struct OracleReport {
    std::vector<double> computed;
    std::vector<double> predicted;
    std::vector<double> printed;  ///< angular only: (n + Q)^2, for comparison
    double max_rel_error = 0.0;
    GridSpec grid;
    bool converged = false;
};

inline constexpr double kRadialOrigin = 1e-6;
inline constexpr double kAngularEpsilon = 1e-6;
inline constexpr int kDefaultPoints = 4000;
inline constexpr double kConvergedRelError = 1e-3;

/// Number of eigenvalues of the tridiagonal matrix strictly below x.
int sturm_count(std::span<const double> diag, double off_diag, double x);

std::vector<double> fd_eigenvalues(const std::function<double(double)>& potential, const GridSpec& grid, int count);

/// Default radial grid: (1e-6, sqrt(E_max)/Delta + 6/sqrt(Delta)], E_max the
/// highest requested closed-form level.
GridSpec default_radial_grid(double delta_prime, double big_delta, int count, int points = kDefaultPoints);

/// Default angular grid (eps, pi - eps).
GridSpec default_angular_grid(int points = kDefaultPoints);

/// 2 Delta (2n + 1 + sqrt(1/4 + delta')).
double radial_level(double delta_prime, double big_delta, int n);

OracleReport verify_radial(double delta_prime, double big_delta, int count, const GridSpec& grid);
OracleReport verify_radial(double delta_prime, double big_delta, int count);

OracleReport verify_angular(double v0, int count, const GridSpec& grid);
OracleReport verify_angular(double v0, int count);

}  // namespace rspho::oracle

#endif  // RSPHO_ORACLE_HPP
