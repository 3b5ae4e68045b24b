// Self-consistent bound-state energies.
//
// The energy enters lambda, the radial coupling and the prefactor, so the
// eigenvalue relation
//
//   E - M = c sqrt(s K / (E + M)) {2 n_r + 1 + sqrt(1/4 + s 2A (E + M) + lambda(E))}
//
// (s = +1 spin, -1 pseudo-spin) is transcendental in E.  It is solved by
// scanning for sign changes and bisecting the selected bracket.
#ifndef RSPHO_SPECTRUM_HPP
#define RSPHO_SPECTRUM_HPP

#include <utility>

#include "rspho/model.hpp"

namespace rspho::spectrum {

/// Which bracketed root to return; index 0 is the smallest.
struct RootSelection {
    int index = 0;

    static constexpr RootSelection smallest() { return {0}; }
};

struct SolverOptions {
    double abs_tol_E = 1e-12;
    int scan_points = 512;
    /// Upper end of the scan above M; non-positive selects 100 sqrt(|K|).
    double E_max_offset = 0.0;
    RootSelection root_selection{};
    int max_iterations = 200;
};

struct SolveResult {
    double E = 0.0;
    double lambda = 0.0;
    double delta = 0.0;
    double big_delta = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::pair<double, double> bracket{0.0, 0.0};
    int root_count_in_scan = 0;
};

/// Closed interval of energies on which the affine radicands are non-negative
/// (E + M > 0 and the angular radicand of lambda).  The outer radicand of the
/// residual is not affine and is checked pointwise.
struct ValidityWindow {
    double low = 0.0;
    double high = 0.0;
    bool empty() const { return !(low <= high); }
};

ValidityWindow validity_window(const SolveRequest& request);

/// f(E); throws DomainError outside the validity region, naming the radicand.
double energy_residual(double E, const SolveRequest& request);

SolveResult solve_energy(const SolveRequest& request, const SolverOptions& options = {});

/// Explicit non-relativistic limit (E - M -> E_NR, E + M -> 2 mu).
double nonrelativistic_energy(const PotentialParams& params, double mu, const QuantumNumbers& qn,
                              BranchSign branch, Convention convention);

}  // namespace rspho::spectrum

#endif  // RSPHO_SPECTRUM_HPP
