// Radial equation  -R'' + (delta'/r^2 + Delta^2 r^2) R = E~ R  solved with the
// superpotential W = Delta r + delta / r.
#ifndef RSPHO_RADIAL_HPP
#define RSPHO_RADIAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rspho/model.hpp"

namespace rspho::radial {

/// Which energy combination multiplies K and A in the radial problem.
/// EnergyPlusMass is what the energy equations use in both symmetries.
/// EnergyMinusMass is the alternative (E - M) substitution for pseudo-spin
/// wavefunctions; it uses |K (E - M)| so that Delta stays real.
enum class MassCoupling { EnergyPlusMass, EnergyMinusMass };

struct RadialSolution {
    double delta = 0.0;        ///< negative root of delta^2 + delta = delta'
    double delta_prime = 0.0;  ///< strength of the 1/r^2 term
    double big_delta = 0.0;    ///< sqrt(|K| (E +- M))
    double e0_tilde = 0.0;     ///< Delta (1 - 2 delta)
    int n_r = 0;

    /// Orbital-like index with L (L + 1) = delta'.
    double L() const { return -delta - 1.0; }
};

struct WavefunctionSamples {
    std::vector<double> r;
    std::vector<double> values;
    double L = 0.0;
    double eta_scale = 0.0;      ///< eta / r
    double norm_constant = 0.0;  ///< N
};

struct PartnerPair {
    double v_plus = 0.0;
    double v_minus = 0.0;
};

RadialSolution radial_ansatz(double E, double M, double K, double A, double lambda, Symmetry symmetry,
                             MassCoupling coupling = MassCoupling::EnergyPlusMass);

/// Ansatz parameters directly from (delta', Delta), bypassing the energy mapping.
RadialSolution ansatz_from_coefficients(double delta_prime, double big_delta, int n_r = 0);

/// E~_n = Delta (1 - 2 delta) + 4 n Delta.
double radial_spectrum(double big_delta, double delta, int n_r);

PartnerPair partner_potentials_radial(double delta, double big_delta, double r);

/// Terminating confluent hypergeometric series 1F1(-n; b; z).
double kummer_1f1_terminating(int n, double b, double z);

/// Oscillator scale that pairs with a convention: the effective operator whose
/// spectrum is (c/2) E~_n has frequency c Delta / 2.
double effective_scale(double big_delta, Convention convention);

/// Eigenvalue of the effective oscillator with scale `delta_eff` and index L.
double effective_level(int n_r, double L, double delta_eff);

/// Uniform grid r_i = i r_max / points, i = 1..points.  A non-positive r_max
/// selects the turning point of level n_r plus four Gaussian widths.
std::vector<double> default_radial_grid(int n_r, double L, double delta_eff, std::size_t points = 4000,
                                        double r_max = 0.0);

/// Samples of N e^(-eta^2/2) r^(L+1) 1F1(-n_r, L + 3/2, eta^2), eta^2 = delta_eff r^2,
/// normalized by quadrature of R^2 dr.
WavefunctionSamples radial_wavefunction(int n_r, double L, double delta_eff, std::span<const double> r_grid);

/// Convenience overload taking Delta and the convention.
WavefunctionSamples radial_wavefunction(int n_r, double L, double big_delta, std::span<const double> r_grid,
                                        Convention convention);

/// Wavefunction of a solved bound state (E, lambda) of a request.
WavefunctionSamples bound_state_wavefunction(const SolveRequest& request, double E, double lambda,
                                             MassCoupling coupling = MassCoupling::EnergyPlusMass,
                                             std::size_t points = 4000, double r_max = 0.0);

/// Number of sign changes in a sample sequence, skipping exact zeros.
int count_nodes(std::span<const double> values);

}  // namespace rspho::radial

#endif  // RSPHO_RADIAL_HPP
