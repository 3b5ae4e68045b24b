// Polar-angle equation solved with supersymmetric quantum mechanics.
//
// With G(theta) = H(theta) / sqrt(sin theta) the polar equation becomes a
// trigonometric Poschl-Teller problem in cot^2(theta).  The superpotential
// W = -Q cot(theta) gives Q^2 - Q = V~, a shape-invariant partner pair with
// a_k = Q + k, and the separation constant lambda that feeds the radial
// equation.
#ifndef RSPHO_ANGULAR_HPP
#define RSPHO_ANGULAR_HPP

#include <span>
#include <vector>

#include "rspho/model.hpp"

namespace rspho::angular {

struct AngularSolution {
    double v_tilde = 0.0;
    double q = 0.0;
    double e_tilde_sum = 0.0;      ///< n^2 + 2nQ + Q (exact spectrum of the cot^2 operator)
    double e_tilde_printed = 0.0;  ///< (n + Q)^2, the bracket entering lambda
    double lambda = 0.0;
    int m = 0;
    int n_theta = 0;
};

struct ShapeInvarianceChain {
    std::vector<double> a;           ///< a_0 .. a_n, a_k = Q + k
    std::vector<double> remainders;  ///< R(a_1) .. R(a_n), R(a_k) = a_k^2 - a_{k-1}^2

    double remainder_sum() const;
};

struct PartnerPair {
    double v_plus = 0.0;
    double v_minus = 0.0;
};

/// Spin:        V~ = -2(E+M)(B+C) - m^2 + 1/4
/// Pseudo-spin: V~ = +2(E+M)(B+C) - m^2 + 1/4
double v_tilde(double E, double M, const PotentialParams& params, int m, Symmetry symmetry);

/// Q = 1/2 +- sqrt(1/4 + V~).  Throws DomainError when Q would be complex.
double q_of_vtilde(double v_tilde, BranchSign branch);

struct AngularSpectrum {
    double sum_form = 0.0;
    double printed_form = 0.0;
};

AngularSpectrum angular_spectrum(double q, int n_theta);

ShapeInvarianceChain shape_invariance_chain(double q, int n);

/// Separation constant lambda = [n + 1/2 +- sqrt(1/2 -+ 2(E+M)(B+C) - m^2)]^2 +- 2(E+M)(B+C) + m^2 - 1/2
/// (upper signs spin, lower signs pseudo-spin).
double lambda_separation(double E, double M, const PotentialParams& params, int m, int n_theta,
                         BranchSign branch, Symmetry symmetry);

/// Everything above bundled for one (E, m, n_theta).
AngularSolution solve_angular(double E, double M, const PotentialParams& params, int m, int n_theta,
                              BranchSign branch, Symmetry symmetry);

/// G_0(theta) proportional to sin^(q - 1/2)(theta), normalized so that
/// int_0^pi |G_0|^2 sin(theta) dtheta = 1.  Requires q > 1/2.
std::vector<double> angular_ground_state(double q, std::span<const double> theta_grid);

/// V_+- = W^2 +- W' for W = -q cot(theta):
///   V_+ = (q^2 + q) cot^2(theta) + q,  V_- = (q^2 - q) cot^2(theta) - q.
PartnerPair partner_potentials_angular(double q, double theta);

}  // namespace rspho::angular

#endif  // RSPHO_ANGULAR_HPP
