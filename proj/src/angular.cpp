#include "rspho/angular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rspho/quadrature.hpp"

namespace rspho::angular {

namespace {

constexpr double kEndpointExclusion = 1e-9;
constexpr int kNormIntervals = 1 << 15;

double ring_coupling(double E, double M, const PotentialParams& p, Symmetry s)
{
    return 2.0 * (E + M) * (p.B + p.C) * sign(s);
}

}  // namespace

double ShapeInvarianceChain::remainder_sum() const
{
    double acc = 0.0;
    for (double r : remainders)
        acc += r;
    return acc;
}

double v_tilde(double E, double M, const PotentialParams& params, int m, Symmetry symmetry)
{
    return -ring_coupling(E, M, params, symmetry) - static_cast<double>(m) * m + 0.25;
}

double q_of_vtilde(double vt, BranchSign branch)
{
    const double radicand = 0.25 + vt;
    if (radicand < 0.0)
        throw DomainError("q_of_vtilde: 1/4 + V~ = " + std::to_string(radicand) +
                          " is negative, Q would be complex");
    return 0.5 + sign(branch) * std::sqrt(radicand);
}

AngularSpectrum angular_spectrum(double q, int n)
{
    const double nd = n;
    return {nd * nd + 2.0 * nd * q + q, (nd + q) * (nd + q)};
}

ShapeInvarianceChain shape_invariance_chain(double q, int n)
{
    if (n < 0)
        throw DomainError("shape_invariance_chain: n must be non-negative");
    ShapeInvarianceChain chain;
    chain.a.reserve(n + 1);
    chain.remainders.reserve(n);
    chain.a.push_back(q);
    for (int k = 1; k <= n; ++k) {
        const double ak = q + k;
        const double prev = chain.a.back();
        chain.a.push_back(ak);
        // a_k^2 - a_{k-1}^2 factored to avoid cancellation at large q
        chain.remainders.push_back((ak - prev) * (ak + prev));
    }
    return chain;
}

double lambda_separation(double E, double M, const PotentialParams& params, int m, int n_theta,
                         BranchSign branch, Symmetry symmetry)
{
    const double ring = ring_coupling(E, M, params, symmetry);
    const double m2 = static_cast<double>(m) * m;
    const double radicand = 0.5 - ring - m2;
    if (radicand < 0.0)
        throw DomainError("lambda_separation: angular radicand 1/2 -+ 2(E+M)(B+C) - m^2 = " +
                          std::to_string(radicand) + " is negative");
    const double bracket = n_theta + 0.5 + sign(branch) * std::sqrt(radicand);
    return bracket * bracket + ring + m2 - 0.5;
}

AngularSolution solve_angular(double E, double M, const PotentialParams& params, int m, int n_theta,
                              BranchSign branch, Symmetry symmetry)
{
    AngularSolution sol;
    sol.m = m;
    sol.n_theta = n_theta;
    sol.v_tilde = v_tilde(E, M, params, m, symmetry);
    sol.q = q_of_vtilde(sol.v_tilde, branch);
    const auto spec = angular_spectrum(sol.q, n_theta);
    sol.e_tilde_sum = spec.sum_form;
    sol.e_tilde_printed = spec.printed_form;
    sol.lambda = lambda_separation(E, M, params, m, n_theta, branch, symmetry);
    return sol;
}

std::vector<double> angular_ground_state(double q, std::span<const double> theta_grid)
{
    if (!(q > 0.5))
        throw DomainError("angular_ground_state: q must exceed 1/2 (got " + std::to_string(q) + ")");

    const double exponent = q - 0.5;
    const double lo = kEndpointExclusion;
    const double hi = std::numbers::pi - kEndpointExclusion;
    const double h = (hi - lo) / kNormIntervals;
    std::vector<double> integrand(kNormIntervals + 1);
    for (int i = 0; i <= kNormIntervals; ++i) {
        const double s = std::sin(lo + i * h);
        integrand[i] = std::pow(s, 2.0 * exponent + 1.0);
    }
    const double norm = 1.0 / std::sqrt(quadrature::simpson(integrand, h));

    std::vector<double> out;
    out.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        if (!(theta > 0.0 && theta < std::numbers::pi))
            throw DomainError("angular_ground_state: theta outside (0, pi)");
        out.push_back(norm * std::pow(std::sin(theta), exponent));
    }
    return out;
}

PartnerPair partner_potentials_angular(double q, double theta)
{
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw DomainError("partner_potentials_angular: cot(theta) singular at theta = " +
                          std::to_string(theta));
    // W^2 +- W' with W = -q cot(theta); in cosec^2 form both are (q^2 +- q) cosec^2 - q^2
    const double cot = std::cos(theta) / std::sin(theta);
    const double cot2 = cot * cot;
    return {(q * q + q) * cot2 + q, (q * q - q) * cot2 - q};
}

}  // namespace rspho::angular
