#include "rspho/radial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rspho/quadrature.hpp"

namespace rspho::radial {

RadialSolution ansatz_from_coefficients(double delta_prime, double big_delta, int n_r)
{
    const double disc = 1.0 + 4.0 * delta_prime;
    if (disc < 0.0)
        throw DomainError("radial_ansatz: 1 + 4 delta' = " + std::to_string(disc) + " is negative");
    RadialSolution sol;
    sol.delta_prime = delta_prime;
    sol.delta = -0.5 * (1.0 + std::sqrt(disc));
    sol.big_delta = big_delta;
    sol.e0_tilde = big_delta * (1.0 - 2.0 * sol.delta);
    sol.n_r = n_r;
    return sol;
}

RadialSolution radial_ansatz(double E, double M, double K, double A, double lambda, Symmetry symmetry,
                             MassCoupling coupling)
{
    if (coupling == MassCoupling::EnergyMinusMass) {
        const double w = E - M;
        const double strength = std::abs(K * w);
        if (!(strength > 0.0))
            throw DomainError("radial_ansatz: |K (E - M)| must be positive");
        return ansatz_from_coefficients(2.0 * A * w + lambda, std::sqrt(strength));
    }

    const double w = E + M;
    const double s = sign(symmetry);
    const double strength = s * K * w;
    if (!(strength > 0.0))
        throw DomainError(symmetry == Symmetry::Spin
                              ? "radial_ansatz: K (E + M) must be positive under spin symmetry"
                              : "radial_ansatz: -K (E + M) must be positive under pseudo-spin symmetry");
    return ansatz_from_coefficients(s * 2.0 * A * w + lambda, std::sqrt(strength));
}

double radial_spectrum(double big_delta, double delta, int n_r)
{
    return big_delta * (1.0 - 2.0 * delta) + 4.0 * n_r * big_delta;
}

PartnerPair partner_potentials_radial(double delta, double big_delta, double r)
{
    if (!(r > 0.0))
        throw DomainError("partner_potentials_radial: r must be positive");
    const double r2 = r * r;
    const double common = big_delta * big_delta * r2 + 2.0 * delta * big_delta;
    return {delta * (delta - 1.0) / r2 + common + big_delta, delta * (delta + 1.0) / r2 + common - big_delta};
}

double kummer_1f1_terminating(int n, double b, double z)
{
    if (n < 0)
        throw DomainError("kummer_1f1_terminating: n must be non-negative");
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < n; ++k) {
        const double denom = b + k;
        if (denom == 0.0)
            throw DomainError("kummer_1f1_terminating: Pochhammer (b)_k vanishes at k = " + std::to_string(k));
        term *= (k - n) / denom * z / (k + 1);
        sum += term;
    }
    return sum;
}

double effective_scale(double big_delta, Convention convention)
{
    return 0.5 * coefficient(convention) * big_delta;
}

double effective_level(int n_r, double L, double delta_eff)
{
    return 2.0 * delta_eff * (2.0 * n_r + L + 1.5);
}

std::vector<double> default_radial_grid(int n_r, double L, double delta_eff, std::size_t points, double r_max)
{
    if (!(delta_eff > 0.0))
        throw DomainError("default_radial_grid: scale must be positive");
    if (points < 4)
        throw DomainError("default_radial_grid: need at least 4 points");
    if (!(r_max > 0.0)) {
        const double level = effective_level(n_r, L, delta_eff);
        r_max = std::sqrt(level) / delta_eff + 4.0 / std::sqrt(delta_eff);
    }
    std::vector<double> r(points);
    for (std::size_t i = 0; i < points; ++i)
        r[i] = r_max * static_cast<double>(i + 1) / static_cast<double>(points);
    return r;
}

WavefunctionSamples radial_wavefunction(int n_r, double L, double delta_eff, std::span<const double> r_grid)
{
    if (n_r < 0)
        throw DomainError("radial_wavefunction: n_r must be non-negative");
    if (!(L > -1.5))
        throw DomainError("radial_wavefunction: L must exceed -3/2 (got " + std::to_string(L) + ")");
    if (!(delta_eff > 0.0))
        throw DomainError("radial_wavefunction: oscillator scale must be positive");
    if (r_grid.size() < 2)
        throw DomainError("radial_wavefunction: need at least two radii");

    WavefunctionSamples out;
    out.L = L;
    out.eta_scale = std::sqrt(delta_eff);
    out.r.assign(r_grid.begin(), r_grid.end());
    out.values.resize(r_grid.size());

    const double b = L + 1.5;
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        const double r = r_grid[i];
        if (!(r > 0.0))
            throw DomainError("radial_wavefunction: radii must be positive");
        const double eta2 = delta_eff * r * r;
        const double envelope = std::exp((L + 1.0) * std::log(r) - 0.5 * eta2);
        out.values[i] = envelope * kummer_1f1_terminating(n_r, b, eta2);
    }

    std::vector<double> sq(out.values.size());
    for (std::size_t i = 0; i < sq.size(); ++i)
        sq[i] = out.values[i] * out.values[i];

    double norm2 = 0.0;
    if (quadrature::is_uniform(out.r)) {
        const double h = (out.r.back() - out.r.front()) / static_cast<double>(out.r.size() - 1);
        if (L > -1.0 && std::abs(out.r.front() - h) <= 1e-9 * h) {
            // grid starts one step off the origin where R vanishes
            std::vector<double> padded(sq.size() + 1, 0.0);
            std::copy(sq.begin(), sq.end(), padded.begin() + 1);
            norm2 = quadrature::simpson(padded, h);
        } else {
            norm2 = quadrature::simpson(sq, h);
        }
    } else {
        norm2 = quadrature::trapezoid(out.r, sq);
    }
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw DomainError("radial_wavefunction: samples are not normalizable on this grid");

    out.norm_constant = 1.0 / std::sqrt(norm2);
    for (double& v : out.values)
        v *= out.norm_constant;
    return out;
}

WavefunctionSamples radial_wavefunction(int n_r, double L, double big_delta, std::span<const double> r_grid,
                                        Convention convention)
{
    return radial_wavefunction(n_r, L, effective_scale(big_delta, convention), r_grid);
}

WavefunctionSamples bound_state_wavefunction(const SolveRequest& req, double E, double lambda,
                                             MassCoupling coupling, std::size_t points, double r_max)
{
    const auto sol = radial_ansatz(E, req.M, req.params.K, req.params.A, lambda, req.symmetry, coupling);
    const double scale = effective_scale(sol.big_delta, req.convention);
    const auto grid = default_radial_grid(req.qn.n_r, sol.L(), scale, points, r_max);
    return radial_wavefunction(req.qn.n_r, sol.L(), scale, grid);
}

int count_nodes(std::span<const double> values)
{
    int nodes = 0;
    double last = 0.0;
    for (double v : values) {
        if (v == 0.0)
            continue;
        if (last != 0.0 && (v > 0.0) != (last > 0.0))
            ++nodes;
        last = v;
    }
    return nodes;
}

}  // namespace rspho::radial
