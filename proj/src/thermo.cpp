#include "rspho/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "rspho/spectrum.hpp"

namespace rspho::thermo {

namespace {

// Shifted Boltzmann moments: weights w_n = exp(-beta (E_n - E_0)).
struct Moments {
    double e0 = 0.0;
    double excess = 0.0;  ///< sum over n >= 1 of w_n
    double m1 = 0.0;      ///< sum of w_n (E_n - E_0)
    double m2 = 0.0;      ///< sum of w_n (E_n - E_0)^2
    int levels = 0;

    double weight_sum() const { return 1.0 + excess; }
    double ln_z_shifted() const { return std::log1p(excess); }
};

template <class Next>
Moments accumulate(Next&& next, double beta, double tol, bool bounded)
{
    if (!(beta > 0.0))
        throw DomainError("partition_function: beta must be positive");
    if (!(tol > 0.0))
        throw DomainError("partition_function: rel_tail_tol must be positive");

    Moments mom;
    const std::optional<double> first = next(0);
    if (!first)
        throw DomainError("partition_function: empty spectrum");
    mom.e0 = *first;
    mom.levels = 1;
    double prev = mom.e0;

    for (int n = 1;; ++n) {
        if (n >= kMaxLevels) {
            if (bounded)
                break;
            throw NonConvergence("partition_function: tail test not met after " + std::to_string(kMaxLevels) +
                                 " levels");
        }
        const std::optional<double> level = next(n);
        if (!level)
            break;
        if (!(*level > prev))
            throw DomainError("partition_function: levels must be strictly ascending (level " + std::to_string(n) +
                              ")");
        prev = *level;
        const double eps = *level - mom.e0;
        const double w = std::exp(-beta * eps);
        if (w < tol * mom.weight_sum())
            break;
        mom.excess += w;
        mom.m1 += w * eps;
        mom.m2 += w * eps * eps;
        ++mom.levels;
    }
    return mom;
}

Moments from_span(std::span<const double> levels, double beta, double tol)
{
    return accumulate(
        [&](int n) -> std::optional<double> {
            if (static_cast<std::size_t>(n) >= levels.size())
                return std::nullopt;
            return levels[n];
        },
        beta, tol, true);
}

Moments from_source(const LevelSource& levels, double beta, double tol)
{
    return accumulate([&](int n) -> std::optional<double> { return levels(n); }, beta, tol, false);
}

PartitionSum to_partition(const Moments& mom, double beta)
{
    PartitionSum out;
    out.ln_Z = -beta * mom.e0 + mom.ln_z_shifted();
    out.Z = std::exp(out.ln_Z);
    out.levels_used = mom.levels;
    return out;
}

ThermoPoint to_point(const Moments& mom, double T, double beta, const ThermoOptions& opt)
{
    const double N = opt.N;
    const double z = mom.weight_sum();
    const double mean_exc = mom.m1 / z;
    const double var = std::max(0.0, mom.m2 / z - mean_exc * mean_exc);
    const double ln_z_shift = mom.ln_z_shifted();

    ThermoPoint p;
    p.T = T;
    p.beta = beta;
    p.ln_Z = -beta * mom.e0 + ln_z_shift;
    p.Z = std::exp(p.ln_Z);
    p.U = N * (mom.e0 + mean_exc);
    p.F = N * (mom.e0 - ln_z_shift / beta);
    p.S = N * opt.k_B * (ln_z_shift + beta * mean_exc);
    p.C = N * opt.k_B * beta * beta * var;
    p.levels_used = mom.levels;
    return p;
}

double beta_of(double T, const ThermoOptions& opt)
{
    if (!(T > 0.0))
        throw DomainError("thermo_point: T must be positive");
    if (!(opt.k_B > 0.0))
        throw DomainError("thermo_point: k_B must be positive");
    if (opt.N < 1)
        throw DomainError("thermo_point: N must be at least 1");
    return 1.0 / (opt.k_B * T);
}

}  // namespace

PartitionSum partition_function(std::span<const double> levels, double beta, double rel_tail_tol)
{
    return to_partition(from_span(levels, beta, rel_tail_tol), beta);
}

PartitionSum partition_function(const LevelSource& levels, double beta, double rel_tail_tol)
{
    return to_partition(from_source(levels, beta, rel_tail_tol), beta);
}

ThermoPoint thermo_point(std::span<const double> levels, double T, const ThermoOptions& opt)
{
    const double beta = beta_of(T, opt);
    return to_point(from_span(levels, beta, opt.rel_tail_tol), T, beta, opt);
}

ThermoPoint thermo_point(const LevelSource& levels, double T, const ThermoOptions& opt)
{
    const double beta = beta_of(T, opt);
    return to_point(from_source(levels, beta, opt.rel_tail_tol), T, beta, opt);
}

LevelSource nonrelativistic_levels(const PotentialParams& params, double mu, int m, BranchSign branch,
                                   Convention convention)
{
    return [=](int n) {
        return spectrum::nonrelativistic_energy(params, mu, QuantumNumbers::same(n, m), branch, convention);
    };
}

}  // namespace rspho::thermo
