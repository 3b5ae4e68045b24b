#include "rspho/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rspho/model.hpp"

namespace rspho::oracle {

int sturm_count(std::span<const double> diag, double off_diag, double x)
{
    const double e2 = off_diag * off_diag;
    const double tiny = std::numeric_limits<double>::min();
    int negatives = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        q = diag[i] - x - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0)
            q = -tiny;
        if (q < 0.0)
            ++negatives;
    }
    return negatives;
}

std::vector<double> fd_eigenvalues(const std::function<double(double)>& potential, const GridSpec& grid, int count)
{
    if (!(grid.lower < grid.upper))
        throw DomainError("fd_eigenvalues: grid lower must be below upper");
    if (grid.points < 16)
        throw DomainError("fd_eigenvalues: need at least 16 interior points");
    if (count < 1 || count > grid.points / 4)
        throw DomainError("fd_eigenvalues: count must be in [1, points/4]");

    const double h = grid.step();
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> diag(grid.points);
    for (int i = 0; i < grid.points; ++i) {
        const double x = grid.node(i);
        const double v = potential(x);
        if (!std::isfinite(v))
            throw DomainError("fd_eigenvalues: potential is not finite at x = " + std::to_string(x));
        diag[i] = 2.0 * inv_h2 + v;
    }
    const double off = -inv_h2;

    const auto [dmin, dmax] = std::minmax_element(diag.begin(), diag.end());
    const double glow = *dmin - 2.0 * inv_h2;
    const double ghigh = *dmax + 2.0 * inv_h2;

    std::vector<double> out;
    out.reserve(count);
    double floor = glow;
    for (int k = 0; k < count; ++k) {
        double a = floor;
        double b = ghigh;
        // smallest x with sturm_count(x) > k
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b)
                break;
            if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)))
                break;
            if (sturm_count(diag, off, mid) > k)
                b = mid;
            else
                a = mid;
        }
        const double lambda = 0.5 * (a + b);
        out.push_back(lambda);
        floor = a;
    }
    return out;
}

double radial_level(double delta_prime, double big_delta, int n)
{
    return 2.0 * big_delta * (2.0 * n + 1.0 + std::sqrt(0.25 + delta_prime));
}

GridSpec default_radial_grid(double delta_prime, double big_delta, int count, int points)
{
    if (!(big_delta > 0.0))
        throw DomainError("default_radial_grid: Delta must be positive");
    const double e_max = radial_level(delta_prime, big_delta, count - 1);
    return {kRadialOrigin, std::sqrt(e_max) / big_delta + 6.0 / std::sqrt(big_delta), points};
}

GridSpec default_angular_grid(int points)
{
    return {kAngularEpsilon, std::numbers::pi - kAngularEpsilon, points};
}

namespace {

void finish(OracleReport& rep)
{
    rep.max_rel_error = 0.0;
    for (std::size_t i = 0; i < rep.computed.size(); ++i) {
        const double err = std::abs(rep.computed[i] - rep.predicted[i]) / std::abs(rep.predicted[i]);
        rep.max_rel_error = std::max(rep.max_rel_error, err);
    }
    rep.converged = rep.max_rel_error <= kConvergedRelError;
}

}  // namespace

OracleReport verify_radial(double delta_prime, double big_delta, int count, const GridSpec& grid)
{
    if (delta_prime < 0.0)
        throw DomainError("verify_radial: delta' must be non-negative");
    if (!(big_delta > 0.0))
        throw DomainError("verify_radial: Delta must be positive");
    OracleReport rep;
    rep.grid = grid;
    const double d2 = big_delta * big_delta;
    rep.computed = fd_eigenvalues([&](double r) { return delta_prime / (r * r) + d2 * r * r; }, grid, count);
    for (int n = 0; n < count; ++n)
        rep.predicted.push_back(radial_level(delta_prime, big_delta, n));
    finish(rep);
    return rep;
}

OracleReport verify_radial(double delta_prime, double big_delta, int count)
{
    return verify_radial(delta_prime, big_delta, count, default_radial_grid(delta_prime, big_delta, count));
}

OracleReport verify_angular(double v0, int count, const GridSpec& grid)
{
    if (v0 < 0.0)
        throw DomainError("verify_angular: v0 must be non-negative");
    OracleReport rep;
    rep.grid = grid;
    rep.computed = fd_eigenvalues(
        [&](double theta) {
            const double cot = std::cos(theta) / std::sin(theta);
            return v0 * cot * cot;
        },
        grid, count);
    const double q = 0.5 + std::sqrt(0.25 + v0);
    for (int n = 0; n < count; ++n) {
        rep.predicted.push_back(n * n + 2.0 * n * q + q);
        rep.printed.push_back((n + q) * (n + q));
    }
    finish(rep);
    return rep;
}

OracleReport verify_angular(double v0, int count)
{
    return verify_angular(v0, count, default_angular_grid());
}

}  // namespace rspho::oracle
