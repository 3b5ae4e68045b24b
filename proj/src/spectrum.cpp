#include "rspho/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rspho/angular.hpp"
#include "rspho/radial.hpp"

namespace rspho::spectrum {

namespace {

void require_valid(const SolveRequest& req)
{
    const auto violations = validate(req);
    if (violations.empty())
        return;
    std::string msg = "invalid request:";
    for (const auto& v : violations)
        msg += " " + v.message + ";";
    msg.pop_back();
    throw DomainError(msg);
}

double scan_offset(const SolveRequest& req, const SolverOptions& opt)
{
    return opt.E_max_offset > 0.0 ? opt.E_max_offset : 100.0 * std::sqrt(std::abs(req.params.K));
}

}  // namespace

ValidityWindow validity_window(const SolveRequest& req)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    // constraints are stated in w = E + M, then shifted back
    double w_low = 0.0;
    double w_high = inf;

    const double m2 = static_cast<double>(req.qn.m) * req.qn.m;
    const double a = 0.5 - m2;
    const double b = -2.0 * sign(req.symmetry) * (req.params.B + req.params.C);
    if (b > 0.0) {
        w_low = std::max(w_low, -a / b);
    } else if (b < 0.0) {
        w_high = std::min(w_high, -a / b);
    } else if (a < 0.0) {
        return {inf, -inf};
    }
    return {w_low - req.M, w_high - req.M};
}

double energy_residual(double E, const SolveRequest& req)
{
    const auto& p = req.params;
    const double w = E + req.M;
    const double s = sign(req.symmetry);
    if (!(w > 0.0))
        throw DomainError("energy_residual: E + M must be positive (E = " + std::to_string(E) + ")");
    const double prefactor_radicand = s * p.K / w;
    if (prefactor_radicand < 0.0)
        throw DomainError("energy_residual: prefactor radicand sK/(E+M) = " + std::to_string(prefactor_radicand) +
                          " is negative");

    const double lambda =
        angular::lambda_separation(E, req.M, p, req.qn.m, req.qn.n_theta, req.branch, req.symmetry);
    const double outer = 0.25 + s * 2.0 * p.A * w + lambda;
    if (outer < 0.0)
        throw DomainError("energy_residual: radial radicand 1/4 + s 2A(E+M) + lambda = " + std::to_string(outer) +
                          " is negative");

    const double braces = 2.0 * req.qn.n_r + 1.0 + std::sqrt(outer);
    return (E - req.M) - coefficient(req.convention) * std::sqrt(prefactor_radicand) * braces;
}

SolveResult solve_energy(const SolveRequest& req, const SolverOptions& opt)
{
    require_valid(req);
    if (!(opt.abs_tol_E > 0.0))
        throw DomainError("solve_energy: abs_tol_E must be positive");
    if (opt.scan_points < 2)
        throw DomainError("solve_energy: scan_points must be at least 2");

    const auto window = validity_window(req);
    const double lo = std::max(req.M, window.low);
    const double hi = std::min(req.M + scan_offset(req, opt), window.high);
    if (window.empty() || !(lo < hi))
        throw NoRootError("solve_energy: validity window above M is empty");

    const int n = opt.scan_points;
    std::vector<double> xs(n), fs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
        try {
            fs[i] = energy_residual(xs[i], req);
        } catch (const DomainError&) {
            fs[i] = std::numeric_limits<double>::quiet_NaN();
        }
    }

    std::vector<std::pair<int, int>> brackets;
    for (int i = 0; i < n; ++i) {
        if (std::isnan(fs[i]))
            continue;
        if (fs[i] == 0.0) {
            brackets.emplace_back(i, i);
            continue;
        }
        if (i + 1 < n && !std::isnan(fs[i + 1]) && fs[i + 1] != 0.0 && (fs[i] < 0.0) != (fs[i + 1] < 0.0))
            brackets.emplace_back(i, i + 1);
    }

    SolveResult result;
    result.root_count_in_scan = static_cast<int>(brackets.size());
    if (brackets.empty())
        throw NoRootError("solve_energy: no sign change of the energy residual in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    const int pick = opt.root_selection.index;
    if (pick < 0 || pick >= result.root_count_in_scan)
        throw NoRootError("solve_energy: requested root " + std::to_string(pick) + " but only " +
                          std::to_string(result.root_count_in_scan) + " found in scan");

    double a = xs[brackets[pick].first];
    double b = xs[brackets[pick].second];
    double fa = fs[brackets[pick].first];
    result.bracket = {a, b};

    int it = 0;
    while (b - a > opt.abs_tol_E) {
        if (it >= opt.max_iterations)
            throw ConvergenceError("solve_energy: bisection exceeded " + std::to_string(opt.max_iterations) +
                                   " iterations");
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b)
            break;  // bracket at floating-point resolution
        ++it;
        const double fm = energy_residual(mid, req);
        if (fm == 0.0) {
            a = b = mid;
            break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }

    result.E = 0.5 * (a + b);
    result.iterations = it;
    result.residual = std::abs(energy_residual(result.E, req));
    result.lambda =
        angular::lambda_separation(result.E, req.M, req.params, req.qn.m, req.qn.n_theta, req.branch, req.symmetry);
    const auto rad = radial::radial_ansatz(result.E, req.M, req.params.K, req.params.A, result.lambda, req.symmetry);
    result.delta = rad.delta;
    result.big_delta = rad.big_delta;
    return result;
}

double nonrelativistic_energy(const PotentialParams& p, double mu, const QuantumNumbers& qn, BranchSign branch,
                              Convention convention)
{
    if (!(mu > 0.0))
        throw DomainError("nonrelativistic_energy: mu must be positive");
    if (!(p.K > 0.0))
        throw DomainError("nonrelativistic_energy: K must be positive");
    const double xi = mu * (p.B + p.C);
    const double m2 = static_cast<double>(qn.m) * qn.m;
    const double inner = 0.5 - 4.0 * xi - m2;
    if (inner < 0.0)
        throw DomainError("nonrelativistic_energy: radicand 1/2 - 4 xi - m^2 = " + std::to_string(inner) +
                          " is negative");
    const double bracket = qn.n_theta + 0.5 + sign(branch) * std::sqrt(inner);
    const double outer = 0.25 + 4.0 * p.A * mu + bracket * bracket + 4.0 * xi + m2 - 0.5;
    if (outer < 0.0)
        throw DomainError("nonrelativistic_energy: outer radicand = " + std::to_string(outer) + " is negative");
    const double braces = 2.0 * qn.n_r + 1.0 + std::sqrt(outer);
    return 0.5 * coefficient(convention) * std::sqrt(2.0 * p.K / mu) * braces;
}

}  // namespace rspho::spectrum
