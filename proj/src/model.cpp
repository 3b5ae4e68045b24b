#include "rspho/model.hpp"

#include <cmath>
#include <numbers>

namespace rspho {

double evaluate_potential(const PotentialParams& p, double r, double theta)
{
    if (!(r > 0.0))
        throw DomainError("evaluate_potential: r must be positive (got " + std::to_string(r) + ")");
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw DomainError("evaluate_potential: theta must lie in (0, pi) (got " +
                          std::to_string(theta) + ")");

    const double r2 = r * r;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double ring = r2 * s * s;
    return 0.5 * p.K * r2 + p.A / r2 + p.B / ring + p.C * c * c / ring;
}

std::vector<Violation> validate(const SolveRequest& req)
{
    std::vector<Violation> out;
    const auto& p = req.params;

    if (!std::isfinite(p.K) || !std::isfinite(p.A) || !std::isfinite(p.B) || !std::isfinite(p.C))
        out.push_back({"params_not_finite", "potential coefficients must be finite"});
    if (!std::isfinite(req.M) || !(req.M > 0.0))
        out.push_back({"mass_not_positive", "M must be positive"});

    if (req.symmetry == Symmetry::Spin && !(p.K > 0.0))
        out.push_back({"k_sign_spin", "K must be positive under spin symmetry"});
    if (req.symmetry == Symmetry::PseudoSpin && !(p.K < 0.0))
        out.push_back({"k_sign_pseudospin", "K must be negative under pseudo-spin symmetry"});

    if (req.qn.n_r < 0)
        out.push_back({"n_r_negative", "n_r must be a non-negative integer"});
    if (req.qn.n_theta < 0)
        out.push_back({"n_theta_negative", "n_theta must be a non-negative integer"});
    return out;
}

std::string_view to_string(Symmetry s) noexcept
{
    return s == Symmetry::Spin ? "spin" : "pseudospin";
}

std::string_view to_string(BranchSign b) noexcept
{
    return b == BranchSign::Plus ? "plus" : "minus";
}

std::string_view to_string(Convention c) noexcept
{
    return c == Convention::TableConsistent ? "table" : "equation";
}

}  // namespace rspho
