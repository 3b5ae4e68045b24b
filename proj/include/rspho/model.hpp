// Potential, quantum numbers and problem descriptions for the ring-shaped
// pseudo-harmonic oscillator under spin / pseudo-spin symmetric Dirac dynamics.
//
// Natural units (hbar = c = 1) throughout; masses and energies in fm^-1.
#ifndef RSPHO_MODEL_HPP
#define RSPHO_MODEL_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rspho {

/// Raised when an input lies outside the domain of a formula
/// (singular point, negative radicand, wrong parameter sign).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// No sign change of the energy residual inside the scanned window.
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative procedure ran out of its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// V(r, theta) = K r^2 / 2 + A / r^2 + B / (r^2 sin^2) + C cos^2 / (r^2 sin^2)
struct PotentialParams {
    double K = 0.0;  ///< harmonic coefficient
    double A = 0.0;  ///< inverse-square coefficient
    double B = 0.0;  ///< ring coefficient
    double C = 0.0;  ///< angular-ring coefficient
};

struct QuantumNumbers {
    int n_r = 0;
    int n_theta = 0;
    int m = 0;

    /// The common case where the radial and angular quantum numbers coincide.
    static constexpr QuantumNumbers same(int n, int m) { return {n, n, m}; }
};

enum class Symmetry { Spin, PseudoSpin };
enum class BranchSign { Plus, Minus };

/// Leading coefficient c of the energy relation
///   E - M = c sqrt(+-K/(E+M)) {2n + 1 + sqrt(1/4 + ...)}.
/// TableConsistent (c = 1) reproduces the published reference energies;
/// EquationConsistent (c = 2) is the exact spectrum of the effective
/// radial oscillator.
enum class Convention { TableConsistent, EquationConsistent };

constexpr double coefficient(Convention c) noexcept
{
    return c == Convention::TableConsistent ? 1.0 : 2.0;
}

/// +1 under spin symmetry, -1 under pseudo-spin symmetry.
constexpr double sign(Symmetry s) noexcept { return s == Symmetry::Spin ? 1.0 : -1.0; }

constexpr double sign(BranchSign b) noexcept { return b == BranchSign::Plus ? 1.0 : -1.0; }

struct SolveRequest {
    PotentialParams params;
    double M = 1.0;
    QuantumNumbers qn;
    Symmetry symmetry = Symmetry::Spin;
    BranchSign branch = BranchSign::Plus;
    Convention convention = Convention::TableConsistent;
};

/// Machine-readable validation failure.
struct Violation {
    std::string code;
    std::string message;
};

double evaluate_potential(const PotentialParams& params, double r, double theta);

/// Every violated precondition of solve_energy; empty means ok.
std::vector<Violation> validate(const SolveRequest& request);

std::string_view to_string(Symmetry s) noexcept;
std::string_view to_string(BranchSign b) noexcept;
std::string_view to_string(Convention c) noexcept;

}  // namespace rspho

#endif  // RSPHO_MODEL_HPP
