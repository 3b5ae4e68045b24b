#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rspho/angular.hpp"
#include "rspho/model.hpp"
#include "rspho/oracle.hpp"
#include "rspho/radial.hpp"
#include "rspho/spectrum.hpp"
#include "rspho/thermo.hpp"

namespace py = pybind11;
using namespace rspho;

namespace {

template <class T>
std::string params_repr(const T& p)
{
    return "PotentialParams(K=" + std::to_string(p.K) + ", A=" + std::to_string(p.A) + ", B=" + std::to_string(p.B) +
           ", C=" + std::to_string(p.C) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bound states of the ring-shaped pseudo-harmonic oscillator";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NoRootError>(m, "NoRootError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<thermo::NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

    py::enum_<Symmetry>(m, "Symmetry").value("Spin", Symmetry::Spin).value("PseudoSpin", Symmetry::PseudoSpin);
    py::enum_<BranchSign>(m, "BranchSign").value("Plus", BranchSign::Plus).value("Minus", BranchSign::Minus);
    py::enum_<Convention>(m, "Convention")
        .value("TableConsistent", Convention::TableConsistent)
        .value("EquationConsistent", Convention::EquationConsistent);
    py::enum_<radial::MassCoupling>(m, "MassCoupling")
        .value("EnergyPlusMass", radial::MassCoupling::EnergyPlusMass)
        .value("EnergyMinusMass", radial::MassCoupling::EnergyMinusMass);

    py::class_<PotentialParams>(m, "PotentialParams")
        .def(py::init([](double K, double A, double B, double C) { return PotentialParams{K, A, B, C}; }),
             py::arg("K") = 0.0, py::arg("A") = 0.0, py::arg("B") = 0.0, py::arg("C") = 0.0)
        .def_readwrite("K", &PotentialParams::K)
        .def_readwrite("A", &PotentialParams::A)
        .def_readwrite("B", &PotentialParams::B)
        .def_readwrite("C", &PotentialParams::C)
        .def("__repr__", &params_repr<PotentialParams>);

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init([](int n_r, int n_theta, int mm) { return QuantumNumbers{n_r, n_theta, mm}; }),
             py::arg("n_r") = 0, py::arg("n_theta") = 0, py::arg("m") = 0)
        .def_static("same", &QuantumNumbers::same, py::arg("n"), py::arg("m"))
        .def_readwrite("n_r", &QuantumNumbers::n_r)
        .def_readwrite("n_theta", &QuantumNumbers::n_theta)
        .def_readwrite("m", &QuantumNumbers::m);

    py::class_<SolveRequest>(m, "SolveRequest")
        .def(py::init([](PotentialParams p, double M, QuantumNumbers qn, Symmetry s, BranchSign b, Convention c) {
                 return SolveRequest{p, M, qn, s, b, c};
             }),
             py::arg("params"), py::arg("M") = 1.0, py::arg("qn") = QuantumNumbers{}, py::arg("symmetry") = Symmetry::Spin,
             py::arg("branch") = BranchSign::Plus, py::arg("convention") = Convention::TableConsistent)
        .def_readwrite("params", &SolveRequest::params)
        .def_readwrite("M", &SolveRequest::M)
        .def_readwrite("qn", &SolveRequest::qn)
        .def_readwrite("symmetry", &SolveRequest::symmetry)
        .def_readwrite("branch", &SolveRequest::branch)
        .def_readwrite("convention", &SolveRequest::convention);

    py::class_<Violation>(m, "Violation")
        .def_readonly("code", &Violation::code)
        .def_readonly("message", &Violation::message);

    m.def("evaluate_potential", &evaluate_potential, py::arg("params"), py::arg("r"), py::arg("theta"));
    m.def("validate", &validate, py::arg("request"));

    py::class_<spectrum::SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("abs_tol_E", &spectrum::SolverOptions::abs_tol_E)
        .def_readwrite("scan_points", &spectrum::SolverOptions::scan_points)
        .def_readwrite("E_max_offset", &spectrum::SolverOptions::E_max_offset)
        .def_property(
            "root_index", [](const spectrum::SolverOptions& o) { return o.root_selection.index; },
            [](spectrum::SolverOptions& o, int i) { o.root_selection.index = i; })
        .def_readwrite("max_iterations", &spectrum::SolverOptions::max_iterations);

    py::class_<spectrum::SolveResult>(m, "SolveResult")
        .def_readonly("E", &spectrum::SolveResult::E)
        .def_readonly("lambda_", &spectrum::SolveResult::lambda)
        .def_readonly("delta", &spectrum::SolveResult::delta)
        .def_readonly("big_delta", &spectrum::SolveResult::big_delta)
        .def_readonly("residual", &spectrum::SolveResult::residual)
        .def_readonly("iterations", &spectrum::SolveResult::iterations)
        .def_readonly("bracket", &spectrum::SolveResult::bracket)
        .def_readonly("root_count_in_scan", &spectrum::SolveResult::root_count_in_scan);

    m.def("energy_residual", &spectrum::energy_residual, py::arg("E"), py::arg("request"));
    m.def("solve_energy", &spectrum::solve_energy, py::arg("request"),
          py::arg("options") = spectrum::SolverOptions{});
    m.def("nonrelativistic_energy", &spectrum::nonrelativistic_energy, py::arg("params"), py::arg("mu"),
          py::arg("qn"), py::arg("branch") = BranchSign::Plus, py::arg("convention") = Convention::TableConsistent);

    py::class_<angular::AngularSolution>(m, "AngularSolution")
        .def_readonly("v_tilde", &angular::AngularSolution::v_tilde)
        .def_readonly("q", &angular::AngularSolution::q)
        .def_readonly("e_tilde_sum", &angular::AngularSolution::e_tilde_sum)
        .def_readonly("e_tilde_printed", &angular::AngularSolution::e_tilde_printed)
        .def_readonly("lambda_", &angular::AngularSolution::lambda);
    m.def("solve_angular", &angular::solve_angular, py::arg("E"), py::arg("M"), py::arg("params"), py::arg("m"),
          py::arg("n_theta"), py::arg("branch") = BranchSign::Plus, py::arg("symmetry") = Symmetry::Spin);
    m.def("lambda_separation", &angular::lambda_separation, py::arg("E"), py::arg("M"), py::arg("params"),
          py::arg("m"), py::arg("n_theta"), py::arg("branch") = BranchSign::Plus, py::arg("symmetry") = Symmetry::Spin);

    py::class_<radial::RadialSolution>(m, "RadialSolution")
        .def_readonly("delta", &radial::RadialSolution::delta)
        .def_readonly("delta_prime", &radial::RadialSolution::delta_prime)
        .def_readonly("big_delta", &radial::RadialSolution::big_delta)
        .def_readonly("e0_tilde", &radial::RadialSolution::e0_tilde)
        .def_property_readonly("L", &radial::RadialSolution::L);
    m.def("radial_ansatz", &radial::radial_ansatz, py::arg("E"), py::arg("M"), py::arg("K"), py::arg("A"),
          py::arg("lambda_"), py::arg("symmetry") = Symmetry::Spin,
          py::arg("coupling") = radial::MassCoupling::EnergyPlusMass);
    m.def("radial_spectrum", &radial::radial_spectrum, py::arg("big_delta"), py::arg("delta"), py::arg("n_r"));
    m.def("kummer_1f1_terminating", &radial::kummer_1f1_terminating, py::arg("n"), py::arg("b"), py::arg("z"));

    py::class_<radial::WavefunctionSamples>(m, "WavefunctionSamples")
        .def_readonly("r", &radial::WavefunctionSamples::r)
        .def_readonly("values", &radial::WavefunctionSamples::values)
        .def_readonly("L", &radial::WavefunctionSamples::L)
        .def_readonly("eta_scale", &radial::WavefunctionSamples::eta_scale)
        .def_readonly("norm_constant", &radial::WavefunctionSamples::norm_constant);
    m.def(
        "radial_wavefunction",
        [](int n_r, double L, double big_delta, Convention conv, std::size_t points, double r_max) {
            const double d = radial::effective_scale(big_delta, conv);
            return radial::radial_wavefunction(n_r, L, d, radial::default_radial_grid(n_r, L, d, points, r_max));
        },
        py::arg("n_r"), py::arg("L"), py::arg("big_delta"), py::arg("convention") = Convention::TableConsistent,
        py::arg("points") = 4000, py::arg("r_max") = 0.0);
    m.def("bound_state_wavefunction", &radial::bound_state_wavefunction, py::arg("request"), py::arg("E"),
          py::arg("lambda_"), py::arg("coupling") = radial::MassCoupling::EnergyPlusMass, py::arg("points") = 4000,
          py::arg("r_max") = 0.0);
    m.def("count_nodes", [](const std::vector<double>& v) { return radial::count_nodes(v); }, py::arg("values"));

    py::class_<oracle::OracleReport>(m, "OracleReport")
        .def_readonly("computed", &oracle::OracleReport::computed)
        .def_readonly("predicted", &oracle::OracleReport::predicted)
        .def_readonly("printed", &oracle::OracleReport::printed)
        .def_readonly("max_rel_error", &oracle::OracleReport::max_rel_error)
        .def_readonly("converged", &oracle::OracleReport::converged);
    m.def(
        "verify_radial",
        [](double dp, double d, int count) { return oracle::verify_radial(dp, d, count); },
        py::arg("delta_prime"), py::arg("big_delta"), py::arg("count") = 3);
    m.def(
        "verify_angular", [](double v0, int count) { return oracle::verify_angular(v0, count); }, py::arg("v0"),
        py::arg("count") = 3);
    m.def(
        "fd_eigenvalues",
        [](const std::function<double(double)>& v, double lower, double upper, int points, int count) {
            return oracle::fd_eigenvalues(v, {lower, upper, points}, count);
        },
        py::arg("potential"), py::arg("lower"), py::arg("upper"), py::arg("points"), py::arg("count"));

    py::class_<thermo::ThermoPoint>(m, "ThermoPoint")
        .def_readonly("T", &thermo::ThermoPoint::T)
        .def_readonly("beta", &thermo::ThermoPoint::beta)
        .def_readonly("Z", &thermo::ThermoPoint::Z)
        .def_readonly("ln_Z", &thermo::ThermoPoint::ln_Z)
        .def_readonly("F", &thermo::ThermoPoint::F)
        .def_readonly("U", &thermo::ThermoPoint::U)
        .def_readonly("S", &thermo::ThermoPoint::S)
        .def_readonly("C", &thermo::ThermoPoint::C)
        .def_readonly("levels_used", &thermo::ThermoPoint::levels_used);
    m.def(
        "thermo_point",
        [](const std::vector<double>& levels, double T, int N, double k_B, double tol) {
            return thermo::thermo_point(levels, T, {N, k_B, tol});
        },
        py::arg("levels"), py::arg("T"), py::arg("N") = 1, py::arg("k_B") = 1.0,
        py::arg("rel_tail_tol") = thermo::kDefaultTailTol);
    m.def(
        "nonrelativistic_thermo",
        [](const PotentialParams& p, double mu, int mm, double T, BranchSign b, Convention c, int N, double k_B,
           double tol) {
            return thermo::thermo_point(thermo::nonrelativistic_levels(p, mu, mm, b, c), T, {N, k_B, tol});
        },
        py::arg("params"), py::arg("mu"), py::arg("m"), py::arg("T"), py::arg("branch") = BranchSign::Plus,
        py::arg("convention") = Convention::TableConsistent, py::arg("N") = 1, py::arg("k_B") = 1.0,
        py::arg("rel_tail_tol") = thermo::kDefaultTailTol);
}
