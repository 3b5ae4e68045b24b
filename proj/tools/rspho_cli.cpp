// rspho: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 domain/convergence failure,
// 3 oracle verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rspho/angular.hpp"
#include "rspho/model.hpp"
#include "rspho/oracle.hpp"
#include "rspho/radial.hpp"
#include "rspho/spectrum.hpp"
#include "rspho/thermo.hpp"

namespace {

using namespace rspho;

enum Exit : int { kOk = 0, kUsage = 1, kDomain = 2, kVerify = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Symmetry> kSymmetryNames{{"spin", Symmetry::Spin}, {"pseudospin", Symmetry::PseudoSpin}};
const std::map<std::string, BranchSign> kBranchNames{{"plus", BranchSign::Plus}, {"minus", BranchSign::Minus}};
const std::map<std::string, Convention> kConventionNames{{"table", Convention::TableConsistent},
                                                         {"equation", Convention::EquationConsistent}};

// ---------------------------------------------------------------------------
// CSV output

class CsvWriter {
public:
    explicit CsvWriter(int precision) : precision_(precision) {}

    std::string fixed(double x) const
    {
        if (!std::isfinite(x))
            return {};
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", precision_, x);
        return buf;
    }

    std::string sci(double x) const
    {
        if (!std::isfinite(x))
            return {};
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*e", precision_, x);
        return buf;
    }

    static std::string general(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return buf;
    }

    void comment(const std::string& text) { out_ << "# " << text << '\n'; }

    void row(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    void flush(const std::string& path) const
    {
        if (path.empty()) {
            std::cout << out_.str();
            std::cout.flush();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw UsageError("cannot open output file " + path);
        f << out_.str();
    }

private:
    int precision_;
    std::ostringstream out_;
};

// ---------------------------------------------------------------------------
// Shared flags

template <class Enum>
Enum lookup(const std::map<std::string, Enum>& names, const std::string& key)
{
    const auto it = names.find(key);
    if (it == names.end())
        throw UsageError("unknown value '" + key + "'");
    return it->second;
}

template <class Enum>
std::vector<std::string> keys_of(const std::map<std::string, Enum>& names)
{
    std::vector<std::string> out;
    for (const auto& [k, v] : names)
        out.push_back(k);
    return out;
}

struct RequestFlags {
    std::string symmetry_name = "spin";
    std::string convention_name = "table";
    std::string branch_name = "plus";
    int n = 0;
    std::optional<int> ntheta;
    int m = 0;
    double A = 0.0, B = 0.0, C = 0.0, K = 0.0, M = 0.0;
    double tol = 1e-12;
    int scan_points = 512;
    int root_index = 0;
    int precision = 8;
    std::string output;

    Symmetry symmetry() const { return lookup(kSymmetryNames, symmetry_name); }
    Convention convention() const { return lookup(kConventionNames, convention_name); }
    BranchSign branch() const { return lookup(kBranchNames, branch_name); }

    SolveRequest request() const
    {
        SolveRequest r;
        r.params = {K, A, B, C};
        r.M = M;
        r.qn = {n, ntheta.value_or(n), m};
        r.symmetry = symmetry();
        r.branch = branch();
        r.convention = convention();
        return r;
    }

    spectrum::SolverOptions options() const
    {
        spectrum::SolverOptions o;
        o.abs_tol_E = tol;
        o.scan_points = scan_points;
        o.root_selection.index = root_index;
        return o;
    }
};

void add_enum_flags(CLI::App* cmd, RequestFlags& f)
{
    cmd->add_option("--symmetry", f.symmetry_name, "spin | pseudospin")->check(CLI::IsMember(keys_of(kSymmetryNames)));
    cmd->add_option("--convention", f.convention_name, "table (c = 1) | equation (c = 2)")
        ->check(CLI::IsMember(keys_of(kConventionNames)));
    cmd->add_option("--branch", f.branch_name, "plus | minus")->check(CLI::IsMember(keys_of(kBranchNames)));
}

void add_param_flags(CLI::App* cmd, RequestFlags& f)
{
    cmd->add_option("--A", f.A, "inverse-square coefficient");
    cmd->add_option("--B", f.B, "ring coefficient");
    cmd->add_option("--C", f.C, "angular-ring coefficient");
    cmd->add_option("--K", f.K, "harmonic coefficient");
}

void add_common_flags(CLI::App* cmd, RequestFlags& f)
{
    cmd->add_option("--precision", f.precision, "decimals in CSV output")->check(CLI::Range(0, 17));
    cmd->add_option("--output,-o", f.output, "write CSV to this file instead of standard output");
}

void add_request_flags(CLI::App* cmd, RequestFlags& f)
{
    add_enum_flags(cmd, f);
    cmd->add_option("--n", f.n, "radial quantum number")->check(CLI::NonNegativeNumber);
    cmd->add_option("--ntheta", f.ntheta, "angular quantum number (default: n)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--m", f.m, "azimuthal quantum number");
    add_param_flags(cmd, f);
    cmd->add_option("--M", f.M, "fermion mass (fm^-1)");
    cmd->add_option("--tol", f.tol, "absolute energy tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--scan-points", f.scan_points, "sign-change scan resolution")->check(CLI::Range(2, 1 << 24));
    cmd->add_option("--root-index", f.root_index, "bracketed root to return (0 = smallest)")
        ->check(CLI::NonNegativeNumber);
    add_common_flags(cmd, f);
}

void require_valid(const SolveRequest& req)
{
    const auto violations = validate(req);
    if (violations.empty())
        return;
    std::string msg;
    for (const auto& v : violations)
        msg += (msg.empty() ? "" : "; ") + v.message + " [" + v.code + "]";
    throw DomainError(msg);
}

const std::vector<std::string> kSolveHeader{"n",      "m",      "n_theta",    "A", "B",      "C",        "K", "M",
                                            "symmetry", "branch", "convention", "E", "lambda", "residual", "iterations"};

std::vector<std::string> solve_row(const CsvWriter& csv, const SolveRequest& req, const spectrum::SolveResult& res)
{
    return {std::to_string(req.qn.n_r),
            std::to_string(req.qn.m),
            std::to_string(req.qn.n_theta),
            CsvWriter::general(req.params.A),
            CsvWriter::general(req.params.B),
            CsvWriter::general(req.params.C),
            CsvWriter::general(req.params.K),
            CsvWriter::general(req.M),
            std::string(to_string(req.symmetry)),
            std::string(to_string(req.branch)),
            std::string(to_string(req.convention)),
            csv.fixed(res.E),
            csv.fixed(res.lambda),
            csv.sci(res.residual),
            std::to_string(res.iterations)};
}

// ---------------------------------------------------------------------------
// Commands

int cmd_solve(const RequestFlags& f)
{
    const auto req = f.request();
    require_valid(req);
    const auto res = spectrum::solve_energy(req, f.options());
    CsvWriter csv(f.precision);
    csv.row(kSolveHeader);
    csv.row(solve_row(csv, req, res));
    csv.flush(f.output);
    return kOk;
}

struct TableSpec {
    std::string which;
};

int cmd_table(const RequestFlags& f, const TableSpec& t)
{
    SolveRequest base;
    std::vector<double> As;
    std::vector<int> ms;
    std::string note;
    if (t.which == "spin1") {
        base.params = {5.0, 0.0, -0.05, 0.005};
        base.M = 5.0;
        base.symmetry = Symmetry::Spin;
        As = {6.0, 6.5, 7.0, 7.5};
        ms = {0, 1};
        note = "spin symmetry: B = -0.05, K = 5, C = 0.005, M = 5 fm^-1";
    } else {
        base.params = {-5.0, 0.0, 0.5, 0.005};
        base.M = 3.0;
        base.symmetry = Symmetry::PseudoSpin;
        As = {-5.0, -4.5, -4.0, -3.5, -3.0, -2.5};
        ms = {0, 1, 2};
        note = "pseudo-spin symmetry: B = 0.5, K = -5, C = 0.005, M = 3 fm^-1; "
               "third reference column read as m = 2 with the row block's own n";
    }
    base.branch = f.branch();
    base.convention = f.convention();

    CsvWriter csv(f.precision);
    csv.comment(note);
    csv.row(kSolveHeader);
    for (int n = 1; n <= 3; ++n)
        for (int m : ms)
            for (double A : As) {
                SolveRequest req = base;
                req.params.A = A;
                req.qn = QuantumNumbers::same(n, m);
                csv.row(solve_row(csv, req, spectrum::solve_energy(req, f.options())));
            }
    csv.flush(f.output);
    return kOk;
}

struct SweepSpec {
    std::string vary = "A";
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string series = "n";
    std::string values = "1,2,3";
};

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--values: '" + item + "' is not an integer");
        }
    }
    if (out.empty())
        throw UsageError("--values must list at least one integer");
    return out;
}

int cmd_sweep(const RequestFlags& f, const SweepSpec& s)
{
    if (!std::isfinite(s.from) || !std::isfinite(s.to) || s.from == s.to)
        throw UsageError("sweep range must be finite and non-degenerate");
    if (s.steps < 2)
        throw UsageError("--steps must be at least 2");
    const auto members = parse_int_list(s.values);

    CsvWriter csv(f.precision);
    std::vector<std::string> header{"x"};
    for (int v : members)
        header.push_back(s.series + "=" + std::to_string(v));
    csv.row(header);

    for (int i = 0; i < s.steps; ++i) {
        const double x = i == s.steps - 1 ? s.to : s.from + (s.to - s.from) * i / (s.steps - 1);
        std::vector<std::string> cells{CsvWriter::general(x)};
        for (int v : members) {
            RequestFlags point = f;
            if (s.series == "n")
                point.n = v;
            else
                point.m = v;
            if (s.vary == "A")
                point.A = x;
            else if (s.vary == "B")
                point.B = x;
            else
                point.K = x;
            try {
                const auto req = point.request();
                require_valid(req);
                cells.push_back(csv.fixed(spectrum::solve_energy(req, point.options()).E));
            } catch (const DomainError&) {
                cells.emplace_back();
            } catch (const NoRootError&) {
                cells.emplace_back();
            } catch (const ConvergenceError&) {
                cells.emplace_back();
            }
        }
        csv.row(cells);
    }
    csv.flush(f.output);
    return kOk;
}

struct WavefunctionSpec {
    int points = 4000;
    double r_max = 0.0;
    std::string coupling = "plus";
};

int cmd_wavefunction(const RequestFlags& f, const WavefunctionSpec& w)
{
    if (w.points < 4)
        throw UsageError("--points must be at least 4");
    const auto req = f.request();
    require_valid(req);
    const auto res = spectrum::solve_energy(req, f.options());
    const auto coupling =
        w.coupling == "plus" ? radial::MassCoupling::EnergyPlusMass : radial::MassCoupling::EnergyMinusMass;
    const auto wf = radial::bound_state_wavefunction(req, res.E, res.lambda, coupling,
                                                     static_cast<std::size_t>(w.points), w.r_max);
    CsvWriter csv(f.precision);
    csv.comment("E = " + csv.fixed(res.E) + ", L = " + csv.fixed(wf.L) + ", eta/r = " + csv.fixed(wf.eta_scale) +
                ", N = " + csv.sci(wf.norm_constant));
    csv.row({"r", "R"});
    for (std::size_t i = 0; i < wf.r.size(); ++i)
        csv.row({csv.fixed(wf.r[i]), csv.sci(wf.values[i])});
    csv.flush(f.output);
    return kOk;
}

struct PotentialSpec {
    double r_max = 5.0;
    int r_steps = 64;
    int theta_steps = 64;
};

int cmd_potential(const RequestFlags& f, const PotentialSpec& p)
{
    if (!(p.r_max > 0.0) || p.r_steps < 1 || p.theta_steps < 1)
        throw UsageError("--r-max must be positive and step counts at least 1");
    const PotentialParams params{f.K, f.A, f.B, f.C};
    CsvWriter csv(f.precision);
    csv.row({"r", "theta", "V"});
    for (int i = 1; i <= p.r_steps; ++i) {
        const double r = p.r_max * i / p.r_steps;
        for (int j = 1; j <= p.theta_steps; ++j) {
            const double theta = std::numbers::pi * j / (p.theta_steps + 1);
            csv.row({csv.fixed(r), csv.fixed(theta), csv.sci(evaluate_potential(params, r, theta))});
        }
    }
    csv.flush(f.output);
    return kOk;
}

struct ThermoSpec {
    double T_min = 0.1;
    double T_max = 5.0;
    int steps = 50;
    int N = 1;
    double k_B = 1.0;
    double mu = 0.0;
    double tail_tol = thermo::kDefaultTailTol;
};

int cmd_thermo(const RequestFlags& f, const ThermoSpec& t)
{
    if (!(t.T_min > 0.0) || !(t.T_max >= t.T_min) || t.steps < 1)
        throw UsageError("need 0 < T-min <= T-max and steps >= 1");
    const double mu = t.mu > 0.0 ? t.mu : f.M;
    const auto levels =
        thermo::nonrelativistic_levels({f.K, f.A, f.B, f.C}, mu, f.m, f.branch(), f.convention());
    thermo::ThermoOptions opt;
    opt.N = t.N;
    opt.k_B = t.k_B;
    opt.rel_tail_tol = t.tail_tol;

    CsvWriter csv(f.precision);
    csv.row({"T", "Z", "F", "U", "S", "C"});
    for (int i = 0; i < t.steps; ++i) {
        const double T = t.steps == 1 ? t.T_min
                                      : (i == t.steps - 1 ? t.T_max : t.T_min + (t.T_max - t.T_min) * i / (t.steps - 1));
        const auto p = thermo::thermo_point(levels, T, opt);
        csv.row({csv.fixed(T), csv.sci(p.Z), csv.fixed(p.F), csv.fixed(p.U), csv.fixed(p.S), csv.fixed(p.C)});
    }
    csv.flush(f.output);
    return kOk;
}

struct VerifySpec {
    std::string suite = "all";
    int points = oracle::kDefaultPoints;
};

int cmd_verify(const RequestFlags& f, const VerifySpec& v)
{
    CsvWriter csv(f.precision);
    csv.row({"suite", "param_a", "param_b", "n", "computed", "predicted", "printed", "rel_error", "converged"});
    bool all_ok = true;
    auto emit = [&](const std::string& suite, double a, std::optional<double> b, const oracle::OracleReport& rep) {
        for (std::size_t n = 0; n < rep.computed.size(); ++n) {
            const double err = std::abs(rep.computed[n] - rep.predicted[n]) / std::abs(rep.predicted[n]);
            csv.row({suite, CsvWriter::general(a), b ? CsvWriter::general(*b) : std::string{}, std::to_string(n),
                     csv.fixed(rep.computed[n]), csv.fixed(rep.predicted[n]),
                     n < rep.printed.size() ? csv.fixed(rep.printed[n]) : std::string{}, csv.sci(err),
                     err <= oracle::kConvergedRelError ? "true" : "false"});
        }
        all_ok = all_ok && rep.converged;
    };

    if (v.suite == "radial" || v.suite == "all") {
        const std::vector<std::pair<double, double>> cases{{0.0, 1.0}, {2.0, 1.0}, {2.0, 3.0}, {239.3666, 9.84509}};
        for (auto [dp, d] : cases)
            emit("radial", dp, d, oracle::verify_radial(dp, d, 3, oracle::default_radial_grid(dp, d, 3, v.points)));
    }
    if (v.suite == "angular" || v.suite == "all") {
        for (double v0 : {2.0, 6.0, 12.0})
            emit("angular", v0, std::nullopt, oracle::verify_angular(v0, 3, oracle::default_angular_grid(v.points)));
    }
    csv.flush(f.output);
    return all_ok ? kOk : kVerify;
}

// ---------------------------------------------------------------------------
// Config files: `key = value` lines, '#' comments.  Keys are flag names
// without the leading dashes.  File values are injected ahead of the
// command-line flags so that flags win.

std::vector<std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file " + path);
    std::vector<std::string> args;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config")
            throw UsageError(path + ":" + std::to_string(lineno) + ": invalid key");
        args.push_back("--" + key + "=" + value);
    }
    return args;
}

std::vector<std::string> expand_config(int argc, char** argv)
{
    std::vector<std::string> user;
    std::string config;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config") {
            if (i + 1 >= argc)
                throw UsageError("--config requires a path");
            config = argv[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            config = a.substr(9);
        } else {
            user.push_back(std::move(a));
        }
    }
    if (config.empty())
        return user;

    // insert file values right after the subcommand name
    std::vector<std::string> out;
    std::size_t sub = 0;
    while (sub < user.size() && user[sub].rfind("-", 0) == 0)
        ++sub;
    if (sub >= user.size())
        throw UsageError("--config needs a subcommand");
    out.insert(out.end(), user.begin(), user.begin() + static_cast<long>(sub) + 1);
    const auto file_args = read_config(config);
    out.insert(out.end(), file_args.begin(), file_args.end());
    out.insert(out.end(), user.begin() + static_cast<long>(sub) + 1, user.end());
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Relativistic bound states of the ring-shaped pseudo-harmonic oscillator"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    app.footer("All subcommands accept --config FILE with `key = value` lines; flags override the file.");

    RequestFlags flags;

    auto* solve = app.add_subcommand("solve", "solve one bound state and print a CSV record");
    add_request_flags(solve, flags);

    TableSpec table_spec;
    auto* table = app.add_subcommand("table", "reproduce a reference energy table");
    table->add_option("which,--which", table_spec.which, "spin1 | pseudospin2")
        ->required()
        ->check(CLI::IsMember({"spin1", "pseudospin2"}));
    add_enum_flags(table, flags);
    table->add_option("--tol", flags.tol)->check(CLI::PositiveNumber);
    add_common_flags(table, flags);

    SweepSpec sweep_spec;
    auto* sweep = app.add_subcommand("sweep", "energies over a parameter range, one column per series member");
    add_request_flags(sweep, flags);
    sweep->add_option("--vary", sweep_spec.vary, "A | B | K")->check(CLI::IsMember({"A", "B", "K"}));
    sweep->add_option("--from", sweep_spec.from)->required();
    sweep->add_option("--to", sweep_spec.to)->required();
    sweep->add_option("--steps", sweep_spec.steps)->required();
    sweep->add_option("--series", sweep_spec.series, "n | m")->check(CLI::IsMember({"n", "m"}));
    sweep->add_option("--values", sweep_spec.values, "comma-separated series members");

    WavefunctionSpec wf_spec;
    auto* wavefunction = app.add_subcommand("wavefunction", "sample the normalized radial wavefunction");
    add_request_flags(wavefunction, flags);
    wavefunction->add_option("--points", wf_spec.points, "grid points");
    wavefunction->add_option("--r-max", wf_spec.r_max, "grid extent (default: turning point + 4 widths)");
    wavefunction
        ->add_option("--mass-coupling", wf_spec.coupling, "plus: E+M (default) | minus: E-M")
        ->check(CLI::IsMember({"plus", "minus"}));

    PotentialSpec pot_spec;
    auto* potential = app.add_subcommand("potential", "sample V(r, theta) on a grid");
    add_param_flags(potential, flags);
    potential->add_option("--r-max", pot_spec.r_max);
    potential->add_option("--r-steps", pot_spec.r_steps);
    potential->add_option("--theta-steps", pot_spec.theta_steps);
    add_common_flags(potential, flags);

    ThermoSpec th_spec;
    auto* thermo_cmd = app.add_subcommand("thermo", "thermodynamic functions of the non-relativistic spectrum");
    add_enum_flags(thermo_cmd, flags);
    add_param_flags(thermo_cmd, flags);
    thermo_cmd->add_option("--m", flags.m);
    thermo_cmd->add_option("--M", flags.M, "mass used for mu when --mu is absent");
    thermo_cmd->add_option("--mu", th_spec.mu, "reduced mass");
    thermo_cmd->add_option("--T-min", th_spec.T_min);
    thermo_cmd->add_option("--T-max", th_spec.T_max);
    thermo_cmd->add_option("--steps", th_spec.steps);
    thermo_cmd->add_option("--N", th_spec.N, "particle number");
    thermo_cmd->add_option("--kB", th_spec.k_B, "Boltzmann constant");
    thermo_cmd->add_option("--tail-tol", th_spec.tail_tol, "relative truncation of the level sum");
    add_common_flags(thermo_cmd, flags);

    VerifySpec verify_spec;
    auto* verify = app.add_subcommand("verify", "finite-difference check of the closed-form spectra");
    verify->add_option("--suite", verify_spec.suite, "radial | angular | all")
        ->check(CLI::IsMember({"radial", "angular", "all"}));
    verify->add_option("--points", verify_spec.points)->check(CLI::Range(16, 1 << 22));
    add_common_flags(verify, flags);

    try {
        auto args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*solve)
            return cmd_solve(flags);
        if (*table)
            return cmd_table(flags, table_spec);
        if (*sweep)
            return cmd_sweep(flags, sweep_spec);
        if (*wavefunction)
            return cmd_wavefunction(flags, wf_spec);
        if (*potential)
            return cmd_potential(flags, pot_spec);
        if (*thermo_cmd)
            return cmd_thermo(flags, th_spec);
        if (*verify)
            return cmd_verify(flags, verify_spec);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const NoRootError& e) {
        std::cerr << "no root: " << e.what() << '\n';
        return kDomain;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence: " << e.what() << '\n';
        return kDomain;
    } catch (const thermo::NonConvergence& e) {
        std::cerr << "convergence: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}
