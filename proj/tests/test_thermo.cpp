#include <doctest.h>

#include <cmath>
#include <vector>

#include "rspho/spectrum.hpp"
#include "rspho/thermo.hpp"

using namespace rspho;
using namespace rspho::thermo;
using doctest::Approx;

namespace {

const PotentialParams kTable1{5.0, 6.0, -0.05, 0.005};

std::vector<double> table1_levels(int count)
{
    const auto src = nonrelativistic_levels(kTable1, 5.0, 0, BranchSign::Plus, Convention::TableConsistent);
    std::vector<double> out;
    for (int n = 0; n < count; ++n)
        out.push_back(src(n));
    return out;
}

// ln sum exp(-beta (E_n - E_0)) over every level, no truncation
double ln_z_shifted(const std::vector<double>& e, double beta)
{
    double excess = 0.0;
    for (std::size_t i = 1; i < e.size(); ++i)
        excess += std::exp(-beta * (e[i] - e[0]));
    return std::log1p(excess);
}

}  // namespace

TEST_CASE("two-level partition sums")
{
    const std::vector<double> lv{0.0, 1.0};
    const auto z = partition_function(lv, 1.0);
    CHECK(z.Z == Approx(1.0 + std::exp(-1.0)).epsilon(1e-15));
    CHECK(z.Z == Approx(1.367879).epsilon(1e-6));
    CHECK(z.levels_used == 2);

    CHECK(partition_function(std::vector<double>{0.0, 1e-3}, 1e6).Z == Approx(1.0).epsilon(1e-14));

    const double eps = 0.7;
    const double beta = std::log(3.0) / eps;
    const auto p = thermo_point(std::vector<double>{0.0, eps}, 1.0 / beta);
    CHECK(p.U == Approx(eps / 4.0).epsilon(1e-14));
    CHECK(p.C == Approx(beta * beta * eps * eps * 3.0 / 16.0).epsilon(1e-13));
    CHECK(p.beta * p.T == Approx(1.0));
}

TEST_CASE("two-level low-temperature limit")
{
    const std::vector<double> lv{0.0, 0.5};
    const auto p = thermo_point(lv, 1e-3);
    CHECK(p.U == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(p.S == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(p.C == Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("ground-level shift keeps large beta finite")
{
    const std::vector<double> lv{1000.0, 1001.0};
    const auto p = thermo_point(lv, 0.5);
    CHECK(std::isfinite(p.ln_Z));
    CHECK(p.ln_Z == Approx(-2000.0 + std::log1p(std::exp(-2.0))).epsilon(1e-14));
    CHECK(p.U == Approx(1000.0 + std::exp(-2.0) / (1.0 + std::exp(-2.0))).epsilon(1e-14));
}

TEST_CASE("Table-1 non-relativistic spectrum truncates early")
{
    const auto src = nonrelativistic_levels(kTable1, 5.0, 0, BranchSign::Plus, Convention::TableConsistent);
    const auto z = partition_function(src, 1.0);
    CHECK(std::isfinite(z.Z));
    CHECK(z.Z > 0.0);
    CHECK(z.levels_used < 100);

    const auto all = table1_levels(10000);
    const double direct = -all[0] + ln_z_shifted(all, 1.0);
    CHECK(std::abs(z.ln_Z - direct) <= kDefaultTailTol * std::abs(direct) + 1e-14);
}

TEST_CASE("analytic moments against numerical derivatives")
{
    const auto lv = table1_levels(400);
    const double e0 = lv[0];
    for (double T : {0.3, 1.0, 2.5, 5.0}) {
        const auto p = thermo_point(lv, T);
        const double beta = 1.0 / T;

        // U - E0 = -d ln Z~ / d beta
        const double hb = 1e-4 * beta;
        const double u_num = -(ln_z_shifted(lv, beta + hb) - ln_z_shifted(lv, beta - hb)) / (2.0 * hb);
        CHECK(p.U - e0 == Approx(u_num).epsilon(1e-6));

        // F - E0 = -T ln Z~, S = -dF/dT, C = dU/dT
        const double hT = 1e-4 * T;
        auto f_exc = [&](double t) { return -t * ln_z_shifted(lv, 1.0 / t); };
        auto u_exc = [&](double t) { return thermo_point(lv, t).U - e0; };
        CHECK(p.S == Approx(-(f_exc(T + hT) - f_exc(T - hT)) / (2.0 * hT)).epsilon(1e-6));
        CHECK(p.C == Approx((u_exc(T + hT) - u_exc(T - hT)) / (2.0 * hT)).epsilon(1e-6));
    }
}

TEST_CASE("Gibbs relation, positivity and monotonicity")
{
    const auto src = nonrelativistic_levels(kTable1, 5.0, 1, BranchSign::Plus, Convention::EquationConsistent);
    double prev_z = INFINITY;
    for (int i = 1; i <= 60; ++i) {
        const double T = 0.1 * i;
        const auto p = thermo_point(src, T);
        CHECK(p.F == Approx(p.U - T * p.S).epsilon(1e-10));
        CHECK(p.C >= 0.0);
        CHECK(p.S >= 0.0);
        CHECK(p.Z > 0.0);
        const double z_beta = partition_function(src, 1.0 / (0.1 * (61 - i))).Z;
        CHECK(z_beta < prev_z);
        prev_z = z_beta;
    }
}

TEST_CASE("N particles and Boltzmann constant")
{
    const auto lv = table1_levels(200);
    const auto one = thermo_point(lv, 1.3);
    ThermoOptions opt;
    opt.N = 4;
    const auto four = thermo_point(lv, 1.3, opt);
    CHECK(four.F == Approx(4.0 * one.F));
    CHECK(four.U == Approx(4.0 * one.U));
    CHECK(four.S == Approx(4.0 * one.S));
    CHECK(four.C == Approx(4.0 * one.C));
    CHECK(four.Z == one.Z);
    CHECK(four.F == Approx(four.U - 1.3 * four.S).epsilon(1e-10));

    opt = {};
    opt.k_B = 2.0;
    const auto kb = thermo_point(lv, 0.65, opt);
    CHECK(kb.beta == Approx(one.beta));
    CHECK(kb.U == Approx(one.U));
    CHECK(kb.S == Approx(2.0 * one.S));
}

TEST_CASE("thermo errors")
{
    CHECK_THROWS_AS(partition_function(std::vector<double>{0.0, 1.0, 1.0}, 0.001), DomainError);
    CHECK_THROWS_AS(partition_function(std::vector<double>{0.0, -1.0}, 1.0), DomainError);
    CHECK_THROWS_AS(partition_function(std::vector<double>{0.0, 1.0}, 0.0), DomainError);
    CHECK_THROWS_AS(partition_function(std::vector<double>{}, 1.0), DomainError);
    CHECK_THROWS_AS(thermo_point(std::vector<double>{0.0, 1.0}, 0.0), DomainError);
    ThermoOptions bad;
    bad.N = 0;
    CHECK_THROWS_AS(thermo_point(std::vector<double>{0.0, 1.0}, 1.0, bad), DomainError);

    const LevelSource crawling = [](int n) { return 1e-9 * n; };
    CHECK_THROWS_AS(partition_function(crawling, 1.0), NonConvergence);
}
