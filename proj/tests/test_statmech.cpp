#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "anyon/statmech.hpp"

using namespace anyon;

namespace {

ThermoPoint reference_point() {
    SystemParams p;
    p.n_particles = 2;
    p.spin_dim = 2;
    return ThermoPoint{p, 1.0};
}

double fd_step(double x) {
    return std::cbrt(std::numeric_limits<double>::epsilon()) *
           std::max(std::abs(x), 1.0);
}

} // namespace

TEST_CASE("partition values at the N=2, d=2, beta hbar omega = 1 point") {
    const ThermoPoint pt = reference_point();
    // Frozen against the spectrum-enumeration oracle (cutoff ~ 80 levels).
    CHECK(ln_partition_fermi(pt) ==
          doctest::Approx(-1.39591139674).epsilon(1e-10));
    CHECK(ln_partition_bose(pt) ==
          doctest::Approx(-0.39591139674).epsilon(1e-10));
    CHECK(ln_partition_total(pt) ==
          doctest::Approx(0.347756983885).epsilon(1e-10));

    SystemParams p1;
    p1.n_particles = 1;
    p1.spin_dim = 1;
    CHECK(ln_partition_fermi(ThermoPoint{p1, 1.0}) ==
          doctest::Approx(-0.0413248546129).epsilon(1e-10));
}

TEST_CASE("single particle has no exchange statistics") {
    SystemParams p;
    p.n_particles = 1;
    p.spin_dim = 3;
    for (double beta : {0.3, 1.0, 4.0}) {
        const ThermoPoint pt{p, beta};
        CHECK(ln_partition_fermi(pt) ==
              doctest::Approx(ln_partition_bose(pt)).epsilon(1e-15));
    }
}

TEST_CASE("branch offsets are exact") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        SystemParams p;
        p.n_particles = 1 + static_cast<int>(u(rng) * 10);
        p.spin_dim = p.n_particles + 2;
        p.omega = u(rng);
        p.nu = u(rng) - 1.5;
        const ThermoPoint pt{p, u(rng)};
        const double n = p.n_particles;
        const double gap = 0.5 * pt.beta * p.hbar * p.omega * n * (n - 1.0);
        CHECK(ln_partition_bose(pt) - ln_partition_fermi(pt) ==
              doctest::Approx(gap).epsilon(1e-12));
        const EnergyBranches ub = internal_energy_branches(pt);
        CHECK(ub.u_fermi - ub.u_bose ==
              doctest::Approx(0.5 * p.hbar * p.omega * n * (n - 1.0))
                  .epsilon(1e-13));
    }
}

TEST_CASE("total partition function recomposes in linear space") {
    SystemParams p;
    p.n_particles = 3;
    p.spin_dim = 4;
    p.nu = 0.7;
    const ThermoPoint pt{p, 0.8};
    const SubspaceDims dims = subspace_dims(p.spin_dim, p.n_particles);
    const double direct =
        std::exp(dims.sym_log_dim) * std::exp(ln_partition_fermi(pt)) +
        std::exp(*dims.alt_log_dim) * std::exp(-pt.beta * p.nu) *
            std::exp(ln_partition_bose(pt));
    CHECK(std::exp(ln_partition_total(pt)) ==
          doctest::Approx(direct).epsilon(1e-12));

    // empty antisymmetric branch: only the fermionic term survives
    SystemParams q = p;
    q.spin_dim = 2;
    const ThermoPoint qt{q, 0.8};
    CHECK(ln_partition_total(qt) ==
          doctest::Approx(subspace_dims(2, 3).sym_log_dim +
                          ln_partition_fermi(qt))
              .epsilon(1e-14));
}

TEST_CASE("fermionic weight: frozen value, midpoint, ratio identity") {
    const ThermoPoint pt = reference_point();
    CHECK(fermionic_weight(pt) ==
          doctest::Approx(0.524633113581).epsilon(1e-10));

    SystemParams p = pt.params;
    p.omega = std::log(3.0);
    CHECK(fermionic_weight(ThermoPoint{p, 1.0}) ==
          doctest::Approx(0.5).epsilon(1e-14));

    // p_F equals the ratio of the fermionic branch to the full trace
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.3, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        SystemParams q;
        q.n_particles = 2 + trial % 4;
        q.spin_dim = q.n_particles + trial % 3;
        q.omega = u(rng);
        q.nu = 2.0 * u(rng) - 2.0;
        const ThermoPoint qt{q, u(rng)};
        const double ratio =
            std::exp(subspace_dims(q.spin_dim, q.n_particles).sym_log_dim +
                     ln_partition_fermi(qt) - ln_partition_total(qt));
        CHECK(fermionic_weight(qt) == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("fermionic weight saturates without overflow and pins at d < N") {
    SystemParams p;
    p.n_particles = 2;
    p.spin_dim = 2;

    p.nu = -1e6;
    CHECK(fermionic_weight(ThermoPoint{p, 1.0}) == doctest::Approx(0.0));
    p.nu = 1e6;
    CHECK(fermionic_weight(ThermoPoint{p, 1.0}) == doctest::Approx(1.0));

    p.nu = 0.0;
    p.n_particles = 5;
    CHECK(fermionic_weight(ThermoPoint{p, 1.0}) == 1.0);
}

TEST_CASE("fermionic weight is monotone in nu and omega") {
    SystemParams p;
    p.n_particles = 4;
    p.spin_dim = 5;
    double prev = 0.0;
    for (double nu = -6.0; nu <= 12.0; nu += 0.5) {
        p.nu = nu;
        const double w = fermionic_weight(ThermoPoint{p, 1.0});
        CHECK(w >= prev);
        prev = w;
    }
    // raising omega widens the pauli gap, disfavoring the fermionic branch
    p.nu = 3.0;
    prev = 1.0;
    for (double omega = 0.1; omega <= 4.0; omega += 0.2) {
        p.omega = omega;
        const double w = fermionic_weight(ThermoPoint{p, 1.0});
        CHECK(w <= prev);
        prev = w;
    }
}

TEST_CASE("internal energy: frozen values and zero-temperature limits") {
    const ThermoPoint pt = reference_point();
    const EnergyBranches ub = internal_energy_branches(pt);
    CHECK(ub.u_bose == doctest::Approx(1.89501199237).epsilon(1e-10));
    CHECK(ub.u_fermi == doctest::Approx(2.89501199237).epsilon(1e-10));
    CHECK(internal_energy(pt) ==
          doctest::Approx(2.41964510595).epsilon(1e-10));

    SystemParams p3;
    p3.n_particles = 3;
    p3.spin_dim = 3;
    const EnergyBranches cold = internal_energy_branches(ThermoPoint{p3, 500.0});
    CHECK(cold.u_fermi == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(cold.u_bose == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("internal energy equals -dlnZ/dbeta") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(0.05, 20.0);
    std::uniform_int_distribution<int> un(1, 60);
    std::uniform_real_distribution<double> unu(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        SystemParams p;
        p.n_particles = un(rng);
        p.spin_dim = p.n_particles + static_cast<int>(ux(rng)) % 3;
        p.nu = unu(rng) * p.pauli_gap();
        const double beta = ux(rng) / (p.hbar * p.omega);
        const double h = fd_step(beta);
        const double fd = -(ln_partition_total(ThermoPoint{p, beta + h}) -
                            ln_partition_total(ThermoPoint{p, beta - h})) /
                          (2.0 * h);
        const double u = internal_energy(ThermoPoint{p, beta});
        CHECK(std::abs(u - fd) <=
              1e-7 * std::max(std::abs(u), 1.0) + 1e-7);
    }
}

TEST_CASE("statistical anyon mixes the pure branches linearly") {
    const ThermoPoint pt = reference_point();
    const StatAnyonProps pure = statistical_anyon_props(pt, 1.0);
    CHECK(pure.ln_z == doctest::Approx(ln_partition_fermi(pt)).epsilon(1e-15));
    CHECK(pure.u ==
          doctest::Approx(internal_energy_branches(pt).u_fermi).epsilon(1e-15));

    const StatAnyonProps half = statistical_anyon_props(pt, 0.5);
    CHECK(half.u == doctest::Approx(2.39501199237).epsilon(1e-10));

    CHECK_THROWS_AS(statistical_anyon_props(pt, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(statistical_anyon_props(pt, -0.1), std::invalid_argument);
}

TEST_CASE("thermo_props bundle is internally consistent") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
        SystemParams p;
        p.n_particles = 2 + trial % 5;
        p.spin_dim = p.n_particles + trial % 2;
        p.omega = u(rng);
        p.nu = u(rng) - 1.5;
        const ThermoPoint pt{p, u(rng)};
        const ThermoProps props = thermo_props(pt);
        CHECK(props.u_total ==
              doctest::Approx(props.p_fermi * props.u_fermi +
                              (1.0 - props.p_fermi) * (p.nu + props.u_bose))
                  .epsilon(1e-14));
        CHECK(props.p_fermi >= 0.0);
        CHECK(props.p_fermi <= 1.0);
    }
}

TEST_CASE("analytic capacities match finite differences of the energy") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> ux(0.05, 5.0);
    std::uniform_int_distribution<int> un(1, 40);
    std::uniform_real_distribution<double> uphi(-15.0, 15.0);
    std::uniform_real_distribution<double> unear(-0.5, 0.5);

    for (int trial = 0; trial < 200; ++trial) {
        SystemParams p;
        p.n_particles = un(rng);
        p.spin_dim = p.n_particles;
        p.omega = 1.0;
        const double beta = ux(rng);
        const double h = h_of(p.spin_dim, p.n_particles);
        const double phi_t = trial % 3 == 0 ? unear(rng) : uphi(rng);
        p.nu = (beta * p.pauli_gap() - h - phi_t) / beta;
        const ThermoPoint pt{p, beta};

        const double tol = std::abs(phi(pt)) < 0.5 ? 1e-4 : 1e-6;
        const CapacityReport caps = capacities(pt);
        const double u_scale =
            std::max(std::abs(internal_energy(pt)), 1.0);

        const auto check = [&](double analytic, double fd, double step,
                               double scale) {
            const double floor =
                64.0 * std::numeric_limits<double>::epsilon() * scale / step;
            CHECK(std::abs(analytic - fd) <=
                  tol * std::max(std::abs(analytic), std::abs(fd)) + floor);
        };

        // The fermionic weight is a logistic in phi, so derivatives of U
        // vary on the parameter scale 1/|dphi/dx|; cap the step there to
        // keep the central-difference truncation below the tolerance.
        const double gap_term = p.pauli_gap() - p.nu;
        const auto sharp_step = [](double base, double phi_slope) {
            return std::min(base, 1e-4 / (std::abs(phi_slope) + 1.0));
        };

        {
            const double t = pt.temperature();
            const double s = sharp_step(fd_step(t), gap_term * beta * beta);
            const double fd =
                (internal_energy(ThermoPoint::from_temperature(p, t + s)) -
                 internal_energy(ThermoPoint::from_temperature(p, t - s))) /
                (2.0 * s);
            check(caps.c_temp, fd, s, u_scale);
            const double fd2 =
                (capacities(ThermoPoint::from_temperature(p, t + s)).c_temp -
                 capacities(ThermoPoint::from_temperature(p, t - s)).c_temp) /
                (2.0 * s);
            check(caps.d2_temp, fd2, s, std::max(std::abs(caps.c_temp), 1.0));
        }
        {
            const double s = sharp_step(fd_step(p.nu), beta);
            SystemParams lo = p, hi = p;
            lo.nu -= s;
            hi.nu += s;
            const double fd = (internal_energy(ThermoPoint{hi, beta}) -
                               internal_energy(ThermoPoint{lo, beta})) /
                              (2.0 * s);
            check(caps.c_nu, fd, s, u_scale);
            const double fd2 = (capacities(ThermoPoint{hi, beta}).c_nu -
                                capacities(ThermoPoint{lo, beta}).c_nu) /
                               (2.0 * s);
            check(caps.d2_nu, fd2, s, std::max(std::abs(caps.c_nu), 1.0));
        }
        {
            const double s = sharp_step(
                fd_step(p.omega),
                0.5 * beta * p.n_particles * (p.n_particles - 1.0));
            SystemParams lo = p, hi = p;
            lo.omega -= s;
            hi.omega += s;
            const double fd = (internal_energy(ThermoPoint{hi, beta}) -
                               internal_energy(ThermoPoint{lo, beta})) /
                              (2.0 * s);
            check(caps.c_omega, fd, s, u_scale);
            const double fd2 = (capacities(ThermoPoint{hi, beta}).c_omega -
                                capacities(ThermoPoint{lo, beta}).c_omega) /
                               (2.0 * s);
            check(caps.d2_omega, fd2, s,
                  std::max(std::abs(caps.c_omega), 1.0));
        }
    }
}

TEST_CASE("midpoint slope: dp_F/dnu = beta/4 at phi = 0") {
    SystemParams p;
    p.n_particles = 2;
    p.spin_dim = 2;
    p.omega = std::log(3.0);  // phi = 0 at beta = 1
    const double beta = 1.0;
    const double s = 1e-5;
    SystemParams lo = p, hi = p;
    lo.nu -= s;
    hi.nu += s;
    const double slope = (fermionic_weight(ThermoPoint{hi, beta}) -
                          fermionic_weight(ThermoPoint{lo, beta})) /
                         (2.0 * s);
    CHECK(slope == doctest::Approx(beta / 4.0).epsilon(1e-8));
}

TEST_CASE("capacities degenerate to the fermionic branch when d < N") {
    SystemParams p;
    p.n_particles = 4;
    p.spin_dim = 2;
    p.nu = 5.0;  // must be irrelevant
    const ThermoPoint pt{p, 1.3};
    const CapacityReport caps = capacities(pt);

    SystemParams q = p;
    q.nu = -5.0;
    const CapacityReport caps2 = capacities(ThermoPoint{q, 1.3});
    CHECK(caps.c_temp == caps2.c_temp);
    CHECK(caps.c_omega == caps2.c_omega);
    CHECK(caps.c_nu == doctest::Approx(0.0));
}
