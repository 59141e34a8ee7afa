#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "anyon/oracle.hpp"
#include "anyon/statmech.hpp"
#include "anyon/transitions.hpp"

using namespace anyon;
using oracle::EnumeratedSpectrum;
using oracle::SpinSector;
using oracle::Symmetry;

TEST_CASE("two-fermion enumeration lists the exact low-lying states") {
    EnumeratedSpectrum spec =
        oracle::enumerate_spectrum(Symmetry::fermionic, 2, 2.0, 1e-4);
    REQUIRE(spec.level_cutoff >= 3);

    const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {0, 3},
                                                 {1, 2}, {1, 3}, {2, 3}};
    for (const auto& cfg : expected)
        CHECK(std::find(spec.configs.begin(), spec.configs.end(), cfg) !=
              spec.configs.end());
    const double e_min =
        *std::min_element(spec.energies.begin(), spec.energies.end());
    CHECK(e_min == doctest::Approx(2.0));  // hbar omega N^2 / 2

    EnumeratedSpectrum bose =
        oracle::enumerate_spectrum(Symmetry::bosonic, 2, 2.0, 1e-4);
    CHECK(std::find(bose.configs.begin(), bose.configs.end(),
                    std::vector<int>{0, 0}) != bose.configs.end());
    CHECK(std::find(bose.configs.begin(), bose.configs.end(),
                    std::vector<int>{1, 1}) != bose.configs.end());
    CHECK(*std::min_element(bose.energies.begin(), bose.energies.end()) ==
          doctest::Approx(1.0));  // hbar omega N / 2
}

TEST_CASE("enumerated partition functions match the closed forms") {
    for (int n = 1; n <= 4; ++n)
        for (double x : {0.5, 1.0, 2.0, 5.0})
            for (Symmetry sym : {Symmetry::fermionic, Symmetry::bosonic}) {
                const EnumeratedSpectrum spec =
                    oracle::enumerate_spectrum(sym, n, x, 1e-13);
                SystemParams p;
                p.n_particles = n;
                p.spin_dim = n;
                const ThermoPoint pt{p, x};
                const double closed = sym == Symmetry::fermionic
                                          ? ln_partition_fermi(pt)
                                          : ln_partition_bose(pt);
                CHECK(std::abs(oracle::ln_partition(spec, x) - closed) <
                      1e-10);

                const EnergyBranches ub = internal_energy_branches(pt);
                const double u_closed =
                    sym == Symmetry::fermionic ? ub.u_fermi : ub.u_bose;
                CHECK(std::abs(oracle::internal_energy(spec, x) - u_closed) /
                          std::abs(u_closed) <
                      1e-8);
            }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(oracle::enumerate_spectrum(Symmetry::bosonic, 7, 1.0, 1e-8),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_spectrum(Symmetry::bosonic, 2, 1.0, 0.0),
                    std::invalid_argument);
    // unreachable tolerance: tiny beta forces a huge cutoff
    CHECK_THROWS_AS(
        oracle::enumerate_spectrum(Symmetry::bosonic, 6, 0.01, 1e-13),
        std::invalid_argument);
}

TEST_CASE("character sums reproduce the binomial dimensions") {
    CHECK(oracle::character_dimension(2, 2, SpinSector::sym) == 3);
    CHECK(oracle::character_dimension(2, 2, SpinSector::alt) == 1);
    CHECK(oracle::character_dimension(2, 3, SpinSector::alt) == 0);
    CHECK(oracle::character_dimension(4, 3, SpinSector::sym) == 20);
    CHECK(oracle::character_dimension(4, 3, SpinSector::alt) == 4);

    for (int d = 1; d <= 6; ++d)
        for (int n = 1; n <= 6; ++n) {
            const long double sym = oracle::exact_binomial(d + n - 1, n);
            const long double alt =
                d >= n ? oracle::exact_binomial(d, n) : 0.0L;
            CHECK(static_cast<long double>(
                      oracle::character_dimension(d, n, SpinSector::sym)) ==
                  sym);
            CHECK(static_cast<long double>(
                      oracle::character_dimension(d, n, SpinSector::alt)) ==
                  alt);
        }

    CHECK_THROWS_AS(oracle::character_dimension(9, 2, SpinSector::sym),
                    std::invalid_argument);
}

TEST_CASE("exact binomials cross-check the log-gamma dimensions") {
    CHECK(oracle::exact_binomial(4, 2) == 6.0L);
    CHECK(oracle::exact_binomial(0, 0) == 1.0L);

    // ln C(99,50) from exact arithmetic vs the log-gamma path
    const double exact =
        static_cast<double>(std::log(oracle::exact_binomial(99, 50)));
    const double approx = subspace_dims(50, 50).sym_log_dim;
    CHECK(std::abs(exact - approx) / exact < 1e-12);

    CHECK_THROWS_AS(oracle::exact_binomial(101, 3), std::invalid_argument);
}

TEST_CASE("qubit requirement over the tuned thermal mixture") {
    SystemParams p;
    p.n_particles = 2;
    p.spin_dim = 2;

    SUBCASE("low temperature needs one qubit") {
        const oracle::QubitReport rep = oracle::qubit_requirement(p, 0.05, 0.999);
        CHECK(rep.num_states == 2);
        CHECK(rep.num_qubits == 1);
        // nu is tuned to the midpoint: nu = gap - h k_B T
        CHECK(rep.nu_used ==
              doctest::Approx(1.0 - 0.05 * std::log(3.0)).epsilon(1e-9));
    }

    SUBCASE("qubit count is non-decreasing in coverage") {
        int prev = 0;
        for (double coverage : {0.5, 0.9, 0.99, 0.999, 0.9999}) {
            const oracle::QubitReport rep =
                oracle::qubit_requirement(p, 1.5, coverage);
            CHECK(rep.num_qubits >= prev);
            prev = rep.num_qubits;
        }
    }

    SUBCASE("guards") {
        CHECK_THROWS_AS(oracle::qubit_requirement(p, 1.0, 1.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(oracle::qubit_requirement(p, -1.0, 0.9),
                        std::invalid_argument);
        SystemParams big = p;
        big.n_particles = 5;
        big.spin_dim = 5;
        CHECK_THROWS_AS(oracle::qubit_requirement(big, 1.0, 0.9),
                        std::invalid_argument);
    }
}
