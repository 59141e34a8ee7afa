#ifndef ANYON_STATMECH_HPP
#define ANYON_STATMECH_HPP

#include "anyon/core.hpp"

namespace anyon {

// Equilibrium bundle at one ThermoPoint. All log-partition values are
// natural logs; energies share the units of hbar*omega.
struct ThermoProps {
    double ln_z_fermi = 0.0;
    double ln_z_bose = 0.0;
    double ln_z_total = 0.0;
    double p_fermi = 0.0;      // in [0,1]; exactly 1 when d < N
    double u_fermi = 0.0;
    double u_bose = 0.0;
    double u_total = 0.0;
};

// First and second derivatives of the internal energy with respect to
// temperature, nu and omega, evaluated analytically.
struct CapacityReport {
    double c_temp = 0.0;       // dU/dT
    double c_nu = 0.0;         // dU/dnu (dimensionless)
    double c_omega = 0.0;      // dU/domega (action units)
    double d2_temp = 0.0;      // d2U/dT2
    double d2_nu = 0.0;        // d2U/dnu2
    double d2_omega = 0.0;     // d2U/domega2
};

struct StatAnyonProps {
    double ln_z = 0.0;
    double u = 0.0;
};

struct EnergyBranches {
    double u_fermi = 0.0;
    double u_bose = 0.0;
};

// ln Z_F = -beta hbar omega N^2/2 - sum_{k=1..N} ln(1 - e^{-beta hbar omega k})
double ln_partition_fermi(const ThermoPoint& point);

// ln Z_B: same thermal product with ground term -beta hbar omega N/2.
double ln_partition_bose(const ThermoPoint& point);

// Log-sum-exp of the two weighted branches of the full partition function;
// reduces to the fermionic branch alone when d < N.
double ln_partition_total(const ThermoPoint& point);

// p_F = 1/(1 + e^{phi}), evaluated on the numerically safe side of the
// logistic. Returns exactly 1 when d < N.
double fermionic_weight(const ThermoPoint& point);

EnergyBranches internal_energy_branches(const ThermoPoint& point);

// U = p_F U_F + (1 - p_F)(nu + U_B)
double internal_energy(const ThermoPoint& point);

ThermoProps thermo_props(const ThermoPoint& point);

// Fixed-ratio mixture of the pure branches: ln Z_SA = k_F ln Z_F +
// (1-k_F) ln Z_B and U_SA = k_F U_F + (1-k_F) U_B.
StatAnyonProps statistical_anyon_props(const ThermoPoint& point,
                                       double k_fermi);

// Analytic derivative bundle. For d < N the report degenerates to the pure
// fermionic branch (no transition terms).
CapacityReport capacities(const ThermoPoint& point);

namespace detail {

// Bose occupation of mode k at x = k beta hbar omega: 1/(e^x - 1).
double occupation(double x);

// sum_{k=1..N} k hbar omega / (e^{k beta hbar omega} - 1)
double thermal_energy_sum(const ThermoPoint& point);

// d/dbeta and d2/dbeta2 of U_B at fixed omega.
double du_bose_dbeta(const ThermoPoint& point);
double d2u_bose_dbeta2(const ThermoPoint& point);

// d/domega and d2/domega2 of U_B at fixed beta.
double du_bose_domega(const ThermoPoint& point);
double d2u_bose_domega2(const ThermoPoint& point);

// log(1 + e^x) without overflow.
double log1p_exp(double x);

// Logistic 1/(1 + e^x), branch-stable.
double logistic_neg(double x);

} // namespace detail

} // namespace anyon

#endif
