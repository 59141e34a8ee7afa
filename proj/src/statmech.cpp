#include "anyon/statmech.hpp"

#include <algorithm>
#include <cmath>

namespace anyon {

namespace detail {

double log1p_exp(double x) {
    if (x > 0.0)
        return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

double logistic_neg(double x) {
    // 1/(1 + e^x); for large positive x the direct form underflows cleanly,
    // for large negative x we avoid computing e^x at all.
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double occupation(double x) {
    // 1/(e^x - 1); expm1 keeps small-x accuracy, large x saturates to 0.
    const double em1 = std::expm1(x);
    if (!std::isfinite(em1))
        return 0.0;
    return 1.0 / em1;
}

double thermal_energy_sum(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    const double bho = point.beta * p.hbar * p.omega;
    double sum = 0.0;
    for (int k = p.n_particles; k >= 1; --k)
        sum += k * p.hbar * p.omega * occupation(k * bho);
    return sum;
}

double du_bose_dbeta(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    const double bho = point.beta * p.hbar * p.omega;
    const double ho = p.hbar * p.omega;
    double sum = 0.0;
    for (int k = p.n_particles; k >= 1; --k) {
        const double n = occupation(k * bho);
        sum += (k * ho) * (k * ho) * n * (1.0 + n);
    }
    return -sum;
}

double d2u_bose_dbeta2(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    const double bho = point.beta * p.hbar * p.omega;
    const double ho = p.hbar * p.omega;
    double sum = 0.0;
    for (int k = p.n_particles; k >= 1; --k) {
        const double n = occupation(k * bho);
        const double e = k * ho;
        sum += e * e * e * n * (1.0 + n) * (1.0 + 2.0 * n);
    }
    return sum;
}

double du_bose_domega(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    const double bho = point.beta * p.hbar * p.omega;
    double sum = 0.5 * p.hbar * p.n_particles;
    for (int k = p.n_particles; k >= 1; --k) {
        const double x = k * bho;
        const double n = occupation(x);
        sum += k * p.hbar * (n - x * n * (1.0 + n));
    }
    return sum;
}

double d2u_bose_domega2(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    const double bho = point.beta * p.hbar * p.omega;
    double sum = 0.0;
    for (int k = p.n_particles; k >= 1; --k) {
        const double x = k * bho;
        const double n = occupation(x);
        sum += (k * p.hbar / p.omega) *
               (x * x * n * (1.0 + n) * (1.0 + 2.0 * n) -
                2.0 * x * n * (1.0 + n));
    }
    return sum;
}

} // namespace detail

namespace {

// - sum_{k=1..N} ln(1 - e^{-k beta hbar omega}), shared by both branches.
double ln_thermal_product(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    const double bho = point.beta * p.hbar * p.omega;
    double sum = 0.0;
    for (int k = p.n_particles; k >= 1; --k)
        sum -= std::log1p(-std::exp(-k * bho));
    return sum;
}

} // namespace

double ln_partition_fermi(const ThermoPoint& point) {
    point.validate();
    const SystemParams& p = point.params;
    const double n = p.n_particles;
    return -0.5 * point.beta * p.hbar * p.omega * n * n +
           ln_thermal_product(point);
}

double ln_partition_bose(const ThermoPoint& point) {
    point.validate();
    const SystemParams& p = point.params;
    const double n = p.n_particles;
    return -0.5 * point.beta * p.hbar * p.omega * n + ln_thermal_product(point);
}

double ln_partition_total(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    const SubspaceDims dims = subspace_dims(p.spin_dim, p.n_particles);
    const double a = dims.sym_log_dim + ln_partition_fermi(point);
    if (dims.alt_empty())
        return a;
    const double b =
        *dims.alt_log_dim - point.beta * p.nu + ln_partition_bose(point);
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double fermionic_weight(const ThermoPoint& point) {
    point.validate();
    if (point.params.alt_subspace_empty())
        return 1.0;
    return detail::logistic_neg(phi(point));
}

EnergyBranches internal_energy_branches(const ThermoPoint& point) {
    point.validate();
    const SystemParams& p = point.params;
    const double n = p.n_particles;
    const double thermal = detail::thermal_energy_sum(point);
    EnergyBranches u;
    u.u_bose = 0.5 * p.hbar * p.omega * n + thermal;
    u.u_fermi = 0.5 * p.hbar * p.omega * n * n + thermal;
    return u;
}

double internal_energy(const ThermoPoint& point) {
    const EnergyBranches u = internal_energy_branches(point);
    const double pf = fermionic_weight(point);
    return pf * u.u_fermi + (1.0 - pf) * (point.params.nu + u.u_bose);
}

ThermoProps thermo_props(const ThermoPoint& point) {
    ThermoProps props;
    props.ln_z_fermi = ln_partition_fermi(point);
    props.ln_z_bose = ln_partition_bose(point);
    props.ln_z_total = ln_partition_total(point);
    props.p_fermi = fermionic_weight(point);
    const EnergyBranches u = internal_energy_branches(point);
    props.u_fermi = u.u_fermi;
    props.u_bose = u.u_bose;
    props.u_total = props.p_fermi * u.u_fermi +
                    (1.0 - props.p_fermi) * (point.params.nu + u.u_bose);
    return props;
}

StatAnyonProps statistical_anyon_props(const ThermoPoint& point,
                                       double k_fermi) {
    if (!(k_fermi >= 0.0 && k_fermi <= 1.0))
        throw std::invalid_argument("k_fermi must lie in [0,1]");
    const EnergyBranches u = internal_energy_branches(point);
    StatAnyonProps props;
    props.ln_z = k_fermi * ln_partition_fermi(point) +
                 (1.0 - k_fermi) * ln_partition_bose(point);
    props.u = k_fermi * u.u_fermi + (1.0 - k_fermi) * u.u_bose;
    return props;
}

CapacityReport capacities(const ThermoPoint& point) {
    point.validate();
    const SystemParams& p = point.params;
    const double beta = point.beta;
    const double kb = p.k_boltzmann;
    const double n = p.n_particles;
    const double gap_slope = 0.5 * p.hbar * n * (n - 1.0); // d(pauli_gap)/domega

    // U(beta, omega, nu) = U_B + nu + p * g with g = pauli_gap - nu and
    // phi = beta * g - h(d,N). For d < N the weight p is pinned at 1 and
    // every transition term vanishes.
    double pf = 1.0;
    double pq = 0.0; // p (1 - p)
    double g = p.pauli_gap() - p.nu;
    if (!p.alt_subspace_empty()) {
        pf = detail::logistic_neg(phi(point));
        pq = pf * (1.0 - pf);
    }
    const double pq2 = pq * (1.0 - 2.0 * pf); // d2p/dphi2 prefactor

    const double ub_b = detail::du_bose_dbeta(point);
    const double ub_bb = detail::d2u_bose_dbeta2(point);
    const double ub_w = detail::du_bose_domega(point);
    const double ub_ww = detail::d2u_bose_domega2(point);

    // Derivatives with respect to beta (phi slope g, g independent of beta).
    const double u_beta = ub_b - pq * g * g;
    const double u_betabeta = ub_bb + pq2 * g * g * g;

    CapacityReport rep;
    // Temperature chain rule: dbeta/dT = -kB beta^2.
    rep.c_temp = -kb * beta * beta * u_beta;
    rep.d2_temp = kb * kb * beta * beta * beta * (2.0 * u_beta + beta * u_betabeta);

    // nu: phi slope -beta; dU/dnu = (1-p) + beta p(1-p) g.
    rep.c_nu = (1.0 - pf) + beta * pq * g;
    rep.d2_nu = beta * beta * pq2 * g - 2.0 * beta * pq;

    // omega: phi slope beta*gap_slope.
    rep.c_omega = ub_w + pf * gap_slope - beta * pq * g * gap_slope;
    rep.d2_omega = ub_ww +
                   beta * beta * gap_slope * gap_slope * pq2 * g -
                   2.0 * beta * gap_slope * gap_slope * pq;
    return rep;
}

} // namespace anyon
