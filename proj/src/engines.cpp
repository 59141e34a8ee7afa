#include "anyon/engines.hpp"

#include <cmath>

namespace anyon {

namespace {

constexpr double kZeroWork = 1e-14;

// ln p_F, stable on both tails; 0 when the antisymmetric subspace is empty.
double ln_p_fermi(const ThermoPoint& point) {
    if (point.params.alt_subspace_empty())
        return 0.0;
    return -detail::log1p_exp(phi(point));
}

CycleResult classify(double w, double q_hot) {
    CycleResult res;
    res.work_cycle = w;
    res.heat_hot = q_hot;
    res.heat_cold = w - q_hot;  // first-law closure by construction
    if (w > kZeroWork) {
        res.regime = Regime::engine;
        res.efficiency = w / q_hot;
    } else if (w < -kZeroWork && res.heat_cold > 0.0) {
        res.regime = Regime::refrigerator;
        res.cop = res.heat_cold / std::abs(w);
    } else {
        res.regime = Regime::neither;
    }
    return res;
}

} // namespace

const char* to_string(Regime r) {
    switch (r) {
    case Regime::engine: return "engine";
    case Regime::refrigerator: return "refrigerator";
    case Regime::neither: return "neither";
    }
    return "?";
}

void StirlingSpec::validate() const {
    params.validate();
    if (!(beta_hot > 0.0) || !(beta_cold > 0.0))
        throw std::invalid_argument("bath inverse temperatures must be positive");
    if (!(beta_hot < beta_cold))
        throw std::invalid_argument("beta_hot must be < beta_cold");
    if (!std::isfinite(nu_1) || !std::isfinite(nu_2))
        throw std::invalid_argument("nu_1 and nu_2 must be finite");
}

void OttoSpec::validate() const {
    params.validate();
    if (params.nu != 0.0)
        throw std::invalid_argument("Otto cycle requires nu = 0");
    if (!(beta_hot > 0.0) || !(beta_cold > 0.0))
        throw std::invalid_argument("bath inverse temperatures must be positive");
    if (!(beta_hot < beta_cold))
        throw std::invalid_argument("beta_hot must be < beta_cold");
    if (!(omega_1 > 0.0) || !(omega_2 > 0.0))
        throw std::invalid_argument("frequencies must be positive");
    if (!(omega_2 < omega_1))
        throw std::invalid_argument("omega_2 must be < omega_1");
    if (medium.kind == MediumKind::statistical &&
        !(medium.k_fermi >= 0.0 && medium.k_fermi <= 1.0))
        throw std::invalid_argument("k_fermi must lie in [0,1]");
}

NuStrokeWork isothermal_nu_work(double beta, double nu_initial,
                                double nu_final, const SystemParams& params) {
    SystemParams p = params;
    NuStrokeWork res;
    if (p.alt_subspace_empty()) {
        res.fermionic_only = true;
        return res;
    }
    p.nu = nu_initial;
    const double ln_pi = ln_p_fermi(ThermoPoint{p, beta});
    p.nu = nu_final;
    const double ln_pf = ln_p_fermi(ThermoPoint{p, beta});
    res.work = (ln_pi - ln_pf) / beta;
    return res;
}

CycleResult stirling_cycle(const StirlingSpec& spec) {
    spec.validate();

    const auto point = [&](double beta, double nu) {
        SystemParams p = spec.params;
        p.nu = nu;
        return ThermoPoint{p, beta};
    };

    // Hot isotherm: nu_2 -> nu_1. Cold isotherm: nu_1 -> nu_2.
    const double w_hot =
        (ln_p_fermi(point(spec.beta_hot, spec.nu_2)) -
         ln_p_fermi(point(spec.beta_hot, spec.nu_1))) / spec.beta_hot;
    const double w_cold =
        (ln_p_fermi(point(spec.beta_cold, spec.nu_1)) -
         ln_p_fermi(point(spec.beta_cold, spec.nu_2))) / spec.beta_cold;

    // Hot-bath contact spans the heating isochore at nu_2 plus the hot
    // stroke, so Q_H = U_end - U_start + W_hot over that leg.
    const double q_hot = internal_energy(point(spec.beta_hot, spec.nu_1)) -
                         internal_energy(point(spec.beta_cold, spec.nu_2)) +
                         w_hot;
    return classify(w_hot + w_cold, q_hot);
}

StirlingLimits stirling_limits(const StirlingSpec& spec) {
    spec.validate();
    const SystemParams& p = spec.params;
    const double h = h_of(p.spin_dim, p.n_particles);

    StirlingLimits lim;
    lim.w_limit = (1.0 / spec.beta_hot - 1.0 / spec.beta_cold) * h;
    lim.q_hot_limit =
        h / spec.beta_hot +
        detail::thermal_energy_sum(ThermoPoint{p, spec.beta_hot}) -
        detail::thermal_energy_sum(ThermoPoint{p, spec.beta_cold});
    lim.eta_limit = lim.w_limit / lim.q_hot_limit;
    return lim;
}

double free_energy_nu_slope(const ThermoPoint& point) {
    point.validate();
    // p_F e^phi = 1 - p_F, evaluated as the logistic of -phi.
    return detail::logistic_neg(-phi(point));
}

namespace {

double medium_energy(const OttoSpec& spec, double beta, double omega) {
    SystemParams p = spec.params;
    p.omega = omega;
    const ThermoPoint point{p, beta};
    switch (spec.medium.kind) {
    case MediumKind::hamiltonian_anyon:
        return internal_energy(point);
    case MediumKind::fermion:
        return internal_energy_branches(point).u_fermi;
    case MediumKind::boson:
        return internal_energy_branches(point).u_bose;
    case MediumKind::statistical:
        return statistical_anyon_props(point, spec.medium.k_fermi).u;
    }
    return 0.0;
}

} // namespace

CycleResult otto_cycle(const OttoSpec& spec) {
    spec.validate();
    const double ratio = spec.omega_1 / spec.omega_2;
    const double u_hot = medium_energy(spec, spec.beta_hot, spec.omega_1);
    const double u_cold = medium_energy(spec, spec.beta_cold, spec.omega_2);

    // Expansion stroke scales the frozen hot state's energy by omega_2/omega_1,
    // compression scales the cold state's by omega_1/omega_2.
    const double w = (1.0 - 1.0 / ratio) * u_hot - (ratio - 1.0) * u_cold;
    double q_hot = 0.0;
    switch (spec.heat_convention) {
    case OttoHeatConvention::stroke:
        q_hot = u_hot - ratio * u_cold;
        break;
    case OttoHeatConvention::state_difference:
        q_hot = u_hot - u_cold;
        break;
    case OttoHeatConvention::printed_equation:
        q_hot =
            u_hot - ratio * medium_energy(spec, spec.beta_cold, spec.omega_1);
        break;
    }
    return classify(w, q_hot);
}

double omega_from_phi_target(double beta, double phi_target,
                             const SystemParams& params) {
    params.validate();
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("beta must be positive and finite");
    if (params.alt_subspace_empty())
        throw EmptySubspaceError(params.spin_dim, params.n_particles);
    const double n = params.n_particles;
    if (params.n_particles < 2)
        throw std::domain_error("phi is omega-independent for N < 2");
    const double h = h_of(params.spin_dim, params.n_particles);
    const double omega = (phi_target + beta * params.nu + h) /
                         (0.5 * n * (n - 1.0) * beta * params.hbar);
    if (!(omega > 0.0))
        throw std::domain_error("phi target requires non-positive omega");
    return omega;
}

} // namespace anyon
