#include "anyon/core.hpp"

#include <cmath>
#include <string>

namespace anyon {

EmptySubspaceError::EmptySubspaceError(int d, int n)
    : std::domain_error("empty antisymmetric spin subspace: C(" +
                        std::to_string(d) + "," + std::to_string(n) +
                        ") = 0"),
      d_(d), n_(n) {}

void SystemParams::validate() const {
    if (n_particles < 1)
        throw std::invalid_argument("n_particles must be >= 1");
    if (spin_dim < 1)
        throw std::invalid_argument("spin_dim must be >= 1");
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("omega must be positive and finite");
    if (!std::isfinite(nu))
        throw std::invalid_argument("nu must be finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw std::invalid_argument("hbar must be positive and finite");
    if (!(k_boltzmann > 0.0) || !std::isfinite(k_boltzmann))
        throw std::invalid_argument("k_boltzmann must be positive and finite");
}

double SystemParams::pauli_gap() const {
    const double n = static_cast<double>(n_particles);
    return 0.5 * hbar * omega * n * (n - 1.0);
}

void ThermoPoint::validate() const {
    params.validate();
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("beta must be positive and finite");
}

ThermoPoint ThermoPoint::from_temperature(const SystemParams& p, double temp) {
    if (!(temp > 0.0) || !std::isfinite(temp))
        throw std::invalid_argument("temperature must be positive and finite");
    return ThermoPoint{p, 1.0 / (p.k_boltzmann * temp)};
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("log_binomial requires 0 <= k <= n");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0);
}

SubspaceDims subspace_dims(int d, int n) {
    if (d < 1 || n < 1)
        throw std::invalid_argument("subspace_dims requires d >= 1, N >= 1");
    SubspaceDims dims;
    dims.sym_log_dim = log_binomial(d + n - 1, n);
    if (d >= n)
        dims.alt_log_dim = log_binomial(d, n);
    return dims;
}

double h_of(int d, int n) {
    const SubspaceDims dims = subspace_dims(d, n);
    if (dims.alt_empty())
        throw EmptySubspaceError(d, n);
    return dims.sym_log_dim - *dims.alt_log_dim;
}

double phi(const ThermoPoint& point) {
    const SystemParams& p = point.params;
    return point.beta * (p.pauli_gap() - p.nu) -
           h_of(p.spin_dim, p.n_particles);
}

} // namespace anyon
