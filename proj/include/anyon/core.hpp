#ifndef ANYON_CORE_HPP
#define ANYON_CORE_HPP

#include <optional>
#include <stdexcept>

namespace anyon {

// Raised when an operation requires a nonempty antisymmetric spin subspace
// but spin_dim < n_particles (the subspace has dimension C(d,N) = 0).
class EmptySubspaceError : public std::domain_error {
public:
    EmptySubspaceError(int d, int n);
    int spin_dim() const noexcept { return d_; }
    int n_particles() const noexcept { return n_; }

private:
    int d_;
    int n_;
};

// Static problem definition: N identical particles in a 1-D harmonic trap
// with a symmetry bias nu on the antisymmetric spin sector.
struct SystemParams {
    int n_particles = 1;
    int spin_dim = 1;
    double omega = 1.0;        // trap angular frequency (energy / hbar)
    double nu = 0.0;           // symmetry bias energy
    double hbar = 1.0;
    double k_boltzmann = 1.0;

    // Throws std::invalid_argument on violation of the basic invariants.
    void validate() const;

    bool alt_subspace_empty() const { return spin_dim < n_particles; }

    // Pauli energy: the ground-state excess of N trapped fermions over
    // N bosons, (1/2) hbar omega N (N-1).
    double pauli_gap() const;
};

// Evaluation point for all equilibrium quantities.
struct ThermoPoint {
    SystemParams params;
    double beta = 1.0;         // inverse temperature, 1/energy

    void validate() const;

    double temperature() const { return 1.0 / (params.k_boltzmann * beta); }

    static ThermoPoint from_temperature(const SystemParams& p, double temp);
};

// Log-dimensions of the symmetric / antisymmetric spin subspaces.
// The antisymmetric entry is absent when C(d,N) = 0, i.e. d < N.
struct SubspaceDims {
    double sym_log_dim = 0.0;              // ln C(d+N-1, N)
    std::optional<double> alt_log_dim;     // ln C(d, N), empty iff d < N

    bool alt_empty() const { return !alt_log_dim.has_value(); }
};

// ln C(n, k) via log-gamma; requires 0 <= k <= n.
double log_binomial(int n, int k);

SubspaceDims subspace_dims(int d, int n);

// h(d,N) = ln C(d+N-1,N) - ln C(d,N). Throws EmptySubspaceError when d < N.
double h_of(int d, int n);

// Order parameter phi = (1/2) N(N-1) beta hbar omega - beta nu - h(d,N).
// phi = 0 marks the transition midpoint p_F = 1/2.
// Throws EmptySubspaceError when d < N.
double phi(const ThermoPoint& point);

} // namespace anyon

#endif
