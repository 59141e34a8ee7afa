#ifndef ANYON_ORACLE_HPP
#define ANYON_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "anyon/core.hpp"

namespace anyon::oracle {

enum class Symmetry { fermionic, bosonic };
enum class SpinSector { sym, alt };

// Exhaustive list of N-particle oscillator eigenstates below a level
// cutoff, one entry per allowed occupation tuple. Independent of the
// closed-form partition functions by construction.
struct EnumeratedSpectrum {
    Symmetry symmetry = Symmetry::fermionic;
    int n_particles = 1;
    int level_cutoff = 0;                     // max single-particle level L
    std::vector<double> energies;             // hbar omega (sum n_i + N/2)
    std::vector<std::vector<int>> configs;    // sorted occupation tuples
};

// Cutoff is chosen so the neglected Boltzmann tail is below tail_tolerance
// (union bound over N particles). Guarded to N <= 6.
EnumeratedSpectrum enumerate_spectrum(Symmetry symmetry, int n_particles,
                                      double beta_hbar_omega,
                                      double tail_tolerance);

// ln sum_s e^{-beta E_s} over the enumerated states; energies are in units
// where hbar omega multiplies the listed values, so pass beta hbar omega.
double ln_partition(const EnumeratedSpectrum& spectrum,
                    double beta_hbar_omega);

// sum_s E_s e^{-beta E_s} / Z in the same units (hbar omega = 1).
double internal_energy(const EnumeratedSpectrum& spectrum,
                       double beta_hbar_omega);

// Dimension of the (anti)symmetric subspace of (C^d)^{tensor N} by direct
// character sum over S_N: (1/N!) sum_sigma (sign)^{alt} d^{cycles(sigma)}.
// Exact integer result; guarded to d, N <= 8.
std::int64_t character_dimension(int d, int n, SpinSector sector);

// Exact C(n, k) in extended integer arithmetic (n <= 100 supported).
long double exact_binomial(int n, int k);

struct QubitReport {
    double temperature = 0.0;
    double nu_used = 0.0;       // tuned so p_F = 1/2
    int num_states = 0;         // smallest M whose populations cover threshold
    int num_qubits = 0;         // ceil(log2 M)
};

// Builds the explicit eigenstate populations of the mixture
// p_F tau_F + (1-p_F) tau_B with nu tuned to the transition midpoint,
// sorts them descending, and reports the minimal state count covering
// `coverage` of the total population. Guarded to N <= 4.
QubitReport qubit_requirement(const SystemParams& params, double temperature,
                              double coverage);

} // namespace anyon::oracle

#endif
