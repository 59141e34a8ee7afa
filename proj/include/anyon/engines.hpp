#ifndef ANYON_ENGINES_HPP
#define ANYON_ENGINES_HPP

#include <optional>

#include "anyon/statmech.hpp"

namespace anyon {

// nu-driven Stirling cycle between two baths. The hot isotherm drives
// nu_2 -> nu_1 and the cold isotherm drives back nu_1 -> nu_2; with
// nu_1 > nu_2 the working substance fermionizes hot and bosonizes cold.
struct StirlingSpec {
    SystemParams params;       // omega fixed over the cycle
    double beta_hot = 1.0;
    double beta_cold = 2.0;    // must exceed beta_hot
    double nu_1 = 0.0;
    double nu_2 = 0.0;

    void validate() const;
};

enum class MediumKind { hamiltonian_anyon, fermion, boson, statistical };

struct Medium {
    MediumKind kind = MediumKind::hamiltonian_anyon;
    double k_fermi = 0.0;      // only read for MediumKind::statistical
};

// Hot-bath heat bookkeeping for the Otto cycle. The stroke convention
// measures the hot isochore against the post-compression frozen state,
// which makes eta = 1 - omega_2/omega_1 for every medium whose energy
// scales as omega * f(beta omega). The state-difference convention
// charges the whole heating branch (compression + hot contact) to the
// hot bath, Q_H = U(beta_H, omega_1) - U(beta_C, omega_2); it is
// medium-dependent and still Carnot-bounded, since in the engine regime
// it exceeds the stroke Q_H. The printed-equation convention evaluates
// the pre-heating energy at omega_1 and is kept for comparison only.
enum class OttoHeatConvention { stroke, state_difference, printed_equation };

// omega-switched Otto cycle with instantaneous (fast-adiabatic) strokes
// and full thermalization at each bath. nu stays 0 throughout.
struct OttoSpec {
    SystemParams params;       // nu must be 0
    double beta_hot = 1.0;
    double beta_cold = 2.0;
    double omega_1 = 2.0;      // compressed
    double omega_2 = 1.0;      // expanded, must be < omega_1
    Medium medium;
    OttoHeatConvention heat_convention = OttoHeatConvention::stroke;

    void validate() const;
};

enum class Regime { engine, refrigerator, neither };

const char* to_string(Regime r);

struct CycleResult {
    double work_cycle = 0.0;   // net work extracted by the substance
    double heat_hot = 0.0;     // net heat absorbed from the hot bath
    double heat_cold = 0.0;    // net heat absorbed from the cold bath
    std::optional<double> efficiency;  // present iff regime == engine
    std::optional<double> cop;         // present iff regime == refrigerator
    Regime regime = Regime::neither;
};

struct NuStrokeWork {
    double work = 0.0;
    bool fermionic_only = false;  // d < N: p_F pinned, stroke is workless
};

// Work extracted by a quasistatic isothermal drive nu_initial -> nu_final
// at fixed beta: W = (1/beta) ln[p_F(nu_initial)/p_F(nu_final)].
// Positive when nu decreases (bosonizing).
NuStrokeWork isothermal_nu_work(double beta, double nu_initial,
                                double nu_final, const SystemParams& params);

CycleResult stirling_cycle(const StirlingSpec& spec);

struct StirlingLimits {
    double w_limit = 0.0;
    double q_hot_limit = 0.0;
    double eta_limit = 0.0;
};

// Complete fermionization/bosonization limit (nu_1 -> +inf, nu_2 -> -inf):
// W -> (1/beta_H - 1/beta_C) h(d,N), with the thermal-occupation remainder
// in Q_H; eta -> Carnot as beta hbar omega >> 1.
StirlingLimits stirling_limits(const StirlingSpec& spec);

// dF/dnu = p_F e^phi = 1 - p_F; non-negative, 1/2 at the midpoint.
double free_energy_nu_slope(const ThermoPoint& point);

CycleResult otto_cycle(const OttoSpec& spec);

// Invert phi for omega at fixed beta, nu, d, N:
// omega = (phi_target + beta nu + h(d,N)) / ((1/2) N (N-1) beta hbar).
// Throws std::domain_error when the target needs omega <= 0 or N < 2.
double omega_from_phi_target(double beta, double phi_target,
                             const SystemParams& params);

} // namespace anyon

#endif
