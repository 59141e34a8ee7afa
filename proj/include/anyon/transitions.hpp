#ifndef ANYON_TRANSITIONS_HPP
#define ANYON_TRANSITIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "anyon/statmech.hpp"

namespace anyon {

// Raised by solve_transition when phi keeps one sign on the admissible
// range of the free parameter.
class NoBracketError : public std::domain_error {
public:
    explicit NoBracketError(const std::string& what) : std::domain_error(what) {}
};

enum class ScanParameter { temperature, beta, omega, nu, n_particles };
enum class Spacing { linear, log };
enum class Quantity { p_fermi, internal_energy, c_temp, c_omega, c_nu, phi };

const char* to_string(ScanParameter p);
const char* to_string(Quantity q);

struct AxisSpec {
    ScanParameter parameter = ScanParameter::nu;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    Spacing spacing = Spacing::linear;

    void validate() const;
    std::vector<double> values() const;
};

struct GridScanRequest {
    AxisSpec x_axis;
    AxisSpec y_axis;
    Quantity quantity = Quantity::p_fermi;
    SystemParams base;
    double beta = 1.0;
};

// Cell status flags for the dense result matrix.
enum class CellFlag : std::uint8_t { ok = 0, empty_alt = 1 };

// Row-major: values[iy * x.count + ix]. Every entry is finite; cells where
// d < N carry the pure-fermionic value and the empty_alt flag.
struct GridScan {
    GridScanRequest request;
    std::vector<double> values;
    std::vector<CellFlag> flags;
};

enum class FreeParameter { beta, omega, nu };

// Root of phi = 0 in the chosen parameter, all other coordinates taken
// from `base`. Bracketing bisection; phi is strictly monotone in each
// single parameter so the root is unique when it exists.
double solve_transition(const ThermoPoint& base, FreeParameter free);

GridScan grid_scan(const GridScanRequest& request, int jobs = 1);

enum class DRule { d_equals_n, d_fixed };

struct CapacityDensities {
    double c_temp_density = 0.0;   // C_T / N^2
    double c_nu_density = 0.0;     // C_nu / N^2
    double c_omega_density = 0.0;  // C_omega / N^2
};

// Capacities per N^2 at the transition midpoint phi = 0, with nu supplied
// by solve_transition. omega and beta fix the remaining coordinates
// (natural units hbar = kB = 1).
CapacityDensities asymptotic_capacities(DRule rule, int n, int d_fixed = 0,
                                        double omega = 1.0, double beta = 1.0);

} // namespace anyon

#endif
