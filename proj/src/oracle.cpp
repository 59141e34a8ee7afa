#include "anyon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "anyon/statmech.hpp"
#include "anyon/transitions.hpp"

namespace anyon::oracle {

namespace {

// Kahan-compensated accumulator; the enumerations sum many near-equal
// Boltzmann weights and the acceptance tolerances are tight.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void enumerate_rec(int remaining, int min_level, int max_level, bool strict,
                   std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int level = min_level; level <= max_level; ++level) {
        current.push_back(level);
        enumerate_rec(remaining - 1, strict ? level + 1 : level, max_level,
                      strict, current, out);
        current.pop_back();
    }
}

long double pow_ld(int base, int exp) {
    long double r = 1.0L;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

} // namespace

EnumeratedSpectrum enumerate_spectrum(Symmetry symmetry, int n_particles,
                                      double beta_hbar_omega,
                                      double tail_tolerance) {
    if (n_particles < 1 || n_particles > 6)
        throw std::invalid_argument("enumerate_spectrum supports 1 <= N <= 6");
    if (!(beta_hbar_omega > 0.0) || !std::isfinite(beta_hbar_omega))
        throw std::invalid_argument("beta_hbar_omega must be positive");
    if (!(tail_tolerance > 0.0))
        throw std::invalid_argument("tail_tolerance must be positive");

    // Smallest L with N e^{-x(L+1)} / (1 - e^{-x}) < tol: union bound over
    // particles on the neglected excitation tail.
    const double x = beta_hbar_omega;
    const double lhs = std::log(tail_tolerance * (-std::expm1(-x)) /
                                n_particles);
    int cutoff = static_cast<int>(std::ceil(-lhs / x)) - 1;
    cutoff = std::max(cutoff, n_particles - 1);
    const bool fermionic = symmetry == Symmetry::fermionic;
    if (fermionic)
        cutoff += n_particles - 1;  // same excitation headroom above the
                                    // filled Fermi configuration

    // C(L+1, N) or C(L+N, N) configurations; refuse absurd requests.
    const double count_est =
        std::exp(log_binomial(fermionic ? cutoff + 1 : cutoff + n_particles,
                              n_particles));
    if (count_est > 5e6)
        throw std::invalid_argument(
            "tail_tolerance unreachable within memory budget");

    EnumeratedSpectrum spec;
    spec.symmetry = symmetry;
    spec.n_particles = n_particles;
    spec.level_cutoff = cutoff;

    std::vector<int> current;
    current.reserve(n_particles);
    enumerate_rec(n_particles, 0, cutoff, fermionic, current, spec.configs);

    spec.energies.reserve(spec.configs.size());
    for (const auto& cfg : spec.configs) {
        const int total = std::accumulate(cfg.begin(), cfg.end(), 0);
        spec.energies.push_back(total + 0.5 * n_particles);
    }
    return spec;
}

double ln_partition(const EnumeratedSpectrum& spectrum,
                    double beta_hbar_omega) {
    if (spectrum.energies.empty())
        throw std::invalid_argument("empty spectrum");
    const double e_min =
        *std::min_element(spectrum.energies.begin(), spectrum.energies.end());
    KahanSum z;
    for (double e : spectrum.energies)
        z.add(std::exp(-beta_hbar_omega * (e - e_min)));
    return -beta_hbar_omega * e_min + std::log(z.sum);
}

double internal_energy(const EnumeratedSpectrum& spectrum,
                       double beta_hbar_omega) {
    if (spectrum.energies.empty())
        throw std::invalid_argument("empty spectrum");
    const double e_min =
        *std::min_element(spectrum.energies.begin(), spectrum.energies.end());
    KahanSum z, ez;
    for (double e : spectrum.energies) {
        const double w = std::exp(-beta_hbar_omega * (e - e_min));
        z.add(w);
        ez.add(e * w);
    }
    return ez.sum / z.sum;
}

std::int64_t character_dimension(int d, int n, SpinSector sector) {
    if (d < 1 || d > 8 || n < 1 || n > 8)
        throw std::invalid_argument("character_dimension supports d, N <= 8");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t factorial = 1;
    for (int i = 2; i <= n; ++i)
        factorial *= i;

    std::int64_t total = 0;
    do {
        int cycles = 0;
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[i])
                continue;
            ++cycles;
            for (int j = i; !seen[j]; j = perm[j])
                seen[j] = true;
        }
        std::int64_t term = 1;
        for (int c = 0; c < cycles; ++c)
            term *= d;
        // sign(sigma) = (-1)^{N - cycles}
        if (sector == SpinSector::alt && (n - cycles) % 2 != 0)
            term = -term;
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (total % factorial != 0)
        throw std::logic_error("character sum not divisible by N!");
    return total / factorial;
}

long double exact_binomial(int n, int k) {
    if (n < 0 || n > 100 || k < 0 || k > n)
        throw std::invalid_argument("exact_binomial requires 0 <= k <= n <= 100");
    // Pascal row in 128-bit integers; C(100,50) ~ 1e29 fits comfortably.
    std::vector<unsigned __int128> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] += row[j - 1];
    return static_cast<long double>(row[k]);
}

QubitReport qubit_requirement(const SystemParams& params, double temperature,
                              double coverage) {
    if (params.n_particles > 4)
        throw std::invalid_argument("qubit_requirement supports N <= 4");
    if (!(coverage > 0.0 && coverage < 1.0))
        throw std::invalid_argument("coverage must lie in (0,1)");
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw std::invalid_argument("temperature must be positive");
    params.validate();
    if (params.alt_subspace_empty())
        throw EmptySubspaceError(params.spin_dim, params.n_particles);

    ThermoPoint point = ThermoPoint::from_temperature(params, temperature);
    point.params.nu = solve_transition(point, FreeParameter::nu);
    const double p_f = fermionic_weight(point);
    const double x = point.beta * params.hbar * params.omega;

    struct State {
        double population;
        int branch;  // 0 fermionic, 1 bosonic; deterministic tie-break
        const std::vector<int>* config;
    };
    std::vector<State> states;

    const auto add_branch = [&](Symmetry sym, double branch_weight,
                                int branch_idx,
                                std::vector<EnumeratedSpectrum>& keep) {
        keep.push_back(
            enumerate_spectrum(sym, params.n_particles, x, 1e-12));
        const EnumeratedSpectrum& spec = keep.back();
        const double ln_z = ln_partition(spec, x);
        for (std::size_t i = 0; i < spec.energies.size(); ++i)
            states.push_back(State{
                branch_weight * std::exp(-x * spec.energies[i] - ln_z),
                branch_idx, &spec.configs[i]});
    };

    std::vector<EnumeratedSpectrum> keep;
    keep.reserve(2);
    add_branch(Symmetry::fermionic, p_f, 0, keep);
    add_branch(Symmetry::bosonic, 1.0 - p_f, 1, keep);

    std::sort(states.begin(), states.end(),
              [](const State& a, const State& b) {
                  if (a.population != b.population)
                      return a.population > b.population;
                  if (a.branch != b.branch)
                      return a.branch < b.branch;
                  return *a.config < *b.config;
              });

    KahanSum covered;
    int m = 0;
    for (const State& s : states) {
        covered.add(s.population);
        ++m;
        if (covered.sum >= coverage)
            break;
    }
    if (covered.sum < coverage)
        throw std::runtime_error("enumerated populations below coverage; "
                                 "tighten the tail tolerance");

    QubitReport report;
    report.temperature = temperature;
    report.nu_used = point.params.nu;
    report.num_states = m;
    report.num_qubits =
        m <= 1 ? 0 : static_cast<int>(std::ceil(std::log2(m)));
    return report;
}

} // namespace anyon::oracle
