#include "anyon/transitions.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace anyon {

const char* to_string(ScanParameter p) {
    switch (p) {
    case ScanParameter::temperature: return "temperature";
    case ScanParameter::beta: return "beta";
    case ScanParameter::omega: return "omega";
    case ScanParameter::nu: return "nu";
    case ScanParameter::n_particles: return "n_particles";
    }
    return "?";
}

const char* to_string(Quantity q) {
    switch (q) {
    case Quantity::p_fermi: return "p_fermi";
    case Quantity::internal_energy: return "internal_energy";
    case Quantity::c_temp: return "c_temp";
    case Quantity::c_omega: return "c_omega";
    case Quantity::c_nu: return "c_nu";
    case Quantity::phi: return "phi";
    }
    return "?";
}

void AxisSpec::validate() const {
    if (!(start < stop))
        throw std::invalid_argument("axis start must be < stop");
    if (count < 2)
        throw std::invalid_argument("axis count must be >= 2");
    if (spacing == Spacing::log && !(start > 0.0))
        throw std::invalid_argument("log spacing requires start > 0");
}

std::vector<double> AxisSpec::values() const {
    validate();
    std::vector<double> v(count);
    if (spacing == Spacing::linear) {
        const double step = (stop - start) / (count - 1);
        for (int i = 0; i < count; ++i)
            v[i] = start + i * step;
    } else {
        const double lstep = (std::log(stop) - std::log(start)) / (count - 1);
        for (int i = 0; i < count; ++i)
            v[i] = std::exp(std::log(start) + i * lstep);
    }
    v.front() = start;
    v.back() = stop;
    return v;
}

namespace {

ThermoPoint with_free(const ThermoPoint& base, FreeParameter free, double x) {
    ThermoPoint p = base;
    switch (free) {
    case FreeParameter::beta: p.beta = x; break;
    case FreeParameter::omega: p.params.omega = x; break;
    case FreeParameter::nu: p.params.nu = x; break;
    }
    return p;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo) {
    // lo/hi bracket a sign change; phi is monotone so plain bisection
    // converges. Stop at |phi| < 1e-12 or when the bracket collapses to
    // adjacent doubles (near-root |phi| is then limited by the slope times
    // one ulp of the parameter).
    double best = lo;
    double best_abs = std::abs(flo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        const double fm = f(mid);
        if (std::abs(fm) < best_abs) {
            best = mid;
            best_abs = std::abs(fm);
        }
        if (best_abs < 1e-12)
            return best;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return best;
}

} // namespace

double solve_transition(const ThermoPoint& base, FreeParameter free) {
    base.validate();
    if (base.params.alt_subspace_empty())
        throw EmptySubspaceError(base.params.spin_dim, base.params.n_particles);

    const auto f = [&](double x) { return phi(with_free(base, free, x)); };

    if (free == FreeParameter::nu) {
        // phi is strictly decreasing in nu and nu is unbounded both ways:
        // expand symmetrically until the sign flips.
        double lo = -1.0, hi = 1.0;
        while (f(lo) < 0.0 && std::isfinite(lo))
            lo *= 2.0;
        while (f(hi) > 0.0 && std::isfinite(hi))
            hi *= 2.0;
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw NoBracketError("no bracketing interval for nu");
        // f(lo) >= 0 > f(hi): bisect on -phi to keep the sign convention.
        const auto g = [&](double x) { return -f(x); };
        return bisect(g, lo, hi, -f(lo));
    }

    // beta and omega live on (0, inf) with phi(0+) < 0 when a root exists.
    double hi = 1.0;
    int expand = 0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (++expand > 1100)
            throw NoBracketError(std::string("no bracketing interval for ") +
                                 (free == FreeParameter::beta ? "beta"
                                                              : "omega"));
    }
    double lo = hi * 0.5;
    while (f(lo) > 0.0) {
        lo *= 0.5;
        if (lo < std::numeric_limits<double>::min())
            throw NoBracketError("no bracketing interval: phi positive down "
                                 "to zero");
    }
    return bisect(f, lo, hi, f(lo));
}

namespace {

struct CellValue {
    double value;
    CellFlag flag;
};

CellValue eval_cell(const GridScanRequest& req, double xv, double yv) {
    ThermoPoint point{req.base, req.beta};
    const auto apply = [&](ScanParameter par, double v) {
        switch (par) {
        case ScanParameter::temperature:
            point.beta = 1.0 / (point.params.k_boltzmann * v);
            break;
        case ScanParameter::beta: point.beta = v; break;
        case ScanParameter::omega: point.params.omega = v; break;
        case ScanParameter::nu: point.params.nu = v; break;
        case ScanParameter::n_particles:
            point.params.n_particles =
                std::max(1, static_cast<int>(std::llround(v)));
            break;
        }
    };
    apply(req.x_axis.parameter, xv);
    apply(req.y_axis.parameter, yv);
    point.validate();

    CellValue cell{0.0, point.params.alt_subspace_empty() ? CellFlag::empty_alt
                                                          : CellFlag::ok};
    switch (req.quantity) {
    case Quantity::p_fermi:
        cell.value = fermionic_weight(point);
        break;
    case Quantity::internal_energy:
        cell.value = internal_energy(point);
        break;
    case Quantity::c_temp:
        cell.value = capacities(point).c_temp;
        break;
    case Quantity::c_omega:
        cell.value = capacities(point).c_omega;
        break;
    case Quantity::c_nu:
        cell.value = capacities(point).c_nu;
        break;
    case Quantity::phi:
        // phi is undefined without the antisymmetric subspace; flagged
        // cells report 0 so the matrix stays finite.
        cell.value = cell.flag == CellFlag::ok ? phi(point) : 0.0;
        break;
    }
    return cell;
}

} // namespace

GridScan grid_scan(const GridScanRequest& request, int jobs) {
    request.x_axis.validate();
    request.y_axis.validate();
    request.base.validate();
    if (jobs < 1)
        throw std::invalid_argument("jobs must be >= 1");

    const std::vector<double> xs = request.x_axis.values();
    const std::vector<double> ys = request.y_axis.values();
    const std::size_t total = xs.size() * ys.size();

    GridScan scan;
    scan.request = request;
    scan.values.resize(total);
    scan.flags.resize(total);

    const auto worker = [&](std::size_t tid, std::size_t stride) {
        for (std::size_t i = tid; i < total; i += stride) {
            const std::size_t ix = i % xs.size();
            const std::size_t iy = i / xs.size();
            const CellValue cell = eval_cell(request, xs[ix], ys[iy]);
            scan.values[i] = cell.value;
            scan.flags[i] = cell.flag;
        }
    };

    if (jobs == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker, static_cast<std::size_t>(t),
                              static_cast<std::size_t>(jobs));
        for (auto& th : pool)
            th.join();
    }
    return scan;
}

CapacityDensities asymptotic_capacities(DRule rule, int n, int d_fixed,
                                        double omega, double beta) {
    SystemParams params;
    params.n_particles = n;
    params.spin_dim = rule == DRule::d_equals_n ? n : d_fixed;
    params.omega = omega;
    ThermoPoint point{params, beta};
    point.params.nu = solve_transition(point, FreeParameter::nu);
    const CapacityReport caps = capacities(point);
    const double n2 = static_cast<double>(n) * n;
    return CapacityDensities{caps.c_temp / n2, caps.c_nu / n2,
                             caps.c_omega / n2};
}

} // namespace anyon
