// Command-line front end: single-point properties, 2-D grid scans, Stirling
// and Otto cycles, qubit-count estimation, and the brute-force verification
// suite. Output is deterministic: fixed key/column order, scientific
// notation at a configurable precision, byte-identical across reruns.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anyon/engines.hpp"
#include "anyon/oracle.hpp"
#include "anyon/statmech.hpp"
#include "anyon/transitions.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

int g_precision = 12;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*e", g_precision - 1, v);
    return buf;
}

// Minimal emitter with insertion-ordered keys; values are pre-formatted.
struct JsonDoc {
    std::vector<std::pair<std::string, std::string>> fields;

    void add_number(const std::string& key, double v) {
        fields.emplace_back(key, fmt(v));
    }
    void add_int(const std::string& key, long long v) {
        fields.emplace_back(key, std::to_string(v));
    }
    void add_string(const std::string& key, const std::string& v) {
        fields.emplace_back(key, "\"" + v + "\"");
    }
    void add_null(const std::string& key) { fields.emplace_back(key, "null"); }

    std::string str() const {
        std::string out = "{\n";
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out += "  \"" + fields[i].first + "\": " + fields[i].second;
            if (i + 1 < fields.size())
                out += ",";
            out += "\n";
        }
        out += "}\n";
        return out;
    }

    std::string csv() const {
        std::string header, row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) {
                header += ",";
                row += ",";
            }
            header += fields[i].first;
            std::string v = fields[i].second;
            if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
                v = v.substr(1, v.size() - 2);
            else if (v == "null")
                v = "";
            row += v;
        }
        return header + "\n" + row + "\n";
    }
};

void write_output(const std::string& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc;
        return;
    }
    std::string full = path;
    if (const char* dir = std::getenv("ANYON_OUTPUT_DIR");
        dir && *dir && path.front() != '/')
        full = std::string(dir) + "/" + path;
    std::ofstream out(full, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + full);
    out << doc;
}

struct PointFlags {
    int n = 2;
    int d = 2;
    double omega = 1.0;
    double nu = 0.0;
    std::optional<double> beta;
    std::optional<double> temp;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "particle count")->required();
        cmd->add_option("--d", d, "spin dimension")->required();
        cmd->add_option("--omega", omega, "trap frequency");
        cmd->add_option("--nu", nu, "symmetry bias energy");
        auto* b = cmd->add_option("--beta", beta, "inverse temperature");
        cmd->add_option("--temp", temp, "temperature")->excludes(b);
    }

    anyon::ThermoPoint point() const {
        anyon::SystemParams p;
        p.n_particles = n;
        p.spin_dim = d;
        p.omega = omega;
        p.nu = nu;
        if (temp)
            return anyon::ThermoPoint::from_temperature(p, *temp);
        if (!beta)
            throw CLI::ValidationError("exactly one of --beta/--temp required");
        return anyon::ThermoPoint{p, *beta};
    }
};

anyon::AxisSpec parse_axis(const std::string& text) {
    // Grammar: param:start:stop:count[:log]
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() < 4 || parts.size() > 5)
        throw CLI::ValidationError("axis must be param:start:stop:count[:log]");

    anyon::AxisSpec axis;
    if (parts[0] == "temperature")
        axis.parameter = anyon::ScanParameter::temperature;
    else if (parts[0] == "beta")
        axis.parameter = anyon::ScanParameter::beta;
    else if (parts[0] == "omega")
        axis.parameter = anyon::ScanParameter::omega;
    else if (parts[0] == "nu")
        axis.parameter = anyon::ScanParameter::nu;
    else if (parts[0] == "n_particles")
        axis.parameter = anyon::ScanParameter::n_particles;
    else
        throw CLI::ValidationError("unknown axis parameter: " + parts[0]);
    try {
        axis.start = std::stod(parts[1]);
        axis.stop = std::stod(parts[2]);
        axis.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw CLI::ValidationError("malformed axis numbers in: " + text);
    }
    if (parts.size() == 5) {
        if (parts[4] != "log")
            throw CLI::ValidationError("axis spacing must be 'log'");
        axis.spacing = anyon::Spacing::log;
    }
    return axis;
}

anyon::Quantity parse_quantity(const std::string& name) {
    if (name == "p_fermi") return anyon::Quantity::p_fermi;
    if (name == "internal_energy") return anyon::Quantity::internal_energy;
    if (name == "c_temp") return anyon::Quantity::c_temp;
    if (name == "c_omega") return anyon::Quantity::c_omega;
    if (name == "c_nu") return anyon::Quantity::c_nu;
    if (name == "phi") return anyon::Quantity::phi;
    throw CLI::ValidationError("unknown quantity: " + name);
}

std::string emit(const JsonDoc& doc, const std::string& format) {
    return format == "csv" ? doc.csv() : doc.str();
}

void cycle_fields(JsonDoc& doc, const anyon::CycleResult& res) {
    doc.add_number("work_cycle", res.work_cycle);
    doc.add_number("heat_hot", res.heat_hot);
    doc.add_number("heat_cold", res.heat_cold);
    doc.add_string("regime", anyon::to_string(res.regime));
    if (res.efficiency)
        doc.add_number("efficiency", *res.efficiency);
    else
        doc.add_null("efficiency");
    if (res.cop)
        doc.add_number("cop", *res.cop);
    else
        doc.add_null("cop");
}

int run_props(const PointFlags& flags, const std::string& format,
              const std::string& output) {
    const anyon::ThermoPoint point = flags.point();
    const anyon::ThermoProps props = anyon::thermo_props(point);
    const anyon::CapacityReport caps = anyon::capacities(point);

    JsonDoc doc;
    doc.add_int("n", point.params.n_particles);
    doc.add_int("d", point.params.spin_dim);
    doc.add_number("omega", point.params.omega);
    doc.add_number("nu", point.params.nu);
    doc.add_number("beta", point.beta);
    doc.add_number("temperature", point.temperature());
    const bool empty_alt = point.params.alt_subspace_empty();
    doc.add_string("status", empty_alt ? "empty_alt" : "ok");
    if (empty_alt)
        doc.add_null("phi");
    else
        doc.add_number("phi", anyon::phi(point));
    doc.add_number("ln_z_fermi", props.ln_z_fermi);
    doc.add_number("ln_z_bose", props.ln_z_bose);
    doc.add_number("ln_z_total", props.ln_z_total);
    doc.add_number("p_fermi", props.p_fermi);
    doc.add_number("u_fermi", props.u_fermi);
    doc.add_number("u_bose", props.u_bose);
    doc.add_number("u_total", props.u_total);
    doc.add_number("c_temp", caps.c_temp);
    doc.add_number("c_nu", caps.c_nu);
    doc.add_number("c_omega", caps.c_omega);
    write_output(emit(doc, format), output);
    return 0;
}

int run_scan(const anyon::GridScanRequest& request, int jobs,
             const std::string& format, const std::string& output) {
    const anyon::GridScan scan = anyon::grid_scan(request, jobs);
    const std::vector<double> xs = request.x_axis.values();
    const std::vector<double> ys = request.y_axis.values();

    if (format == "csv") {
        std::string doc;
        doc += std::string(anyon::to_string(request.x_axis.parameter)) + "," +
               anyon::to_string(request.y_axis.parameter) + "," +
               anyon::to_string(request.quantity) + ",status\n";
        for (std::size_t iy = 0; iy < ys.size(); ++iy)
            for (std::size_t ix = 0; ix < xs.size(); ++ix) {
                const std::size_t i = iy * xs.size() + ix;
                doc += fmt(xs[ix]) + "," + fmt(ys[iy]) + "," +
                       fmt(scan.values[i]) + "," +
                       (scan.flags[i] == anyon::CellFlag::ok ? "ok"
                                                             : "empty_alt") +
                       "\n";
            }
        write_output(doc, output);
        return 0;
    }

    std::string doc = "{\n";
    doc += "  \"x_parameter\": \"" +
           std::string(anyon::to_string(request.x_axis.parameter)) + "\",\n";
    doc += "  \"y_parameter\": \"" +
           std::string(anyon::to_string(request.y_axis.parameter)) + "\",\n";
    doc += "  \"quantity\": \"" +
           std::string(anyon::to_string(request.quantity)) + "\",\n";
    const auto join = [](const std::vector<std::string>& items) {
        std::string s;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i)
                s += ", ";
            s += items[i];
        }
        return s;
    };
    std::vector<std::string> xi, yi;
    for (double x : xs)
        xi.push_back(fmt(x));
    for (double y : ys)
        yi.push_back(fmt(y));
    doc += "  \"x_values\": [" + join(xi) + "],\n";
    doc += "  \"y_values\": [" + join(yi) + "],\n";
    doc += "  \"rows\": [\n";
    for (std::size_t iy = 0; iy < ys.size(); ++iy) {
        std::vector<std::string> vi;
        for (std::size_t ix = 0; ix < xs.size(); ++ix)
            vi.push_back(fmt(scan.values[iy * xs.size() + ix]));
        doc += "    [" + join(vi) + "]";
        doc += iy + 1 < ys.size() ? ",\n" : "\n";
    }
    doc += "  ],\n  \"status\": [\n";
    for (std::size_t iy = 0; iy < ys.size(); ++iy) {
        std::vector<std::string> fi;
        for (std::size_t ix = 0; ix < xs.size(); ++ix)
            fi.push_back(scan.flags[iy * xs.size() + ix] ==
                                 anyon::CellFlag::ok
                             ? "\"ok\""
                             : "\"empty_alt\"");
        doc += "    [" + join(fi) + "]";
        doc += iy + 1 < ys.size() ? ",\n" : "\n";
    }
    doc += "  ]\n}\n";
    write_output(doc, output);
    return 0;
}

int run_verify() {
    using namespace anyon::oracle;
    int failures = 0;
    const auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok)
            ++failures;
    };

    // Closed-form partition functions and energies vs enumeration.
    bool lnz_ok = true, u_ok = true;
    for (int n = 1; n <= 4; ++n)
        for (double x : {0.5, 1.0, 2.0, 5.0})
            for (Symmetry sym : {Symmetry::fermionic, Symmetry::bosonic}) {
                anyon::SystemParams p;
                p.n_particles = n;
                p.spin_dim = n;
                const anyon::ThermoPoint pt{p, x};
                const EnumeratedSpectrum spec =
                    enumerate_spectrum(sym, n, x, 1e-13);
                const double lnz_enum = ln_partition(spec, x);
                const double u_enum = internal_energy(spec, x);
                const double lnz_closed = sym == Symmetry::fermionic
                                              ? anyon::ln_partition_fermi(pt)
                                              : anyon::ln_partition_bose(pt);
                const anyon::EnergyBranches u =
                    anyon::internal_energy_branches(pt);
                const double u_closed =
                    sym == Symmetry::fermionic ? u.u_fermi : u.u_bose;
                if (std::abs(lnz_closed - lnz_enum) >= 1e-10)
                    lnz_ok = false;
                if (std::abs(u_closed - u_enum) / std::abs(u_closed) >= 1e-8)
                    u_ok = false;
            }
    report("partition functions match spectrum enumeration", lnz_ok);
    report("internal energies match spectrum enumeration", u_ok);

    bool dims_ok = true;
    for (int d = 1; d <= 6; ++d)
        for (int n = 1; n <= 6; ++n) {
            const auto sym = character_dimension(d, n, SpinSector::sym);
            const auto alt = character_dimension(d, n, SpinSector::alt);
            if (static_cast<long double>(sym) !=
                exact_binomial(d + n - 1, n))
                dims_ok = false;
            const long double expect_alt =
                d >= n ? exact_binomial(d, n) : 0.0L;
            if (static_cast<long double>(alt) != expect_alt)
                dims_ok = false;
        }
    report("subspace dimensions match character sums", dims_ok);

    bool pop_ok = true;
    for (double t : {0.1, 1.0, 5.0}) {
        anyon::SystemParams p;
        p.n_particles = 2;
        p.spin_dim = 2;
        const QubitReport rep = qubit_requirement(p, t, 0.999);
        if (rep.num_states < 1 || rep.num_qubits < 0)
            pop_ok = false;
        if (t <= 0.1 && rep.num_qubits != 1)
            pop_ok = false;
    }
    report("qubit estimator staircase base case", pop_ok);

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equilibrium and heat-engine calculator for trapped "
                 "particles with a tunable symmetry bias"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", output, "output file (default stdout)");
    app.add_option("--precision", g_precision, "significant digits")
        ->check(CLI::Range(3, 17))
        ->capture_default_str();

    // props
    auto* props = app.add_subcommand("props", "single-point properties");
    PointFlags props_flags;
    props_flags.attach(props);

    // scan
    auto* scan = app.add_subcommand("scan", "2-D parameter grid scan");
    PointFlags scan_flags;
    scan_flags.attach(scan);
    std::string x_spec, y_spec, quantity_name = "p_fermi";
    int jobs = 1;
    scan->add_option("--x", x_spec, "x axis: param:start:stop:count[:log]")
        ->required();
    scan->add_option("--y", y_spec, "y axis: param:start:stop:count[:log]")
        ->required();
    scan->add_option("--quantity", quantity_name, "cell quantity")
        ->capture_default_str();
    scan->add_option("--jobs", jobs, "worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();

    // stirling
    auto* stirling = app.add_subcommand("stirling", "nu-driven Stirling cycle");
    anyon::StirlingSpec st_spec;
    stirling->add_option("--n", st_spec.params.n_particles)->required();
    stirling->add_option("--d", st_spec.params.spin_dim)->required();
    stirling->add_option("--omega", st_spec.params.omega);
    stirling->add_option("--beta-hot", st_spec.beta_hot)->required();
    stirling->add_option("--beta-cold", st_spec.beta_cold)->required();
    stirling->add_option("--nu1", st_spec.nu_1)->required();
    stirling->add_option("--nu2", st_spec.nu_2)->required();

    // otto
    auto* otto = app.add_subcommand("otto", "omega-switched Otto cycle");
    anyon::OttoSpec ot_spec;
    std::string medium_name = "anyon";
    otto->add_option("--n", ot_spec.params.n_particles)->required();
    otto->add_option("--d", ot_spec.params.spin_dim)->required();
    otto->add_option("--beta-hot", ot_spec.beta_hot)->required();
    otto->add_option("--beta-cold", ot_spec.beta_cold)->required();
    otto->add_option("--omega1", ot_spec.omega_1)->required();
    otto->add_option("--omega2", ot_spec.omega_2)->required();
    otto->add_option("--medium", medium_name, "working medium")
        ->check(CLI::IsMember({"anyon", "fermion", "boson", "statistical"}))
        ->capture_default_str();
    otto->add_option("--k-fermi", ot_spec.medium.k_fermi,
                     "mixing ratio for the statistical medium");
    std::string qh_convention = "stroke";
    otto->add_option("--qh-convention", qh_convention,
                     "hot-heat bookkeeping")
        ->check(CLI::IsMember({"stroke", "state-difference", "printed"}))
        ->capture_default_str();

    // qubits
    auto* qubits = app.add_subcommand("qubits",
                                      "qubit count covering the thermal state");
    anyon::SystemParams qb_params;
    qb_params.n_particles = 2;
    qb_params.spin_dim = 2;
    double qb_temp = 1.0, qb_coverage = 0.999;
    qubits->add_option("--n", qb_params.n_particles);
    qubits->add_option("--d", qb_params.spin_dim);
    qubits->add_option("--omega", qb_params.omega);
    qubits->add_option("--temp", qb_temp)->required();
    qubits->add_option("--coverage", qb_coverage)->capture_default_str();

    // verify
    app.add_subcommand("verify", "run the brute-force verification suite");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);

        if (props->parsed())
            return run_props(props_flags, format, output);

        if (scan->parsed()) {
            anyon::GridScanRequest request;
            request.x_axis = parse_axis(x_spec);
            request.y_axis = parse_axis(y_spec);
            request.quantity = parse_quantity(quantity_name);
            const anyon::ThermoPoint base = scan_flags.point();
            request.base = base.params;
            request.beta = base.beta;
            return run_scan(request, jobs, format, output);
        }

        if (stirling->parsed()) {
            const anyon::CycleResult res = anyon::stirling_cycle(st_spec);
            const anyon::StirlingLimits lim = anyon::stirling_limits(st_spec);
            JsonDoc doc;
            cycle_fields(doc, res);
            doc.add_number("w_limit", lim.w_limit);
            doc.add_number("q_hot_limit", lim.q_hot_limit);
            doc.add_number("eta_limit", lim.eta_limit);
            write_output(emit(doc, format), output);
            return 0;
        }

        if (otto->parsed()) {
            if (medium_name == "fermion")
                ot_spec.medium.kind = anyon::MediumKind::fermion;
            else if (medium_name == "boson")
                ot_spec.medium.kind = anyon::MediumKind::boson;
            else if (medium_name == "statistical")
                ot_spec.medium.kind = anyon::MediumKind::statistical;
            else
                ot_spec.medium.kind = anyon::MediumKind::hamiltonian_anyon;
            if (qh_convention == "state-difference")
                ot_spec.heat_convention =
                    anyon::OttoHeatConvention::state_difference;
            else if (qh_convention == "printed")
                ot_spec.heat_convention =
                    anyon::OttoHeatConvention::printed_equation;
            const anyon::CycleResult res = anyon::otto_cycle(ot_spec);
            JsonDoc doc;
            cycle_fields(doc, res);
            write_output(emit(doc, format), output);
            return 0;
        }

        if (qubits->parsed()) {
            const anyon::oracle::QubitReport rep =
                anyon::oracle::qubit_requirement(qb_params, qb_temp,
                                                 qb_coverage);
            JsonDoc doc;
            doc.add_number("temperature", rep.temperature);
            doc.add_number("nu_used", rep.nu_used);
            doc.add_int("num_states", rep.num_states);
            doc.add_int("num_qubits", rep.num_qubits);
            write_output(emit(doc, format), output);
            return 0;
        }

        return run_verify();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const anyon::EmptySubspaceError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const anyon::NoBracketError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
