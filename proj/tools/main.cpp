// Command-line front end: evolves initial data on the periodic lattice with
// a chosen solver (or compares two), writes deterministic CSV slices, and
// optionally a kernel table and a manifest with content checksums.
//
// Exit codes: 0 success, 1 tolerance failure in --compare, 2 invalid
// configuration (including stability violations), 3 I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <latdirac/latdirac.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

using namespace latdirac;
using nlohmann::json;

namespace {

struct RunConfig {
    int dim = 1;
    int points = 8;
    double spacing = 1.0;
    double tau = 0.1;
    int steps = 1;
    std::string initial = "delta";
    std::string solver;
    std::string compare;
    double tol = 1e-8;
    std::string out = "out";
    bool emit_kernel = false;
    bool manifest = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + ": '" + s + "'");
    }
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + ": '" + s + "'");
    }
}

CliffordField build_initial(const std::string& spec, const LatticeGrid& grid) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "delta") {
        if (!arg.empty()) throw ConfigError("initial 'delta' takes no argument");
        return delta_datum(grid);
    }
    if (kind == "gaussian") {
        double sigma = arg.empty() ? 1.0 : parse_double(arg, "gaussian width");
        return gaussian_datum(grid, sigma);
    }
    if (kind == "planewave") {
        if (arg.empty()) throw ConfigError("initial 'planewave' needs mode numbers, e.g. planewave:1");
        std::vector<int> k;
        for (const auto& p : split(arg, ',')) k.push_back(parse_int(p, "plane-wave mode"));
        if (static_cast<int>(k.size()) == 1 && grid.n > 1) k.resize(static_cast<std::size_t>(grid.n), k[0]);
        return planewave_datum(grid, k);
    }
    if (kind == "file") {
        if (arg.empty()) throw ConfigError("initial 'file' needs a path");
        return read_field_csv(arg, grid);
    }
    throw ConfigError("unknown initial data '" + spec + "'");
}

// A solver bound to a config and initial datum; produces the slice at step m.
struct BoundSolver {
    std::string name;
    std::function<CliffordField(int)> slice;
};

bool solver_spec_valid(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "leapfrog" || kind == "spectral" || kind == "convolution") return arg.empty() && colon == std::string::npos;
    if (kind == "series") return colon == std::string::npos || split(arg, ',').size() == 1;
    if (kind == "subordination") return colon == std::string::npos || split(arg, ',').size() == 3;
    return false;
}

BoundSolver bind_solver(const std::string& spec, const SolveConfig& cfg, const CliffordField& phi0,
                        int max_steps) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "leapfrog") {
        auto traj = std::make_shared<std::optional<Trajectory>>();
        return {spec, [=](int m) {
                    if (!traj->has_value()) *traj = leapfrog_solve(cfg, phi0, max_steps);
                    return (**traj).at(static_cast<std::size_t>(m));
                }};
    }
    if (kind == "spectral") {
        return {spec, [=](int m) { return spectral_solve(cfg, phi0, m * cfg.tau); }};
    }
    if (kind == "series") {
        int K = arg.empty() ? 20 : parse_int(arg, "series order");
        if (K < 0) throw ConfigError("series order must be >= 0");
        return {spec, [=](int m) { return series_solve(cfg, phi0, m * cfg.tau, K); }};
    }
    if (kind == "convolution") {
        return {spec, [=](int m) { return convolution_solve(cfg, phi0, m * cfg.tau); }};
    }
    if (kind == "subordination") {
        SubordinationParams par;
        if (!arg.empty()) {
            auto parts = split(arg, ',');
            if (parts.size() != 3)
                throw ConfigError("subordination takes P,p_nodes,omega_nodes");
            par.P = parse_double(parts[0], "subordination P");
            par.p_nodes = parse_int(parts[1], "subordination p_nodes");
            par.omega_nodes = parse_int(parts[2], "subordination omega_nodes");
        }
        return {spec, [=](int m) {
                    if (m == 0) return phi0;  // the representation starts at t = tau
                    return subordination_solve(cfg, phi0, m * cfg.tau, par);
                }};
    }
    throw ConfigError("unknown solver '" + spec + "'");
}

// Split "A,B" where A and B are solver specs (specs may contain commas).
std::pair<std::string, std::string> split_compare(const std::string& spec) {
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i] != ',') continue;
        std::string a = spec.substr(0, i), b = spec.substr(i + 1);
        if (solver_spec_valid(a) && solver_spec_valid(b)) return {a, b};
    }
    throw ConfigError("--compare needs two solver specs separated by a comma");
}

void merge_config_file(const std::string& path, CLI::App& app, RunConfig& rc) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");

    auto taken = [&](const std::string& flag) {
        auto* opt = app.get_option("--" + flag);
        return opt->count() > 0;
    };
    try {
        for (auto& [key, val] : j.items()) {
            if (key == "dim") {
                if (!taken(key)) rc.dim = val.get<int>();
            } else if (key == "points") {
                if (!taken(key)) rc.points = val.get<int>();
            } else if (key == "spacing") {
                if (!taken(key)) rc.spacing = val.get<double>();
            } else if (key == "tau") {
                if (!taken(key)) rc.tau = val.get<double>();
            } else if (key == "steps") {
                if (!taken(key)) rc.steps = val.get<int>();
            } else if (key == "initial") {
                if (!taken(key)) rc.initial = val.get<std::string>();
            } else if (key == "solver") {
                if (!taken(key)) rc.solver = val.get<std::string>();
            } else if (key == "compare") {
                if (!taken(key)) rc.compare = val.get<std::string>();
            } else if (key == "tol") {
                if (!taken(key)) rc.tol = val.get<double>();
            } else if (key == "out") {
                if (!taken(key)) rc.out = val.get<std::string>();
            } else if (key == "emit-kernel") {
                if (!taken("emit-kernel")) rc.emit_kernel = val.get<bool>();
            } else if (key == "manifest") {
                if (!taken(key)) rc.manifest = val.get<bool>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

std::string slice_name(int m) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "slice_%04d.csv", m);
    return buf;
}

int run(const RunConfig& rc) {
    if (rc.steps < 0) throw ConfigError("steps must be >= 0");
    if (!rc.solver.empty() && !rc.compare.empty())
        throw ConfigError("choose either --solver or --compare, not both");
    if (rc.solver.empty() && rc.compare.empty())
        throw ConfigError("one of --solver or --compare is required");

    LatticeGrid grid{rc.dim, rc.points, rc.spacing};
    grid.validate();
    SolveConfig cfg{grid, rc.tau};
    require_cfl(grid, rc.tau);
    CliffordField phi0 = build_initial(rc.initial, grid);

    std::error_code ec;
    std::filesystem::create_directories(rc.out, ec);
    if (ec) throw IoError("cannot create output directory: " + rc.out);

    json manifest;
    manifest["grid"] = {{"dim", rc.dim}, {"points", rc.points}, {"spacing", rc.spacing}};
    manifest["tau"] = rc.tau;
    manifest["steps"] = rc.steps;
    manifest["initial"] = rc.initial;
    manifest["tol"] = rc.tol;
    json files = json::object();

    auto record = [&](const std::string& name, const std::string& content) {
        write_text_file(rc.out + "/" + name, content);
        files[name] = {{"bytes", content.size()}, {"fnv1a64", fnv1a64_hex(content)}};
        std::cout << "wrote " << name << "\n";
    };

    int exit_code = 0;

    if (!rc.compare.empty()) {
        manifest["compare"] = rc.compare;
        auto [sa, sb] = split_compare(rc.compare);
        auto a = bind_solver(sa, cfg, phi0, rc.steps);
        auto b = bind_solver(sb, cfg, phi0, rc.steps);
        std::string gaps = "step,sup_gap\n";
        double worst = 0.0;
        for (int m = 0; m <= rc.steps; ++m) {
            double gap = sup_norm(a.slice(m) - b.slice(m));
            worst = std::max(worst, gap);
            gaps += std::to_string(m) + "," + format_g17(gap) + "\n";
        }
        record("gaps.csv", gaps);
        std::cout << "max sup gap " << a.name << " vs " << b.name << ": " << format_g17(worst)
                  << " (tol " << format_g17(rc.tol) << ")\n";
        manifest["max_sup_gap"] = format_g17(worst);
        if (worst > rc.tol) {
            std::cout << "tolerance exceeded\n";
            exit_code = 1;
        }
    } else {
        manifest["solver"] = rc.solver;
        auto s = bind_solver(rc.solver, cfg, phi0, rc.steps);
        for (int m = 0; m <= rc.steps; ++m) record(slice_name(m), field_to_csv(s.slice(m)));
    }

    if (rc.emit_kernel) {
        CliffordField K = kernel_field(cfg, rc.steps * rc.tau);
        record("kernel.csv", field_to_csv(K));
        manifest["kernel_time"] = rc.steps * rc.tau;
    }

    if (rc.manifest) {
        manifest["files"] = files;
        std::string body = manifest.dump(2) + "\n";
        write_text_file(rc.out + "/manifest.json", body);
        std::cout << "wrote manifest.json\n";
    }

    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice evolution of Clifford-algebra-valued data: four cross-validating solver routes, kernel tables, deterministic CSV output"};
    RunConfig rc;
    std::string config_path;

    app.add_option("--config", config_path, "JSON config file; explicit flags override its values");
    app.add_option("--dim", rc.dim, "spatial dimension n");
    app.add_option("--points", rc.points, "sites per axis (even)");
    app.add_option("--spacing", rc.spacing, "lattice spacing h");
    app.add_option("--tau", rc.tau, "time step");
    app.add_option("--steps", rc.steps, "number of steps; slices 0..steps are produced");
    app.add_option("--initial", rc.initial,
                   "delta | gaussian:sigma | planewave:k[,k2,...] | file:path");
    app.add_option("--solver", rc.solver,
                   "leapfrog | spectral | series[:K] | convolution | subordination[:P,pn,wn]");
    app.add_option("--compare", rc.compare, "two solver specs, comma separated; exits 1 over --tol");
    app.add_option("--tol", rc.tol, "sup-norm tolerance for --compare");
    app.add_option("--out", rc.out, "output directory");
    app.add_flag("--emit-kernel", rc.emit_kernel, "also write the kernel table at the final time");
    app.add_flag("--manifest", rc.manifest, "write manifest.json with per-file checksums");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) merge_config_file(config_path, app, rc);
        return run(rc);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
