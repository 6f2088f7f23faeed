#include "commands.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <thread>
#include <vector>

#include "euler2c/collision.hpp"
#include "euler2c/delaunay.hpp"
#include "euler2c/first_integrals.hpp"
#include "euler2c/integrate.hpp"
#include "euler2c/io.hpp"
#include "euler2c/secular.hpp"

namespace euler2c::cli {

namespace {

using nlohmann::json;

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Vec3 parse_vec3(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) throw ConfigError(std::string(what) + ": need [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ModelSpec parse_model(const json& cfg) {
    const std::string mode = cfg.value("mode", "two_centre");
    const json masses = cfg.value("masses", json::object());
    if (mode == "kepler") return TwoCentreParams{masses.value("m", 1.0), 0.0};
    if (mode == "two_centre")
        return TwoCentreParams{masses.value("m", 1.0), masses.value("eps", 0.0)};
    if (mode == "symmetric") {
        SymmetricParams p;
        if (!cfg.contains("initial_state") || !cfg["initial_state"].contains("x0"))
            throw ConfigError("symmetric mode needs initial_state.x0");
        p.x0 = parse_vec3(cfg["initial_state"]["x0"], "x0");
        p.m_plus = masses.value("m_plus", 0.5);
        p.m_minus = masses.value("m_minus", 0.5);
        return p;
    }
    if (mode == "sea") {
        SeaParams p;
        p.eps = masses.value("eps", 0.0);
        p.mu = masses.value("mu", 0.0);
        if (p.eps <= 0.0) throw ConfigError("sea mode needs masses.eps > 0");
        return p;
    }
    throw ConfigError("unknown mode '" + mode + "'");
}

double model_m(const ModelSpec& model) {
    if (const auto* tc = std::get_if<TwoCentreParams>(&model)) return tc->m;
    if (const auto* sea = std::get_if<SeaParams>(&model)) return sea->m_asteroid();
    return 1.0;
}

DelaunayElements parse_delaunay(const json& j) {
    DelaunayElements d;
    d.Lambda = j.at("Lambda").get<double>();
    d.G = j.at("G").get<double>();
    d.ell = j.value("ell", 0.0);
    d.g = j.value("g", 0.0);
    d.Theta = j.value("Theta", 0.0);
    d.vartheta = j.value("vartheta", std::numbers::pi);
    d.rprime = j.at("rprime").get<double>();
    d.Rprime = j.value("Rprime", 0.0);
    d.Gtot = j.value("Gtot", d.G);
    d.Z = j.value("Z", d.Gtot);
    d.z = j.value("z", 0.0);
    d.gamma = j.value("gamma", 0.0);
    return d;
}

CartesianState parse_state(const json& cfg, const ModelSpec& model) {
    if (!cfg.contains("initial_state")) throw ConfigError("missing initial_state");
    const json& st = cfg["initial_state"];
    const std::string type = st.value("type", "cartesian");
    if (type == "cartesian") {
        CartesianState s;
        s.y = parse_vec3(st.at("y"), "initial_state.y");
        s.x = parse_vec3(st.at("x"), "initial_state.x");
        if (st.contains("xprime")) s.xprime = parse_vec3(st["xprime"], "initial_state.xprime");
        if (st.contains("yprime")) s.yprime = parse_vec3(st["yprime"], "initial_state.yprime");
        return s;
    }
    if (type == "delaunay") return delaunay_to_cartesian(parse_delaunay(st), model_m(model));
    throw ConfigError("initial_state.type must be cartesian or delaunay");
}

DelaunayElements parse_elements(const json& cfg, double m) {
    if (!cfg.contains("initial_state")) throw ConfigError("missing initial_state");
    const json& st = cfg["initial_state"];
    if (st.value("type", "cartesian") == "delaunay") return parse_delaunay(st);
    CartesianState s;
    s.y = parse_vec3(st.at("y"), "initial_state.y");
    s.x = parse_vec3(st.at("x"), "initial_state.x");
    s.xprime = parse_vec3(st.at("xprime"), "initial_state.xprime");
    return cartesian_to_delaunay(s, m);
}

IntegrateOptions parse_integrator(const json& cfg, double& t0, double& t1) {
    IntegrateOptions opt;
    const json integ = cfg.value("integrator", json::object());
    opt.tol = integ.value("tol", 1e-10);
    opt.guard_radius = integ.value("guard", kDefaultGuardRadius);
    opt.sample_dt = integ.value("sample_dt", 0.0);
    t0 = 0.0;
    t1 = 100.0;
    if (integ.contains("t_span")) {
        t0 = integ["t_span"].at(0).get<double>();
        t1 = integ["t_span"].at(1).get<double>();
    }
    return opt;
}

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    std::ofstream os(dir / name);
    if (!os) throw ConfigError("cannot write " + (dir / name).string());
    return os;
}

unsigned thread_cap() {
    if (const char* env = std::getenv("EULER2C_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

int run_simulate(const json& cfg, const CommandContext& ctx) {
    const ModelSpec model = parse_model(cfg);
    const CartesianState s0 = parse_state(cfg, model);
    double t0, t1;
    const IntegrateOptions opt = parse_integrator(cfg, t0, t1);

    const Trajectory traj = integrate(s0, model, t0, t1, opt);
    {
        auto os = open_output(ctx.out_dir, "trajectory.csv");
        write_trajectory_csv(os, traj);
    }
    {
        auto os = open_output(ctx.out_dir, "conservation.json");
        write_conservation_json(os, conservation_report(traj, model), traj.stats);
    }
    if (traj.stats.collision_event) {
        std::cerr << "euler2c: collision guard reached at t = " << traj.stats.t_end
                  << ", trajectory truncated\n";
        return kExitCollision;
    }
    return kExitOk;
}

int run_portrait(const json& cfg, const CommandContext& ctx) {
    const json pj = cfg.value("portrait", json::object());
    const double delta = pj.value("delta", 0.5);
    const double Lambda = pj.value("Lambda", 1.0);
    const int n_points = pj.value("n_points", 512);
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("portrait.delta must be in (0, 1)");

    std::vector<double> levels;
    if (pj.contains("levels")) {
        for (const auto& v : pj["levels"]) levels.push_back(v.get<double>());
    } else {
        // default fan: librations around the minimum, then rotations up to
        // the split level, always inside the studied window
        for (double f : {-0.8, -0.4, 0.0, 0.4})
            levels.push_back(f * delta);
        for (double f : {0.3, 0.6, 0.85})
            levels.push_back(delta + f * (1.0 - delta));
    }

    std::vector<LevelCurve> curves;
    int index = 0;
    for (const double level : levels) {
        const LevelCurve curve = level_curve({delta, level, Lambda}, n_points);
        if (curve.points.empty()) {
            std::cerr << "euler2c: level " << level << " is below the minimum -delta, skipped\n";
            continue;
        }
        auto os = open_output(ctx.out_dir, "level_" + std::to_string(index++) + ".csv");
        write_level_csv(os, curve);
        curves.push_back(curve);
    }
    // the separatrix belongs in every fan
    curves.push_back(level_curve({delta, delta, Lambda}, n_points));
    auto os = open_output(ctx.out_dir, "portrait.svg");
    write_portrait_svg(os, delta, curves);
    return kExitOk;
}

int run_secular(const json& cfg, const CommandContext& ctx) {
    const ModelSpec model = parse_model(cfg);
    const auto* tc = std::get_if<TwoCentreParams>(&model);
    if (!tc) throw ConfigError("secular comparison runs on two_centre configs");

    const DelaunayElements d0 = parse_elements(cfg, tc->m);
    if (std::abs(d0.Theta) > 1e-12) throw ConfigError("secular comparison is planar: Theta = 0");

    const json sj = cfg.value("secular", json::object());
    const double rho = sj.value("rho", 1.0);
    const double t_end = sj.value("t_end", 200.0);

    SecularState sec0;
    sec0.rprime = d0.rprime;
    sec0.Lambda = d0.Lambda;
    sec0.Theta = d0.Theta;
    sec0.Rprime = d0.Rprime;
    sec0.G = d0.G;
    sec0.g = d0.g;
    sec0.ell = d0.ell;
    sec0.vartheta = d0.vartheta;

    double t0, t1;
    IntegrateOptions opt = parse_integrator(cfg, t0, t1);
    const double period =
        2.0 * std::numbers::pi * std::pow(d0.Lambda, 3) / tc->m;
    opt.sample_dt = sj.value("sample_dt", period);

    const CartesianState s0 = delaunay_to_cartesian(d0, tc->m);
    const Trajectory traj = integrate(s0, model, 0.0, t_end, opt);

    std::vector<SecularComparisonRow> rows;
    for (const auto& sample : traj.samples) {
        const DelaunayElements d = cartesian_to_delaunay(sample.state, tc->m);
        const SecularState sec = first_order_secular_flow(sec0, tc->m, tc->eps, rho, sample.t);
        rows.push_back({sample.t, sec.g, d.g, sec.G, d.G});
    }
    {
        auto os = open_output(ctx.out_dir, "secular_comparison.csv");
        write_secular_comparison_csv(os, rows);
    }
    {
        // quadrature metadata so reruns are bit-comparable
        const double a = d0.semi_major_axis(tc->m);
        const double g0 = euler_g0_from_elements(d0, tc->m);
        const auto quad = averaged_potential_quad({d0.rprime, d0.Lambda, d0.Theta, g0}, a);
        json meta;
        meta["u_avg_nodes"] = quad.nodes;
        meta["u_avg_converged"] = quad.converged;
        meta["rho"] = rho;
        meta["t_end"] = t_end;
        auto os = open_output(ctx.out_dir, "secular_meta.json");
        os << meta.dump(2) << '\n';
    }
    return kExitOk;
}

int run_risk(const json& cfg, const CommandContext& ctx) {
    const ModelSpec model = parse_model(cfg);
    const double m = model_m(model);
    const DelaunayElements d = parse_elements(cfg, m);
    const double margin = ctx.margin_from_flag
                              ? ctx.margin
                              : cfg.value("risk", json::object()).value("margin", ctx.margin);
    const RiskReport report = classify_risk(d, m, margin);
    auto os = open_output(ctx.out_dir, "risk.json");
    write_risk_json(os, report);
    return kExitOk;
}

int run_command(const std::string& command, const std::string& config_path,
                const CommandContext& ctx) {
    json doc;
    try {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "euler2c: cannot open config " << config_path << "\n";
            return kExitUsage;
        }
        doc = json::parse(is);
    } catch (const json::exception& e) {
        std::cerr << "euler2c: malformed config: " << e.what() << "\n";
        return kExitUsage;
    }

    auto dispatch = [&](const json& cfg, const CommandContext& local) -> int {
        try {
            if (command == "simulate") return run_simulate(cfg, local);
            if (command == "portrait") return run_portrait(cfg, local);
            if (command == "secular") return run_secular(cfg, local);
            if (command == "risk") return run_risk(cfg, local);
            std::cerr << "euler2c: unknown command " << command << "\n";
            return kExitUsage;
        } catch (const ConfigError& e) {
            std::cerr << "euler2c: config error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const DomainError& e) {
            std::cerr << "euler2c: " << e.what() << "\n";
            return kExitUsage;
        } catch (const std::exception& e) {
            std::cerr << "euler2c: " << e.what() << "\n";
            return kExitUsage;
        }
    };

    if (!doc.is_array()) return dispatch(doc, ctx);

    // sweep: one task per entry, each writing its own subdirectory
    std::vector<int> codes(doc.size(), kExitOk);
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::min<unsigned>(thread_cap(), doc.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= doc.size()) return;
                CommandContext local = ctx;
                const std::string name =
                    doc[i].value("name", "case_" + std::to_string(i));
                local.out_dir = ctx.out_dir / name;
                codes[i] = dispatch(doc[i], local);
            }
        });
    }
    for (auto& t : pool) t.join();
    int rc = kExitOk;
    for (int c : codes) rc = std::max(rc, c);
    return rc;
}

} // namespace euler2c::cli
