#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"two-centre dynamics toolkit: simulation, phase portraits, secular "
                 "comparison and collision-risk reports"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    double margin = 0.05;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config (object, or array for sweeps)")
            ->required();
        cmd->add_option("--out", out_dir, "output directory");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "integrate a trajectory, export CSV + "
                                                        "conservation report");
    add_common(simulate);
    CLI::App* portrait =
        app.add_subcommand("portrait", "planar level fan: SVG + per-level CSV");
    add_common(portrait);
    CLI::App* secular =
        app.add_subcommand("secular", "first-order averaged flow vs direct integration");
    add_common(secular);
    CLI::App* risk = app.add_subcommand("risk", "collision-risk report for an element set");
    add_common(risk);
    CLI::Option* margin_opt =
        risk->add_option("--margin", margin, "normalized risk margin (default 0.05)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : euler2c::cli::kExitUsage;
    }

    euler2c::cli::CommandContext ctx;
    ctx.out_dir = out_dir;
    ctx.margin = margin;
    ctx.margin_from_flag = margin_opt->count() > 0;
    return euler2c::cli::run_command(app.get_subcommands().front()->get_name(), config_path,
                                     ctx);
}
