#include <iostream>

#include <CLI11.hpp>

#include "dscdma/app/commands.hpp"

int main(int argc, char** argv)
{
    CLI::App cli{"Outage and transmission capacity of DS-CDMA ad hoc networks"};
    cli.require_subcommand(1);

    dscdma::app::RunOptions o;
    std::string scenario, lambda_mode, out_dir;
    std::uint64_t seed = 0;
    std::size_t realizations = 0;
    unsigned threads = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--scenario", scenario, "scenario file (key = value)")
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "master seed");
        sub->add_option("--realizations", realizations, "network realizations")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", out_dir, "directory for <command>.csv and <command>.meta");
        sub->add_option("--threads", threads, "worker threads, 0 = auto");
        sub->add_option("--lambda-mode", lambda_mode, "weighted|count|interferers")
            ->check(CLI::IsMember({"weighted", "count", "interferers"}));
    };
    common(cli.add_subcommand("outage", "mean outage per Gamma"));
    common(cli.add_subcommand("tc", "transmission capacity per Gamma"));
    common(cli.add_subcommand("sweep", "capacity over sweep_values of sweep_parameter"));
    common(cli.add_subcommand("table1", "average outage at center and perimeter receivers"));
    auto* oc = cli.add_subcommand("oracle-check", "closed form against fading simulation");
    common(oc);
    oc->add_option("--trials", o.trials, "trials per instance")->check(CLI::PositiveNumber);
    oc->add_option("--instances", o.instances, "random instances")->check(CLI::PositiveNumber);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return cli.exit(e) == 0 ? 0 : dscdma::app::kParseError;
    }

    auto* sub = cli.get_subcommands().front();
    o.command = sub->get_name();
    if (sub->count("--scenario")) o.scenario_path = scenario;
    if (sub->count("--seed")) o.seed = seed;
    if (sub->count("--realizations")) o.realizations = realizations;
    if (sub->count("--threads")) o.threads = threads;
    if (sub->count("--lambda-mode")) o.lambda_mode = lambda_mode;
    if (sub->count("--out")) o.out_dir = out_dir;
    return dscdma::app::run(o, std::cout, std::cerr);
}
