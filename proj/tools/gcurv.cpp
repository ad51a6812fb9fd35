#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gcurv/cli.hpp"

int main(int argc, char** argv) {
    using namespace gcurv::cli;

    CLI::App app{"gcurv: distance-matrix curvature of graphs and its minimax bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    bool exact = false;
    bool floating = false;

    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", cfg.input,
                        "edge-list file or generator spec (path:5, cycle:6, complete:4, star:4, "
                        "hypercube:3, grid:3,4, gnp:20,1/4)")
            ->required();
        sub->add_option("-f,--format", format, "json | csv | table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--seed", cfg.seed, "seed for gnp graphs and sampled measures");
        sub->add_option("--workers", cfg.workers, "worker threads, 0 = all cores");
    };

    const std::map<std::string, Command> commands{
        {"dist", Command::Dist},   {"curvature", Command::Curvature}, {"verify", Command::Verify},
        {"game", Command::Game},   {"gen", Command::Gen},             {"report", Command::Report}};
    const std::map<std::string, std::string> help{
        {"dist", "print the distance matrix"},
        {"curvature", "solve D w = n 1 and report w, ||w||_1 and K = n / ||w||_1"},
        {"verify", "check A <= K <= B and <w, D P> = n over a battery of measures"},
        {"game", "solve the zero-sum game with payoff D and compare its value with K"},
        {"gen", "print a generated graph"},
        {"report", "run dist, curvature, verify and game in one document"},
    };

    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, cmd] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        add_common(sub);
        subs[name] = sub;
    }
    for (const char* name : {"verify", "report"}) {
        subs[name]->add_option("--samples", cfg.samples, "number of seeded random measures");
    }
    auto* curv = subs["curvature"];
    auto* exact_flag = curv->add_flag("--exact", exact, "exact rational solve (default)");
    curv->add_flag("--float", floating, "floating-point LU solve")->excludes(exact_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) cfg.command = commands.at(name);
    }
    cfg.format = formats.at(format);
    cfg.mode = floating ? Mode::Float : Mode::Exact;
    return run(cfg, std::cout, std::cerr);
}
