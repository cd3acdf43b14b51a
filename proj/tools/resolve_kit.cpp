#include "resolvekit/driver.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

using namespace resolvekit;

namespace {

struct Flags {
    std::string family;
    std::string n;
    std::string input;
    std::string mode = "mixed";
    std::string set;
    std::string output;
    std::string format = "text";
    bool exact = false;
    bool greedy = false;
    bool all_bases = false;
    bool no_pruning = false;
    std::uint64_t budget = 0;
};

auto add_family_flags(CLI::App* cmd, Flags& f, bool allow_file) -> void
{
    cmd->add_option("--family", f.family, "prism_allied, web, prism, cycle, path or star");
    cmd->add_option("--n", f.n, "family size, or a range like 4..12");
    if (allow_file)
        cmd->add_option("--input", f.input, "edge-list file");
}

auto add_output_flags(CLI::App* cmd, Flags& f) -> void
{
    cmd->add_option("--output,-o", f.output, "write the report here instead of stdout");
    cmd->add_option("--format", f.format, "text, json or csv")->check(CLI::IsMember({ "text", "json", "csv" }));
}

}

int main(int argc, char** argv)
{
    CLI::App app{ "Metric, edge metric and mixed metric dimension toolkit" };
    app.set_version_flag("--version", RESOLVEKIT_VERSION);
    app.require_subcommand(1);
    Flags f;

    auto* gen = app.add_subcommand("gen", "write a family graph as an edge list");
    add_family_flags(gen, f, false);
    add_output_flags(gen, f);

    auto* dim = app.add_subcommand("dim", "exact or greedy dimension");
    add_family_flags(dim, f, true);
    add_output_flags(dim, f);
    dim->add_option("--mode", f.mode, "vertex, edge or mixed");
    auto* exact = dim->add_flag("--exact", f.exact, "exhaustive search (default)");
    dim->add_flag("--greedy", f.greedy, "greedy upper bound only")->excludes(exact);
    dim->add_flag("--all-bases", f.all_bases, "list every minimal basis");
    dim->add_flag("--no-pruning", f.no_pruning, "do not fix the forced leaves");
    dim->add_option("--budget", f.budget, "maximum candidate subsets")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check-set", "test a landmark set");
    add_family_flags(check, f, true);
    add_output_flags(check, f);
    check->add_option("--set", f.set, "comma separated labels or ids")->required();
    check->add_option("--mode", f.mode, "vertex, edge or mixed");

    auto* verify = app.add_subcommand("verify-paper", "certify mdim = n + 1 over a range of n");
    add_family_flags(verify, f, false);
    add_output_flags(verify, f);

    auto* codes = app.add_subcommand("codes", "closed-form against computed codes, as csv");
    add_family_flags(codes, f, false);
    add_output_flags(codes, f);

    auto* validate = app.add_subcommand("validate-tables", "table and collision census report");
    add_family_flags(validate, f, false);
    add_output_flags(validate, f);

    auto* chain = app.add_subcommand("chain", "vertex, edge and mixed dimension side by side");
    add_family_flags(chain, f, false);
    add_output_flags(chain, f);
    chain->add_option("--budget", f.budget, "maximum candidate subsets")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_code_for(ErrorKind::Usage);
    }

    const std::map<CLI::App*, Command> commands{
        { gen, Command::gen },
        { dim, Command::dim },
        { check, Command::check_set },
        { verify, Command::verify_paper },
        { codes, Command::codes },
        { validate, Command::validate_tables },
        { chain, Command::chain },
    };

    RunConfig config;
    try {
        config.command = commands.at(app.get_subcommands().front());
        if (! f.family.empty())
            config.family = parse_family(f.family);
        if (! f.n.empty())
            config.n = f.n;
        if (! f.input.empty())
            config.input = f.input;
        if (! f.output.empty())
            config.output = f.output;
        config.mode = parse_mode(f.mode);
        config.landmarks = f.set;
        config.greedy_only = f.greedy;
        config.search.enumerate_all = f.all_bases;
        config.search.use_forced_pruning = ! f.no_pruning;
        config.search.budget = f.budget > 0 ? f.budget : budget_from_environment();
        config.format = f.format == "json" ? OutputFormat::json : f.format == "csv" ? OutputFormat::csv : OutputFormat::text;
        if (config.command == Command::codes && f.format == "text")
            config.format = OutputFormat::csv;
    }
    catch (const Error& e) {
        std::cerr << "resolve-kit: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return run(config, std::cout, std::cerr);
}
