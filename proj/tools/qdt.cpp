// qdt: command-line front end for the qualitative decision engine.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qdt/cli/commands.hpp"

namespace {

int run(int argc, char** argv) {
    using namespace qdt::cli;
    CLI::App app{"Qualitative decision making: lifted act preferences, likelihood and nonmonotonic inference"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    std::optional<std::size_t> states, levels, ranks;
    std::optional<std::uint64_t> ceiling;
    app.add_option("--rule", o.rule,
                   "Act rule: lift-necessity (default), lift-qualprob, consequence-pessimistic, consequence-optimistic");
    app.add_option("--condition", o.condition, "Conditioning event for compare, e.g. {rotten} or !{s1}");
    app.add_option("--states", states, "Largest state count to enumerate")->check(CLI::Range(1, 8));
    app.add_option("--levels", levels, "Largest plausibility level (or integer weight) to enumerate")
        ->check(CLI::Range(1, 1000));
    app.add_option("--ranks", ranks, "Largest number of consequences to enumerate")->check(CLI::Range(2, 16));
    app.add_option("--ceiling", ceiling, "Maximum number of enumerated instances")->check(CLI::PositiveNumber);

    std::string file, first, second, property, demo;
    std::optional<std::string> check_file;

    auto* compare = app.add_subcommand("compare", "Compare two acts of a problem file");
    compare->add_option("file", file, "Problem file")->required();
    compare->add_option("first", first, "First act")->required();
    compare->add_option("second", second, "Second act")->required();

    auto* matrix = app.add_subcommand("matrix", "Pairwise preference matrix of a problem file");
    matrix->add_option("file", file, "Problem file")->required();

    auto* nm = app.add_subcommand("nm", "Nonmonotonic entailment A |~ B under the file's pi levels");
    nm->add_option("file", file, "Problem file")->required();
    nm->add_option("A", first, "Context event, e.g. {fresh,rotten}")->required();
    nm->add_option("B", second, "Conclusion event")->required();

    auto* check = app.add_subcommand("check", "Run a property suite on a file, or sweep all models within bounds");
    check->add_option("--suite", o.suite, "savage, p1prime, events, likelihood, systemP, roundtrip or axioms")
        ->required();
    check->add_option("file", check_file, "Problem file (omit to sweep)");

    auto* search = app.add_subcommand("search", "Search for the first witness of a negative result");
    search->add_option("property", property,
                       "qualprob-strict-cycle, act-indifference-intransitivity, event-indifference-intransitivity, "
                       "likelihood-strictly-refines-N or likelihood-strictly-refines-Pi")
        ->required();

    auto* demo_cmd = app.add_subcommand("demo", "Built-in worked examples");
    demo_cmd->add_option("name", demo, "omelette or condorcet")->required();
    demo_cmd->add_flag("--equal-pi", o.equal_pi, "Omelette: only the regime with no opinion on the egg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (states) o.bounds.max_states = *states;
    if (levels) o.bounds.max_levels = *levels;
    if (ranks) o.bounds.max_ranks = *ranks;
    if (ceiling) o.bounds.ceiling = *ceiling;

    try {
        if (*compare) return cmd_compare(load_problem(file), first, second, o, std::cout);
        if (*matrix) return cmd_matrix(load_problem(file), o, std::cout);
        if (*nm) return cmd_nm(load_problem(file), first, second, std::cout);
        if (*check) {
            if (check_file) {
                const ProblemFile p = load_problem(*check_file);
                return cmd_check(&p, o, std::cout);
            }
            return cmd_check(nullptr, o, std::cout);
        }
        if (*search) return cmd_search(property, o, std::cout);
        if (*demo_cmd) return cmd_demo(demo, o, std::cout);
    } catch (const qdt::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
