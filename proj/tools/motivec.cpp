// motivec command line front end. All argument semantics live in
// motivec::dispatch; this file only tokenizes flags and picks the output
// format.

#include "motivec/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct SubSpec {
    const char* name;
    const char* help;
    std::vector<const char*> flags;
};

const std::vector<SubSpec> kSubcommands = {
    {"poincare",
     "Poincare polynomial, rank and dimension of a split flag variety",
     {"degree", "dims"}},
    {"rank", "Rank and dimension of a split flag variety", {"degree", "dims"}},
    {"decompose",
     "Motivic decomposition over the first splitting field "
     "(variants: onestep, 2-2n-X1, 2-2n-X2)",
     {"p", "n", "m", "variant", "mode"}},
    {"candim",
     "Canonical p-dimension and incompressibility of a product of flags",
     {"p", "degree", "index", "dims", "factors"}},
    {"classify",
     "Allowed upper-motive labels for a product of flags",
     {"p", "degree", "index", "dims", "factors"}},
    {"verify",
     "Replay a proof-level check (basic2, poincare-identity, kummer)",
     {"p", "n", "check"}},
};

const std::map<std::string, std::string> kFlagHelp = {
    {"p", "distinguished prime"},
    {"n", "p-adic size parameter (deg = p^n) or sweep bound"},
    {"m", "grassmannian parameter (dims = p^m)"},
    {"degree", "degree of the algebra or split ambient"},
    {"index", "index of the algebra"},
    {"dims", "comma-separated reduced dimensions, e.g. 2,4"},
    {"factors", "semicolon-separated dims lists, e.g. 2,4;1"},
    {"variant", "decomposition variant"},
    {"check", "which verification to run"},
    {"mode", "rank annotation mode: hypothesis (default) or constraint"},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"motivec: exact mod-p motivic decompositions of "
                 "generalized Severi-Brauer varieties"};
    app.require_subcommand(1);

    std::map<std::string, std::string> values;
    std::string format = "text";
    std::map<CLI::App*, const SubSpec*> specs;
    for (const auto& spec : kSubcommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        for (const char* flag : spec.flags)
            sub->add_option("--" + std::string(flag), values[flag],
                            kFlagHelp.at(flag));
        sub->add_option("--format", format, "output format: text or json");
        specs[sub] = &spec;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (format != "text" && format != "json") {
        std::cerr << "error: --format must be text or json\n";
        return 2;
    }

    motivec::Request request;
    CLI::App* sub = app.get_subcommands().front();
    request.command = specs.at(sub)->name;
    for (const char* flag : specs.at(sub)->flags)
        if (sub->count("--" + std::string(flag)) > 0)
            request.params[flag] = values[flag];

    const motivec::Response response = motivec::dispatch(request);
    if (format == "json")
        std::cout << motivec::canonical_dump(response.body) << "\n";
    else
        std::cout << response.text;
    return response.exit_code;
}
