#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gci/cli/commands.hpp"
#include "gci/cli/examples.hpp"
#include "gci/errors.hpp"

using namespace gci;
using namespace gci::cli;

namespace {

struct Options {
    std::string config;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> primes;
    std::string format = "text";
    std::string out;
    std::string example;
};

const char* describe(const std::string& cmd) {
    if (cmd == "cohomology") return "Tabulate h^r of the configured line bundles";
    if (cmd == "kernel") return "Matrix, rank and kernel basis of F_1";
    if (cmd == "equations") return "Emit G, H, A from a class q in ker F_1 and verify the syzygy";
    if (cmd == "scan") return "Mod-p Jacobian scan of Y = (F) and X = (F, G, H)";
    if (cmd == "moduli") return "Parameter count of the family";
    if (cmd == "quotient") return "Hodge numbers of a crepant resolution of X / involution";
    return "Run an embedded example, or the pipeline of --config";
}

std::string example_list() {
    std::string s;
    for (const auto& n : example_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
}

int emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) {
        std::cerr << "gci: cannot write '" << o.out << "'\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gci: generalized complete intersections in Q x P^1"};
    app.require_subcommand(1);
    Options o;
    for (const auto& name : command_names()) {
        CLI::App* sc = app.add_subcommand(name, describe(name));
        if (name == "example") sc->add_option("name", o.example, "Example name: " + example_list());
        sc->add_option("--config", o.config, "JSON job configuration");
        sc->add_option("--seed", o.seed, "Seed for random sections (overrides options.seed)");
        sc->add_option("--prime", o.primes, "Prime for scans (repeatable, overrides options.primes)");
        sc->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
        sc->add_option("--out", o.out, "Write the report to this file");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    CLI::App* sc = app.get_subcommands().front();
    const std::string cmd = sc->get_name();
    const Format fmt = o.format == "json" ? Format::Json : Format::Text;

    ErrorKind kind = ErrorKind::Validation;
    std::string message;
    try {
        JobConfig cfg;
        if (cmd == "example") {
            if (!o.example.empty() && !o.config.empty())
                throw ValidationError("give an example name or --config, not both");
            if (!o.example.empty())
                cfg = parse_config(example_config(o.example));
            else if (!o.config.empty())
                cfg = load_config_file(o.config);
            else
                throw ValidationError("example needs a name or --config; available examples: " + example_list());
        } else {
            if (o.config.empty()) throw ValidationError(cmd + " needs --config <file>");
            cfg = load_config_file(o.config);
        }
        Overrides ov;
        if (sc->count("--seed")) ov.seed = o.seed;
        ov.primes = o.primes;
        apply_overrides(cfg, ov);
        return emit(o, render(run_command(cmd, cfg), fmt));
    } catch (const BudgetExceeded& e) {
        kind = ErrorKind::Budget;
        message = e.what();
    } catch (const std::overflow_error& e) {
        kind = ErrorKind::Budget;
        message = e.what();
    } catch (const std::domain_error& e) {
        kind = ErrorKind::Precondition;
        message = e.what();
    } catch (const std::invalid_argument& e) {
        message = e.what();
    } catch (const nlohmann::json::exception& e) {
        message = e.what();
    } catch (const std::exception& e) {
        message = std::string("internal error: ") + e.what();
    }
    std::cerr << "gci: " << kind_name(kind) << " error: " << message << "\n";
    emit(o, render_error(cmd, kind, message, fmt));
    return exit_code(kind);
}
