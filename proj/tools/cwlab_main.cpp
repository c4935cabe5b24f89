#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cwlab/cli.hpp"
#include "cwlab/presets.hpp"

namespace {

struct Options {
    std::string source;
    std::string format;
    std::string out_path;
};

int dispatch(const std::string& command, const Options& opt) {
    cwlab::CommandOutput result =
        cwlab::run_command(cwlab::parse_command(command), opt.source, cwlab::parse_format(opt.format));
    if (opt.out_path.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write to '" << opt.out_path << "'\n";
            return 1;
        }
        out << result.text;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cwlab: exact Cartan-Weyl toolkit for su(3)/sl(3,C) presentations"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        const char* default_format;
    };
    static const Sub subs[] = {
        {"table", "commutator table, every [g_i, g_j] decomposed in the basis", "md"},
        {"roots", "root vector (or NotEigen) for every non-Cartan generator", "md"},
        {"verify", "check the four Cartan-Weyl axioms; exit 2 on a strict-mode failure", "md"},
        {"normalize", "Killing-orthonormal Cartan and unit ladder pairings", "json"},
        {"diagram", "rank-2 root diagram", "svg"},
        {"errata", "published tables vs exact recomputation", "md"},
    };

    std::map<std::string, Options> opts;
    for (const auto& sub : subs) {
        auto* cmd = app.add_subcommand(sub.name, sub.help);
        Options& o = opts[sub.name];
        o.format = sub.default_format;
        cmd->add_option("--source", o.source, "preset name or algebra file (.json)")->required();
        cmd->add_option("--format", o.format, "md | json | svg | txt");
        cmd->add_option("--out", o.out_path, "write the document here instead of stdout");
    }
    auto* presets_cmd = app.add_subcommand("presets", "list the built-in presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets_cmd->parsed()) {
            for (const auto& name : cwlab::preset_names()) std::cout << name << "\n";
            return 0;
        }
        for (const auto& sub : subs)
            if (app.get_subcommand(sub.name)->parsed()) return dispatch(sub.name, opts[sub.name]);
        std::cerr << "error: no command selected\n";
        return 1;
    } catch (const cwlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
