#include "cwlab/cli.hpp"

#include <filesystem>

#include "cwlab/algebra_file.hpp"
#include "cwlab/diagram.hpp"
#include "cwlab/errata.hpp"
#include "cwlab/presets.hpp"

namespace cwlab {

Command parse_command(const std::string& name) {
    if (name == "table") return Command::kTable;
    if (name == "roots") return Command::kRoots;
    if (name == "verify") return Command::kVerify;
    if (name == "normalize") return Command::kNormalize;
    if (name == "diagram") return Command::kDiagram;
    if (name == "errata") return Command::kErrata;
    throw Error("unknown command '" + name + "'");
}

namespace {

Presentation resolve_source(const std::string& source) {
    if (is_preset(source)) return make_preset(source);
    if (std::filesystem::exists(source)) return load_algebra_file(source);
    throw UnknownPreset(source);
}

}  // namespace

CommandOutput run_command(Command cmd, const std::string& source, DocFormat format) {
    Presentation p = resolve_source(source);
    const std::string name = presentation_name(p);
    CommandOutput out;
    switch (cmd) {
        case Command::kTable:
            out.text = render_table(name, commutator_table(p), format);
            return out;
        case Command::kRoots: {
            auto cartan = std::visit([](const auto& q) { return q.cartan; }, p);
            out.text = render_roots(name, cartan, roots_table(p), format);
            return out;
        }
        case Command::kVerify: {
            CartanWeylReport report = verify_cartan_weyl(p);
            out.text = render_report(report, format);
            if (!report.verdicts.strict_all()) out.exit_code = 2;
            return out;
        }
        case Command::kNormalize: {
            const auto* mp = std::get_if<MatrixPresentation>(&p);
            if (!mp) throw Error("normalize requires a matrix-backend presentation");
            out.text = render_presentation(normalize_presentation(*mp), format);
            return out;
        }
        case Command::kDiagram: {
            std::vector<std::pair<std::string, RootVector>> roots;
            for (auto& row : roots_table(p))
                if (row.root) roots.push_back({row.label, std::move(*row.root)});
            if (roots.empty())
                throw Error("no generator of '" + name + "' has a root vector; nothing to draw");
            if (format == DocFormat::kSvg)
                out.text = render_diagram_svg(roots);
            else if (format == DocFormat::kTxt)
                out.text = render_diagram_ascii(roots);
            else
                throw UnsupportedFormat("diagram supports only svg and txt");
            return out;
        }
        case Command::kErrata:
            out.text = render_errata(compute_errata(name, p), format);
            return out;
    }
    throw Error("unreachable command");
}

}  // namespace cwlab
