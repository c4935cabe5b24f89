#include "cwlab/presets.hpp"

#include <array>

namespace cwlab {

namespace {

Mat mat3(const std::array<const char*, 9>& entries) {
    Mat m(3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = parse_scalar(entries[r * 3 + c]);
    return m;
}

MatrixPresentation make_su3_x() {
    MatrixPresentation p;
    p.name = "su3-x";
    p.labels = {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"};
    p.elements = {
        mat3({"0", "1", "0", "1", "0", "0", "0", "0", "0"}),
        mat3({"0", "-i", "0", "i", "0", "0", "0", "0", "0"}),
        mat3({"0", "0", "1", "0", "0", "0", "1", "0", "0"}),
        mat3({"0", "0", "-i", "0", "0", "0", "i", "0", "0"}),
        mat3({"0", "0", "0", "0", "0", "1", "0", "1", "0"}),
        mat3({"0", "0", "0", "0", "0", "-i", "0", "i", "0"}),
        mat3({"1", "0", "0", "0", "-1", "0", "0", "0", "0"}),
        mat3({"1/3*sqrt3", "0", "0", "0", "1/3*sqrt3", "0", "0", "0", "-2/3*sqrt3"}),
    };
    p.cartan = {"X7", "X8"};
    return p;
}

MatrixPresentation make_sl3c() {
    MatrixPresentation p;
    p.name = "sl3c";
    p.labels = {"H1", "H2", "Ea", "E-a", "Eb", "E-b", "Eg", "E-g"};
    p.elements = {
        mat3({"1", "0", "0", "0", "-1", "0", "0", "0", "0"}),
        mat3({"0", "0", "0", "0", "1", "0", "0", "0", "-1"}),
        mat3({"0", "1", "0", "0", "0", "0", "0", "0", "0"}),
        mat3({"0", "0", "0", "1", "0", "0", "0", "0", "0"}),
        mat3({"0", "0", "0", "0", "0", "1", "0", "0", "0"}),
        mat3({"0", "0", "0", "0", "0", "0", "0", "1", "0"}),
        mat3({"0", "0", "1", "0", "0", "0", "0", "0", "0"}),
        mat3({"0", "0", "0", "0", "0", "0", "1", "0", "0"}),
    };
    p.cartan = {"H1", "H2"};
    return p;
}

BosonPresentation make_su3_boson() {
    BosonPresentation p;
    p.name = "su3-boson";
    p.labels = {"H1", "H2", "Ea", "E-a", "Eb", "E-b", "Eg", "E-g"};
    for (const auto& l : p.labels) p.elements.push_back(make_generator(l));
    p.cartan = {"H1", "H2"};
    return p;
}

MatrixPresentation make_su3_gellmann() {
    // The recombined ladders (X1 +- i X2)/2 etc.; the Cartan pair stays
    // {X7, X8} -- the normalized generator of the published recombination is
    // textually identical to X8.
    MatrixPresentation base = make_su3_x();
    MatrixPresentation p = ladder_combine(
        base, {{"X1", "X2"}, {"X3", "X4"}, {"X5", "X6"}}, Scalar::rational(1, 2));
    p.name = "su3-gellmann";
    return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"su3-x", "su3-boson", "sl3c", "su3-gellmann"};
    return names;
}

bool is_preset(const std::string& name) {
    for (const auto& n : preset_names())
        if (n == name) return true;
    return false;
}

Presentation make_preset(const std::string& name) {
    if (name == "su3-x") return make_su3_x();
    if (name == "su3-boson") return make_su3_boson();
    if (name == "sl3c") return make_sl3c();
    if (name == "su3-gellmann") return make_su3_gellmann();
    throw UnknownPreset(name);
}

// ---------------------------------------------------------------------------
// Published tables, transcribed verbatim (the point of the errata command is
// that some of these rows disagree with exact recomputation).

const std::vector<PrintedBracket>& printed_x_brackets() {
    static const std::vector<PrintedBracket> rows = {
        {"X1", "X2", {{"X7", "2*i"}}},
        {"X1", "X3", {{"X6", "-i"}}},
        {"X1", "X4", {{"X5", "-i"}}},
        {"X1", "X5", {{"X4", "-i"}}},
        {"X1", "X6", {{"X3", "-i"}}},
        {"X1", "X7", {{"X2", "-2*i"}}},
        {"X1", "X8", {}},
        {"X2", "X3", {{"X5", "i"}}},
        {"X2", "X4", {{"X6", "-i"}}},
        {"X2", "X5", {{"X3", "-i"}}},
        {"X2", "X6", {{"X4", "i"}}},
        {"X2", "X7", {{"X1", "2*i"}}},
        {"X2", "X8", {}},
        {"X3", "X4", {{"X7", "i"}, {"X8", "sqrt3*i"}}},
        {"X3", "X5", {{"X2", "-i"}}},
        {"X3", "X6", {{"X1", "-i"}}},
        {"X3", "X7", {{"X4", "i"}}},
        {"X3", "X8", {{"X4", "-sqrt3*i"}}},
        {"X4", "X5", {{"X1", "-i"}}},
        {"X4", "X6", {{"X2", "-i"}}},
        {"X4", "X7", {{"X3", "i"}}},
        {"X4", "X8", {{"X3", "sqrt3*i"}}},
        {"X5", "X6", {{"X7", "-i"}, {"X8", "sqrt3*i"}}},
        {"X5", "X7", {{"X6", "-i"}}},
        {"X5", "X8", {{"X6", "-sqrt3*i"}}},
        {"X6", "X7", {{"X5", "-i"}}},
        {"X6", "X8", {{"X5", "sqrt3*i"}}},
        {"X7", "X8", {}},
    };
    return rows;
}

const std::vector<PrintedBracket>& printed_boson_brackets() {
    static const std::vector<PrintedBracket> rows = {
        {"Eg", "E-g", {{"H1", "1/3*sqrt3"}}},
        {"Eg", "Ea", {}},
        {"Eg", "E-a", {{"Eb", "-1/6*sqrt6"}}},
        {"Eg", "Eb", {}},
        {"Eg", "E-b", {{"Ea", "1/6*sqrt6"}}},
        {"Eg", "H1", {{"Eg", "-1/3*sqrt3"}}},
        {"Eg", "H2", {}},
        {"E-g", "Ea", {{"E-b", "1/6*sqrt6"}}},
        {"E-g", "E-a", {}},
        {"E-g", "Eb", {{"E-a", "-1/6*sqrt6"}}},
        {"E-g", "E-b", {}},
        {"E-g", "H1", {{"E-g", "1/3*sqrt3"}}},
        {"E-g", "H2", {}},
        {"Ea", "E-a", {{"H1", "1/6*sqrt3"}, {"H2", "1/2"}}},
        {"Ea", "Eb", {{"Eg", "1/6*sqrt6"}}},
        {"Ea", "E-b", {}},
        {"Ea", "H1", {{"Ea", "-1/6*sqrt3"}}},
        {"Ea", "H2", {{"Ea", "-1/2"}}},
        {"E-a", "Eb", {}},
        {"E-a", "E-b", {{"E-g", "1/6*sqrt6"}}},
        {"E-a", "H1", {{"E-a", "1/6*sqrt3"}}},
        {"E-a", "H2", {{"E-a", "1/2"}}},
        {"Eb", "E-b", {{"H1", "1/6*sqrt3"}, {"H2", "-1/2"}}},
        {"Eb", "H1", {{"Eb", "-1/6*sqrt3"}}},
        {"Eb", "H2", {{"Eb", "1/2"}}},
        {"E-b", "H1", {{"E-b", "1/6*sqrt3"}}},
        {"E-b", "H2", {{"E-b", "-1/2"}}},
        {"H1", "H2", {}},
    };
    return rows;
}

const std::vector<PrintedRoot>& printed_x_roots() {
    static const std::vector<PrintedRoot> rows = {
        {"X1", {"-2", "0"}},
        {"X2", {"2", "0"}},
        {"X3", {"1", "-sqrt3"}},
        {"X4", {"1", "sqrt3"}},
        {"X5", {"-1", "-sqrt3"}},
        {"X6", {"-1", "sqrt3"}},
    };
    return rows;
}

const std::vector<PrintedRoot>& printed_boson_roots() {
    static const std::vector<PrintedRoot> rows = {
        {"Eg", {"-1/3*sqrt3", "0"}},
        {"E-g", {"1/3*sqrt3", "0"}},
        {"Ea", {"-1/6*sqrt3", "-1/2"}},
        {"E-a", {"1/6*sqrt3", "1/2"}},
        {"Eb", {"-1/6*sqrt3", "1/2"}},
        {"E-b", {"1/6*sqrt3", "-1/2"}},
    };
    return rows;
}

StructureTensor printed_x_tensor() {
    const std::vector<std::string> labels = {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"};
    auto index = [&labels](const std::string& l) {
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == l) return k;
        throw UnknownLabel(l);
    };
    StructureTensor tensor(labels.size());
    for (const auto& row : printed_x_brackets()) {
        std::size_t i = index(row.left), j = index(row.right);
        for (const auto& [label, coeff] : row.terms) {
            Scalar c = parse_scalar(coeff);
            tensor.at(i, j, index(label)) = c;
            tensor.at(j, i, index(label)) = -c;
        }
    }
    return tensor;
}

}  // namespace cwlab
