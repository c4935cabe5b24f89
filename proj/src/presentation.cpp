#include "cwlab/presentation.hpp"

#include <set>

namespace cwlab {

std::string format_root(const RootVector& root) {
    std::string out = "(";
    for (std::size_t k = 0; k < root.size(); ++k) {
        if (k > 0) out += ", ";
        out += format_scalar(root[k]);
    }
    return out + ")";
}

std::string format_combination(const std::vector<std::string>& labels,
                               const std::vector<Scalar>& coeffs) {
    std::string out;
    for (std::size_t k = 0; k < labels.size() && k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += format_scalar(coeffs[k]) + " \xc2\xb7 " + labels[k];
    }
    return out.empty() ? "0" : out;
}

namespace {

template <class Element>
void validate_common(const BasicPresentation<Element>& p) {
    if (p.labels.size() != p.elements.size())
        throw Error("presentation '" + p.name + "': label/element count mismatch");
    if (p.labels.empty()) throw Error("presentation '" + p.name + "': no generators");
    std::set<std::string> seen;
    for (const auto& l : p.labels)
        if (!seen.insert(l).second) throw DuplicateLabel(l);
    if (p.cartan.empty()) throw Error("presentation '" + p.name + "': empty cartan set");
    std::set<std::string> cartan_seen;
    for (const auto& c : p.cartan) {
        p.index_of(c);  // throws UnknownLabel
        if (!cartan_seen.insert(c).second) throw DuplicateLabel(c);
    }
}

}  // namespace

void validate_presentation(const MatrixPresentation& p) {
    validate_common(p);
    std::size_t n = p.elements.front().n();
    if (n == 0) throw Error("presentation '" + p.name + "': zero-dimensional matrices");
    for (const auto& m : p.elements)
        if (m.n() != n)
            throw DimensionMismatch("presentation '" + p.name + "': mixed matrix dimensions");
}

void validate_presentation(const BosonPresentation& p) {
    validate_common(p);
    std::size_t m = p.elements.front().modes();
    if (m == 0) throw Error("presentation '" + p.name + "': zero boson modes");
    for (const auto& poly : p.elements)
        if (poly.modes() != m)
            throw ModeCountMismatch("presentation '" + p.name + "': mixed mode counts");
}

void validate_presentation(const Presentation& p) {
    std::visit([](const auto& q) { validate_presentation(q); }, p);
}

const std::string& presentation_name(const Presentation& p) {
    return std::visit([](const auto& q) -> const std::string& { return q.name; }, p);
}

std::string presentation_backend(const Presentation& p) {
    return std::holds_alternative<MatrixPresentation>(p) ? "matrix" : "boson";
}

}  // namespace cwlab
