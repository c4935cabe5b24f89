#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cwlab/boson.hpp"
#include "cwlab/errors.hpp"
#include "cwlab/matrix.hpp"

namespace cwlab {

/// Simultaneous adjoint eigenvalues (alpha_1, ..., alpha_l) of a ladder
/// element against the designated Cartan set; length equals the rank.
using RootVector = std::vector<Scalar>;

std::string format_root(const RootVector& root);

/// "2*i · X7 + sqrt3*i · X8" from coefficients over labeled generators;
/// "0" when all coefficients vanish.
std::string format_combination(const std::vector<std::string>& labels,
                               const std::vector<Scalar>& coeffs);

/// Labeled generator set with a designated Cartan subset, over one backend.
template <class Element>
struct BasicPresentation {
    std::string name;
    std::vector<std::string> labels;
    std::vector<Element> elements;
    std::vector<std::string> cartan;  // ordered; defines the root components

    std::size_t size() const { return labels.size(); }
    std::size_t rank() const { return cartan.size(); }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == label) return k;
        throw UnknownLabel(label);
    }

    bool is_cartan(std::size_t index) const {
        for (const auto& c : cartan)
            if (labels[index] == c) return true;
        return false;
    }

    std::vector<std::size_t> cartan_indices() const {
        std::vector<std::size_t> out;
        for (const auto& c : cartan) out.push_back(index_of(c));
        return out;
    }

    std::vector<std::size_t> ladder_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (!is_cartan(k)) out.push_back(k);
        return out;
    }

    std::vector<Element> cartan_elements() const {
        std::vector<Element> out;
        for (auto k : cartan_indices()) out.push_back(elements[k]);
        return out;
    }

    friend bool operator==(const BasicPresentation& a, const BasicPresentation& b) {
        return a.name == b.name && a.labels == b.labels && a.elements == b.elements &&
               a.cartan == b.cartan;
    }
};

using MatrixPresentation = BasicPresentation<Mat>;
using BosonPresentation = BasicPresentation<BosonPoly>;

using Presentation = std::variant<MatrixPresentation, BosonPresentation>;

/// Checks label uniqueness, the Cartan subset, and per-backend size
/// consistency. Throws DuplicateLabel / UnknownLabel / DimensionMismatch /
/// ModeCountMismatch / Error.
void validate_presentation(const MatrixPresentation& p);
void validate_presentation(const BosonPresentation& p);
void validate_presentation(const Presentation& p);

const std::string& presentation_name(const Presentation& p);
std::string presentation_backend(const Presentation& p);

}  // namespace cwlab
