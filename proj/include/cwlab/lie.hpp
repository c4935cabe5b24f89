#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cwlab/linalg.hpp"
#include "cwlab/presentation.hpp"

namespace cwlab {

template <class Element>
struct DecomposeResult {
    std::optional<std::vector<Scalar>> coeffs;  // present iff target is in the span
    Element residual;                           // zero element when coeffs is present
};

/// Unique coefficients of target over an independent basis, by an exact
/// linear solve on the flattened coordinates. Throws DependentBasis;
/// a target outside the span comes back with coeffs empty and a nonzero
/// residual witness.
DecomposeResult<Mat> decompose_in_basis(const Mat& target, const std::vector<Mat>& basis);
DecomposeResult<BosonPoly> decompose_in_basis(const BosonPoly& target,
                                              const std::vector<BosonPoly>& basis);

/// lambda with b = lambda * e, or nullopt. e must be nonzero.
std::optional<Scalar> proportionality_factor(const Mat& b, const Mat& e);
std::optional<Scalar> proportionality_factor(const BosonPoly& b, const BosonPoly& e);

inline Mat bracket(const Mat& a, const Mat& b) { return commutator(a, b); }
inline BosonPoly bracket(const BosonPoly& a, const BosonPoly& b) { return boson_commutator(a, b); }

inline bool element_is_zero(const Mat& m) { return m.is_zero(); }
inline bool element_is_zero(const BosonPoly& p) { return p.is_zero(); }

inline std::string element_to_string(const Mat& m) { return m.to_string(); }
inline std::string element_to_string(const BosonPoly& p) { return p.to_string(); }

/// Structure-constant tensor c[i][j][k] with [g_i, g_j] = sum_k c[i][j][k] g_k.
struct StructureTensor {
    std::size_t k = 0;
    std::vector<Scalar> c;

    explicit StructureTensor(std::size_t size = 0) : k(size), c(size * size * size) {}
    Scalar& at(std::size_t i, std::size_t j, std::size_t l) { return c[(i * k + j) * k + l]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t l) const { return c[(i * k + j) * k + l]; }
};

/// Computes all brackets and their decompositions. Throws DependentBasis if
/// the generators are not independent and NotClosedError(i, j, residual) if
/// some bracket leaves the span. Antisymmetric in (i, j) by construction.
template <class Element>
StructureTensor structure_constants(const BasicPresentation<Element>& p) {
    std::size_t k = p.size();
    StructureTensor tensor(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            Element br = bracket(p.elements[i], p.elements[j]);
            auto dec = decompose_in_basis(br, p.elements);
            if (!dec.coeffs)
                throw NotClosedError(p.labels[i], p.labels[j], element_to_string(dec.residual));
            for (std::size_t l = 0; l < k; ++l) {
                tensor.at(i, j, l) = (*dec.coeffs)[l];
                tensor.at(j, i, l) = -(*dec.coeffs)[l];
            }
        }
    }
    return tensor;
}

struct JacobiViolation {
    std::size_t i, j, k;           // zero-based generator indices, i < j < k
    std::vector<Scalar> residual;  // per output index l
};

/// Empty iff sum_m (c[i][j][m] c[m][k][l] + c[j][k][m] c[m][i][l]
/// + c[k][i][m] c[m][j][l]) vanishes for all i<j<k and every l.
std::vector<JacobiViolation> jacobi_check(const StructureTensor& tensor);

struct AdRootResult {
    std::optional<RootVector> root;
    std::size_t failing_cartan = 0;  // index into the cartan list when !root
};

/// Root of e against the given Cartan elements: requires [H_i, e] to be an
/// exact scalar multiple of e for every i. Throws ZeroElement.
template <class Element>
AdRootResult ad_root(const std::vector<Element>& cartan, const Element& e) {
    if (element_is_zero(e)) throw ZeroElement();
    AdRootResult out;
    RootVector root;
    for (std::size_t k = 0; k < cartan.size(); ++k) {
        Element br = bracket(cartan[k], e);
        auto factor = proportionality_factor(br, e);
        if (!factor) {
            out.failing_cartan = k;
            return out;
        }
        root.push_back(*factor);
    }
    out.root = std::move(root);
    return out;
}

/// Killing matrix kappa[i][j] = K(g_i, g_j) = trace(ad g_i . ad g_j) read off
/// the structure constants.
std::vector<std::vector<Scalar>> killing_matrix(const StructureTensor& tensor);

/// K(a, b) for span elements a, b of p, via decomposition and the Killing
/// matrix. Throws NotClosedError (from structure_constants) and Error when an
/// argument is outside the span.
template <class Element>
Scalar killing_form(const Element& a, const Element& b, const BasicPresentation<Element>& p) {
    StructureTensor tensor = structure_constants(p);
    auto kappa = killing_matrix(tensor);
    auto da = decompose_in_basis(a, p.elements);
    auto db = decompose_in_basis(b, p.elements);
    if (!da.coeffs || !db.coeffs) throw Error("killing_form: element outside the presentation span");
    Scalar out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if ((*da.coeffs)[i].is_zero()) continue;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if ((*db.coeffs)[j].is_zero()) continue;
            out += (*da.coeffs)[i] * (*db.coeffs)[j] * kappa[i][j];
        }
    }
    return out;
}

/// Replaces each (a, b) pair with scale*(a + i b) and scale*(a - i b),
/// labeled "a+ib" / "a-ib". Cartan labels carry over unless replaced.
MatrixPresentation ladder_combine(const MatrixPresentation& p,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  const Scalar& scale,
                                  std::optional<std::vector<std::string>> new_cartan = std::nullopt);

/// Gram-Schmidt K-orthonormal Cartan (presentation order) plus ladder
/// rescaling so that K(E', partner') = 1 for each negative-root partner pair.
/// Throws NoPartner, DegenerateCartan, NotRepresentable.
MatrixPresentation normalize_presentation(const MatrixPresentation& p);

}  // namespace cwlab
