#include "cwlab/lie.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cwlab {

namespace {

std::vector<Scalar> mat_coords(const Mat& m) {
    std::vector<Scalar> out;
    out.reserve(m.n() * m.n());
    for (std::size_t r = 0; r < m.n(); ++r)
        for (std::size_t c = 0; c < m.n(); ++c) out.push_back(m.at(r, c));
    return out;
}

}  // namespace

DecomposeResult<Mat> decompose_in_basis(const Mat& target, const std::vector<Mat>& basis) {
    for (const auto& b : basis)
        if (b.n() != target.n())
            throw DimensionMismatch("decompose_in_basis: mixed matrix dimensions");
    std::vector<std::vector<Scalar>> columns;
    columns.reserve(basis.size());
    for (const auto& b : basis) columns.push_back(mat_coords(b));
    SpanSolution sol = solve_span(columns, mat_coords(target));

    DecomposeResult<Mat> out{std::nullopt, Mat(target.n())};
    if (sol.exact) {
        out.coeffs = std::move(sol.candidate);
        return out;
    }
    Mat recomposed(target.n());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!sol.candidate[k].is_zero()) recomposed += sol.candidate[k] * basis[k];
    out.residual = target - recomposed;
    return out;
}

DecomposeResult<BosonPoly> decompose_in_basis(const BosonPoly& target,
                                              const std::vector<BosonPoly>& basis) {
    for (const auto& b : basis)
        if (b.modes() != target.modes())
            throw ModeCountMismatch("decompose_in_basis: mixed mode counts");
    // Shared monomial coordinate space: union over basis and target.
    std::map<BosonMonomial, std::size_t> key_index;
    auto collect = [&key_index](const BosonPoly& p) {
        for (const auto& [mono, c] : p.terms()) key_index.emplace(mono, 0);
    };
    for (const auto& b : basis) collect(b);
    collect(target);
    std::size_t next = 0;
    for (auto& [mono, idx] : key_index) idx = next++;

    auto coords = [&key_index, next](const BosonPoly& p) {
        std::vector<Scalar> out(next);
        for (const auto& [mono, c] : p.terms()) out[key_index.at(mono)] = c;
        return out;
    };
    std::vector<std::vector<Scalar>> columns;
    columns.reserve(basis.size());
    for (const auto& b : basis) columns.push_back(coords(b));
    SpanSolution sol = solve_span(columns, coords(target));

    DecomposeResult<BosonPoly> out{std::nullopt, BosonPoly(target.modes())};
    if (sol.exact) {
        out.coeffs = std::move(sol.candidate);
        return out;
    }
    BosonPoly recomposed(target.modes());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!sol.candidate[k].is_zero()) recomposed += sol.candidate[k] * basis[k];
    out.residual = target - recomposed;
    return out;
}

std::optional<Scalar> proportionality_factor(const Mat& b, const Mat& e) {
    if (b.n() != e.n()) throw DimensionMismatch("proportionality_factor: mixed dimensions");
    // First nonzero entry of e fixes the candidate ratio; then verify exactly.
    for (std::size_t r = 0; r < e.n(); ++r)
        for (std::size_t c = 0; c < e.n(); ++c) {
            if (e.at(r, c).is_zero()) continue;
            Scalar lambda = b.at(r, c) / e.at(r, c);
            Mat diff = b - lambda * e;
            if (diff.is_zero()) return lambda;
            return std::nullopt;
        }
    return std::nullopt;  // e == 0
}

std::optional<Scalar> proportionality_factor(const BosonPoly& b, const BosonPoly& e) {
    if (b.modes() != e.modes()) throw ModeCountMismatch("proportionality_factor: mixed mode counts");
    if (e.is_zero()) return std::nullopt;
    const auto& [mono, coeff] = *e.terms().begin();
    Scalar lambda = b.coeff(mono) / coeff;
    BosonPoly diff = b - lambda * e;
    if (diff.is_zero()) return lambda;
    return std::nullopt;
}

std::vector<JacobiViolation> jacobi_check(const StructureTensor& tensor) {
    std::vector<JacobiViolation> violations;
    std::size_t n = tensor.k;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<Scalar> residual(n);
                bool nonzero = false;
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar sum;
                    for (std::size_t m = 0; m < n; ++m) {
                        sum += tensor.at(i, j, m) * tensor.at(m, k, l);
                        sum += tensor.at(j, k, m) * tensor.at(m, i, l);
                        sum += tensor.at(k, i, m) * tensor.at(m, j, l);
                    }
                    if (!sum.is_zero()) nonzero = true;
                    residual[l] = std::move(sum);
                }
                if (nonzero) violations.push_back({i, j, k, std::move(residual)});
            }
    return violations;
}

std::vector<std::vector<Scalar>> killing_matrix(const StructureTensor& tensor) {
    std::size_t n = tensor.k;
    std::vector<std::vector<Scalar>> kappa(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar sum;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    sum += tensor.at(i, k, l) * tensor.at(j, l, k);
            kappa[i][j] = std::move(sum);
        }
    return kappa;
}

MatrixPresentation ladder_combine(const MatrixPresentation& p,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  const Scalar& scale,
                                  std::optional<std::vector<std::string>> new_cartan) {
    MatrixPresentation out;
    out.name = p.name + "-ladders";
    std::set<std::size_t> replaced;
    std::map<std::size_t, std::vector<std::pair<std::string, Mat>>> insert_at;
    Scalar i_unit = Scalar::i();
    for (const auto& [la, lb] : pairs) {
        std::size_t ia = p.index_of(la);
        std::size_t ib = p.index_of(lb);
        Mat plus = scale * (p.elements[ia] + i_unit * p.elements[ib]);
        Mat minus = scale * (p.elements[ia] - i_unit * p.elements[ib]);
        insert_at[ia].push_back({la + "+i" + lb, plus});
        insert_at[ia].push_back({la + "-i" + lb, minus});
        replaced.insert(ia);
        replaced.insert(ib);
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (auto it = insert_at.find(k); it != insert_at.end()) {
            for (auto& [label, m] : it->second) {
                out.labels.push_back(label);
                out.elements.push_back(m);
            }
        }
        if (replaced.count(k)) continue;
        out.labels.push_back(p.labels[k]);
        out.elements.push_back(p.elements[k]);
    }
    if (new_cartan) {
        out.cartan = std::move(*new_cartan);
    } else {
        for (const auto& c : p.cartan)
            if (!replaced.count(p.index_of(c))) out.cartan.push_back(c);
        if (out.cartan.empty())
            throw Error("ladder_combine: all Cartan labels were combined away; pass a replacement");
    }
    validate_presentation(out);
    return out;
}

MatrixPresentation normalize_presentation(const MatrixPresentation& p) {
    StructureTensor tensor = structure_constants(p);
    auto kappa = killing_matrix(tensor);
    std::size_t n = p.size();
    auto cartan_idx = p.cartan_indices();

    // K on coordinate vectors over the generator basis.
    auto kform = [&kappa, n](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
        Scalar out;
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                out += u[i] * v[j] * kappa[i][j];
            }
        }
        return out;
    };

    // Gram-Schmidt over the Cartan set in presentation order.
    std::vector<std::vector<Scalar>> ortho;
    for (std::size_t c = 0; c < cartan_idx.size(); ++c) {
        std::vector<Scalar> v(n);
        v[cartan_idx[c]] = Scalar::integer(1);
        for (const auto& u : ortho) {
            Scalar proj = kform(v, u);
            if (proj.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
        }
        Scalar norm2 = kform(v, v);
        if (norm2.is_zero())
            throw DegenerateCartan("Cartan Gram matrix is singular at '" + p.cartan[c] + "'");
        auto root = scalar_sqrt(norm2);
        if (!root || root->is_zero())
            throw NotRepresentable("K-norm " + format_scalar(norm2) + " of '" + p.cartan[c] +
                                   "' has no square root in Q(i, sqrt2, sqrt3)");
        Scalar inv = root->inverse();
        for (auto& x : v) x = inv * x;
        ortho.push_back(std::move(v));
    }

    MatrixPresentation out = p;
    out.name = p.name + "-normalized";
    for (std::size_t c = 0; c < cartan_idx.size(); ++c) {
        Mat combined(p.elements.front().n());
        for (std::size_t i = 0; i < n; ++i)
            if (!ortho[c][i].is_zero()) combined += ortho[c][i] * p.elements[i];
        out.elements[cartan_idx[c]] = combined;
    }

    // Ladder roots against the new Cartan, then negative-root partner pairing.
    auto ladder_idx = p.ladder_indices();
    std::vector<Mat> new_cartan = out.cartan_elements();
    std::map<std::size_t, RootVector> roots;
    for (auto li : ladder_idx) {
        auto r = ad_root(new_cartan, p.elements[li]);
        if (!r.root)
            throw NoPartner(p.labels[li], "not an adjoint eigenvector of the normalized Cartan");
        roots[li] = *r.root;
    }
    auto negated = [](const RootVector& r) {
        RootVector out;
        for (const auto& x : r) out.push_back(-x);
        return out;
    };
    for (auto li : ladder_idx) {
        RootVector neg = negated(roots[li]);
        std::vector<std::size_t> partners;
        for (auto lj : ladder_idx)
            if (roots[lj] == neg) partners.push_back(lj);
        if (partners.size() != 1)
            throw NoPartner(p.labels[li], partners.empty()
                                              ? "no generator carries the negated root"
                                              : "several generators carry the negated root");
        Scalar pairing = kappa[li][partners.front()];
        auto root = scalar_sqrt(pairing);
        if (!root || root->is_zero())
            throw NotRepresentable("K(E, E-partner) = " + format_scalar(pairing) + " for '" +
                                   p.labels[li] + "' has no usable square root in the field");
        out.elements[li] = root->inverse() * p.elements[li];
    }
    return out;
}

}  // namespace cwlab
