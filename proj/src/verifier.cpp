#include "cwlab/verifier.hpp"

#include <map>
#include <set>

namespace cwlab {

namespace {

template <class Element>
Element scaled_sum(const std::vector<Element>& elems, const std::vector<Scalar>& coeffs,
                   const Element& zero_like) {
    Element out = zero_like;
    for (std::size_t k = 0; k < elems.size(); ++k)
        if (!coeffs[k].is_zero()) out += coeffs[k] * elems[k];
    return out;
}

Mat zero_like(const Mat& m) { return Mat(m.n()); }
BosonPoly zero_like(const BosonPoly& p) { return BosonPoly(p.modes()); }

template <class Element>
CartanWeylReport verify_impl(const BasicPresentation<Element>& p) {
    validate_presentation(p);
    CartanWeylReport report;
    report.source = p.name;
    report.backend = std::is_same_v<Element, Mat> ? "matrix" : "boson";
    report.cartan_labels = p.cartan;

    auto cartan_idx = p.cartan_indices();
    auto cartan_elems = p.cartan_elements();
    auto ladder_idx = p.ladder_indices();

    // Eq. (1): the Cartan set commutes pairwise.
    bool eq1_ok = true;
    for (std::size_t a = 0; a < cartan_idx.size(); ++a)
        for (std::size_t b = a + 1; b < cartan_idx.size(); ++b) {
            Element br = bracket(p.elements[cartan_idx[a]], p.elements[cartan_idx[b]]);
            Eq1Row row{p.labels[cartan_idx[a]], p.labels[cartan_idx[b]], element_is_zero(br), ""};
            if (!row.zero) {
                row.bracket = element_to_string(br);
                eq1_ok = false;
            }
            report.eq1.push_back(std::move(row));
        }

    // Eq. (2): every non-Cartan generator must be a simultaneous adjoint
    // eigenvector of the Cartan set.
    std::map<std::size_t, RootVector> roots;
    bool eq2_ok = true;
    for (auto li : ladder_idx) {
        Eq2Row row;
        row.label = p.labels[li];
        if (element_is_zero(p.elements[li])) {
            row.failing_cartan = "(zero element)";
            eq2_ok = false;
        } else {
            auto r = ad_root(cartan_elems, p.elements[li]);
            if (r.root) {
                roots[li] = *r.root;
                row.root = std::move(*r.root);
            } else {
                row.failing_cartan = p.cartan[r.failing_cartan];
                eq2_ok = false;
            }
        }
        report.eq2.push_back(std::move(row));
    }

    auto negated = [](const RootVector& r) {
        RootVector out;
        for (const auto& x : r) out.push_back(-x);
        return out;
    };
    auto root_is_zero = [](const RootVector& r) {
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    };

    // Eq. (3): one row per +-root pair, oriented by generator order.
    std::set<std::size_t> paired;
    bool eq3_strict_ok = true, eq3_relaxed_ok = true;
    for (auto li : ladder_idx) {
        if (!roots.count(li) || paired.count(li)) continue;
        RootVector neg = negated(roots[li]);
        std::size_t partner = p.size();
        for (auto lj : ladder_idx) {
            if (lj == li || paired.count(lj) || !roots.count(lj)) continue;
            if (roots[lj] == neg) { partner = lj; break; }
        }
        if (partner == p.size()) {
            report.eq3_unpaired.push_back(p.labels[li]);
            eq3_strict_ok = eq3_relaxed_ok = false;
            continue;
        }
        paired.insert(li);
        paired.insert(partner);

        Eq3Row row;
        row.plus_label = p.labels[li];
        row.minus_label = p.labels[partner];
        row.root = roots[li];
        Element br = bracket(p.elements[li], p.elements[partner]);
        auto dec = decompose_in_basis(br, cartan_elems);
        row.in_cartan_span = dec.coeffs.has_value();
        if (dec.coeffs) row.cartan_coeffs = *dec.coeffs;
        row.expected_coeffs = row.root;
        Element expected = scaled_sum(cartan_elems, row.expected_coeffs, zero_like(br));
        Element residual = br - expected;
        row.strict_pass = element_is_zero(residual);
        row.residual = element_to_string(residual);
        if (!row.strict_pass) eq3_strict_ok = false;
        if (!row.in_cartan_span) eq3_relaxed_ok = false;
        report.eq3.push_back(std::move(row));
    }

    // Closure sweep: any bracket outside the generator span is an eq4-style
    // violation, not an exception.
    bool basis_ok = true;
    for (std::size_t i = 0; i < p.size() && basis_ok; ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Element br = bracket(p.elements[i], p.elements[j]);
            try {
                auto dec = decompose_in_basis(br, p.elements);
                if (!dec.coeffs)
                    report.eq4_violations.push_back({p.labels[i], p.labels[j], "not-closed",
                                                     element_to_string(br),
                                                     "residual " + element_to_string(dec.residual)});
            } catch (const DependentBasis& e) {
                report.eq4_violations.push_back(
                    {p.labels[i], p.labels[j], "dependent-basis", "", e.what()});
                basis_ok = false;
                break;
            }
        }

    // Eq. (4): ladder pairs with alpha + beta != 0.
    for (auto li : ladder_idx)
        for (auto lj : ladder_idx) {
            if (li == lj) continue;
            bool both_rooted = roots.count(li) && roots.count(lj);
            if (!both_rooted) {
                // Without roots Eq. (4) cannot hold vacuously for a nonzero
                // bracket; record once per unordered pair.
                if (li < lj) {
                    Element br = bracket(p.elements[li], p.elements[lj]);
                    if (!element_is_zero(br))
                        report.eq4_violations.push_back({p.labels[li], p.labels[lj], "missing-root",
                                                         element_to_string(br),
                                                         "pair member lacks a root vector"});
                }
                continue;
            }
            RootVector sum = roots[li];
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += roots[lj][k];
            if (root_is_zero(sum)) continue;  // the Eq. (3) pair

            std::vector<std::size_t> holders;
            for (auto lk : ladder_idx)
                if (roots.count(lk) && roots[lk] == sum) holders.push_back(lk);
            Element br = bracket(p.elements[li], p.elements[lj]);
            if (holders.empty()) {
                if (!element_is_zero(br))
                    report.eq4_violations.push_back({p.labels[li], p.labels[lj],
                                                     "nonzero-without-root-sum",
                                                     element_to_string(br),
                                                     "alpha+beta = " + format_root(sum) +
                                                         " is not a root, bracket must vanish"});
                continue;
            }
            if (holders.size() > 1) {
                if (li < lj) {
                    std::string labels;
                    for (auto h : holders) labels += (labels.empty() ? "" : ", ") + p.labels[h];
                    report.eq4_violations.push_back({p.labels[li], p.labels[lj], "ambiguous-root",
                                                     element_to_string(br),
                                                     "root " + format_root(sum) +
                                                         " is shared by: " + labels});
                }
                continue;
            }
            auto factor = proportionality_factor(br, p.elements[holders.front()]);
            if (!factor) {
                report.eq4_violations.push_back({p.labels[li], p.labels[lj], "not-proportional",
                                                 element_to_string(br),
                                                 "bracket is not a multiple of " +
                                                     p.labels[holders.front()]});
                continue;
            }
            report.eq4_n.push_back({p.labels[li], p.labels[lj], p.labels[holders.front()], *factor});
        }

    report.verdicts.eq1 = eq1_ok;
    report.verdicts.eq2 = eq2_ok;
    report.verdicts.eq3_strict = eq3_strict_ok;
    report.verdicts.eq3_relaxed = eq3_relaxed_ok;
    report.verdicts.eq4 = report.eq4_violations.empty();
    return report;
}

}  // namespace

CartanWeylReport verify_cartan_weyl(const Presentation& p) {
    return std::visit([](const auto& q) { return verify_impl(q); }, p);
}

namespace {

struct LabeledTensor {
    std::vector<std::string> labels;
    StructureTensor tensor;
};

LabeledTensor tensor_of(const Presentation& p) {
    return std::visit(
        [](const auto& q) {
            return LabeledTensor{q.labels, structure_constants(q)};
        },
        p);
}

}  // namespace

CompareResult compare_presentations(const Presentation& p, const Presentation& q,
                                    const std::vector<std::pair<std::string, std::string>>& mapping) {
    LabeledTensor tp = tensor_of(p);
    LabeledTensor tq = tensor_of(q);
    if (tp.labels.size() != tq.labels.size() || mapping.size() != tp.labels.size())
        throw Error("compare_presentations: mapping must be a bijection between the label sets");

    std::map<std::string, std::size_t> p_index, q_index;
    for (std::size_t k = 0; k < tp.labels.size(); ++k) p_index[tp.labels[k]] = k;
    for (std::size_t k = 0; k < tq.labels.size(); ++k) q_index[tq.labels[k]] = k;

    std::vector<std::size_t> image(tp.labels.size());
    std::set<std::size_t> used_src, used_dst;
    for (const auto& [from, to] : mapping) {
        auto ps = p_index.find(from);
        auto qs = q_index.find(to);
        if (ps == p_index.end()) throw UnknownLabel(from);
        if (qs == q_index.end()) throw UnknownLabel(to);
        if (!used_src.insert(ps->second).second) throw DuplicateLabel(from);
        if (!used_dst.insert(qs->second).second) throw DuplicateLabel(to);
        image[ps->second] = qs->second;
    }

    std::size_t n = tp.labels.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& lhs = tp.tensor.at(i, j, k);
                const Scalar& rhs = tq.tensor.at(image[i], image[j], image[k]);
                if (lhs != rhs) {
                    CompareResult r;
                    r.equal = false;
                    r.i = tp.labels[i];
                    r.j = tp.labels[j];
                    r.k = tp.labels[k];
                    r.lhs = format_scalar(lhs);
                    r.rhs = format_scalar(rhs);
                    return r;
                }
            }
    CompareResult r;
    r.equal = true;
    return r;
}

}  // namespace cwlab
