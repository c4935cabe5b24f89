#include "cwlab/render.hpp"

#include <json.hpp>

#include "cwlab/algebra_file.hpp"
#include "cwlab/lie.hpp"

namespace cwlab {

using nlohmann::ordered_json;

DocFormat parse_format(const std::string& name) {
    if (name == "md") return DocFormat::kMd;
    if (name == "json") return DocFormat::kJson;
    if (name == "txt") return DocFormat::kTxt;
    if (name == "svg") return DocFormat::kSvg;
    throw UnsupportedFormat("unknown format '" + name + "' (expected md, json, svg or txt)");
}

namespace {

[[noreturn]] void reject_format(const char* what) {
    throw UnsupportedFormat(std::string(what) + " supports only md, json and txt");
}

template <class Element>
std::vector<TableRow> table_impl(const BasicPresentation<Element>& p) {
    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Element br = bracket(p.elements[i], p.elements[j]);
            auto dec = decompose_in_basis(br, p.elements);
            TableRow row;
            row.left = p.labels[i];
            row.right = p.labels[j];
            if (dec.coeffs) {
                for (std::size_t k = 0; k < p.size(); ++k)
                    if (!(*dec.coeffs)[k].is_zero())
                        row.terms.push_back({p.labels[k], format_scalar((*dec.coeffs)[k])});
                row.display = format_combination(p.labels, *dec.coeffs);
            } else {
                row.display = "NotInSpan(" + element_to_string(dec.residual) + ")";
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

std::string root_cell(const RootsRow& row) {
    if (row.root) return format_root(*row.root);
    return "NotEigen (fails against " + row.failing_cartan + ")";
}

}  // namespace

std::vector<TableRow> commutator_table(const Presentation& p) {
    return std::visit([](const auto& q) { return table_impl(q); }, p);
}

std::string render_table(const std::string& source, const std::vector<TableRow>& rows,
                         DocFormat format) {
    switch (format) {
        case DocFormat::kMd: {
            std::string out = "# Commutator table: " + source + "\n\n| bracket | decomposition |\n|---|---|\n";
            for (const auto& r : rows)
                out += "| [" + r.left + "," + r.right + "] | " + r.display + " |\n";
            return out;
        }
        case DocFormat::kTxt: {
            std::string out;
            for (const auto& r : rows) out += "[" + r.left + "," + r.right + "] = " + r.display + "\n";
            return out;
        }
        case DocFormat::kJson: {
            ordered_json doc;
            doc["source"] = source;
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row;
                row["left"] = r.left;
                row["right"] = r.right;
                ordered_json terms = ordered_json::array();
                for (const auto& [label, coeff] : r.terms) {
                    ordered_json t;
                    t["label"] = label;
                    t["coeff"] = coeff;
                    terms.push_back(std::move(t));
                }
                row["terms"] = std::move(terms);
                row["display"] = r.display;
                arr.push_back(std::move(row));
            }
            doc["rows"] = std::move(arr);
            return doc.dump(2) + "\n";
        }
        default: reject_format("table");
    }
}

std::vector<RootsRow> roots_table(const Presentation& p) {
    return std::visit(
        [](const auto& q) {
            std::vector<RootsRow> rows;
            auto cartan = q.cartan_elements();
            for (auto li : q.ladder_indices()) {
                RootsRow row;
                row.label = q.labels[li];
                if (element_is_zero(q.elements[li])) {
                    row.failing_cartan = "(zero element)";
                } else {
                    auto r = ad_root(cartan, q.elements[li]);
                    if (r.root)
                        row.root = std::move(*r.root);
                    else
                        row.failing_cartan = q.cartan[r.failing_cartan];
                }
                rows.push_back(std::move(row));
            }
            return rows;
        },
        p);
}

std::string render_roots(const std::string& source, const std::vector<std::string>& cartan,
                         const std::vector<RootsRow>& rows, DocFormat format) {
    switch (format) {
        case DocFormat::kMd: {
            std::string out = "# Root vectors: " + source + "\n\nCartan order: (";
            for (std::size_t k = 0; k < cartan.size(); ++k)
                out += (k ? ", " : "") + cartan[k];
            out += ")\n\n| generator | root |\n|---|---|\n";
            for (const auto& r : rows) out += "| " + r.label + " | " + root_cell(r) + " |\n";
            return out;
        }
        case DocFormat::kTxt: {
            std::string out;
            for (const auto& r : rows) out += r.label + ": " + root_cell(r) + "\n";
            return out;
        }
        case DocFormat::kJson: {
            ordered_json doc;
            doc["source"] = source;
            doc["cartan"] = cartan;
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row;
                row["label"] = r.label;
                if (r.root) {
                    ordered_json comps = ordered_json::array();
                    for (const auto& c : *r.root) comps.push_back(format_scalar(c));
                    row["root"] = std::move(comps);
                } else {
                    row["not_eigen"] = true;
                    row["failing_cartan"] = r.failing_cartan;
                }
                arr.push_back(std::move(row));
            }
            doc["roots"] = std::move(arr);
            return doc.dump(2) + "\n";
        }
        default: reject_format("roots");
    }
}

namespace {

ordered_json scalars_json(const std::vector<Scalar>& xs) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : xs) arr.push_back(format_scalar(x));
    return arr;
}

ordered_json report_json(const CartanWeylReport& r) {
    ordered_json doc;
    ordered_json eq1 = ordered_json::array();
    for (const auto& row : r.eq1) {
        ordered_json j;
        j["pair"] = {row.left, row.right};
        j["commutes"] = row.zero;
        if (!row.zero) j["bracket"] = row.bracket;
        eq1.push_back(std::move(j));
    }
    doc["eq1"] = std::move(eq1);

    ordered_json eq2 = ordered_json::array();
    for (const auto& row : r.eq2) {
        ordered_json j;
        j["label"] = row.label;
        if (row.root)
            j["root"] = scalars_json(*row.root);
        else {
            j["not_eigen"] = true;
            j["failing_cartan"] = row.failing_cartan;
        }
        eq2.push_back(std::move(j));
    }
    doc["eq2"] = std::move(eq2);

    ordered_json eq3;
    ordered_json eq3rows = ordered_json::array();
    for (const auto& row : r.eq3) {
        ordered_json j;
        j["plus"] = row.plus_label;
        j["minus"] = row.minus_label;
        j["root"] = scalars_json(row.root);
        j["bracket_in_cartan_span"] = row.in_cartan_span;
        if (row.cartan_coeffs) j["cartan_coefficients"] = scalars_json(*row.cartan_coeffs);
        j["expected_coefficients"] = scalars_json(row.expected_coeffs);
        j["strict_pass"] = row.strict_pass;
        j["residual"] = row.residual;
        eq3rows.push_back(std::move(j));
    }
    eq3["rows"] = std::move(eq3rows);
    eq3["unpaired"] = r.eq3_unpaired;
    doc["eq3"] = std::move(eq3);

    ordered_json eq4;
    ordered_json ntable = ordered_json::array();
    for (const auto& row : r.eq4_n) {
        ordered_json j;
        j["alpha"] = row.alpha_label;
        j["beta"] = row.beta_label;
        j["sum"] = row.sum_label;
        j["n"] = format_scalar(row.n);
        ntable.push_back(std::move(j));
    }
    eq4["n_table"] = std::move(ntable);
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.eq4_violations) {
        ordered_json j;
        j["alpha"] = v.alpha_label;
        j["beta"] = v.beta_label;
        j["kind"] = v.kind;
        j["bracket"] = v.bracket;
        j["detail"] = v.detail;
        violations.push_back(std::move(j));
    }
    eq4["violations"] = std::move(violations);
    doc["eq4"] = std::move(eq4);

    ordered_json verdicts;
    verdicts["eq1"] = r.verdicts.eq1;
    verdicts["eq2"] = r.verdicts.eq2;
    verdicts["eq3_strict"] = r.verdicts.eq3_strict;
    verdicts["eq3_relaxed"] = r.verdicts.eq3_relaxed;
    verdicts["eq4"] = r.verdicts.eq4;
    doc["verdicts"] = std::move(verdicts);
    return doc;
}

const char* pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

std::string report_text(const CartanWeylReport& r, bool markdown) {
    std::string out;
    auto heading = [&out, markdown](const std::string& text) {
        out += markdown ? "## " + text + "\n\n" : text + "\n";
    };
    if (markdown)
        out += "# Cartan-Weyl verification: " + r.source + " (" + r.backend + " backend)\n\n";
    else
        out += "Cartan-Weyl verification: " + r.source + " (" + r.backend + " backend)\n\n";

    heading(std::string("Eq. (1) commuting Cartan pairs: ") + pass_fail(r.verdicts.eq1));
    for (const auto& row : r.eq1) {
        out += "  [" + row.left + "," + row.right + "] = " + (row.zero ? "0" : row.bracket) +
               (row.zero ? "" : "   <- nonzero") + "\n";
    }
    out += "\n";

    heading(std::string("Eq. (2) root vectors: ") + pass_fail(r.verdicts.eq2));
    for (const auto& row : r.eq2) {
        out += "  " + row.label + ": ";
        out += row.root ? format_root(*row.root)
                        : "NotEigen (fails against " + row.failing_cartan + ")";
        out += "\n";
    }
    out += "\n";

    heading(std::string("Eq. (3) [E_a, E_-a] = a.H: strict ") + pass_fail(r.verdicts.eq3_strict) +
            ", relaxed (bracket in Cartan span) " + pass_fail(r.verdicts.eq3_relaxed));
    if (r.eq3.empty()) out += "  (no +-root pairs; vacuous)\n";
    for (const auto& row : r.eq3) {
        out += "  [" + row.plus_label + "," + row.minus_label + "], root " + format_root(row.root) + ": ";
        out += row.in_cartan_span && row.cartan_coeffs
                   ? "bracket = " + format_combination(r.cartan_labels, *row.cartan_coeffs)
                   : "bracket outside the Cartan span";
        out += "; expected " + format_combination(r.cartan_labels, row.expected_coeffs);
        out += row.strict_pass ? "; strict ok" : "; residual " + row.residual;
        out += "\n";
    }
    for (const auto& l : r.eq3_unpaired) out += "  unpaired rooted ladder: " + l + "\n";
    out += "\n";

    heading(std::string("Eq. (4) ladder products: ") + pass_fail(r.verdicts.eq4));
    for (const auto& row : r.eq4_n)
        out += "  N[" + row.alpha_label + "," + row.beta_label + "] = " + format_scalar(row.n) +
               "  (E_{a+b} = " + row.sum_label + ")\n";
    for (const auto& v : r.eq4_violations)
        out += "  violation (" + v.kind + ") [" + v.alpha_label + "," + v.beta_label +
               "] = " + v.bracket + "; " + v.detail + "\n";
    out += "\n";

    heading("Verdicts");
    out += std::string("  eq1 ") + pass_fail(r.verdicts.eq1) + ", eq2 " + pass_fail(r.verdicts.eq2) +
           ", eq3 strict " + pass_fail(r.verdicts.eq3_strict) + ", eq3 relaxed " +
           pass_fail(r.verdicts.eq3_relaxed) + ", eq4 " + pass_fail(r.verdicts.eq4) + "\n";
    return out;
}

}  // namespace

std::string render_report(const CartanWeylReport& report, DocFormat format) {
    switch (format) {
        case DocFormat::kJson: return report_json(report).dump(2) + "\n";
        case DocFormat::kMd: return report_text(report, true);
        case DocFormat::kTxt: return report_text(report, false);
        default: reject_format("verify");
    }
}

std::string render_errata(const ErrataReport& report, DocFormat format) {
    switch (format) {
        case DocFormat::kMd: {
            std::string out = "# Errata: " + report.source + "\n\n";
            if (report.entries.empty()) {
                out += "No mismatches between the published tables and exact recomputation.\n";
            } else {
                out += "| location | printed | recomputed |\n|---|---|---|\n";
                for (const auto& e : report.entries)
                    out += "| " + e.location + " | " + e.printed + " | " + e.recomputed + " |\n";
            }
            if (!report.notes.empty()) {
                out += "\n";
                for (const auto& n : report.notes) out += "- " + n + "\n";
            }
            return out;
        }
        case DocFormat::kTxt: {
            std::string out;
            for (const auto& e : report.entries)
                out += e.location + ": printed " + e.printed + "; recomputed " + e.recomputed + "\n";
            if (report.entries.empty()) out += "no mismatches\n";
            for (const auto& n : report.notes) out += "note: " + n + "\n";
            return out;
        }
        case DocFormat::kJson: {
            ordered_json doc;
            doc["source"] = report.source;
            ordered_json arr = ordered_json::array();
            for (const auto& e : report.entries) {
                ordered_json j;
                j["location"] = e.location;
                j["printed"] = e.printed;
                j["recomputed"] = e.recomputed;
                arr.push_back(std::move(j));
            }
            doc["entries"] = std::move(arr);
            doc["notes"] = report.notes;
            return doc.dump(2) + "\n";
        }
        default: reject_format("errata");
    }
}

std::string render_presentation(const Presentation& p, DocFormat format) {
    switch (format) {
        case DocFormat::kJson: return algebra_to_json(p);
        case DocFormat::kMd: {
            std::string out = "# Presentation: " + presentation_name(p) + " (" +
                              presentation_backend(p) + " backend)\n\n";
            out += "Cartan: ";
            const auto& cartan = std::visit([](const auto& q) { return q.cartan; }, p);
            for (std::size_t k = 0; k < cartan.size(); ++k) out += (k ? ", " : "") + cartan[k];
            out += "\n\n";
            std::visit(
                [&out](const auto& q) {
                    for (std::size_t g = 0; g < q.size(); ++g)
                        out += "- " + q.labels[g] + " = " + element_to_string(q.elements[g]) + "\n";
                },
                p);
            return out;
        }
        case DocFormat::kTxt: {
            std::string out;
            std::visit(
                [&out](const auto& q) {
                    for (std::size_t g = 0; g < q.size(); ++g)
                        out += q.labels[g] + " = " + element_to_string(q.elements[g]) + "\n";
                },
                p);
            return out;
        }
        default: reject_format("normalize");
    }
}

}  // namespace cwlab
