#include "cwlab/algebra_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cwlab {

namespace {

using nlohmann::ordered_json;

const ordered_json& require(const ordered_json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(path + "." + key, "missing field");
    return obj.at(key);
}

std::string require_string(const ordered_json& obj, const std::string& key, const std::string& path) {
    const auto& v = require(obj, key, path);
    if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

long require_integer(const ordered_json& obj, const std::string& key, const std::string& path) {
    const auto& v = require(obj, key, path);
    if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
    return v.get<long>();
}

Scalar scalar_at(const ordered_json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected a scalar grammar string");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(e.offset, e.expected, path + ": " + e.what());
    }
}

MatrixPresentation load_matrix(const ordered_json& doc, const std::string& name) {
    long n = require_integer(doc, "n", "$");
    if (n <= 0) throw SchemaError("$.n", "dimension must be positive");
    MatrixPresentation p;
    p.name = name;
    const auto& gens = require(doc, "generators", "$");
    if (!gens.is_array() || gens.empty()) throw SchemaError("$.generators", "expected a non-empty array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string path = "$.generators[" + std::to_string(g) + "]";
        p.labels.push_back(require_string(gens[g], "label", path));
        const auto& entries = require(gens[g], "entries", path);
        if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n))
            throw NonSquareMatrix(path + ".entries: expected " + std::to_string(n) + " rows");
        Mat m(static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < entries.size(); ++r) {
            const auto& row = entries[r];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
                throw NonSquareMatrix(path + ".entries[" + std::to_string(r) + "]: expected " +
                                      std::to_string(n) + " columns");
            for (std::size_t c = 0; c < row.size(); ++c)
                m.at(r, c) = scalar_at(row[c], path + ".entries[" + std::to_string(r) + "][" +
                                                   std::to_string(c) + "]");
        }
        p.elements.push_back(std::move(m));
    }
    return p;
}

BosonPresentation load_boson(const ordered_json& doc, const std::string& name) {
    long modes = require_integer(doc, "modes", "$");
    if (modes <= 0) throw SchemaError("$.modes", "mode count must be positive");
    BosonPresentation p;
    p.name = name;
    const auto& gens = require(doc, "generators", "$");
    if (!gens.is_array() || gens.empty()) throw SchemaError("$.generators", "expected a non-empty array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string path = "$.generators[" + std::to_string(g) + "]";
        p.labels.push_back(require_string(gens[g], "label", path));
        const auto& terms = require(gens[g], "terms", path);
        if (!terms.is_array()) throw SchemaError(path + ".terms", "expected an array");
        BosonPoly poly(static_cast<std::size_t>(modes));
        for (std::size_t t = 0; t < terms.size(); ++t) {
            std::string tpath = path + ".terms[" + std::to_string(t) + "]";
            auto read_exponents = [&](const char* key) {
                const auto& arr = require(terms[t], key, tpath);
                if (!arr.is_array() || arr.size() != static_cast<std::size_t>(modes))
                    throw SchemaError(tpath + "." + key,
                                      "expected " + std::to_string(modes) + " exponents");
                std::vector<std::uint32_t> out;
                for (const auto& e : arr) {
                    if (!e.is_number_integer() || e.get<long>() < 0)
                        throw SchemaError(tpath + "." + key, "exponents must be non-negative integers");
                    out.push_back(static_cast<std::uint32_t>(e.get<long>()));
                }
                return out;
            };
            BosonMonomial mono;
            mono.cre = read_exponents("creation");
            mono.ann = read_exponents("annihilation");
            poly.add_term(mono, scalar_at(require(terms[t], "coeff", tpath), tpath + ".coeff"));
        }
        p.elements.push_back(std::move(poly));
    }
    return p;
}

Presentation parse_document(const ordered_json& doc) {
    std::string name = require_string(doc, "name", "$");
    std::string backend = require_string(doc, "backend", "$");
    const auto& cartan = require(doc, "cartan", "$");
    if (!cartan.is_array() || cartan.empty())
        throw SchemaError("$.cartan", "expected a non-empty array of labels");
    std::vector<std::string> cartan_labels;
    for (const auto& c : cartan) {
        if (!c.is_string()) throw SchemaError("$.cartan", "labels must be strings");
        cartan_labels.push_back(c.get<std::string>());
    }

    if (backend == "matrix") {
        MatrixPresentation p = load_matrix(doc, name);
        p.cartan = std::move(cartan_labels);
        validate_presentation(p);
        return p;
    }
    if (backend == "boson") {
        BosonPresentation p = load_boson(doc, name);
        p.cartan = std::move(cartan_labels);
        validate_presentation(p);
        return p;
    }
    throw SchemaError("$.backend", "expected \"matrix\" or \"boson\"");
}

}  // namespace

Presentation parse_algebra_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_document(doc);
}

Presentation load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_json(buf.str());
}

std::string algebra_to_json(const Presentation& p) {
    ordered_json doc;
    doc["name"] = presentation_name(p);
    doc["backend"] = presentation_backend(p);
    if (const auto* mp = std::get_if<MatrixPresentation>(&p)) {
        doc["n"] = mp->elements.front().n();
        ordered_json gens = ordered_json::array();
        for (std::size_t g = 0; g < mp->size(); ++g) {
            ordered_json entry;
            entry["label"] = mp->labels[g];
            ordered_json rows = ordered_json::array();
            const Mat& m = mp->elements[g];
            for (std::size_t r = 0; r < m.n(); ++r) {
                ordered_json row = ordered_json::array();
                for (std::size_t c = 0; c < m.n(); ++c) row.push_back(format_scalar(m.at(r, c)));
                rows.push_back(std::move(row));
            }
            entry["entries"] = std::move(rows);
            gens.push_back(std::move(entry));
        }
        doc["generators"] = std::move(gens);
        doc["cartan"] = mp->cartan;
    } else {
        const auto& bp = std::get<BosonPresentation>(p);
        doc["modes"] = bp.elements.front().modes();
        ordered_json gens = ordered_json::array();
        for (std::size_t g = 0; g < bp.size(); ++g) {
            ordered_json entry;
            entry["label"] = bp.labels[g];
            ordered_json terms = ordered_json::array();
            for (const auto& [mono, coeff] : bp.elements[g].terms()) {
                ordered_json term;
                term["creation"] = mono.cre;
                term["annihilation"] = mono.ann;
                term["coeff"] = format_scalar(coeff);
                terms.push_back(std::move(term));
            }
            entry["terms"] = std::move(terms);
            gens.push_back(std::move(entry));
        }
        doc["generators"] = std::move(gens);
        doc["cartan"] = bp.cartan;
    }
    return doc.dump(2) + "\n";
}

}  // namespace cwlab
