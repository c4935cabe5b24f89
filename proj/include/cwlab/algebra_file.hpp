#pragma once

#include <string>

#include "cwlab/presentation.hpp"

namespace cwlab {

/// Loads an algebra-definition JSON file:
///   { "name": ..., "backend": "matrix"|"boson", "n"|"modes": int,
///     "generators": [ {"label", "entries": [[scalar string,...],...]}
///                   | {"label", "terms": [{"creation":[...],
///                        "annihilation":[...], "coeff": scalar string}]} ],
///     "cartan": [labels] }
/// Scalar strings follow the scalar grammar. Throws SchemaError, ParseError,
/// DuplicateLabel, NonSquareMatrix.
Presentation load_algebra_file(const std::string& path);

/// Same schema, from an in-memory JSON document.
Presentation parse_algebra_json(const std::string& text);

/// Serializes back to the schema above (deterministic field and row order).
std::string algebra_to_json(const Presentation& p);

}  // namespace cwlab
