#pragma once

#include <json.hpp>

#include "congmon/matrix.hpp"

namespace congmon {

// Matrix wire format:
//   {"rows": r, "cols": c, "field": "q"|"qi"|"fp:<p>", "entries": [[...], ...]}
// Entries are canonical scalar strings (lowest terms, no "+0i", no "1/1").
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

} // namespace congmon
