#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qdet/matrix.hpp"

// Matrix documents: {"rows": m, "cols": n, "data": [[entry, ...], ...]} where
// an entry is a quaternion literal string, an integer, or a 4-tuple
// [w, x, y, z] of integers or rational strings.

namespace qdet {

// Throws ParseError with the document line/column of the offending token.
ExactMatrix parse_matrix_document(std::string_view text);

ExactMatrix load_matrix_document(const std::string& path);

template <class T>
nlohmann::ordered_json matrix_to_json(const QMatrix<T>& a) {
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (int i = 1; i <= a.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 1; j <= a.cols(); ++j) row.push_back(to_literal(a(i, j)));
        data.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

}  // namespace qdet
