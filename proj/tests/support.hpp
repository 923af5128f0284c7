#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qdet/matrix.hpp"

namespace qdet::test {

inline ExactQuaternion Q(const std::string& literal) { return parse_quaternion(literal); }

inline ExactMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<ExactQuaternion>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (const char* lit : r) out.back().push_back(Q(lit));
    }
    return ExactMatrix::from_rows(out);
}

inline std::vector<ExactQuaternion> V(std::initializer_list<const char*> lits) {
    std::vector<ExactQuaternion> out;
    for (const char* lit : lits) out.push_back(Q(lit));
    return out;
}

inline bool is_diagonal(const ExactMatrix& a) {
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (i != j && !a(i, j).is_zero()) return false;
    return true;
}

}  // namespace qdet::test
