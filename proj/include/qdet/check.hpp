#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdet/det.hpp"
#include "qdet/random.hpp"

// Invariant checks on a single exact matrix. Each returns pass, fail or skip
// (the invariant does not apply, e.g. a Hermitian-only identity on a general
// matrix). Library exceptions inside a check are reported as failures.

namespace qdet {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

namespace checks {

// Hermitian A: every rdet_i and cdet_j equals the same real number.
CheckResult hermitian_consensus(const ExactMatrix& a, const DetOptions& opts = {});

// Hermitian A: moore_det(A) = rdet_1(A).
CheckResult moore_equivalence(const ExactMatrix& a, const DetOptions& opts = {});

// rdet_i(A*) = conj(cdet_i(A)) for every i.
CheckResult adjoint_duality(const ExactMatrix& a, const DetOptions& opts = {});

// rdet_cofactor = rdet and cdet_cofactor = cdet at every anchor.
CheckResult cofactor_expansion(const ExactMatrix& a, const DetOptions& opts = {});

// Zeroing any row or column sends every rdet_i and cdet_j to 0.
CheckResult zero_row_column(const ExactMatrix& a, const DetOptions& opts = {});

// rdet_i A_{i.}(b a_{i.}) = b rdet_i A and cdet_j A_{.j}(a_{.j} b) = cdet_j A b.
CheckResult scaling(const ExactMatrix& a, const ExactQuaternion& b, const DetOptions& opts = {});

// Both functionals are additive in every row and every column, at every anchor.
CheckResult additivity(const ExactMatrix& a, RandomSource& rnd, const DetOptions& opts = {});

// Hermitian A, i != j: the six replacement and scaling identities that vanish.
CheckResult hermitian_vanishing(const ExactMatrix& a, const ExactQuaternion& b, const DetOptions& opts = {});

// Hermitian A: a row (column) replaced by a left (right) combination of the
// others gives rdet (cdet) 0 at that anchor; adding such a combination keeps det.
CheckResult linear_combinations(const ExactMatrix& a, RandomSource& rnd, const DetOptions& opts = {});

// Hermitian A: duplicating a row and its matching column keeps the matrix
// Hermitian and makes det 0.
CheckResult repeated_row(const ExactMatrix& a, const DetOptions& opts = {});

// det(AA*) = det(A*A) and ddet(AB) = ddet(A) ddet(B).
CheckResult ddet_identities(const ExactMatrix& a, const ExactMatrix& b, const DetOptions& opts = {});

// Column and row expansions of the double cofactors reproduce ddet A.
CheckResult double_cofactor_expansion(const ExactMatrix& a, const DetOptions& opts = {});

// ddet(A) = det(complex_embed(A)) over Q(i).
CheckResult study_oracle(const ExactMatrix& a, const DetOptions& opts = {});

// Nonsingular A: both double-cofactor inverses agree, A A^{-1} = A^{-1} A = I,
// and the result matches Gaussian elimination (and the Hermitian cofactor
// inverse when A is Hermitian). Singular A: the singular error is raised.
CheckResult inverse(const ExactMatrix& a, const DetOptions& opts = {});

// Right and left Cramer solutions reproduce y exactly and match elimination;
// the Hermitian fast path agrees with the general path. Singular A must be rejected.
CheckResult cramer(const ExactMatrix& a, const std::vector<ExactQuaternion>& y, const DetOptions& opts = {});

// Hermitian A: U A U* = diag(mu), prod mu = det A, U rebuilt from the steps.
CheckResult diagonalization(const ExactMatrix& a, const DetOptions& opts = {});

}  // namespace checks

// Every check above on `a`, with auxiliary random data drawn from `seed`.
std::vector<CheckResult> run_all_checks(const ExactMatrix& a, std::uint64_t seed, const DetOptions& opts = {});

}  // namespace qdet
