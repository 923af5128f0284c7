#include "qdet/check.hpp"

#include <utility>

#include "qdet/inverse.hpp"
#include "qdet/oracle.hpp"
#include "qdet/solve.hpp"

namespace qdet {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

namespace {

using Vec = std::vector<ExactQuaternion>;

// Keeps the first failure.
class Verdict {
public:
    explicit Verdict(const char* name) : result_{name, CheckStatus::pass, {}} {}

    bool expect(bool ok, const std::string& what) {
        if (!ok && result_.status == CheckStatus::pass) {
            result_.status = CheckStatus::fail;
            result_.detail = what;
        }
        return ok;
    }

    bool failed() const { return result_.status == CheckStatus::fail; }

    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

CheckResult skipped(const char* name, const char* why) { return {name, CheckStatus::skip, why}; }

template <class F>
CheckResult guarded(const char* name, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return {name, CheckStatus::fail, e.what()};
    }
}

std::string at(const char* what, int k) { return std::string(what) + " at index " + std::to_string(k); }

std::string at(const char* what, int i, int j) {
    return std::string(what) + " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

Vec zeros(int n) { return Vec(static_cast<std::size_t>(n)); }

// Returns true when `f` throws SingularError.
template <class F>
bool rejects_as_singular(F&& f) {
    try {
        f();
    } catch (const SingularError&) {
        return true;
    }
    return false;
}

}  // namespace

namespace checks {

CheckResult hermitian_consensus(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "hermitian-consensus";
    if (!is_hermitian(a)) return skipped(kName, "matrix is not Hermitian");
    return guarded(kName, [&] {
        Verdict v(kName);
        const ExactQuaternion d = rdet(a, 1, opts);
        v.expect(d.is_real(), "rdet_1 has a nonzero imaginary part");
        for (int k = 1; k <= a.rows() && !v.failed(); ++k) {
            v.expect(rdet(a, k, opts) == d, at("rdet differs from rdet_1", k));
            v.expect(cdet(a, k, opts) == d, at("cdet differs from rdet_1", k));
        }
        return v.done();
    });
}

CheckResult moore_equivalence(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "moore-equivalence";
    if (!is_hermitian(a)) return skipped(kName, "matrix is not Hermitian");
    return guarded(kName, [&] {
        Verdict v(kName);
        v.expect(moore_det(a, opts) == rdet(a, 1, opts), "moore_det differs from rdet_1");
        return v.done();
    });
}

CheckResult adjoint_duality(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "adjoint-duality";
    return guarded(kName, [&] {
        Verdict v(kName);
        const ExactMatrix adj = conj_transpose(a);
        for (int k = 1; k <= a.rows(); ++k)
            v.expect(rdet(adj, k, opts) == conj(cdet(a, k, opts)), at("rdet_i(A*) != conj(cdet_i A)", k));
        return v.done();
    });
}

CheckResult cofactor_expansion(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "cofactor-expansion";
    return guarded(kName, [&] {
        Verdict v(kName);
        for (int k = 1; k <= a.rows(); ++k) {
            v.expect(rdet_cofactor(a, k, opts) == rdet(a, k, opts), at("row expansion differs from rdet", k));
            v.expect(cdet_cofactor(a, k, opts) == cdet(a, k, opts), at("column expansion differs from cdet", k));
        }
        return v.done();
    });
}

CheckResult zero_row_column(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "zero-row-column";
    return guarded(kName, [&] {
        Verdict v(kName);
        const int n = a.rows();
        for (int t = 1; t <= n; ++t) {
            const ExactMatrix zr = replace_row(a, t, zeros(n));
            const ExactMatrix zc = replace_column(a, t, zeros(n));
            for (int k = 1; k <= n; ++k) {
                v.expect(rdet(zr, k, opts).is_zero() && cdet(zr, k, opts).is_zero(), at("zero row, anchor", t, k));
                v.expect(rdet(zc, k, opts).is_zero() && cdet(zc, k, opts).is_zero(), at("zero column, anchor", t, k));
            }
        }
        return v.done();
    });
}

CheckResult scaling(const ExactMatrix& a, const ExactQuaternion& b, const DetOptions& opts) {
    static constexpr const char* kName = "row-column-scaling";
    return guarded(kName, [&] {
        Verdict v(kName);
        for (int k = 1; k <= a.rows(); ++k) {
            v.expect(rdet(replace_row(a, k, left_multiply(b, a.row(k))), k, opts) == b * rdet(a, k, opts),
                     at("left scaling of the anchor row", k));
            v.expect(cdet(replace_column(a, k, right_multiply(a.col(k), b)), k, opts) == cdet(a, k, opts) * b,
                     at("right scaling of the anchor column", k));
        }
        return v.done();
    });
}

CheckResult additivity(const ExactMatrix& a, RandomSource& rnd, const DetOptions& opts) {
    static constexpr const char* kName = "additivity";
    return guarded(kName, [&] {
        Verdict v(kName);
        const int n = a.rows();
        for (int t = 1; t <= n; ++t) {
            const Vec u = rnd.vector(n), w = rnd.vector(n);
            const ExactMatrix rs = replace_row(a, t, add(u, w)), ru = replace_row(a, t, u), rw = replace_row(a, t, w);
            const ExactMatrix cs = replace_column(a, t, add(u, w)), cu = replace_column(a, t, u),
                              cw = replace_column(a, t, w);
            for (int k = 1; k <= n; ++k) {
                v.expect(rdet(rs, k, opts) == rdet(ru, k, opts) + rdet(rw, k, opts), at("rdet, split row", t, k));
                v.expect(cdet(rs, k, opts) == cdet(ru, k, opts) + cdet(rw, k, opts), at("cdet, split row", t, k));
                v.expect(rdet(cs, k, opts) == rdet(cu, k, opts) + rdet(cw, k, opts), at("rdet, split column", t, k));
                v.expect(cdet(cs, k, opts) == cdet(cu, k, opts) + cdet(cw, k, opts), at("cdet, split column", t, k));
            }
        }
        return v.done();
    });
}

CheckResult hermitian_vanishing(const ExactMatrix& a, const ExactQuaternion& b, const DetOptions& opts) {
    static constexpr const char* kName = "hermitian-vanishing";
    if (!is_hermitian(a)) return skipped(kName, "matrix is not Hermitian");
    if (a.rows() < 2) return skipped(kName, "needs n >= 2");
    return guarded(kName, [&] {
        Verdict v(kName);
        const int n = a.rows();
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const Vec bj = left_multiply(b, a.row(j));
                const Vec ib = right_multiply(a.col(i), b);
                v.expect(rdet(replace_row(a, j, a.row(i)), j, opts).is_zero(), at("rdet_j A_{j.}(a_{i.})", i, j));
                v.expect(cdet(replace_column(a, i, a.col(j)), i, opts).is_zero(), at("cdet_i A_{.i}(a_{.j})", i, j));
                v.expect(rdet(replace_row(a, i, bj), i, opts).is_zero(), at("rdet_i A_{i.}(b a_{j.})", i, j));
                v.expect(cdet(replace_column(a, j, ib), j, opts).is_zero(), at("cdet_j A_{.j}(a_{.i} b)", i, j));
                v.expect(rdet(replace_column(a, j, ib), j, opts).is_zero(), at("rdet_j A_{.j}(a_{.i} b)", i, j));
                v.expect(cdet(replace_row(a, i, bj), i, opts).is_zero(), at("cdet_i A_{i.}(b a_{j.})", i, j));
            }
        }
        return v.done();
    });
}

CheckResult linear_combinations(const ExactMatrix& a, RandomSource& rnd, const DetOptions& opts) {
    static constexpr const char* kName = "linear-combinations";
    if (!is_hermitian(a)) return skipped(kName, "matrix is not Hermitian");
    if (a.rows() < 2) return skipped(kName, "needs n >= 2");
    return guarded(kName, [&] {
        Verdict v(kName);
        const int n = a.rows();
        const ExactQuaternion det(hermitian_det(a, opts));
        for (int t = 1; t <= n; ++t) {
            Vec row_combo = zeros(n), col_combo = zeros(n);
            for (int k = 1; k <= n; ++k) {
                if (k == t) continue;
                row_combo = add(row_combo, left_multiply(rnd.quaternion(), a.row(k)));
                col_combo = add(col_combo, right_multiply(a.col(k), rnd.quaternion()));
            }
            v.expect(rdet(replace_row(a, t, row_combo), t, opts).is_zero(), at("row := left combination", t));
            v.expect(cdet(replace_column(a, t, col_combo), t, opts).is_zero(), at("column := right combination", t));
            v.expect(rdet(replace_row(a, t, add(a.row(t), row_combo)), t, opts) == det,
                     at("row += left combination changed det", t));
            v.expect(cdet(replace_column(a, t, add(a.col(t), col_combo)), t, opts) == det,
                     at("column += right combination changed det", t));
        }
        return v.done();
    });
}

CheckResult repeated_row(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "repeated-row";
    if (!is_hermitian(a)) return skipped(kName, "matrix is not Hermitian");
    if (a.rows() < 2) return skipped(kName, "needs n >= 2");
    return guarded(kName, [&] {
        Verdict v(kName);
        const int n = a.rows();
        const DetOptions paranoid{opts.max_enum, true};
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                // B_rc = A_{s(r) s(c)} with s(j) = i: rows i and j of B coincide.
                auto s = [&](int r) { return r == j ? i : r; };
                const ExactMatrix dup = ExactMatrix::generate(n, n, [&](int r, int c) { return a(s(r), s(c)); });
                v.expect(is_hermitian(dup), at("duplicated matrix is not Hermitian", i, j));
                v.expect(hermitian_det(dup, paranoid) == 0, at("det with rows i and j equal", i, j));
            }
        }
        return v.done();
    });
}

CheckResult ddet_identities(const ExactMatrix& a, const ExactMatrix& b, const DetOptions& opts) {
    static constexpr const char* kName = "ddet-identities";
    return guarded(kName, [&] {
        Verdict v(kName);
        const Rational left = hermitian_det(corresponding_hermitian(a, Side::left), opts);
        const Rational right = hermitian_det(corresponding_hermitian(a, Side::right), opts);
        v.expect(left == right, "det(A*A) != det(AA*)");
        v.expect(left >= 0, "ddet is negative");
        v.expect(ddet(a * b, opts) == left * ddet(b, opts), "ddet(AB) != ddet(A) ddet(B)");
        return v.done();
    });
}

CheckResult double_cofactor_expansion(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "double-cofactor-expansion";
    return guarded(kName, [&] {
        Verdict v(kName);
        const int n = a.rows();
        const ExactQuaternion dd(ddet(a, opts));
        const auto t = double_cofactors(a, opts);
        for (int k = 1; k <= n; ++k) {
            ExactQuaternion col, row;
            for (int m = 1; m <= n; ++m) {
                col += t.left(m, k) * a(m, k);
                row += a(k, m) * t.right(k, m);
            }
            v.expect(col == dd, at("column expansion of ddet", k));
            v.expect(row == dd, at("row expansion of ddet", k));
        }
        return v.done();
    });
}

CheckResult study_oracle(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "study-oracle";
    return guarded(kName, [&] {
        Verdict v(kName);
        const GaussianRational z = complex_det(complex_embed(a));
        const Rational dd = ddet(a, opts);
        v.expect(z == GaussianRational(dd), "ddet " + to_string(dd) + " != embedded det " + to_string(z));
        return v.done();
    });
}

CheckResult inverse(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "inverse";
    return guarded(kName, [&] {
        Verdict v(kName);
        const bool herm = is_hermitian(a);
        if (ddet(a, opts) == 0) {
            v.expect(rejects_as_singular([&] { general_inverse(a, opts); }), "general_inverse accepted a singular matrix");
            v.expect(rejects_as_singular([&] { gauss_inverse(a); }), "elimination inverted a singular matrix");
            if (herm)
                v.expect(rejects_as_singular([&] { hermitian_inverse(a, opts); }),
                         "hermitian_inverse accepted a singular matrix");
            return v.done();
        }
        const ExactMatrix id = ExactMatrix::identity(a.rows());
        const ExactMatrix inv = general_inverse(a, opts);
        v.expect(a * inv == id, "A A^{-1} != I");
        v.expect(inv * a == id, "A^{-1} A != I");
        v.expect(inv == gauss_inverse(a), "double-cofactor inverse differs from elimination");
        if (herm) v.expect(hermitian_inverse(a, opts) == inv, "Hermitian cofactor inverse differs");
        return v.done();
    });
}

CheckResult cramer(const ExactMatrix& a, const Vec& y, const DetOptions& opts) {
    static constexpr const char* kName = "cramer";
    return guarded(kName, [&] {
        Verdict v(kName);
        if (ddet(a, opts) == 0) {
            v.expect(rejects_as_singular([&] { solve_right(a, y, opts); }), "solve_right accepted a singular system");
            v.expect(rejects_as_singular([&] { solve_left(a, y, opts); }), "solve_left accepted a singular system");
            return v.done();
        }
        const ExactMatrix inv = general_inverse(a, opts);
        const Vec xr = solve_right(a, y, opts).solution;
        const Vec xl = solve_left(a, y, opts).solution;
        v.expect((a * ExactMatrix::column_vector(xr)).col(1) == y, "A x != y");
        v.expect((ExactMatrix::row_vector(xl) * a).row(1) == y, "x A != y");
        v.expect(xr == gauss_solve_right(a, y), "right solution differs from elimination");
        v.expect(xl == gauss_solve_left(a, y), "left solution differs from elimination");
        v.expect(xr == (inv * ExactMatrix::column_vector(y)).col(1), "right solution != A^{-1} y");
        v.expect(xl == (ExactMatrix::row_vector(y) * inv).row(1), "left solution != y A^{-1}");
        if (is_hermitian(a)) {
            v.expect(solve_right_hermitian(a, y, opts).solution == xr, "Hermitian right fast path differs");
            v.expect(solve_left_hermitian(a, y, opts).solution == xl, "Hermitian left fast path differs");
        }
        return v.done();
    });
}

CheckResult diagonalization(const ExactMatrix& a, const DetOptions& opts) {
    static constexpr const char* kName = "diagonalization";
    if (!is_hermitian(a)) return skipped(kName, "matrix is not Hermitian");
    return guarded(kName, [&] {
        Verdict v(kName);
        const int n = a.rows();
        const auto r = unimodular_diagonalize(a);
        const ExactMatrix d = r.U * a * conj_transpose(r.U);
        v.expect(d == ExactMatrix::diagonal({r.mu.begin(), r.mu.end()}), "U A U* != diag(mu)");
        Rational prod = 1;
        for (const auto& m : r.mu) prod *= m;
        v.expect(prod == hermitian_det(a, opts), "product of mu != det A");
        ExactMatrix u = ExactMatrix::identity(n);
        for (const auto& s : r.steps) u = elementary_unimodular(n, s.i, s.j, s.b) * u;
        v.expect(u == r.U, "U is not the product of the logged elementary matrices");
        return v.done();
    });
}

}  // namespace checks

std::vector<CheckResult> run_all_checks(const ExactMatrix& a, std::uint64_t seed, const DetOptions& opts) {
    a.require_square("check");
    check_enumeration_size(a.rows(), opts.max_enum);
    RandomSource rnd(seed);
    const int n = a.rows();
    const ExactQuaternion b = rnd.nonzero_quaternion();
    const ExactMatrix other = rnd.matrix(n, n);
    const Vec y = rnd.vector(n);

    return {checks::hermitian_consensus(a, opts),
            checks::moore_equivalence(a, opts),
            checks::adjoint_duality(a, opts),
            checks::cofactor_expansion(a, opts),
            checks::zero_row_column(a, opts),
            checks::scaling(a, b, opts),
            checks::additivity(a, rnd, opts),
            checks::hermitian_vanishing(a, b, opts),
            checks::linear_combinations(a, rnd, opts),
            checks::repeated_row(a, opts),
            checks::ddet_identities(a, other, opts),
            checks::double_cofactor_expansion(a, opts),
            checks::study_oracle(a, opts),
            checks::inverse(a, opts),
            checks::cramer(a, y, opts),
            checks::diagonalization(a, opts)};
}

}  // namespace qdet
