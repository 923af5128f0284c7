#include "qdet/cli.hpp"

#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdet/check.hpp"
#include "qdet/document.hpp"
#include "qdet/inverse.hpp"
#include "qdet/oracle.hpp"
#include "qdet/random.hpp"
#include "qdet/solve.hpp"

namespace qdet::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
    bool use_float = false;
    bool paranoid = false;
    int max_enum = kDefaultMaxEnum;
    int index = 1;
    std::string method = "direct";
    std::string file;
    std::string side = "right";
    std::string rhs;
    bool hermitian = false;
    std::uint64_t seed = 0;
    int n = 3;
    std::string kind = "general";

    DetOptions options() const { return {max_enum, paranoid}; }
};

// Raised for well-formed commands the library cannot honour as asked.
class UsageError : public Error {
public:
    using Error::Error;
};

DetMethod parse_method(const std::string& m) {
    if (m == "direct") return DetMethod::direct;
    if (m == "cofactor") return DetMethod::cofactor;
    throw UsageError("unknown method '" + m + "' (expected direct or cofactor)");
}

template <class T>
json literals(const std::vector<Quaternion<T>>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_literal(q));
    return out;
}

std::vector<ExactQuaternion> load_vector(const std::string& path) {
    const ExactMatrix m = load_matrix_document(path);
    if (m.cols() == 1) return m.col(1);
    if (m.rows() == 1) return m.row(1);
    throw DimensionError("right-hand side must be a single row or column, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

template <class T>
std::vector<Quaternion<T>> convert_vector(const std::vector<ExactQuaternion>& v) {
    std::vector<Quaternion<T>> out;
    for (const auto& q : v) out.push_back(convert<T>(q));
    return out;
}

template <class T>
json step_json(const DiagStep<T>& s) {
    json j = {{"kind", s.kind == DiagStepKind::eliminate ? "eliminate" : "pivot_repair"},
              {"i", s.i},
              {"j", s.j},
              {"b", to_literal(s.b)}};
    if (s.kind == DiagStepKind::pivot_repair) {
        j["multiplier"] = s.multiplier;
        j["pivot"] = to_string(s.repaired_pivot);
    }
    return j;
}

template <class T>
json matrix_command(const std::string& name, const Settings& s, const ExactMatrix& exact) {
    const QMatrix<T> a = convert<T>(exact);
    const DetOptions opts = s.options();

    if (name == "rdet") return {{"value", to_literal(row_determinant(a, s.index, parse_method(s.method), opts).value)}};
    if (name == "cdet")
        return {{"value", to_literal(column_determinant(a, s.index, parse_method(s.method), opts).value)}};
    if (name == "det") return {{"value", to_string(hermitian_det(a, opts))}};
    if (name == "moore") return {{"value", to_literal(moore_det(a, opts))}};
    if (name == "ddet") {
        const T d = ddet(a, opts);
        return {{"value", to_string(d)}, {"singular", ScalarTraits<T>::near_zero(d)}};
    }
    if (name == "cofactors") {
        a.require_square("cofactors");
        const int n = a.rows();
        const auto right = QMatrix<T>::generate(n, n, [&](int i, int j) { return right_cofactor(a, i, j, DetMethod::direct, opts); });
        const auto left = QMatrix<T>::generate(n, n, [&](int i, int j) { return left_cofactor(a, i, j, DetMethod::direct, opts); });
        const auto dbl = double_cofactors(a, opts);
        return {{"right", matrix_to_json(right)},
                {"left", matrix_to_json(left)},
                {"double_left", matrix_to_json(dbl.left)},
                {"double_right", matrix_to_json(dbl.right)}};
    }
    if (name == "inv") {
        const auto r = general_inverse_report(a, opts);
        return {{"inverse", matrix_to_json(r.inverse)}, {"ddet", to_string(r.ddet)}};
    }
    if (name == "diag") {
        const auto r = unimodular_diagonalize(a);
        json mu = json::array(), steps = json::array();
        for (const auto& m : r.mu) mu.push_back(to_string(m));
        for (const auto& st : r.steps) steps.push_back(step_json(st));
        return {{"mu", mu}, {"U", matrix_to_json(r.U)}, {"steps", steps}};
    }
    if (name == "solve") {
        const auto y = convert_vector<T>(load_vector(s.rhs));
        if (s.side != "right" && s.side != "left") throw UsageError("--side must be right or left");
        const Side side = s.side == "right" ? Side::right : Side::left;
        SolveReport<T> r;
        if (s.hermitian)
            r = side == Side::right ? solve_right_hermitian(a, y, opts) : solve_left_hermitian(a, y, opts);
        else
            r = solve(a, y, side, opts);
        return {{"side", to_string(r.side)},
                {"solution", literals(r.solution)},
                {"ddet", to_string(r.ddet)},
                {"denominator", to_string(r.denominator)},
                {"numerators", literals(r.numerators)},
                {"hermitian_fast_path", r.hermitian_fast_path}};
    }
    throw UsageError("unknown command " + name);
}

json check_command(const Settings& s, const ExactMatrix& a, bool& all_passed) {
    json results = json::array();
    all_passed = true;
    for (const auto& r : run_all_checks(a, s.seed, s.options())) {
        all_passed = all_passed && r.status != CheckStatus::fail;
        json j = {{"name", r.name}, {"status", to_string(r.status)}};
        if (!r.detail.empty()) j["detail"] = r.detail;
        results.push_back(std::move(j));
    }
    return {{"passed", all_passed}, {"checks", std::move(results)}};
}

json oracle_command(const Settings& s, const ExactMatrix& a, bool& agree) {
    const Rational dd = ddet(a, s.options());
    const GaussianRational z = complex_det(complex_embed(a));
    agree = z == GaussianRational(dd);
    json out = {{"ddet", to_string(dd)}, {"embedded_det", to_string(z)}, {"agree", agree}};
    if (sgn(dd) != 0) {
        const bool inv_agree = general_inverse(a, s.options()) == gauss_inverse(a);
        out["inverse_agree"] = inv_agree;
        agree = agree && inv_agree;
    }
    return out;
}

json random_command(const Settings& s) {
    if (s.n < 1) throw UsageError("--n must be positive");
    RandomSource rnd(s.seed);
    if (s.kind == "general") return matrix_to_json(rnd.matrix(s.n, s.n));
    if (s.kind == "hermitian") return matrix_to_json(rnd.hermitian(s.n));
    if (s.kind == "singular") {
        if (s.n < 2) throw UsageError("a singular matrix needs --n >= 2");
        return matrix_to_json(rnd.right_dependent(s.n, rnd.integer(1, s.n)));
    }
    if (s.kind == "vector") return matrix_to_json(ExactMatrix::column_vector(rnd.vector(s.n)));
    throw UsageError("unknown --kind '" + s.kind + "'");
}

json error_json(const char* kind, const std::exception& e) { return {{"error", kind}, {"message", e.what()}}; }

Outcome failure(int code, json doc) {
    const std::string message = doc.value("message", std::string());
    return {code, doc.dump(2) + "\n", "qdet: " + message + "\n"};
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    Settings s;
    CLI::App app{"Quaternion matrix determinants, inverses and Cramer solvers", "qdet"};
    app.require_subcommand(1);
    app.add_flag("--float", s.use_float, "Use the double backend (17 significant digits)");
    app.add_flag("--paranoid", s.paranoid, "Verify all 2n anchored determinants of Hermitian matrices");
    app.add_option("--max-enum", s.max_enum, "Largest n enumerated directly")->check(CLI::PositiveNumber);

    auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", s.file, "Matrix document")->required(); };
    auto method_opt = [&](CLI::App* sub) {
        sub->add_option("--method", s.method, "direct or cofactor")->capture_default_str();
    };

    CLI::App* rdet_cmd = app.add_subcommand("rdet", "Row determinant rdet_i");
    rdet_cmd->add_option("--row", s.index, "Anchor row (1-based)")->required();
    method_opt(rdet_cmd);
    file_arg(rdet_cmd);
    CLI::App* cdet_cmd = app.add_subcommand("cdet", "Column determinant cdet_j");
    cdet_cmd->add_option("--col", s.index, "Anchor column (1-based)")->required();
    method_opt(cdet_cmd);
    file_arg(cdet_cmd);
    file_arg(app.add_subcommand("det", "Determinant of a Hermitian matrix"));
    file_arg(app.add_subcommand("moore", "Moore determinant of a Hermitian matrix"));
    file_arg(app.add_subcommand("ddet", "Double determinant det(A*A)"));
    file_arg(app.add_subcommand("cofactors", "Right, left and double cofactor tables"));
    file_arg(app.add_subcommand("inv", "Inverse through double cofactors"));
    file_arg(app.add_subcommand("diag", "Unimodular congruence diagonalization of a Hermitian matrix"));
    CLI::App* solve_cmd = app.add_subcommand("solve", "Cramer solution of A x = y or x A = y");
    solve_cmd->add_option("--side", s.side, "right (A x = y) or left (x A = y)")->check(CLI::IsMember({"right", "left"}));
    solve_cmd->add_option("--matrix", s.file, "Matrix document")->required();
    solve_cmd->add_option("--rhs", s.rhs, "Right-hand side document (one row or column)")->required();
    solve_cmd->add_flag("--hermitian", s.hermitian, "Use the Hermitian fast path");
    CLI::App* check_cmd = app.add_subcommand("check", "Run the invariant suite on a matrix");
    check_cmd->add_option("--seed", s.seed, "Seed for auxiliary random data")->capture_default_str();
    file_arg(check_cmd);
    file_arg(app.add_subcommand("oracle", "Cross-check ddet and the inverse against independent oracles"));
    CLI::App* random_cmd = app.add_subcommand("random", "Reproducible random matrix document");
    random_cmd->add_option("--seed", s.seed, "Generator seed")->required();
    random_cmd->add_option("--n", s.n, "Size")->capture_default_str();
    random_cmd->add_option("--kind", s.kind, "general, hermitian, singular or vector")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> argv_store{"qdet"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        return {code == 0 ? kOk : kUsage, out.str(), err.str()};
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "random") return {kOk, random_command(s).dump(2) + "\n", {}};
        const ExactMatrix a = load_matrix_document(s.file);
        if (name == "check" || name == "oracle") {
            if (s.use_float) throw UsageError(name + " runs on the exact backend only");
            bool ok = false;
            const json doc = name == "check" ? check_command(s, a, ok) : oracle_command(s, a, ok);
            return {ok ? kOk : kMathFailure, doc.dump(2) + "\n", {}};
        }
        const json doc = s.use_float ? matrix_command<double>(name, s, a) : matrix_command<Rational>(name, s, a);
        return {kOk, doc.dump(2) + "\n", {}};
    } catch (const SingularError& e) {
        json doc = error_json("singular", e);
        doc["certificate"] = e.certificate();
        return failure(kMathFailure, std::move(doc));
    } catch (const NotHermitianError& e) {
        return failure(kMathFailure, error_json("not_hermitian", e));
    } catch (const ConsistencyError& e) {
        return failure(kMathFailure, error_json("consistency", e));
    } catch (const NumericalError& e) {
        return failure(kMathFailure, error_json("numerical", e));
    } catch (const ZeroDivisionError& e) {
        return failure(kMathFailure, error_json("zero_division", e));
    } catch (const ParseError& e) {
        json doc = error_json("parse", e);
        doc["line"] = e.line();
        doc["column"] = e.column();
        return failure(kUsage, std::move(doc));
    } catch (const EnumerationLimitError& e) {
        return failure(kUsage, error_json("enumeration_limit", e));
    } catch (const Error& e) {
        return failure(kUsage, error_json("usage", e));
    }
}

}  // namespace qdet::cli
