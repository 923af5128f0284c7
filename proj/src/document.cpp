#include "qdet/document.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace qdet {

namespace {

using json = nlohmann::json;

struct Position {
    int line = 1;
    int column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
    Position p;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Byte offsets of every value token (scalars other than keys, '[' and '{'),
// in document order. Only called on text that already parsed.
std::vector<std::size_t> value_offsets(std::string_view s) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    while (k < s.size()) {
        const char c = s[k];
        if (c == '"') {
            const std::size_t start = k++;
            while (k < s.size() && s[k] != '"') k += s[k] == '\\' ? 2 : 1;
            ++k;
            std::size_t look = k;
            while (look < s.size() && std::isspace(static_cast<unsigned char>(s[look]))) ++look;
            if (look >= s.size() || s[look] != ':') out.push_back(start);
        } else if (c == '[' || c == '{') {
            out.push_back(k++);
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c))) {
            out.push_back(k);
            while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '-' || s[k] == '+' ||
                                    s[k] == '.'))
                ++k;
        } else {
            ++k;
        }
    }
    return out;
}

// Builds the DOM and records the JSON pointer of every value in document order.
class PathRecorder {
public:
    explicit PathRecorder(json& root) : dom_(root, true) {}

    bool null() { return scalar() && dom_.null(); }
    bool boolean(bool v) { return scalar() && dom_.boolean(v); }
    bool number_integer(json::number_integer_t v) { return scalar() && dom_.number_integer(v); }
    bool number_unsigned(json::number_unsigned_t v) { return scalar() && dom_.number_unsigned(v); }
    bool number_float(json::number_float_t v, const std::string& s) { return scalar() && dom_.number_float(v, s); }
    bool string(std::string& v) { return scalar() && dom_.string(v); }
    bool binary(json::binary_t& v) { return scalar() && dom_.binary(v); }

    bool start_object(std::size_t n) {
        paths_.push_back(pointer());
        frames_.push_back({false, 0, {}});
        return dom_.start_object(n);
    }
    bool key(std::string& k) {
        frames_.back().key = k;
        return dom_.key(k);
    }
    bool end_object() {
        frames_.pop_back();
        advance();
        return dom_.end_object();
    }
    bool start_array(std::size_t n) {
        paths_.push_back(pointer());
        frames_.push_back({true, 0, {}});
        return dom_.start_array(n);
    }
    bool end_array() {
        frames_.pop_back();
        advance();
        return dom_.end_array();
    }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) {
        error_byte_ = pos;
        error_ = ex.what();
        return false;
    }

    // Byte position (1-based, as reported by the lexer) and message of a syntax error.
    std::size_t error_byte() const { return error_byte_; }
    const std::string& error() const { return error_; }

    const std::vector<std::string>& paths() const { return paths_; }

private:
    struct Frame {
        bool array;
        std::size_t index;
        std::string key;
    };

    std::string pointer() const {
        std::string p;
        for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : f.key);
        return p;
    }

    bool scalar() {
        paths_.push_back(pointer());
        advance();
        return true;
    }

    void advance() {
        if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
    }

    nlohmann::detail::json_sax_dom_parser<json> dom_;
    std::vector<Frame> frames_;
    std::vector<std::string> paths_;
    std::size_t error_byte_ = 0;
    std::string error_;
};

// Resolves JSON pointers to document positions.
class Locator {
public:
    Locator(std::string_view text, const std::vector<std::string>& paths) : text_(text) {
        const auto offsets = value_offsets(text);
        for (std::size_t k = 0; k < paths.size() && k < offsets.size(); ++k) offsets_.emplace(paths[k], offsets[k]);
    }

    [[noreturn]] void fail(const std::string& path, const std::string& what, int inner_column = 0) const {
        const auto it = offsets_.find(path);
        if (it == offsets_.end()) throw ParseError(what, 1, 1);
        Position p = position_of(text_, it->second);
        if (inner_column > 0) p.column += inner_column;  // skip the opening quote
        throw ParseError(what, p.line, p.column);
    }

private:
    std::string_view text_;
    std::map<std::string, std::size_t> offsets_;
};

int positive_int(const json& doc, const char* key, const Locator& loc) {
    if (!doc.contains(key)) loc.fail("", std::string("missing \"") + key + "\"");
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000)
        loc.fail(std::string("/") + key, std::string("\"") + key + "\" must be a positive integer");
    return v.get<int>();
}

Rational component(const json& v, const std::string& path, const Locator& loc) {
    if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            loc.fail(path, "bad rational coefficient", e.column());
        }
    }
    loc.fail(path, "tuple components must be integers or rational strings");
}

ExactQuaternion entry(const json& v, const std::string& path, const Locator& loc) {
    if (v.is_string()) {
        try {
            return parse_quaternion(v.get<std::string>());
        } catch (const ParseError& e) {
            std::string what = e.what();
            what = what.substr(0, what.rfind(" (line"));
            loc.fail(path, what, e.column());
        }
    }
    if (v.is_number_integer()) return ExactQuaternion(Rational(mpz_class(v.dump(), 10)));
    if (v.is_array()) {
        if (v.size() != 4) loc.fail(path, "a tuple entry needs exactly 4 components [w, x, y, z]");
        return {component(v[0], path + "/0", loc), component(v[1], path + "/1", loc),
                component(v[2], path + "/2", loc), component(v[3], path + "/3", loc)};
    }
    if (v.is_number()) loc.fail(path, "non-integer number; write the entry as a literal string");
    loc.fail(path, "entries must be quaternion literal strings or [w, x, y, z] tuples");
}

}  // namespace

ExactMatrix parse_matrix_document(std::string_view text) {
    json doc;
    PathRecorder recorder(doc);
    if (!json::sax_parse(text.begin(), text.end(), &recorder)) {
        const Position p = position_of(text, recorder.error_byte() > 0 ? recorder.error_byte() - 1 : 0);
        const std::string& what = recorder.error();
        const auto colon = what.rfind(": ");
        throw ParseError("invalid JSON: " + (colon == std::string::npos ? what : what.substr(colon + 2)), p.line,
                         p.column);
    }
    const Locator loc(text, recorder.paths());

    if (!doc.is_object()) loc.fail("", "a matrix document must be a JSON object");
    const int rows = positive_int(doc, "rows", loc);
    const int cols = positive_int(doc, "cols", loc);
    if (!doc.contains("data")) loc.fail("", "missing \"data\"");
    const json& data = doc.at("data");
    if (!data.is_array()) loc.fail("/data", "\"data\" must be an array of rows");
    if (static_cast<int>(data.size()) != rows)
        loc.fail("/data", "\"data\" has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows));

    std::vector<ExactQuaternion> entries;
    entries.reserve(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        const std::string row_path = "/data/" + std::to_string(i);
        const json& row = data[i];
        if (!row.is_array()) loc.fail(row_path, "each row must be an array");
        if (static_cast<int>(row.size()) != cols)
            loc.fail(row_path, "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                   " entries, expected " + std::to_string(cols));
        for (int j = 0; j < cols; ++j) entries.push_back(entry(row[j], row_path + "/" + std::to_string(j), loc));
    }
    return ExactMatrix(rows, cols, std::move(entries));
}

ExactMatrix load_matrix_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_document(buf.str());
}

}  // namespace qdet
