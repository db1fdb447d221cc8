#include "permabound/matrix.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "permabound/errors.hpp"

namespace permabound {

ComplexMatrix::ComplexMatrix(int n_rows, int n_cols, std::vector<Complex> entries)
    : n_rows_(n_rows), n_cols_(n_cols), entries_(std::move(entries)) {
    if (n_rows < 0 || n_cols < 0)
        throw std::invalid_argument("ComplexMatrix: negative dimension");
    if (entries_.size() != static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols))
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    check_finite();
}

ComplexMatrix ComplexMatrix::zero(int n_rows, int n_cols) {
    return {n_rows, n_cols,
            std::vector<Complex>(static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols))};
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix z = zero(n, n);
    for (int i = 0; i < n; ++i) z.mutable_at(i, i) = 1.0;
    return z;
}

ComplexMatrix ComplexMatrix::constant(int n_rows, int n_cols, Complex value) {
    return {n_rows, n_cols,
            std::vector<Complex>(static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols),
                                 value)};
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t = zero(n_cols_, n_rows_);
    for (int r = 0; r < n_rows_; ++r)
        for (int c = 0; c < n_cols_; ++c) t.mutable_at(c, r) = at(r, c);
    return t;
}

ComplexMatrix ComplexMatrix::abs() const {
    ComplexMatrix a = zero(n_rows_, n_cols_);
    for (int r = 0; r < n_rows_; ++r)
        for (int c = 0; c < n_cols_; ++c) a.mutable_at(r, c) = std::abs(at(r, c));
    return a;
}

bool ComplexMatrix::is_binary() const {
    for (const Complex& v : entries_)
        if (v.imag() != 0.0 || (v.real() != 0.0 && v.real() != 1.0)) return false;
    return true;
}

void ComplexMatrix::check_finite() const {
    for (const Complex& v : entries_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix submatrix(const ComplexMatrix& z, const IndexSubset& rows, const IndexSubset& cols) {
    if (rows.universe_size() > z.rows() || cols.universe_size() > z.cols())
        throw std::invalid_argument("submatrix: subset universe exceeds matrix shape");
    std::vector<int> rs = rows.elements();
    std::vector<int> cs = cols.elements();
    ComplexMatrix out = ComplexMatrix::zero(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            out.mutable_at(static_cast<int>(i), static_cast<int>(j)) = z.at(rs[i], cs[j]);
    return out;
}

namespace {

ComplexMatrix matrix_from_parts(int rows, int cols, std::vector<Complex> entries) {
    for (const Complex& v : entries)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw parse_error("matrix entry is not finite");
    try {
        return {rows, cols, std::move(entries)};
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

// "a", "bi", "a+bi", "a-bi"; exponents allowed; surrounding whitespace ignored.
Complex parse_complex_token(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty matrix entry");

    auto parse_strict = [](const std::string& t) -> double {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw parse_error("bad numeric token '" + t + "'");
        }
        if (used != t.size()) throw parse_error("bad numeric token '" + t + "'");
        return v;
    };
    // imaginary coefficients may be bare signs: "i", "+i", "-i"
    auto parse_double = [&parse_strict](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_strict(t);
    };

    if (s.back() != 'i' && s.back() != 'I') return {parse_strict(s), 0.0};

    std::string body = s.substr(0, s.size() - 1);
    // Split at the last +/- that is not an exponent sign and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        char c = body[p];
        if ((c == '+' || c == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_double(body)};
    return {parse_double(body.substr(0, split)), parse_double(body.substr(split))};
}

} // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw parse_error("matrix JSON requires rows, cols, entries");
    int rows, cols;
    std::vector<Complex> entries;
    try {
        rows = j.at("rows").get<int>();
        cols = j.at("cols").get<int>();
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 2)
                throw parse_error("each entry must be a [re, im] pair");
            entries.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid matrix JSON: ") + e.what());
    }
    return matrix_from_parts(rows, cols, std::move(entries));
}

ComplexMatrix parse_matrix_csv(const std::string& text) {
    std::vector<Complex> entries;
    int cols = -1, rows = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;
        int count = 0;
        std::istringstream ls(line);
        std::string token;
        while (std::getline(ls, token, ',')) {
            entries.push_back(parse_complex_token(token));
            ++count;
        }
        if (cols == -1) cols = count;
        else if (count != cols) throw parse_error("ragged CSV: inconsistent column count");
        ++rows;
    }
    if (rows == 0) throw parse_error("empty matrix file");
    return matrix_from_parts(rows, cols, std::move(entries));
}

ComplexMatrix parse_matrix(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_matrix_json(text) : parse_matrix_csv(text);
    }
    throw parse_error("empty matrix file");
}

ComplexMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string matrix_to_json(const ComplexMatrix& z) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Complex& v : z.entries()) entries.push_back({v.real(), v.imag()});
    nlohmann::json j{{"rows", z.rows()}, {"cols", z.cols()}, {"entries", entries}};
    return j.dump();
}

} // namespace permabound
