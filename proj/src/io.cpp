#include "comrade/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "comrade/errors.hpp"

namespace comrade::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

int read_order(const json& doc) {
    if (!doc.is_object()) {
        throw ParseError("top-level JSON value must be an object");
    }
    const auto it = doc.find("n");
    if (it == doc.end() || !it->is_number_integer()) {
        throw ParseError("field \"n\" must be an integer");
    }
    return it->get<int>();
}

Rational read_scalar(const json& value, const std::string& where) {
    if (!value.is_string()) {
        throw ParseError(where + ": expected a rational string");
    }
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::vector<Rational> read_array(const json& doc, const char* field) {
    const auto it = doc.find(field);
    if (it == doc.end() || !it->is_array()) {
        throw ParseError(std::string("field \"") + field + "\" must be an array of rational strings");
    }
    std::vector<Rational> out;
    out.reserve(it->size());
    for (std::size_t k = 0; k < it->size(); ++k) {
        out.push_back(read_scalar((*it)[k], std::string("field \"") + field + "\" index " + std::to_string(k)));
    }
    return out;
}

json to_array(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) {
        arr.push_back(r.str());
    }
    return arr;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << text << '\n';
}

} // namespace

ComradeMatrix parse_matrix_json(std::string_view text) {
    const json doc = parse_json(text);
    const int n = read_order(doc);
    if (n < 3) {
        throw OrderError("comrade matrix order must be at least 3, got " + std::to_string(n));
    }
    return make_comrade(n, read_array(doc, "beta"), read_array(doc, "alpha"), read_array(doc, "gamma"),
                        read_array(doc, "a"));
}

std::string matrix_to_json(const ComradeMatrix& c) {
    json doc;
    doc["n"] = c.order();
    doc["beta"] = to_array(c.betas());
    doc["alpha"] = to_array(c.alphas());
    doc["gamma"] = to_array(c.gammas());
    doc["a"] = to_array(c.tails());
    return doc.dump();
}

ComradeMatrix read_matrix(const std::filesystem::path& path) {
    return parse_matrix_json(slurp(path));
}

void write_matrix(const ComradeMatrix& c, const std::filesystem::path& path) {
    spill(path, matrix_to_json(c));
}

DenseMatrix<Rational> parse_dense_json(std::string_view text) {
    const json doc = parse_json(text);
    const int n = read_order(doc);
    if (n < 0) {
        throw ShapeError("negative matrix order");
    }
    const auto rows = doc.find("rows");
    if (rows == doc.end() || !rows->is_array() || rows->size() != static_cast<std::size_t>(n)) {
        throw ShapeError("field \"rows\" must be an array of " + std::to_string(n) + " rows");
    }
    DenseMatrix<Rational> m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = (*rows)[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ShapeError("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        }
        for (int j = 0; j < n; ++j) {
            m(i, j) = read_scalar(row[static_cast<std::size_t>(j)],
                                  "field \"rows\" index " + std::to_string(i) + "," + std::to_string(j));
        }
    }
    return m;
}

std::string dense_to_json(const DenseMatrix<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (const auto& r : m.row(i)) {
            row.push_back(r.str());
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["n"] = m.order();
    doc["rows"] = std::move(rows);
    return doc.dump();
}

DenseMatrix<Rational> read_dense(const std::filesystem::path& path) {
    return parse_dense_json(slurp(path));
}

void write_dense(const DenseMatrix<Rational>& m, const std::filesystem::path& path) {
    spill(path, dense_to_json(m));
}

} // namespace comrade::io
