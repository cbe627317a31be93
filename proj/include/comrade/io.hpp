#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "comrade/comrade_matrix.hpp"
#include "comrade/dense_matrix.hpp"
#include "comrade/rational.hpp"

namespace comrade::io {

// Comrade matrix file:
//   {"n": 4, "beta": ["0","-1","1","3"], "alpha": [...], "gamma": [...], "a": [...]}
// with every scalar a "p/q" or "p" string and "a" listed as a_3, ..., a_n.
//
// Dense matrix file:
//   {"n": 4, "rows": [["-7/6","7/24","3/8","-5/12"], ...]}
//
// Syntax and literal errors throw ParseError naming the field and index;
// a bad order or array length throws OrderError / ShapeError.

ComradeMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const ComradeMatrix& c);
ComradeMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const ComradeMatrix& c, const std::filesystem::path& path);

DenseMatrix<Rational> parse_dense_json(std::string_view text);
std::string dense_to_json(const DenseMatrix<Rational>& m);
DenseMatrix<Rational> read_dense(const std::filesystem::path& path);
void write_dense(const DenseMatrix<Rational>& m, const std::filesystem::path& path);

} // namespace comrade::io
