#ifndef CONEWIT_IO_HPP
#define CONEWIT_IO_HPP

// JSON file formats. Complex entries are [re, im] pairs, matrices are arrays
// of rows.
//
//   matrix file:  {"m": 3, "n": 3, "matrix": [[[re, im], ...], ...]}
//   map file:     {"kind": "choi",   "m", "n", "matrix"}
//                 {"kind": "kraus",  "m", "n", "cp": [M, ...], "ccp": [M, ...]}
//                 {"kind": "family", "a", "b", "c"}

#include "conewit/family.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace conewit {

using Json = nlohmann::json;

/// Malformed or inconsistent input file.
class FormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("expected a complex number [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(complex_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

inline Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw FormatError("expected a matrix with " + std::to_string(rows) + " rows");
  }
  Matrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw FormatError("expected " + std::to_string(cols) + " entries in row " + std::to_string(i));
    }
    for (std::size_t k = 0; k < cols; ++k)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_from_json(row[k]);
  }
  return a;
}

namespace detail {
inline std::size_t positive_size(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
    throw FormatError(std::string("field '") + key + "' must be a positive integer");
  }
  return j[key].get<std::size_t>();
}
inline double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw FormatError(std::string("field '") + key + "' must be a number");
  }
  return j[key].get<double>();
}
}  // namespace detail

inline Json write_matrix_file(const CMat& a) {
  const Dims d = a.require_dims("write_matrix_file");
  return Json{{"m", d.m}, {"n", d.n}, {"matrix", matrix_to_json(a.mat())}};
}

inline CMat read_matrix_file(const Json& j) {
  if (!j.is_object()) throw FormatError("matrix file must be a JSON object");
  const std::size_t m = detail::positive_size(j, "m");
  const std::size_t n = detail::positive_size(j, "n");
  if (!j.contains("matrix")) throw FormatError("field 'matrix' missing");
  return CMat(matrix_from_json(j["matrix"], m * n, m * n), Dims{m, n});
}

inline Json write_map_file(const LinMap& phi) {
  Json j{{"kind", "choi"}, {"m", phi.m()}, {"n", phi.n()}};
  j["matrix"] = matrix_to_json(phi.choi().mat());
  return j;
}

inline LinMap read_map_file(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw FormatError("map file must be an object with a 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "family") {
    for (const char* key : {"m", "n"}) {
      if (j.contains(key) && j[key] != 3) throw FormatError("family maps act on M_3");
    }
    return phi_family(detail::number(j, "a"), detail::number(j, "b"), detail::number(j, "c"));
  }
  const std::size_t m = detail::positive_size(j, "m");
  const std::size_t n = detail::positive_size(j, "n");
  const Dims d{m, n};
  if (kind == "choi") {
    if (!j.contains("matrix")) throw FormatError("field 'matrix' missing");
    const Matrix c = matrix_from_json(j["matrix"], m * n, m * n);
    if (!is_hermitian(c)) throw FormatError("Choi matrix is not Hermitian");
    return LinMap::from_choi(c, d);
  }
  if (kind == "kraus") {
    const auto list = [&](const char* key) {
      std::vector<Matrix> out;
      if (!j.contains(key)) return out;
      if (!j[key].is_array()) throw FormatError(std::string("field '") + key + "' must be a list");
      for (const auto& e : j[key]) out.push_back(matrix_from_json(e, m, n));
      return out;
    };
    return choi_of_kraus(d, list("cp"), list("ccp"));
  }
  throw FormatError("unknown map kind '" + kind + "'");
}

}  // namespace conewit

#endif  // CONEWIT_IO_HPP
