#include "qlat/json_io.hpp"

#include <string>

#include "qlat/error.hpp"

namespace qlat {
namespace {

mpz_class integer_from_json(const Json& j) {
  if (!j.is_string()) throw FormatError("integer must be a decimal string, got " + j.dump());
  const std::string& s = j.get_ref<const std::string&>();
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) throw FormatError("not a decimal integer: \"" + s + "\"");
  return z;
}

Rational rational_from_parts(const Json& num, const Json& den) {
  mpz_class d = integer_from_json(den);
  if (sgn(d) == 0) throw FormatError("zero denominator");
  return make_rational(integer_from_json(num), d);
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("rational must be [num, den]");
  return rational_from_parts(j[0], j[1]);
}

Json scalar_to_json(const GaussianRational& z) {
  return Json::array({z.re().get_num().get_str(), z.re().get_den().get_str(),
                      z.im().get_num().get_str(), z.im().get_den().get_str()});
}

GaussianRational scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw FormatError("scalar must be [re_num, re_den, im_num, im_den], got " + j.dump());
  }
  return {rational_from_parts(j[0], j[1]), rational_from_parts(j[2], j[3])};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& z : m.row(r)) row.push_back(scalar_to_json(z));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw FormatError("row " + std::to_string(r) + " must have " + std::to_string(cols) +
                        " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[c]);
  }
  return m;
}

Json subspace_to_json(const Subspace& s) {
  Json j = Json::object();
  j["ambient"] = s.ambient_dim();
  j["basis"] = matrix_to_json(s.basis());
  return j;
}

Subspace subspace_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis")) {
    throw FormatError("subspace must be {\"ambient\": n, \"basis\": [...]}");
  }
  const Json& ambient = j["ambient"];
  if (!ambient.is_number_unsigned() || ambient.get<std::size_t>() == 0) {
    throw FormatError("ambient must be a positive integer");
  }
  return Subspace::from_matrix(matrix_from_json(j["basis"], ambient.get<std::size_t>()));
}

}  // namespace qlat
