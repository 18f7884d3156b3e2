#pragma once

#include <json.hpp>

#include "qlat/matrix.hpp"
#include "qlat/scalar.hpp"
#include "qlat/subspace.hpp"

namespace qlat {

using Json = nlohmann::json;

// Exact wire formats. A rational is ["num", "den"]; a Gaussian rational is
// ["re_num", "re_den", "im_num", "im_den"]; all integers are decimal strings.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const Json& j);

/// Row-major array of arrays of scalars.
Json matrix_to_json(const Matrix& m);
/// `cols` is needed to read a matrix with no rows.
Matrix matrix_from_json(const Json& j, std::size_t cols);

/// {"ambient": n, "basis": [[entry, ...], ...]}
Json subspace_to_json(const Subspace& s);
/// Accepts any spanning set and canonicalizes it.
Subspace subspace_from_json(const Json& j);

}  // namespace qlat
