#pragma once

#include <json.hpp>

#include "qsymp/gt.hpp"
#include "qsymp/twisted.hpp"

namespace qsymp {

using json = nlohmann::json;

/// {"num": [[exp, "p/r"], ...], "den": [[exp, "p/r"], ...]}, exponents ascending.
json to_json(const QScalar& v);
QScalar qscalar_from_json(const json& j);

/// {"rows": r, "cols": c, "entries": [[i, j, qscalar], ...]} with 1-based
/// indices sorted lexicographically.
json to_json(const OpMatrix& m);
OpMatrix matrix_from_json(const json& j);

/// {"n", "dim", "m", "signs", "weights", "matrices": {"s[i,j]": ..., "sinv[i]": ...}}
json to_json(const SPModule& mod);
SPModule module_from_json(const json& j);

/// Module manifest: nu, dimension, pattern order and generator matrices.
json gl_manifest(const GLModule& mod);

} // namespace qsymp
