#ifndef SCROLLSMITH_JSON_IO_HPP
#define SCROLLSMITH_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "scrollsmith/groebner.hpp"
#include "scrollsmith/matrix.hpp"
#include "scrollsmith/multipoly.hpp"

namespace scrollsmith {

using Json = nlohmann::ordered_json;

Json json_parse(const std::string& text);

/// Matrix exchange format: {"rows": n, "cols": m, "modulus": p|null,
/// "entries": [[...]]} with entries as decimal strings, rationals "a/b".
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// Polynomial terms as [{"coeff": string, "exps": [ints]}, ...].
Json poly_to_json(const MultiPoly& f);
MultiPoly poly_from_json(const Json& j, size_t nvars, uint64_t modulus);

/// Ideal exchange format: ring header with variable names and modulus,
/// then one term list per generator.
Json ideal_to_json(const std::vector<MultiPoly>& gens, const std::vector<std::string>& vars);
std::vector<MultiPoly> ideal_from_json(const Json& j);

/// Atomic file write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace scrollsmith

#endif
