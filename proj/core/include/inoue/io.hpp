#pragma once

#include <string>

#include <json.hpp>

#include "inoue/descriptor.hpp"
#include "inoue/int_matrix.hpp"
#include "inoue/int_poly.hpp"

namespace inoue {

// Matrix text format: first line "dim", then dim lines of dim space
// separated integers. A leading '[' or '{' switches to JSON: either a plain
// array of rows or {"dim": .., "entries": [[..]]}; entries may be numbers
// or decimal strings (strings keep arbitrary precision safe).
IntMatrix parse_matrix(const std::string& text);
IntMatrix read_matrix_file(const std::string& path);
std::string matrix_to_text(const IntMatrix& m);

// Polynomial text format: one line of integers from degree 0 upward; JSON:
// a flat array in the same order.
IntPoly parse_poly(const std::string& text);
IntPoly read_poly_file(const std::string& path);
std::string poly_to_text(const IntPoly& p);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// JSON encodings: arbitrary-precision integers and rationals as decimal
// strings, dyadic values as {"mantissa": "...", "exp2": n}. Machine output
// stays exact; decimal previews appear only in human-facing text.
nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const Rat& v);
nlohmann::json to_json(const Dyadic& v);
nlohmann::json to_json(const DyadicInterval& v);
nlohmann::json to_json(const DyadicComplexInterval& v);
nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const RealIsolatingInterval& v);
nlohmann::json to_json(const ComplexBox& v);
nlohmann::json to_json(const TypeICertificate& c);
nlohmann::json to_json(const Rejection& r);
nlohmann::json to_json(const HomologyReport& h);
nlohmann::json to_json(const GroupPresentation& p);
nlohmann::json to_json(const GeometricFlags& f);

IntMatrix matrix_from_json(const nlohmann::json& j);
IntPoly poly_from_json(const nlohmann::json& j);

} // namespace inoue
