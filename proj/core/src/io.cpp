#include "inoue/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace inoue {

namespace {

Int int_from_token(const std::string& tok, const std::string& context) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
    fail(errc::invalid_input, "bad integer '" + tok + "' in " + context);
  return v;
}

Int int_from_json(const nlohmann::json& j, const std::string& context) {
  if (j.is_string()) return int_from_token(j.get<std::string>(), context);
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  fail(errc::invalid_input, "expected an integer (number or string) in " + context);
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '[' || c == '{';
  }
  return false;
}

} // namespace

IntMatrix matrix_from_json(const nlohmann::json& j) {
  nlohmann::json rows = j;
  if (j.is_object()) {
    if (!j.contains("entries")) fail(errc::invalid_input, "matrix JSON object needs 'entries'");
    rows = j["entries"];
  }
  if (!rows.is_array() || rows.empty()) fail(errc::invalid_input, "matrix JSON must be a nonempty array");
  int dim = static_cast<int>(rows.size());
  IntMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(errc::invalid_input, "matrix JSON row " + std::to_string(i) + " has the wrong length");
    for (int k = 0; k < dim; ++k)
      m(i, k) = int_from_json(row[static_cast<std::size_t>(k)],
                              "matrix entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
  }
  if (j.is_object() && j.contains("dim") && j["dim"].get<int>() != dim)
    fail(errc::invalid_input, "matrix JSON 'dim' disagrees with the entries");
  return m;
}

IntMatrix parse_matrix(const std::string& text) {
  if (looks_like_json(text)) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(errc::invalid_input, "matrix input is not valid JSON");
    return matrix_from_json(j);
  }
  std::istringstream is(text);
  long dim = 0;
  if (!(is >> dim) || dim < 1) fail(errc::invalid_input, "matrix text must start with the dimension");
  IntMatrix m(static_cast<int>(dim), static_cast<int>(dim));
  for (long i = 0; i < dim; ++i)
    for (long k = 0; k < dim; ++k) {
      std::string tok;
      if (!(is >> tok))
        fail(errc::invalid_input, "matrix text ended early at row " + std::to_string(i) +
                                      ", column " + std::to_string(k));
      m(static_cast<int>(i), static_cast<int>(k)) =
          int_from_token(tok, "matrix row " + std::to_string(i));
    }
  std::string extra;
  if (is >> extra) fail(errc::invalid_input, "trailing content after the matrix: '" + extra + "'");
  return m;
}

IntMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

std::string matrix_to_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "\n" << m.to_string();
  return os.str();
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(errc::invalid_input, "polynomial JSON must be an array");
  std::vector<Int> c;
  c.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(int_from_json(j[i], "polynomial coefficient " + std::to_string(i)));
  return IntPoly(std::move(c));
}

IntPoly parse_poly(const std::string& text) {
  if (looks_like_json(text)) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::invalid_input, "polynomial input is not valid JSON");
    return poly_from_json(j);
  }
  std::istringstream is(text);
  std::vector<Int> c;
  std::string tok;
  while (is >> tok) c.push_back(int_from_token(tok, "polynomial coefficients"));
  if (c.empty()) fail(errc::invalid_input, "empty polynomial input");
  return IntPoly(std::move(c));
}

IntPoly read_poly_file(const std::string& path) { return parse_poly(read_file(path)); }

std::string poly_to_text(const IntPoly& p) {
  std::ostringstream os;
  for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
    if (i) os << ' ';
    os << p.coeff(i).get_str();
  }
  os << "\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(errc::invalid_input, "cannot open '" + path + "' for writing");
  os << content;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(errc::invalid_input, "cannot open '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

nlohmann::json to_json(const Int& v) { return v.get_str(); }
nlohmann::json to_json(const Rat& v) { return rat_to_string(v); }

nlohmann::json to_json(const Dyadic& v) {
  return {{"mantissa", v.m.get_str()}, {"exp2", v.e}};
}

nlohmann::json to_json(const DyadicInterval& v) {
  return {{"center", to_json(v.c)}, {"radius", to_json(v.r)}};
}

nlohmann::json to_json(const DyadicComplexInterval& v) {
  return {{"re", to_json(v.re)}, {"im", to_json(v.im)}};
}

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= std::max(p.degree(), 0); ++i) arr.push_back(p.coeff(i).get_str());
  return arr;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const RealIsolatingInterval& v) {
  return {{"lo", rat_to_string(v.lo)},
          {"hi", rat_to_string(v.hi)},
          {"multiplicity", v.multiplicity}};
}

nlohmann::json to_json(const ComplexBox& v) {
  return {{"re_lo", rat_to_string(v.re_lo)}, {"re_hi", rat_to_string(v.re_hi)},
          {"im_lo", rat_to_string(v.im_lo)}, {"im_hi", rat_to_string(v.im_hi)},
          {"multiplicity", v.multiplicity}};
}

nlohmann::json to_json(const TypeICertificate& c) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : c.complex_pairs)
    pairs.push_back({{"factor", to_json(p.min_poly)},
                     {"box", to_json(std::get<ComplexBox>(p.region))}});
  return {{"accepted", true},
          {"dim", c.dim},
          {"n", c.n},
          {"char_poly", to_json(c.chi)},
          {"det_ok", c.det_ok},
          {"alpha",
           {{"factor", to_json(c.alpha.min_poly)},
            {"interval", to_json(std::get<RealIsolatingInterval>(c.alpha.region))}}},
          {"alpha_simple", c.alpha_simple},
          {"alpha_irrational", c.alpha_irrational},
          {"alpha_positive", c.alpha_positive},
          {"complex_pairs", std::move(pairs)},
          {"notes", c.notes}};
}

nlohmann::json to_json(const Rejection& r) {
  return {{"accepted", false}, {"reason", rejection_reason_name(r.reason)}, {"detail", r.detail}};
}

nlohmann::json to_json(const HomologyReport& h) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.get_str());
  return {{"b1", h.b1},
          {"torsion", std::move(torsion)},
          {"total_torsion_order", h.total_torsion_order.get_str()},
          {"note", "torsion invariant factors are derived from coker(M - I); "
                   "the certified statement is b1 = 1 with finite torsion"}};
}

nlohmann::json to_json(const GroupPresentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  auto word_json = [](const Word& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [g, e] : w.syllables) arr.push_back({{"gen", g}, {"exp", e.get_str()}});
    return arr;
  };
  for (const auto& [lhs, rhs] : p.relations)
    rels.push_back({{"lhs", word_json(lhs)}, {"rhs", word_json(rhs)}});
  return {{"generators", p.generator_names}, {"relations", std::move(rels)}};
}

nlohmann::json to_json(const GeometricFlags& f) {
  return {{"kahler", "NO"},
          {"kodaira", "-infinity"},
          {"lck", lck_flag_name(f.lck)},
          {"ot_homeomorphic", ot_flag_name(f.ot_homeomorphic)}};
}

} // namespace inoue
