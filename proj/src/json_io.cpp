#include "gybe/json_io.hpp"

#include <fstream>

#include "gybe/error.hpp"
#include "gybe/limits.hpp"

namespace gybe {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  // Large integers fall back to decimal strings; the parser accepts both.
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(j.get<long long>());
  if (j.is_string()) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
      fail(where + ": malformed integer '" + j.get<std::string>() + "'");
    return z;
  }
  fail(where + ": expected an integer");
}

}  // namespace

Json scalar_to_json(const CycloScalar& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    Json term;
    term["p"] = integer_to_json(t.coeff.get_num());
    term["q"] = integer_to_json(t.coeff.get_den());
    term["k"] = t.exponent;
    terms.push_back(std::move(term));
  }
  return terms;
}

CycloScalar scalar_from_json(const Json& j, int order,
                             const std::string& where) {
  if (!j.is_array()) fail(where + ": scalar must be an array of terms");
  std::vector<CycloTerm> terms;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("p") || !term.contains("q") ||
        !term.contains("k"))
      fail(where + ": scalar term needs fields p, q, k");
    mpz_class p = integer_from_json(term.at("p"), where);
    mpz_class q = integer_from_json(term.at("q"), where);
    if (q <= 0) fail(where + ": term denominator must be positive");
    if (!term.at("k").is_number_integer())
      fail(where + ": term exponent must be an integer");
    const long k = term.at("k").get<long>();
    if (k < 0 || k >= order)
      fail(where + ": term exponent " + std::to_string(k) + " outside [0, " +
           std::to_string(order) + ")");
    Rational c(p, q);
    c.canonicalize();
    terms.push_back({c, int(k)});
  }
  return CycloScalar::from_terms(order, terms);
}

Json matrix_to_json(const ExactMatrix& m) {
  const int order = m.field_order();
  Json j;
  j["cyclotomic_order"] = order;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k)
      entries.push_back(scalar_to_json(m.at(i, k).promoted(order)));
  j["entries"] = std::move(entries);
  return j;
}

Json matrix_to_decimal_json(const ExactMatrix& m) {
  Json j;
  j["format"] = "decimal";
  j["non_authoritative"] = true;
  j["note"] = "floating-point rendering for inspection; the exact format is authoritative";
  j["cyclotomic_order"] = m.field_order();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) entries.push_back(complex_to_json(m.at(i, k).embed()));
  j["entries"] = std::move(entries);
  return j;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) fail("matrix file: expected a JSON object");
  if (j.value("format", std::string{}) == "decimal")
    fail("matrix file: decimal exports are non-authoritative and cannot be "
         "loaded back");
  for (const char* k : {"cyclotomic_order", "rows", "cols", "entries"})
    if (!j.contains(k)) fail(std::string("matrix file: missing field '") + k + "'");
  const int order = j.at("cyclotomic_order").get<int>();
  if (order < 1 || order > limits::field_order_cap())
    fail("matrix file: cyclotomic_order out of range");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows < 1 || cols < 1) fail("matrix file: dimensions must be positive");
  const auto& entries = j.at("entries");
  if (!entries.is_array() ||
      entries.size() != std::size_t(rows) * std::size_t(cols))
    fail("matrix file: entries must hold rows*cols scalars");
  ExactMatrix m(rows, cols);
  std::size_t idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k, ++idx)
      m.set(i, k,
            scalar_from_json(entries.at(idx), order,
                             "matrix entry (" + std::to_string(i) + "," +
                                 std::to_string(k) + ")"));
  return m;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail("cannot write file '" + path + "'");
  out << j.dump(2) << '\n';
}

Json complex_to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

}  // namespace gybe
