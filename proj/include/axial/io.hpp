#ifndef AXIAL_IO_HPP
#define AXIAL_IO_HPP

// JSON encodings. Needs nlohmann/json (vendor/json.hpp) on the include path.

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "axial/axial_series.hpp"
#include "axial/error.hpp"
#include "axial/herglotz.hpp"
#include "axial/matrix.hpp"
#include "axial/realize.hpp"

namespace axial {

using json = nlohmann::json;

namespace detail {
[[noreturn]] inline void bad_json(const std::string& what) { raise(ErrorCode::invalid_argument, "JSON: " + what); }
}  // namespace detail

// --- Quaternion: [x0, x1, x2, x3]; a bare number is read as a real quaternion.

inline json to_json(const Quaternion& q) { return json::array({q.x0, q.x1, q.x2, q.x3}); }

inline Quaternion quaternion_from_json(const json& j) {
  if (j.is_number()) return Quaternion(j.get<double>());
  if (!j.is_array() || j.size() != 4) detail::bad_json("quaternion must be [x0,x1,x2,x3]");
  for (const auto& v : j)
    if (!v.is_number()) detail::bad_json("quaternion components must be numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

// --- QuatMatrix: {"rows": r, "cols": s, "data": [[q, ...], ...]} row-major. A bare
// quaternion or number is read as a 1x1 matrix.

inline json to_json(const QuatMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    data.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

inline QuatMatrix matrix_from_json(const json& j) {
  if (j.is_number() || (j.is_array() && j.size() == 4 && j[0].is_number())) {
    return QuatMatrix::scalar(quaternion_from_json(j));
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols")) detail::bad_json("matrix needs rows and cols");
  const auto r = j.at("rows").get<std::size_t>();
  const auto c = j.at("cols").get<std::size_t>();
  QuatMatrix m(r, c);
  const json& data = j.contains("data") ? j.at("data") : json::array();
  if (data.size() == r && (r == 0 || (data[0].is_array() && data[0].size() == c && (c == 0 || !data[0][0].is_number())))) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k) m(i, k) = quaternion_from_json(data[i][k]);
  } else if (data.size() == r * c) {
    for (std::size_t i = 0; i < r * c; ++i) m(i / c, i % c) = quaternion_from_json(data[i]);
  } else {
    detail::bad_json("matrix data does not match " + m.shape());
  }
  return m;
}

// --- AxialSeries: {"rows","cols","tail","coeffs"}.
// tail: "finite" | "uncertified" | {"bounded": B} | {"envelope": {"bound","power","ratio"}}.

inline json to_json(const TailModel& t) {
  switch (t.kind) {
    case TailModel::Kind::finite: return "finite";
    case TailModel::Kind::uncertified: return "uncertified";
    case TailModel::Kind::envelope:
      if (t.power == 0 && t.ratio == 1.0) return {{"bounded", t.bound}};
      return {{"envelope", {{"bound", t.bound}, {"power", t.power}, {"ratio", t.ratio}}}};
  }
  return "uncertified";
}

inline TailModel tail_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "finite") return TailModel::finite();
    if (s == "uncertified") return TailModel::uncertified();
    detail::bad_json("unknown tail '" + s + "'");
  }
  if (j.is_object() && j.contains("bounded")) return TailModel::bounded(j.at("bounded").get<double>());
  if (j.is_object() && j.contains("envelope")) {
    const json& e = j.at("envelope");
    return TailModel::envelope(e.at("bound").get<double>(), e.value("power", 0), e.value("ratio", 1.0));
  }
  detail::bad_json("unrecognized tail model");
}

inline json to_json(const AxialSeries& f) {
  json c = json::array();
  for (const auto& m : f.coeffs()) c.push_back(to_json(m));
  return {{"rows", f.rows()}, {"cols", f.cols()}, {"tail", to_json(f.tail())}, {"coeffs", c}};
}

inline AxialSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) detail::bad_json("series needs coeffs");
  const std::size_t r = j.value("rows", std::size_t{1});
  const std::size_t c = j.value("cols", std::size_t{1});
  std::vector<QuatMatrix> coeffs;
  for (const auto& m : j.at("coeffs")) coeffs.push_back(matrix_from_json(m));
  const TailModel tail = j.contains("tail") ? tail_from_json(j.at("tail")) : TailModel::finite();
  return {r, c, std::move(coeffs), tail};
}

// --- Colligation: {"A","B","C","D","flag"}.

inline json to_json(const Colligation& v) {
  return {{"A", to_json(v.A)}, {"B", to_json(v.B)}, {"C", to_json(v.C)}, {"D", to_json(v.D)}, {"flag", to_string(v.flag)}};
}

inline Colligation colligation_from_json(const json& j) {
  for (const char* k : {"A", "B", "C", "D"})
    if (!j.contains(k)) detail::bad_json(std::string("colligation needs ") + k);
  Colligation::Flag f = Colligation::Flag::none;
  const std::string flag = j.value("flag", std::string("none"));
  if (flag == "unitary") f = Colligation::Flag::unitary;
  else if (flag == "coisometric") f = Colligation::Flag::coisometric;
  else if (flag != "none") detail::bad_json("unknown flag '" + flag + "'");
  return {matrix_from_json(j.at("A")), matrix_from_json(j.at("B")), matrix_from_json(j.at("C")),
          matrix_from_json(j.at("D")), f};
}

// --- Herglotz generator: {"V","C","a"}.

inline json to_json(const HerglotzGenerator& g) {
  json j = {{"V", to_json(g.V)}, {"C", to_json(g.C)}};
  if (!g.a.empty()) j["a"] = to_json(g.a);
  return j;
}

inline HerglotzGenerator generator_from_json(const json& j) {
  if (!j.contains("V") || !j.contains("C")) detail::bad_json("generator needs V and C");
  HerglotzGenerator g{matrix_from_json(j.at("V")), matrix_from_json(j.at("C")), QuatMatrix()};
  if (j.contains("a")) g.a = matrix_from_json(j.at("a"));
  return g;
}

// --- Rational real form: {"H","G","T","F"}.

inline json to_json(const RationalRealForm& m) {
  return {{"H", to_json(m.H)}, {"G", to_json(m.G)}, {"T", to_json(m.T)}, {"F", to_json(m.F)}};
}

inline RationalRealForm rational_from_json(const json& j) {
  for (const char* k : {"H", "G", "T", "F"})
    if (!j.contains(k)) detail::bad_json(std::string("realization needs ") + k);
  return {matrix_from_json(j.at("H")), matrix_from_json(j.at("G")), matrix_from_json(j.at("T")),
          matrix_from_json(j.at("F"))};
}

// --- Files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::invalid_argument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    raise(ErrorCode::invalid_argument, path + ": " + e.what());
  }
}

// --- Verdicts

struct Residual {
  double value = 0.0;
  double tolerance = 0.0;
  bool ok() const { return value <= tolerance; }
};

/// passed holds exactly when every named residual is within its tolerance.
struct Verdict {
  std::map<std::string, Residual> residuals;
  json metadata = json::object();

  void add(const std::string& name, double value, double tol) { residuals[name] = {value, tol}; }
  bool passed() const {
    for (const auto& [name, r] : residuals)
      if (!r.ok()) return false;
    return true;
  }
};

inline json to_json(const Verdict& v) {
  json r = json::object();
  for (const auto& [name, res] : v.residuals) r[name] = {{"value", res.value}, {"tolerance", res.tolerance}};
  return {{"passed", v.passed()}, {"residuals", r}, {"metadata", v.metadata}};
}

}  // namespace axial

#endif  // AXIAL_IO_HPP
