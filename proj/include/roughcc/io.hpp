#pragma once

// Serialization.  Emitters are hand-rolled so key order and float formatting
// are fixed (17 significant digits everywhere); parsers sit on nlohmann::json.
// SchemaError means the file parsed but violates the documented layout (CLI
// exit 2); IoError means the file could not be read or parsed (exit 3).

#include <roughcc/core.hpp>
#include <roughcc/group.hpp>
#include <roughcc/paths.hpp>
#include <roughcc/rough.hpp>
#include <roughcc/flows.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace roughcc {

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(what) {}
};
struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

// shortest round-trip-safe decimal for doubles
inline std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace detail {

inline std::string join17(const Vec& v) {
  std::string s;
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += fmt17(v(i));
  }
  return s;
}

inline std::string json_vec(const Vec& v) { return "[" + join17(v) + "]"; }

inline std::string json_mat(const Mat& M) {  // row-major nested arrays
  std::string s = "[";
  for (int r = 0; r < M.rows(); ++r) {
    if (r) s += ",";
    s += json_vec(Vec(M.row(r)));
  }
  return s + "]";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw IoError("write failure on '" + path + "'");
}

inline nlohmann::json parse_json(const std::string& text, const std::string& origin) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed JSON in " + origin);
  return j;
}

inline Vec vec_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array of numbers");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw SchemaError(what + ": entry " + std::to_string(i) + " is not a number");
    v(static_cast<int>(i)) = j[i].get<double>();
  }
  return v;
}

inline Mat mat_from_json(const nlohmann::json& j, int dim, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw SchemaError(what + ": expected " + std::to_string(dim) + " rows");
  Mat M(dim, dim);
  for (int r = 0; r < dim; ++r) {
    Vec row = vec_from_json(j[r], what + " row " + std::to_string(r));
    if (row.size() != dim) throw SchemaError(what + ": row " + std::to_string(r) + " has wrong length");
    M.row(r) = row;
  }
  return M;
}

}  // namespace detail

// --------------------------------------------------------------------- group

inline std::string to_json(const GroupElem& g) {
  std::string s = "{\"dim\":" + std::to_string(g.a.size());
  s += ",\"a\":" + detail::json_vec(g.a);
  s += ",\"A\":" + detail::json_mat(g.A) + "}";
  return s;
}

inline GroupElem group_from_json(const nlohmann::json& j, const std::string& origin) {
  if (!j.is_object()) throw SchemaError(origin + ": expected an object");
  for (const char* key : {"dim", "a", "A"})
    if (!j.contains(key)) throw SchemaError(origin + ": missing key '" + std::string(key) + "'");
  if (!j["dim"].is_number_integer()) throw SchemaError(origin + ": 'dim' must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw SchemaError(origin + ": 'dim' must be >= 1");
  Vec a = detail::vec_from_json(j["a"], origin + ": 'a'");
  if (a.size() != dim) throw SchemaError(origin + ": 'a' has length != dim");
  Mat A = detail::mat_from_json(j["A"], dim, origin + ": 'A'");
  if ((A + A.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw SchemaError(origin + ": 'A' is not antisymmetric");
  return GroupElem(a, A);
}

inline GroupElem load_group(const std::string& path) {
  return group_from_json(detail::parse_json(detail::read_file(path), path), path);
}

// ---------------------------------------------------------------- rough path

// p is serialized as a number, or the string "inf" for the sup norm
inline std::string to_json(const RoughPath& x) {
  std::string s = "{\"alpha\":" + fmt17(x.alpha);
  s += ",\"p\":";
  s += std::isinf(x.norms.p) ? "\"inf\"" : fmt17(x.norms.p);
  s += ",\"times\":[";
  for (std::size_t i = 0; i < x.times.size(); ++i) {
    if (i) s += ",";
    s += fmt17(x.times[i]);
  }
  s += "],\"samples\":[";
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    if (i) s += ",";
    s += to_json(x.samples[i]);
  }
  return s + "]}";
}

inline double p_from_json(const nlohmann::json& j, const std::string& origin) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    throw SchemaError(origin + ": 'p' string must be \"inf\"");
  }
  if (!j.is_number()) throw SchemaError(origin + ": 'p' must be a number or \"inf\"");
  double p = j.get<double>();
  if (p < 1.0) throw SchemaError(origin + ": 'p' must be >= 1");
  return p;
}

inline RoughPath roughpath_from_json(const nlohmann::json& j, const std::string& origin) {
  if (!j.is_object()) throw SchemaError(origin + ": expected an object");
  for (const char* key : {"alpha", "p", "times", "samples"})
    if (!j.contains(key)) throw SchemaError(origin + ": missing key '" + std::string(key) + "'");
  if (!j["alpha"].is_number()) throw SchemaError(origin + ": 'alpha' must be a number");
  const double alpha = j["alpha"].get<double>();
  HomNorms norms(p_from_json(j["p"], origin));
  if (!j["times"].is_array() || !j["samples"].is_array())
    throw SchemaError(origin + ": 'times' and 'samples' must be arrays");
  if (j["times"].size() != j["samples"].size())
    throw SchemaError(origin + ": 'times' and 'samples' differ in length");
  if (j["times"].size() < 2) throw SchemaError(origin + ": need at least two samples");
  std::vector<double> times;
  times.reserve(j["times"].size());
  for (std::size_t i = 0; i < j["times"].size(); ++i) {
    if (!j["times"][i].is_number()) throw SchemaError(origin + ": 'times' entries must be numbers");
    times.push_back(j["times"][i].get<double>());
  }
  std::vector<GroupElem> samples;
  samples.reserve(j["samples"].size());
  for (std::size_t i = 0; i < j["samples"].size(); ++i)
    samples.push_back(group_from_json(j["samples"][i], origin + ": sample " + std::to_string(i)));
  const int dim = static_cast<int>(samples.front().a.size());
  for (const GroupElem& g : samples)
    if (g.a.size() != dim) throw SchemaError(origin + ": samples of mixed dimension");
  try {
    return make_roughpath(times, samples, alpha, norms);
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(origin + ": " + e.what());
  }
}

inline RoughPath load_roughpath(const std::string& path) {
  return roughpath_from_json(detail::parse_json(detail::read_file(path), path), path);
}

// Lenient variant for the checker: same layout, but 'A' is taken as stored
// (no antisymmetry gate) so symmetry defects reach check_raw instead of being
// rejected as schema violations.  Samples are rebased to the first one.
struct RawRoughInput {
  double alpha = 0.5;
  HomNorms norms;
  RawDriver raw;
};

inline RawRoughInput raw_from_roughpath_json(const nlohmann::json& j, const std::string& origin) {
  if (!j.is_object()) throw SchemaError(origin + ": expected an object");
  for (const char* key : {"alpha", "p", "times", "samples"})
    if (!j.contains(key)) throw SchemaError(origin + ": missing key '" + std::string(key) + "'");
  if (!j["alpha"].is_number()) throw SchemaError(origin + ": 'alpha' must be a number");
  RawRoughInput in;
  in.alpha = j["alpha"].get<double>();
  if (!(in.alpha > 1.0 / 3.0 && in.alpha <= 0.5))
    throw SchemaError(origin + ": 'alpha' must lie in (1/3, 1/2]");
  in.norms = HomNorms(p_from_json(j["p"], origin));
  if (!j["times"].is_array() || !j["samples"].is_array())
    throw SchemaError(origin + ": 'times' and 'samples' must be arrays");
  if (j["times"].size() != j["samples"].size())
    throw SchemaError(origin + ": 'times' and 'samples' differ in length");
  if (j["times"].size() < 2) throw SchemaError(origin + ": need at least two samples");
  for (std::size_t i = 0; i < j["times"].size(); ++i) {
    if (!j["times"][i].is_number()) throw SchemaError(origin + ": 'times' entries must be numbers");
    in.raw.times.push_back(j["times"][i].get<double>());
    if (i && !(in.raw.times[i] > in.raw.times[i - 1]))
      throw SchemaError(origin + ": 'times' must be strictly increasing");
  }
  int dim = -1;
  for (std::size_t i = 0; i < j["samples"].size(); ++i) {
    const nlohmann::json& s = j["samples"][i];
    const std::string where = origin + ": sample " + std::to_string(i);
    if (!s.is_object()) throw SchemaError(where + ": expected an object");
    for (const char* key : {"dim", "a", "A"})
      if (!s.contains(key)) throw SchemaError(where + ": missing key '" + std::string(key) + "'");
    if (!s["dim"].is_number_integer()) throw SchemaError(where + ": 'dim' must be an integer");
    const int d = s["dim"].get<int>();
    if (d < 1) throw SchemaError(where + ": 'dim' must be >= 1");
    if (dim < 0) dim = d;
    if (d != dim) throw SchemaError(origin + ": samples of mixed dimension");
    Vec a = detail::vec_from_json(s["a"], where + ": 'a'");
    if (a.size() != d) throw SchemaError(where + ": 'a' has length != dim");
    Mat A = detail::mat_from_json(s["A"], d, where + ": 'A'");
    in.raw.as.push_back(a);
    in.raw.M2s.push_back(Mat(A + 0.5 * a * a.transpose()));
  }
  // rebase so a_0 = M_0 = 0 (signature coordinates are increment data)
  const Vec a0 = in.raw.as.front();
  const Mat M0 = in.raw.M2s.front();
  for (std::size_t i = 0; i < in.raw.as.size(); ++i) {
    in.raw.M2s[i] = in.raw.M2s[i] - M0 - a0 * (in.raw.as[i] - a0).transpose();
    in.raw.as[i] -= a0;
  }
  return in;
}

inline RawRoughInput load_raw_roughpath(const std::string& path) {
  return raw_from_roughpath_json(detail::parse_json(detail::read_file(path), path), path);
}

inline void save_roughpath(const std::string& path, const RoughPath& x) {
  detail::write_file(path, to_json(x) + "\n");
}

// ----------------------------------------------------------------- spectrum

inline std::string to_json(const SkewSpectrum& sp) {
  std::string s = "{\"sigmas\":[";
  for (std::size_t i = 0; i < sp.sigmas.size(); ++i) {
    if (i) s += ",";
    s += fmt17(sp.sigmas[i]);
  }
  s += "],\"planes\":[";
  for (std::size_t i = 0; i < sp.planes.size(); ++i) {
    if (i) s += ",";
    s += "{\"X\":" + detail::json_vec(sp.planes[i].first) +
         ",\"Y\":" + detail::json_vec(sp.planes[i].second) + "}";
  }
  return s + "]}";
}

// --------------------------------------------------------------------- CSV

// header t,x1,...,xd; one row per vertex
inline std::string to_csv(const PLPath& path) {
  const int d = path.dim();
  std::string s = "t";
  for (int i = 1; i <= d; ++i) s += ",x" + std::to_string(i);
  s += "\n";
  for (std::size_t r = 0; r < path.times.size(); ++r)
    s += fmt17(path.times[r]) + "," + detail::join17(path.points[r]) + "\n";
  return s;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline double parse_double(const std::string& s, const std::string& origin, std::size_t lineno) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw IoError(origin + ":" + std::to_string(lineno) + ": bad numeric field '" + s + "'");
  }
}

}  // namespace detail

inline PLPath plpath_from_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError(origin + ": empty file");
  std::vector<std::string> head = detail::split_csv_line(line);
  if (head.size() < 2 || head[0] != "t")
    throw SchemaError(origin + ": header must be t,x1,...,xd");
  const int d = static_cast<int>(head.size()) - 1;
  for (int i = 0; i < d; ++i)
    if (head[i + 1] != "x" + std::to_string(i + 1))
      throw SchemaError(origin + ": header must be t,x1,...,xd");
  PLPath path;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f = detail::split_csv_line(line);
    if (static_cast<int>(f.size()) != d + 1)
      throw IoError(origin + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(d + 1) + " fields, got " + std::to_string(f.size()));
    path.times.push_back(detail::parse_double(f[0], origin, lineno));
    Vec p(d);
    for (int i = 0; i < d; ++i) p(i) = detail::parse_double(f[i + 1], origin, lineno);
    path.points.push_back(p);
  }
  try {
    path.validate();
  } catch (const Error& e) {
    throw SchemaError(origin + ": " + e.what());
  }
  return path;
}

inline PLPath load_plpath(const std::string& path) {
  return plpath_from_csv(detail::read_file(path), path);
}

inline void save_plpath(const std::string& path, const PLPath& p) {
  detail::write_file(path, to_csv(p));
}

// mesh,param,d_beta,sup_d,seconds -- the seconds column is wall time and is
// exempt from byte-for-byte determinism; everything else is reproducible.
inline std::string to_csv(const ConvergenceReport& rep) {
  std::string s = "mesh,param,d_beta,sup_d,seconds\n";
  for (const ConvergenceRow& r : rep.rows)
    s += fmt17(r.mesh) + "," + fmt17(r.param) + "," + fmt17(r.d_beta) + "," +
         fmt17(r.sup_d) + "," + fmt17(r.seconds) + "\n";
  return s;
}

// mesh,y0_index,sup_err
inline std::string to_csv(const WzReport& rep) {
  std::string s = "mesh,y0_index,sup_err\n";
  for (const WzRow& r : rep.rows)
    s += fmt17(r.mesh) + "," + std::to_string(r.y0_index) + "," + fmt17(r.sup_err) + "\n";
  return s;
}

}  // namespace roughcc
