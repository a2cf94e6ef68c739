#include "bohr/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace bohr {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError((path.empty() ? std::string("<root>") : path) + ": " + msg);
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string key(const std::string& path, const char* k) {
  return path.empty() ? std::string(k) : path + "." + k;
}

const json& require_key(const json& j, const char* k, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(k);
  if (it == j.end()) fail(path, std::string("missing key '") + k + "'");
  return *it;
}

Index index_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) fail(path, "expected a positive integer");
  return static_cast<Index>(j.get<long long>());
}

json reals_to_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& path) {
  if (j.is_number()) {
    const double re = j.get<double>();
    if (!std::isfinite(re)) fail(path, "non-finite value");
    return Complex(re, 0.0);
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(path, "expected a complex number [re, im]");
  }
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(path, "non-finite value");
  return z;
}

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::object();
  if (m.rows() == m.cols()) {
    out["dim"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& path) {
  const json& entries = require_key(j, "entries", path);
  const std::string epath = key(path, "entries");
  if (!entries.is_array() || entries.empty()) fail(epath, "expected a nonempty array of rows");
  if (!entries[0].is_array() || entries[0].empty()) fail(at(epath, 0), "expected a nonempty row");

  const auto rows = static_cast<Index>(entries.size());
  const auto cols = static_cast<Index>(entries[0].size());
  if (j.contains("dim")) {
    const Index dim = index_from_json(j["dim"], key(path, "dim"));
    if (dim != rows || dim != cols) {
      fail(path, "'dim' = " + std::to_string(dim) + " does not match a " + std::to_string(rows) +
                     "x" + std::to_string(cols) + " entries array");
    }
  }
  if (j.contains("rows") && index_from_json(j["rows"], key(path, "rows")) != rows) {
    fail(path, "'rows' does not match the entries array");
  }
  if (j.contains("cols") && index_from_json(j["cols"], key(path, "cols")) != cols) {
    fail(path, "'cols' does not match the entries array");
  }

  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    const std::string rpath = at(epath, static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      fail(rpath, "expected a row of " + std::to_string(cols) + " entries");
    }
    for (Index k = 0; k < cols; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                  at(rpath, static_cast<std::size_t>(k)));
    }
  }
  return m;
}

HermitianMatrix hermitian_from_json(const json& j, const std::string& path) {
  const ComplexMatrix m = matrix_from_json(j, path);
  if (m.rows() != m.cols()) fail(path, "expected a square matrix");
  try {
    return HermitianMatrix::from(m);
  } catch (const PreconditionError& e) {
    throw PreconditionError((path.empty() ? std::string("<root>") : path) + ": " + e.what());
  }
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of [re, im]");
  ComplexVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = complex_from_json(j[i], at(path, i));
  }
  return v;
}

double real_from_json(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "non-finite value");
  return x;
}

std::vector<double> reals_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real_from_json(j[i], at(path, i)));
  return out;
}

json map_to_json(const PositiveMap& phi) {
  json data = json::array();
  if (phi.kind() == PositiveMap::Kind::congruence) {
    data.push_back(matrix_to_json(*phi.congruence_factor()));
    return json{{"kind", "congruence"}, {"data", std::move(data)}};
  }
  for (const auto& v : phi.kraus()) data.push_back(matrix_to_json(v));
  return json{{"kind", "kraus"}, {"data", std::move(data)}};
}

PositiveMap map_from_json(const json& j, const std::string& path) {
  const json& kind = require_key(j, "kind", path);
  const json& data = require_key(j, "data", path);
  const std::string dpath = key(path, "data");
  if (!kind.is_string()) fail(key(path, "kind"), "expected \"kraus\" or \"congruence\"");
  if (!data.is_array() || data.empty()) fail(dpath, "expected a nonempty array of matrices");

  std::vector<ComplexMatrix> mats;
  for (std::size_t i = 0; i < data.size(); ++i) {
    mats.push_back(matrix_from_json(data[i], at(dpath, i)));
  }
  const auto tag = kind.get<std::string>();
  if (tag != "congruence" && tag != "kraus") {
    fail(key(path, "kind"), "unknown map kind '" + tag + "'");
  }
  if (tag == "congruence" && mats.size() != 1) {
    fail(dpath, "a congruence map takes exactly one matrix X");
  }
  try {
    if (tag == "congruence") return congruence_map(mats.front());
    return PositiveMap(std::move(mats));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

json field_to_json(const WeightedField& field) {
  json entries = json::array();
  for (const auto& entry : field.entries()) {
    entries.push_back(json{{"mu", entry.mu},
                           {"alpha", entry.alpha},
                           {"A", matrix_to_json(entry.a.matrix())},
                           {"phi", map_to_json(entry.phi)}});
  }
  return json{{"entries", std::move(entries)}};
}

WeightedField field_from_json(const json& j) {
  const json& entries = require_key(j, "entries", "");
  if (!entries.is_array() || entries.empty()) fail("entries", "expected a nonempty array");
  std::vector<FieldEntry> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string p = at("entries", i);
    const json& e = entries[i];
    const double mu = e.contains("mu") ? real_from_json(e["mu"], key(p, "mu")) : 1.0;
    const double alpha = real_from_json(require_key(e, "alpha", p), key(p, "alpha"));
    HermitianMatrix a = hermitian_from_json(require_key(e, "A", p), key(p, "A"));
    PositiveMap phi = e.contains("phi") ? map_from_json(e["phi"], key(p, "phi"))
                                        : PositiveMap::identity(a.dim());
    out.push_back(FieldEntry{mu, alpha, std::move(a), std::move(phi)});
  }
  return WeightedField(std::move(out));
}

json jensen_terms_to_json(std::span<const JensenTerm> terms) {
  json entries = json::array();
  for (const auto& t : terms) {
    entries.push_back(json{{"mu", t.mu},
                           {"beta", t.beta},
                           {"A", matrix_to_json(t.a.matrix())},
                           {"phi", map_to_json(t.phi)}});
  }
  return json{{"entries", std::move(entries)}};
}

std::vector<JensenTerm> jensen_terms_from_json(const json& j) {
  const json& entries = require_key(j, "entries", "");
  if (!entries.is_array() || entries.empty()) fail("entries", "expected a nonempty array");
  std::vector<JensenTerm> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string p = at("entries", i);
    const json& e = entries[i];
    const double mu = e.contains("mu") ? real_from_json(e["mu"], key(p, "mu")) : 1.0;
    const char* weight_key = e.contains("beta") ? "beta" : "alpha";
    const double beta = real_from_json(require_key(e, weight_key, p), key(p, weight_key));
    HermitianMatrix a = hermitian_from_json(require_key(e, "A", p), key(p, "A"));
    PositiveMap phi = e.contains("phi") ? map_from_json(e["phi"], key(p, "phi"))
                                        : PositiveMap::identity(a.dim());
    out.push_back(JensenTerm{mu, beta, std::move(a), std::move(phi)});
  }
  return out;
}

json report_to_json(const InequalityReport& report) {
  const ReportContext& ctx = report.context;
  json dims = json::array();
  for (Index d : ctx.dims) dims.push_back(d);
  return json{{"context", ctx.label},
              {"r", ctx.r ? json(*ctx.r) : json(nullptr)},
              {"alpha", reals_to_json(ctx.alpha)},
              {"dims", std::move(dims)},
              {"seed", ctx.seed ? json(*ctx.seed) : json(nullptr)},
              {"min_gap_eigenvalue", report.min_gap()},
              {"verdict", report.holds()},
              {"tolerance", report.tolerance()},
              {"gap_spectrum", reals_to_json(report.gap_spectrum)},
              {"near_equality", report.near_equality()}};
}

json scalar_report_to_json(const ScalarReport& report) {
  json z = json::array();
  for (const auto& zi : report.z) z.push_back(complex_to_json(zi));
  json out{{"context", report.label},
           {"lhs", report.lhs},
           {"rhs", report.rhs},
           {"gap", report.gap},
           {"verdict", report.verdict},
           {"tolerance", report.tolerance},
           {"near_equality", report.near_equality()},
           {"r", report.r},
           {"alpha", reals_to_json(report.alpha)},
           {"z", std::move(z)}};
  if (report.cross_check_rhs) out["cross_check_rhs"] = *report.cross_check_rhs;
  return out;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << source << ": parse error at byte " << e.byte << ": " << e.what();
    throw InputError(os.str());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace bohr
