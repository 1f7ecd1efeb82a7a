#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dgmf/cli.hpp"
#include "dgmf/errors.hpp"

namespace dgmf {

using ojson = nlohmann::ordered_json;

namespace {

const ojson& require(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string as_string(const ojson& j, const std::string& what) {
  if (!j.is_string()) throw SchemaError(what + " must be a string");
  return j.get<std::string>();
}

std::size_t as_index(const ojson& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw SchemaError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Poly poly_of(const ojson& j, const RingPtr& R, const std::string& what) {
  return parse_poly(as_string(j, what), R);
}

ojson matrix_rows(const PolyMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix matrix_of(const ojson& j, const RingPtr& R, std::size_t rows, std::size_t cols,
                     const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array of rows");
  if (j.size() != rows)
    throw ShapeMismatch(what + " has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  PolyMatrix m(R, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const ojson& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ShapeMismatch(what + " row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = poly_of(row[c], R, what);
  }
  return m;
}

std::vector<std::size_t> index_list(const ojson& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(as_index(v, what));
  return out;
}

Field field_of(const ojson& j) {
  std::size_t p = as_index(require(j, "characteristic"), "characteristic");
  if (p == 0) return Field::rationals();
  return Field::prime(p);
}

}  // namespace

BundleFile parse_bundle(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("bundle must be a JSON object");

  Field F = field_of(require(j, "field"));
  std::vector<std::string> vars;
  const ojson& jv = require(j, "variables");
  if (!jv.is_array() || jv.empty()) throw SchemaError("variables must be a non-empty array");
  for (const auto& v : jv) vars.push_back(as_string(v, "variable"));
  RingPtr R = make_ring(F, vars);

  std::vector<Poly> a;
  const ojson& ja = require(j, "a");
  if (!ja.is_array()) throw SchemaError("a must be an array");
  for (const auto& p : ja) a.push_back(poly_of(p, R, "a"));
  if (a.size() != 4) throw WrongLength("a must have 4 entries, got " + std::to_string(a.size()));
  Poly f = poly_of(require(j, "f"), R, "f");

  const ojson& jm = require(j, "M");
  std::vector<std::size_t> ranks = index_list(require(jm, "ranks"), "ranks");
  if (ranks.size() != 5) throw WrongLength("ranks must have 5 entries");
  const ojson& jd = require(jm, "differentials");
  if (!jd.is_array() || jd.size() != 4) throw WrongLength("differentials must list d_1..d_4");
  std::vector<PolyMatrix> diffs;
  for (std::size_t i = 1; i <= 4; ++i)
    diffs.push_back(matrix_of(jd[i - 1], R, ranks[i - 1], ranks[i], "d_" + std::to_string(i)));
  FreeComplex C(R, ranks, diffs);

  Poly orientation = poly_of(require(jm, "orientation"), R, "orientation");
  std::vector<std::size_t> s11 = index_list(require(jm, "split11"), "split11");
  std::vector<std::size_t> s12 = index_list(require(jm, "split12"), "split12");
  for (std::size_t v : s11)
    if (v >= ranks[1]) throw ShapeMismatch("split11 index out of range");
  for (std::size_t v : s12)
    if (v >= ranks[1]) throw ShapeMismatch("split12 index out of range");

  BundleFile out{LinkageInput{R, a, f, empty_bundle(C, orientation, s11, s12), {}}, jm.contains("mult")};
  DgaBundle& B = out.input.M;
  if (out.has_multiplication) {
    const ojson& mult = jm.at("mult");
    if (!mult.is_object()) throw SchemaError("mult must be an object");
    for (auto it = mult.begin(); it != mult.end(); ++it) {
      int i, jdeg;
      std::size_t s, t;
      char c1, c2, c3;
      std::istringstream key(it.key());
      if (!(key >> i >> c1 >> jdeg >> c2 >> s >> c3 >> t) || c1 != ',' || c2 != ':' || c3 != ',' ||
          key.peek() != std::char_traits<char>::eof())
        throw SchemaError("mult key '" + it.key() + "' is not of the form i,j:s,t");
      if (i < 1 || jdeg < 1 || i + jdeg > 4) throw SchemaError("mult key '" + it.key() + "' has bad degrees");
      if (s >= ranks[static_cast<std::size_t>(i)] || t >= ranks[static_cast<std::size_t>(jdeg)])
        throw ShapeMismatch("mult key '" + it.key() + "' indexes outside the basis");
      const ojson& col = it.value();
      std::size_t len = ranks[static_cast<std::size_t>(i + jdeg)];
      if (!col.is_array() || col.size() != len)
        throw ShapeMismatch("mult entry '" + it.key() + "' must have " + std::to_string(len) + " entries");
      PolyMatrix& mu = B.mu(i, jdeg);
      for (std::size_t k = 0; k < len; ++k)
        mu(k, s * ranks[static_cast<std::size_t>(jdeg)] + t) = poly_of(col[k], R, "mult");
    }
    if (jm.contains("sq2")) {
      const ojson& sq = jm.at("sq2");
      if (!sq.is_array() || sq.size() != ranks[2]) throw ShapeMismatch("sq2 must have rank M_2 entries");
      for (std::size_t q = 0; q < ranks[2]; ++q) B.sq2[q] = poly_of(sq[q], R, "sq2");
    } else {
      autofill_divided_squares(B);
    }
  }

  if (j.contains("options")) {
    const ojson& o = j.at("options");
    LinkageOptions& opt = out.input.options;
    if (o.contains("skip_regularity_check")) opt.skip_regularity_check = o.at("skip_regularity_check").get<bool>();
    if (o.contains("retry_budget")) opt.retry_budget = o.at("retry_budget").get<int>();
    if (o.contains("kernel_checks")) opt.kernel_checks = o.at("kernel_checks").get<bool>();
  }
  return out;
}

BundleFile load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str());
}

std::string emit_bundle(const BundleFile& b) {
  const LinkageInput& in = b.input;
  const DgaBundle& M = in.M;
  ojson j;
  j["field"] = {{"characteristic", in.ring->field().characteristic()}};
  j["variables"] = in.ring->variables();
  ojson a = ojson::array();
  for (const Poly& p : in.a) a.push_back(p.to_string());
  j["a"] = a;
  j["f"] = in.f.to_string();

  ojson m;
  std::vector<std::size_t> ranks;
  for (int i = 0; i <= 4; ++i) ranks.push_back(M.rank(i));
  m["ranks"] = ranks;
  ojson diffs = ojson::array();
  for (int i = 1; i <= 4; ++i) diffs.push_back(matrix_rows(M.d(i)));
  m["differentials"] = diffs;
  m["orientation"] = M.orientation.to_string();
  m["split11"] = M.split11;
  m["split12"] = M.split12;
  if (b.has_multiplication) {
    ojson mult = ojson::object();
    for (int i = 1; i <= 3; ++i)
      for (int jd = 1; i + jd <= 4; ++jd) {
        const PolyMatrix& mu = M.mu(i, jd);
        for (std::size_t s = 0; s < M.rank(i); ++s)
          for (std::size_t t = 0; t < M.rank(jd); ++t) {
            std::vector<Poly> col = mu.col(s * M.rank(jd) + t);
            bool zero = true;
            for (const Poly& p : col) zero = zero && p.is_zero();
            if (zero) continue;
            ojson c = ojson::array();
            for (const Poly& p : col) c.push_back(p.to_string());
            mult[std::to_string(i) + "," + std::to_string(jd) + ":" + std::to_string(s) + "," +
                 std::to_string(t)] = c;
          }
      }
    m["mult"] = mult;
    ojson sq = ojson::array();
    for (const Poly& p : M.sq2) sq.push_back(p.to_string());
    m["sq2"] = sq;
  }
  j["M"] = m;
  j["options"] = {{"skip_regularity_check", in.options.skip_regularity_check},
                  {"retry_budget", in.options.retry_budget},
                  {"kernel_checks", in.options.kernel_checks}};
  return j.dump(1) + "\n";
}

std::string emit_matrix(const PolyMatrix& m) {
  ojson j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = matrix_rows(m);
  return j.dump(1) + "\n";
}

PolyMatrix parse_matrix(const std::string& text, const RingPtr& ring) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return matrix_of(require(j, "entries"), ring, as_index(require(j, "rows"), "rows"),
                   as_index(require(j, "cols"), "cols"), "matrix");
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace dgmf
