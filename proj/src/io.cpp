#include "tudim/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tudim/polytope.hpp"

namespace tudim {

namespace {

std::string next_token(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument("matrix format: unexpected end of input");
  return tok;
}

std::pair<int, int> read_header(std::istream& in) {
  long long m, n;
  if (!(in >> m >> n) || m < 0 || n < 0 || m > 100000 || n > 100000)
    throw std::invalid_argument("matrix format: bad 'm n' header");
  return {static_cast<int>(m), static_cast<int>(n)};
}

}  // namespace

IntMatrix read_int_matrix(std::istream& in) {
  auto [m, n] = read_header(in);
  IntMatrix out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = parse_int(next_token(in));
  return out;
}

RatMatrix read_rat_matrix(std::istream& in) {
  auto [m, n] = read_header(in);
  RatMatrix out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = parse_rat(next_token(in));
  return out;
}

template <typename M>
static void write_matrix_impl(std::ostream& out, const M& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const IntMatrix& m) { write_matrix_impl(out, m); }
void write_matrix(std::ostream& out, const RatMatrix& m) { write_matrix_impl(out, m); }

HPolyhedron read_instance(std::istream& in) {
  HPolyhedron p;
  p.a = read_int_matrix(in);
  p.b.resize(p.a.rows());
  for (int i = 0; i < p.a.rows(); ++i) p.b[i] = parse_int(next_token(in));
  auto read_bound_line = [&](bool lower) {
    std::vector<std::optional<Int>> out(p.a.cols());
    for (int j = 0; j < p.a.cols(); ++j) {
      std::string tok = next_token(in);
      if (tok == "inf" || tok == "-inf") {
        bool ok = lower ? (tok == "-inf") : (tok == "inf");
        if (!ok) throw std::invalid_argument("instance: wrong infinity sign in bounds");
        out[j] = std::nullopt;
      } else {
        out[j] = parse_int(tok);
      }
    }
    return out;
  };
  p.lb = read_bound_line(true);
  p.ub = read_bound_line(false);
  p.validate();
  return p;
}

void write_instance(std::ostream& out, const HPolyhedron& p) {
  write_matrix(out, p.a);
  for (int i = 0; i < p.a.rows(); ++i) {
    if (i) out << ' ';
    out << to_string(p.b[i]);
  }
  out << '\n';
  for (int j = 0; j < p.a.cols(); ++j) {
    if (j) out << ' ';
    out << (p.lb[j] ? to_string(*p.lb[j]) : std::string("-inf"));
  }
  out << '\n';
  for (int j = 0; j < p.a.cols(); ++j) {
    if (j) out << ' ';
    out << (p.ub[j] ? to_string(*p.ub[j]) : std::string("inf"));
  }
  out << '\n';
}

template <typename M>
static nlohmann::json matrix_to_json_impl(const M& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(to_string(m(i, jj)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::json matrix_to_json(const IntMatrix& m) { return matrix_to_json_impl(m); }
nlohmann::json matrix_to_json(const RatMatrix& m) { return matrix_to_json_impl(m); }

namespace {

template <typename T, typename Parse>
Matrix<T> matrix_from_json_impl(const nlohmann::json& j, Parse parse) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) throw std::invalid_argument("json matrix: row count mismatch");
  Matrix<T> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries[i];
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("json matrix: col count mismatch");
    for (int c = 0; c < cols; ++c) m(i, c) = parse(row[c].get<std::string>());
  }
  return m;
}

}  // namespace

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  return matrix_from_json_impl<Int>(j, [](const std::string& s) { return parse_int(s); });
}
RatMatrix rat_matrix_from_json(const nlohmann::json& j) {
  return matrix_from_json_impl<Rat>(j, [](const std::string& s) { return parse_rat(s); });
}

nlohmann::json vector_to_json(const IntVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}
nlohmann::json vector_to_json(const RatVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}
IntVector int_vector_from_json(const nlohmann::json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(parse_int(x.get<std::string>()));
  return v;
}
RatVector rat_vector_from_json(const nlohmann::json& j) {
  RatVector v;
  for (const auto& x : j) v.push_back(parse_rat(x.get<std::string>()));
  return v;
}

nlohmann::json polyhedron_to_json(const HPolyhedron& p) {
  nlohmann::json j;
  j["A"] = matrix_to_json(p.a);
  j["b"] = vector_to_json(p.b);
  nlohmann::json lb = nlohmann::json::array(), ub = nlohmann::json::array();
  for (int c = 0; c < p.num_vars(); ++c) {
    lb.push_back(p.lb[c] ? to_string(*p.lb[c]) : std::string("-inf"));
    ub.push_back(p.ub[c] ? to_string(*p.ub[c]) : std::string("inf"));
  }
  j["lb"] = std::move(lb);
  j["ub"] = std::move(ub);
  return j;
}

HPolyhedron polyhedron_from_json(const nlohmann::json& j) {
  HPolyhedron p;
  p.a = int_matrix_from_json(j.at("A"));
  p.b = int_vector_from_json(j.at("b"));
  p.lb.assign(p.a.cols(), std::nullopt);
  p.ub.assign(p.a.cols(), std::nullopt);
  if (j.contains("lb")) {
    const auto& lb = j.at("lb");
    for (int c = 0; c < p.a.cols() && c < static_cast<int>(lb.size()); ++c) {
      std::string s = lb[c].get<std::string>();
      if (s != "-inf") p.lb[c] = parse_int(s);
    }
  }
  if (j.contains("ub")) {
    const auto& ub = j.at("ub");
    for (int c = 0; c < p.a.cols() && c < static_cast<int>(ub.size()); ++c) {
      std::string s = ub[c].get<std::string>();
      if (s != "inf") p.ub[c] = parse_int(s);
    }
  }
  p.validate();
  return p;
}

}  // namespace tudim
