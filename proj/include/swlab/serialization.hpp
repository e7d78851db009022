#pragma once

// Text and JSON exchange formats. Scalars are always written in the ring's
// canonical text form.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "swlab/algebra_analysis.hpp"
#include "swlab/canonical_map.hpp"
#include "swlab/polyrep.hpp"

namespace swlab {

using Json = nlohmann::ordered_json;

// Matrix text: header "ring rows cols", then one row per line. Ring names
// may contain spaces ("GF(2^2; 1,1)"), so the last two header tokens are the
// sizes and the rest is the ring.

inline void write_matrix(std::ostream& os, const Ring& ring, const Matrix<Elem>& m) {
  os << ring.name() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << ring.format(m(i, j));
    os << '\n';
  }
}

inline void write_matrix(std::ostream& os, const Matrix<Int>& m) {
  os << "Z " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

namespace detail {
struct MatrixHeader {
  Ring ring;
  std::size_t rows, cols;
};

inline MatrixHeader read_header(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) fail(Errc::parse_error, "missing matrix header");
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  for (std::string t; ss >> t;) tokens.push_back(t);
  if (tokens.size() < 3) fail(Errc::parse_error, "matrix header needs 'ring rows cols'");
  auto size = [](const std::string& t) {
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      fail(Errc::parse_error, "bad matrix size '" + t + "'");
    return static_cast<std::size_t>(std::stoul(t));
  };
  std::string ring;
  for (std::size_t i = 0; i + 2 < tokens.size(); ++i) ring += (i ? " " : "") + tokens[i];
  return {Ring::parse(ring), size(tokens[tokens.size() - 2]), size(tokens.back())};
}

inline std::vector<std::string> read_row(std::istream& is, std::size_t cols) {
  std::string line;
  if (!std::getline(is, line)) fail(Errc::parse_error, "missing matrix row");
  std::vector<std::string> out;
  std::istringstream ss(line);
  for (std::string t; ss >> t;) out.push_back(t);
  if (out.size() != cols) fail(Errc::parse_error, "matrix row has " + std::to_string(out.size()) + " entries");
  return out;
}
}  // namespace detail

inline std::pair<Ring, Matrix<Elem>> read_matrix(std::istream& is) {
  auto h = detail::read_header(is);
  if (!h.ring.is_finite()) fail(Errc::parse_error, "use read_int_matrix for Z");
  Matrix<Elem> m(h.rows, h.cols);
  for (std::size_t i = 0; i < h.rows; ++i) {
    auto row = detail::read_row(is, h.cols);
    for (std::size_t j = 0; j < h.cols; ++j) m(i, j) = h.ring.parse_elem(row[j]);
  }
  return {h.ring, std::move(m)};
}

inline Matrix<Int> read_int_matrix(std::istream& is) {
  auto h = detail::read_header(is);
  if (h.ring.is_finite()) fail(Errc::not_integers, "matrix is over " + h.ring.name());
  Matrix<Int> m(h.rows, h.cols);
  for (std::size_t i = 0; i < h.rows; ++i) {
    auto row = detail::read_row(is, h.cols);
    for (std::size_t j = 0; j < h.cols; ++j) {
      try {
        m(i, j) = Int(row[j]);
      } catch (const std::exception&) {
        fail(Errc::parse_error, "bad integer '" + row[j] + "'");
      }
    }
  }
  return m;
}

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::parse_error, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(Errc::parse_error, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

inline Elem scalar_of(const Ring& ring, const Json& v) {
  if (v.is_string()) return ring.parse_elem(v.get<std::string>());
  if (v.is_number_integer()) return ring.from_int(v.get<std::int64_t>());
  fail(Errc::parse_error, "scalar must be a string or integer");
}
}  // namespace detail

inline Json to_json(const PolyRepSpec& spec) {
  MultisetBasis basis(spec.n * spec.n, spec.d);
  Json family = Json::array();
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    Json y = Json::array();
    auto m = family_matrix(spec, idx);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(spec.ring.format(m(i, j)));
      y.push_back(std::move(row));
    }
    family.push_back({{"nu", basis[idx]}, {"Y", std::move(y)}});
  }
  return {{"ring", spec.ring.name()}, {"n", spec.n}, {"d", spec.d}, {"dimV", spec.dimV}, {"family", std::move(family)}};
}

inline PolyRepSpec polyrep_from_json(const Json& j) {
  Ring ring = Ring::parse(detail::field(j, "ring").get<std::string>());
  const int n = detail::int_field(j, "n"), d = detail::int_field(j, "d"), dimV = detail::int_field(j, "dimV");
  if (n < 1 || d < 0 || dimV < 0) fail(Errc::bad_parameters, "need n >= 1, d >= 0, dimV >= 0");
  MultisetBasis basis(n * n, d);
  const Json& family = detail::field(j, "family");
  if (!family.is_array() || family.size() != basis.size())
    fail(Errc::dimension_mismatch, "family needs one entry per multiset index");
  std::vector<Matrix<Elem>> ys;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const Json& item = family[idx];
    if (detail::field(item, "nu").get<MultisetIndex>() != basis[idx])
      fail(Errc::parse_error, "family entries must follow the canonical multiset order");
    const Json& y = detail::field(item, "Y");
    const auto v = static_cast<std::size_t>(dimV);
    if (!y.is_array() || y.size() != v) fail(Errc::dimension_mismatch, "Y must have dimV rows");
    Matrix<Elem> m(v, v);
    for (std::size_t r = 0; r < v; ++r) {
      if (!y[r].is_array() || y[r].size() != v) fail(Errc::dimension_mismatch, "Y must have dimV columns");
      for (std::size_t c = 0; c < v; ++c) m(r, c) = detail::scalar_of(ring, y[r][c]);
    }
    ys.push_back(std::move(m));
  }
  return make_polyrep(ring, n, d, dimV, std::move(ys));
}

inline Json to_json(const PolynomialMatrixSpec& spec) {
  Json entries = Json::array();
  for (const auto& e : spec.entries) {
    Json monos = Json::array();
    for (const auto& m : e.monomials) {
      Json exps = Json::array();
      for (auto [r, s, x] : m.exps) exps.push_back({r, s, x});
      monos.push_back({{"exps", std::move(exps)}, {"coeff", spec.ring.format(m.coeff)}});
    }
    entries.push_back({{"i", e.i}, {"j", e.j}, {"monomials", std::move(monos)}});
  }
  return {{"ring", spec.ring.name()}, {"n", spec.n}, {"d", spec.d}, {"dimV", spec.dimV}, {"entries", std::move(entries)}};
}

inline PolynomialMatrixSpec polynomial_spec_from_json(const Json& j) {
  PolynomialMatrixSpec spec{Ring::parse(detail::field(j, "ring").get<std::string>()), detail::int_field(j, "n"),
                            detail::int_field(j, "d"), detail::int_field(j, "dimV"), {}};
  const Json& entries = detail::field(j, "entries");
  if (!entries.is_array()) fail(Errc::parse_error, "entries must be an array");
  for (const auto& e : entries) {
    PolyEntry entry{detail::int_field(e, "i"), detail::int_field(e, "j"), {}};
    for (const auto& m : detail::field(e, "monomials")) {
      Monomial mono{{}, detail::scalar_of(spec.ring, detail::field(m, "coeff"))};
      for (const auto& x : detail::field(m, "exps")) {
        if (!x.is_array() || x.size() != 3) fail(Errc::parse_error, "exps items are [r, s, e]");
        mono.exps.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>()});
      }
      entry.monomials.push_back(std::move(mono));
    }
    spec.entries.push_back(std::move(entry));
  }
  return spec;
}

inline Json to_json(const AlgebraProfile& p) {
  return {{"dim", p.dim},
          {"commutative", p.commutative},
          {"center_dim", p.center_dim},
          {"radical_dim", p.radical_dim},
          {"ss_dim", p.ss_dim},
          {"block_dims", p.block_dims}};
}

inline Json to_json(const ObstructionCertificate& c) {
  return {{"n", c.n}, {"d", c.d}, {"p", c.p}, {"fp_rank", c.fp_rank}, {"dimS", c.dimS}, {"obstruction", c.obstruction}};
}

inline Json to_json(const SweepRow& r) {
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  Json j = {{"q", r.q},          {"n", r.n},
            {"d", r.d},          {"dimS", opt(r.dimS)},
            {"rank", opt(r.rank)}, {"surjective", opt(r.surjective)},
            {"epi", opt(r.is_epi)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline std::vector<std::string> int_strings(const std::vector<Int>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

/// Multiplication table text: the order N, then N rows of N 0-based indices.
inline std::vector<std::vector<std::size_t>> read_group_table(std::istream& is) {
  long long n = -1;
  if (!(is >> n) || n < 1) fail(Errc::parse_error, "table must start with a positive order");
  check_guard(static_cast<double>(n), 256.0, "group order");
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<std::size_t>> t(N, std::vector<std::size_t>(N));
  for (auto& row : t)
    for (auto& x : row) {
      long long v = -1;
      if (!(is >> v)) fail(Errc::parse_error, "table is truncated");
      if (v < 0 || v >= n) fail(Errc::not_a_group, "table entry " + std::to_string(v) + " out of range");
      x = static_cast<std::size_t>(v);
    }
  return t;
}

}  // namespace swlab
