#pragma once

// Exact coefficient rings: prime fields F_p, extension fields F_{p^e},
// residue rings Z/m and the integers.
//
// Elements of finite rings are carried as 64-bit codes. For F_p and Z/m the
// code is the residue in [0, m). For F_{p^e} it is sum_i c_i p^i over the
// coefficient vector (c_0, ..., c_{e-1}) of the reduced polynomial, so numeric
// code order is the canonical element order (0, 1, x, x+1 for F_4). Integers
// use arbitrary precision and live in `Int`.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swlab/error.hpp"

namespace swlab {

using Int = boost::multiprecision::cpp_int;
using Elem = std::int64_t;

enum class RingKind { prime_field, ext_field, int_mod, integers };

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t f = 3; f * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Extended gcd on machine integers; returns (g, x) with a*x == g (mod m).
inline std::pair<std::int64_t, std::int64_t> gcd_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return {old_r, old_s};
}

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<std::int64_t>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over F_p.
inline Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
  poly_trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    std::int64_t c = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = mod_floor(f[shift + i] - c * g[i], p);
    poly_trim(f);
  }
  return f;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index` (c_0 least significant).
inline Poly monic_from_index(std::int64_t index, int deg, std::int64_t p) {
  Poly f(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  f[static_cast<std::size_t>(deg)] = 1;
  return f;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Irreducibility by exhaustive division by every monic polynomial of degree
// 1..deg/2.
inline bool is_irreducible(const Poly& f, std::int64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= deg; ++k) {
    const std::int64_t count = ipow(p, k);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      if (poly_rem(f, monic_from_index(idx, k, p), p).empty()) return false;
    }
  }
  return true;
}

// The default modulus: least monic irreducible of degree e, comparing the
// coefficient vectors (c_0, ..., c_{e-1}) lexicographically with c_0 first.
inline Poly default_modulus(std::int64_t p, int e) {
  const std::int64_t count = ipow(p, e);
  for (std::int64_t lex = 0; lex < count; ++lex) {
    // lex enumerates vectors with c_0 most significant.
    Poly f(static_cast<std::size_t>(e) + 1, 0);
    std::int64_t rest = lex;
    for (int i = e - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    f[static_cast<std::size_t>(e)] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(Errc::reducible_modulus, "no irreducible polynomial found");
}

struct RingData {
  RingKind kind = RingKind::integers;
  std::int64_t p = 0;  // characteristic for fields
  int e = 1;
  std::int64_t m = 0;  // modulus for Z/m
  std::int64_t q = 0;  // cardinality of finite rings
  Poly modulus;        // ext fields: monic, low-to-high, length e + 1
  // Lookup tables for small extension fields.
  std::vector<std::int32_t> add_table, mul_table, inv_table;
};

}  // namespace detail

class Ring {
 public:
  static Ring prime_field(std::int64_t p) {
    check_guard(static_cast<double>(p), 2147483647.0, "prime field characteristic");
    if (!detail::is_prime(p)) fail(Errc::non_prime, std::to_string(p) + " is not prime");
    auto d = std::make_shared<detail::RingData>();
    d->kind = RingKind::prime_field;
    d->p = p;
    d->m = p;
    d->q = p;
    return Ring(std::move(d));
  }

  /// `modulus` lists c_0..c_{e-1} of the monic modulus; empty selects the
  /// default (least irreducible, c_0 compared first).
  static Ring ext_field(std::int64_t p, int e, std::vector<std::int64_t> modulus = {}) {
    if (!detail::is_prime(p)) fail(Errc::non_prime, std::to_string(p) + " is not prime");
    if (e < 1) fail(Errc::bad_parameters, "extension degree must be positive");
    if (e == 1 && modulus.empty()) return prime_field(p);
    check_guard(e * std::log2(static_cast<double>(p)), 24.0, "extension field size e*log2(p)");
    detail::Poly f;
    if (modulus.empty()) {
      f = detail::default_modulus(p, e);
    } else {
      if (static_cast<int>(modulus.size()) != e)
        fail(Errc::bad_parameters, "modulus needs exactly e coefficients");
      f = modulus;
      for (auto& c : f) {
        if (c < 0 || c >= p) fail(Errc::bad_parameters, "modulus coefficient out of range");
      }
      f.push_back(1);
      if (!detail::is_irreducible(f, p)) fail(Errc::reducible_modulus, "modulus is reducible");
    }
    auto d = std::make_shared<detail::RingData>();
    d->kind = RingKind::ext_field;
    d->p = p;
    d->e = e;
    d->m = p;
    d->q = detail::ipow(p, e);
    d->modulus = std::move(f);
    Ring r(d);
    if (d->q <= 256) r.build_tables(*d);
    return r;
  }

  static Ring int_mod(std::int64_t m) {
    if (m < 2) fail(Errc::modulus_too_small, "Z/" + std::to_string(m));
    check_guard(static_cast<double>(m), 2147483647.0, "residue ring modulus");
    auto d = std::make_shared<detail::RingData>();
    d->kind = RingKind::int_mod;
    d->m = m;
    d->q = m;
    d->p = 0;
    return Ring(std::move(d));
  }

  static Ring integers() {
    static const Ring z(std::make_shared<detail::RingData>());
    return z;
  }

  /// Field of q elements, q a prime power.
  static Ring finite_field(std::int64_t q) {
    if (q < 2) fail(Errc::non_prime, "F" + std::to_string(q));
    check_guard(static_cast<double>(q), 2147483647.0, "field size");
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    std::int64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) fail(Errc::non_prime, std::to_string(q) + " is not a prime power");
    return e == 1 ? prime_field(p) : ext_field(p, e);
  }

  /// Parses "F5", "F9", "Z/6", "Z" and "GF(p^e; c_0,...,c_{e-1})".
  static Ring parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    auto to_int = [&](std::string_view part) {
      if (part.empty() || !std::all_of(part.begin(), part.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        fail(Errc::parse_error, "bad ring description '" + std::string(text) + "'");
      if (part.size() > 12) fail(Errc::guard_exceeded, "ring parameter too large");
      return std::stoll(std::string(part));
    };
    if (s == "Z") return integers();
    if (s.rfind("Z/", 0) == 0) return int_mod(to_int(std::string_view(s).substr(2)));
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
      std::string body = s.substr(3, s.size() - 4);
      auto caret = body.find('^');
      auto semi = body.find(';');
      if (caret == std::string::npos || semi == std::string::npos || semi < caret)
        fail(Errc::parse_error, "bad ring description '" + std::string(text) + "'");
      std::int64_t p = to_int(std::string_view(body).substr(0, caret));
      int e = static_cast<int>(to_int(std::string_view(body).substr(caret + 1, semi - caret - 1)));
      std::vector<std::int64_t> coeffs;
      std::stringstream ss(body.substr(semi + 1));
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(to_int(item));
      if (coeffs.empty()) fail(Errc::parse_error, "missing modulus coefficients");
      if (e == 1) {
        Ring r = prime_field(p);
        return r;
      }
      return ext_field(p, e, coeffs);
    }
    if (s.size() > 1 && s[0] == 'F') return finite_field(to_int(std::string_view(s).substr(1)));
    fail(Errc::parse_error, "bad ring description '" + std::string(text) + "'");
  }

  RingKind kind() const { return data_->kind; }
  bool is_field() const {
    return data_->kind == RingKind::prime_field || data_->kind == RingKind::ext_field;
  }
  bool is_finite() const { return data_->kind != RingKind::integers; }
  /// p for fields, m for Z/m, 0 for Z.
  std::int64_t characteristic() const { return data_->m; }
  int degree() const { return data_->e; }
  std::int64_t size() const {
    if (!is_finite()) fail(Errc::infinite_ring, "Z is infinite");
    return data_->q;
  }
  /// Modulus coefficients c_0..c_{e-1} (leading 1 omitted); empty unless ext field.
  std::vector<std::int64_t> modulus() const {
    if (data_->kind != RingKind::ext_field) return {};
    return {data_->modulus.begin(), data_->modulus.end() - 1};
  }

  std::string name() const {
    switch (data_->kind) {
      case RingKind::prime_field: return "F" + std::to_string(data_->p);
      case RingKind::int_mod: return "Z/" + std::to_string(data_->m);
      case RingKind::integers: return "Z";
      case RingKind::ext_field: {
        std::string s = "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->e) + "; ";
        for (int i = 0; i < data_->e; ++i) {
          if (i) s += ",";
          s += std::to_string(data_->modulus[static_cast<std::size_t>(i)]);
        }
        return s + ")";
      }
    }
    return "?";
  }

  bool operator==(const Ring& o) const {
    if (data_ == o.data_) return true;
    return data_->kind == o.data_->kind && data_->p == o.data_->p && data_->e == o.data_->e &&
           data_->m == o.data_->m && data_->modulus == o.data_->modulus;
  }

  // Arithmetic on codes of finite rings.

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem from_int(std::int64_t v) const {
    require_finite();
    return detail::mod_floor(v, data_->m);
  }

  Elem add(Elem a, Elem b) const {
    const auto& d = *data_;
    if (d.kind != RingKind::ext_field) {
      Elem s = a + b;
      return s >= d.m ? s - d.m : s;
    }
    if (!d.add_table.empty()) return d.add_table[static_cast<std::size_t>(a * d.q + b)];
    return ext_add(a, b, 1);
  }

  Elem neg(Elem a) const {
    const auto& d = *data_;
    if (d.kind != RingKind::ext_field) return a == 0 ? 0 : d.m - a;
    Elem r = 0, scale = 1;
    for (int i = 0; i < d.e; ++i) {
      Elem c = a % d.p;
      a /= d.p;
      r += (c == 0 ? 0 : d.p - c) * scale;
      scale *= d.p;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    const auto& d = *data_;
    if (d.kind != RingKind::ext_field) return (a * b) % d.m;
    if (!d.mul_table.empty()) return d.mul_table[static_cast<std::size_t>(a * d.q + b)];
    return ext_mul(a, b);
  }

  Elem pow(Elem a, std::uint64_t exp) const {
    Elem r = one();
    while (exp > 0) {
      if (exp & 1U) r = mul(r, a);
      a = mul(a, a);
      exp >>= 1U;
    }
    return r;
  }

  bool is_unit(Elem a) const {
    const auto& d = *data_;
    if (d.kind == RingKind::int_mod) return std::gcd(a, d.m) == 1;
    return a != 0;
  }

  Elem inv(Elem a) const {
    const auto& d = *data_;
    if (!is_unit(a)) fail(Errc::not_a_unit, format(a) + " in " + name());
    if (d.kind == RingKind::ext_field) {
      if (!d.inv_table.empty()) return d.inv_table[static_cast<std::size_t>(a)];
      return pow(a, static_cast<std::uint64_t>(d.q - 2));
    }
    auto [g, x] = detail::gcd_inverse(a, d.m);
    (void)g;
    return detail::mod_floor(x, d.m);
  }

  /// Canonical text: residues in decimal, extension elements as polynomials
  /// in x with descending degree ("2x^2+x+1").
  std::string format(Elem a) const {
    const auto& d = *data_;
    if (d.kind != RingKind::ext_field) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    for (int i = d.e - 1; i >= 0; --i) {
      Elem c = (a / detail::ipow(d.p, i)) % d.p;
      if (c == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c);
      } else {
        if (c != 1) out += std::to_string(c);
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  Elem parse_elem(std::string_view text) const {
    require_finite();
    const auto& d = *data_;
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) fail(Errc::parse_error, "empty scalar");
    auto parse_int = [&](const std::string& t) -> std::int64_t {
      if (t.empty()) fail(Errc::parse_error, "bad scalar '" + std::string(text) + "'");
      std::size_t start = (t[0] == '-') ? 1 : 0;
      if (start == t.size() || t.size() > 18 ||
          !std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        fail(Errc::parse_error, "bad scalar '" + std::string(text) + "'");
      return std::stoll(t);
    };
    if (d.kind != RingKind::ext_field) return from_int(parse_int(s));
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d.e), 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t next = s.find('+', pos + 1);
      std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!term.empty() && term[0] == '+') term.erase(0, 1);
      auto xpos = term.find('x');
      std::int64_t c = 1;
      int deg = 0;
      if (xpos == std::string::npos) {
        c = parse_int(term);
      } else {
        if (xpos > 0) c = parse_int(term.substr(0, xpos));
        deg = 1;
        if (xpos + 1 < term.size()) {
          if (term[xpos + 1] != '^') fail(Errc::parse_error, "bad scalar '" + s + "'");
          deg = static_cast<int>(parse_int(term.substr(xpos + 2)));
        }
      }
      if (deg < 0 || deg >= d.e) fail(Errc::parse_error, "degree out of range in '" + s + "'");
      auto& slot = coeffs[static_cast<std::size_t>(deg)];
      slot = detail::mod_floor(slot + c, d.p);
      if (next == std::string::npos) break;
      pos = next;
    }
    Elem code = 0;
    for (int i = d.e - 1; i >= 0; --i) code = code * d.p + coeffs[static_cast<std::size_t>(i)];
    return code;
  }

  /// Coefficient vector c_0..c_{e-1} of an extension element (length 1 otherwise).
  std::vector<std::int64_t> coefficients(Elem a) const {
    const auto& d = *data_;
    if (d.kind != RingKind::ext_field) return {a};
    std::vector<std::int64_t> c(static_cast<std::size_t>(d.e));
    for (auto& x : c) {
      x = a % d.p;
      a /= d.p;
    }
    return c;
  }

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> d) : data_(std::move(d)) {}

  void require_finite() const {
    if (!is_finite()) fail(Errc::infinite_ring, "operation needs a finite ring");
  }

  Elem ext_add(Elem a, Elem b, std::int64_t sign) const {
    const auto& d = *data_;
    Elem r = 0, scale = 1;
    for (int i = 0; i < d.e; ++i) {
      r += detail::mod_floor(a % d.p + sign * (b % d.p), d.p) * scale;
      a /= d.p;
      b /= d.p;
      scale *= d.p;
    }
    return r;
  }

  Elem ext_mul(Elem a, Elem b) const {
    const auto& d = *data_;
    const auto e = static_cast<std::size_t>(d.e);
    std::vector<std::int64_t> x = coefficients(a), y = coefficients(b);
    std::vector<std::int64_t> prod(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % d.p;
    for (std::size_t k = 2 * e - 2; k >= e; --k) {
      std::int64_t c = prod[k];
      if (c != 0) {
        for (std::size_t i = 0; i < e; ++i)
          prod[k - e + i] = detail::mod_floor(prod[k - e + i] - c * d.modulus[i], d.p);
      }
      prod[k] = 0;
    }
    Elem code = 0;
    for (std::size_t i = e; i-- > 0;) code = code * d.p + prod[i];
    return code;
  }

  void build_tables(detail::RingData& d) const {
    const auto q = static_cast<std::size_t>(d.q);
    d.add_table.resize(q * q);
    d.mul_table.resize(q * q);
    d.inv_table.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        d.add_table[a * q + b] = static_cast<std::int32_t>(ext_add(static_cast<Elem>(a), static_cast<Elem>(b), 1));
        d.mul_table[a * q + b] = static_cast<std::int32_t>(ext_mul(static_cast<Elem>(a), static_cast<Elem>(b)));
      }
    }
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        if (d.mul_table[a * q + b] == 1) d.inv_table[a] = static_cast<std::int32_t>(b);
  }

  std::shared_ptr<const detail::RingData> data_;
};

/// An element tagged with its ring. Finite-ring values hold the element code,
/// integer values the integer itself.
class Scalar {
 public:
  /// Image of the integer `v` under Z -> ring.
  Scalar(Ring ring, const Int& v) : ring_(std::move(ring)) {
    if (ring_.is_finite()) {
      Int r = v % ring_.characteristic();
      if (r < 0) r += ring_.characteristic();
      value_ = r;
    } else {
      value_ = v;
    }
  }

  static Scalar from_code(Ring ring, Elem code) {
    if (!ring.is_finite()) return Scalar(std::move(ring), Int(code));
    if (code < 0 || code >= ring.size()) fail(Errc::out_of_range, "element code out of range");
    Scalar s(ring, Int(0));
    s.value_ = code;
    return s;
  }

  static Scalar parse(Ring ring, std::string_view text) {
    if (!ring.is_finite()) {
      std::string t(text);
      try {
        return Scalar(std::move(ring), Int(t));
      } catch (const std::exception&) {
        fail(Errc::parse_error, "bad integer '" + t + "'");
      }
    }
    Elem c = ring.parse_elem(text);
    return from_code(std::move(ring), c);
  }

  const Ring& ring() const { return ring_; }
  const Int& value() const { return value_; }
  Elem code() const { return static_cast<Elem>(value_); }

  std::string str() const {
    if (!ring_.is_finite()) return value_.str();
    return ring_.format(code());
  }

  bool operator==(const Scalar& o) const { return ring_ == o.ring_ && value_ == o.value_; }

 private:
  Ring ring_;
  Int value_;
};

namespace detail {
inline void same_ring(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring()))
    fail(Errc::ring_mismatch, a.ring().name() + " vs " + b.ring().name());
}
}  // namespace detail

inline Scalar add(const Scalar& a, const Scalar& b) {
  detail::same_ring(a, b);
  if (!a.ring().is_finite()) return Scalar(a.ring(), a.value() + b.value());
  return Scalar::from_code(a.ring(), a.ring().add(a.code(), b.code()));
}

inline Scalar mul(const Scalar& a, const Scalar& b) {
  detail::same_ring(a, b);
  if (!a.ring().is_finite()) return Scalar(a.ring(), a.value() * b.value());
  return Scalar::from_code(a.ring(), a.ring().mul(a.code(), b.code()));
}

inline Scalar neg(const Scalar& a) {
  if (!a.ring().is_finite()) return Scalar(a.ring(), -a.value());
  return Scalar::from_code(a.ring(), a.ring().neg(a.code()));
}

inline Scalar sub(const Scalar& a, const Scalar& b) { return add(a, neg(b)); }

inline bool is_unit(const Scalar& a) {
  if (!a.ring().is_finite()) return a.value() == 1 || a.value() == -1;
  return a.ring().is_unit(a.code());
}

inline Scalar inv(const Scalar& a) {
  if (!is_unit(a)) fail(Errc::not_a_unit, a.str() + " in " + a.ring().name());
  if (!a.ring().is_finite()) return a;
  return Scalar::from_code(a.ring(), a.ring().inv(a.code()));
}

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
inline Scalar operator-(const Scalar& a) { return neg(a); }

/// Every element of a finite ring once, in code order.
inline std::vector<Scalar> enumerate_elements(const Ring& ring) {
  if (!ring.is_finite()) fail(Errc::infinite_ring, "cannot enumerate Z");
  check_guard(static_cast<double>(ring.size()), 1048576.0, "ring cardinality");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(ring.size()));
  for (Elem c = 0; c < ring.size(); ++c) out.push_back(Scalar::from_code(ring, c));
  return out;
}

}  // namespace swlab
