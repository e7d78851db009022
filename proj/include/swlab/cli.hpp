#pragma once

// Command-line front end. run() parses argv, writes the report to `out` and
// diagnostics to `err`, and returns the process exit code:
//   0 computed result (negative mathematical answers included)
//   1 sweep consistency violation
//   2 usage or domain error
//   3 guard exceeded

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swlab/serialization.hpp"

namespace swlab::cli {

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// Key/value report: TSV prints "key<TAB>value" lines, JSON one object.
class Report {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    json_[key] = value;
    std::ostringstream os;
    if constexpr (std::is_same_v<T, bool>)
      os << yes_no(value);
    else if constexpr (std::is_same_v<T, Json>)
      os << (value.is_string() ? value.template get<std::string>() : value.dump());
    else
      os << value;
    lines_.emplace_back(key, os.str());
  }

  void write(std::ostream& out, bool json) const {
    if (json) {
      out << json_.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : lines_) out << k << '\t' << v << '\n';
  }

 private:
  Json json_ = Json::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

inline void write_table(std::ostream& out, bool json, const std::vector<std::string>& header,
                        const std::vector<std::vector<Json>>& rows) {
  if (json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << join(header, "\t") << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "\t" : "");
      if (r[i].is_null())
        out << '-';
      else if (r[i].is_boolean())
        out << yes_no(r[i].get<bool>());
      else if (r[i].is_string())
        out << r[i].get<std::string>();
      else
        out << r[i].dump();
    }
    out << '\n';
  }
}

inline std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::parse_error, std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) fail(Errc::parse_error, std::string("empty ") + what);
  return out;
}

inline void profile_rows(Report& r, const std::string& prefix, const AlgebraProfile& p) {
  r.add(prefix + "dim", p.dim);
  r.add(prefix + "commutative", p.commutative);
  r.add(prefix + "center_dim", p.center_dim);
  r.add(prefix + "radical_dim", p.radical_dim);
  r.add(prefix + "ss_dim", p.ss_dim);
  r.add(prefix + "block_dims", Json(join(p.block_dims)));
}

}  // namespace detail

struct Options {
  std::string ring;
  int n = 0;
  int d = -1;
  std::string format = "tsv";
  std::string q_list = "2,3,4,5", n_list = "2,3", d_list = "1,2,3";
  std::string group = "gl";
  std::int64_t p = 0;
  int word_len = 6;
  std::string module = "regular";
  std::string algebra = "schur";
};

inline int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  using namespace detail;
  const bool json = o.format == "json";
  Report r;
  auto need_ring = [&] {
    if (o.ring.empty()) fail(Errc::bad_parameters, cmd + " needs --ring");
    return Ring::parse(o.ring);
  };

  if (cmd == "dim") {
    MultisetBasis basis(o.n * o.n, o.d);
    write_table(out, json, {"n", "d", "dimS"}, {{o.n, o.d, basis.size()}});
    return 0;
  }
  if (cmd == "surj") {
    Ring ring = need_ring();
    if (!ring.is_finite()) fail(Errc::infinite_ring, "surj needs a finite ring; see zcert and zsat for Z");
    auto ctx = make_phi_context(ring, o.n, o.d);
    std::size_t rank = 0;
    bool surjective = false;
    if (ring.is_field()) {
      auto ir = image_rank(ctx);
      rank = ir.rank;
      surjective = ir.surjective;
    } else {
      auto mi = image_mod_m(ctx);
      rank = mi.coprime_count;
      surjective = mi.surjective;
    }
    write_table(out, json, {"ring", "n", "d", "group_order", "dimS", "rank", "surjective"},
                {{ring.name(), o.n, o.d, ctx.group().order(), ctx.schur()->dim(), rank, surjective}});
    return 0;
  }
  if (cmd == "epi") {
    Ring ring = need_ring();
    auto rep = strong_epi_report(make_phi_context(ring, o.n, o.d));
    write_table(out, json,
                {"ring", "n", "d", "dimS", "rank", "dim_balanced", "surjective", "epi", "strong_epi", "equivalence"},
                {{ring.name(), o.n, o.d, rep.dim, rep.rank, rep.dim_balanced, rep.surjective, rep.is_epi,
                  rep.strong_epi, rep.equivalence}});
    if (!rep.consistent) {
      err << "surjective but not an epimorphism\n";
      return 1;
    }
    return 0;
  }
  if (cmd == "sweep") {
    std::vector<int> ns, ds;
    for (auto x : parse_list(o.n_list, "--n-list")) ns.push_back(static_cast<int>(x));
    for (auto x : parse_list(o.d_list, "--d-list")) ds.push_back(static_cast<int>(x));
    auto rows = threshold_sweep(parse_list(o.q_list, "--q-list"), ns, ds);
    std::vector<std::vector<Json>> table;
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    for (const auto& row : rows) {
      table.push_back({row.q, row.n, row.d, opt(row.dimS), opt(row.rank), opt(row.surjective), opt(row.is_epi)});
      if (!row.note.empty()) err << "note: q=" << row.q << " n=" << row.n << " d=" << row.d << ": " << row.note << '\n';
    }
    write_table(out, json, {"q", "n", "d", "dimS", "rank", "surjective", "epi"}, table);
    auto bad = sweep_violations(rows);
    for (const auto& v : bad) err << "violation: " << v << '\n';
    return bad.empty() ? 0 : 1;
  }
  if (cmd == "blocks") {
    FDAlgebra A = [&] {
      if (o.group == "gl") return group_algebra(enumerate_gl(need_ring(), o.n));
      std::ifstream in(o.group);
      if (!in) fail(Errc::bad_parameters, "cannot open table file " + o.group);
      return group_algebra(o.ring.empty() ? Ring::prime_field(2) : need_ring(), read_group_table(in));
    }();
    auto dec = central_idempotent_blocks(A);
    auto computed = algebra_profile(A);
    const Ring& k = A.ring();
    auto claimed = algebra_profile(direct_sum({dual_numbers(k), dual_numbers(k), dual_numbers(k)}));
    std::size_t total = 0;
    for (const auto& b : dec.blocks) total += b.dim;
    r.add("ring", k.name());
    r.add("algebra_dim", A.dim());
    r.add("blocks", dec.blocks.size());
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      const auto& b = dec.blocks[i];
      r.add("block" + std::to_string(i), Json("dim=" + std::to_string(b.dim) + " radical_dim=" +
                                              std::to_string(b.radical_dim) + " commutative=" + yes_no(b.commutative)));
    }
    r.add("partition_of_unity", dec.partition_of_unity);
    r.add("orthogonal", dec.orthogonal);
    r.add("central", dec.central);
    r.add("primitive", dec.primitive);
    r.add("block_dims_sum", total);
    r.add("quotient_radical_dim", brute_radical(quotient(A, brute_radical(A))).size());
    profile_rows(r, "computed.", computed);
    profile_rows(r, "claimed_dual_numbers_cubed.", claimed);
    auto diff = profile_differences(computed, claimed);
    r.add("verdict", Json(diff.empty() ? std::string("profiles match") : "profiles differ (" + join(diff) + ")"));
    r.write(out, json);
    return 0;
  }
  if (cmd == "zcert") {
    if (o.p < 2) fail(Errc::bad_parameters, "zcert needs -p prime");
    auto c = z_mod_p_obstruction(o.n, o.d, o.p);
    if (json) {
      out << to_json(c).dump(2) << '\n';
    } else {
      write_table(out, false, {"n", "d", "p", "fp_rank", "dimS", "obstruction"},
                  {{c.n, c.d, c.p, c.fp_rank, c.dimS, c.obstruction}});
    }
    err << (c.obstruction ? "obstruction at p: the map over Z is not surjective\n" : "no obstruction at p\n");
    return 0;
  }
  if (cmd == "zsat") {
    auto z = z_image_saturate(o.n, o.d, o.word_len);
    r.add("n", o.n);
    r.add("d", o.d);
    r.add("word_len", o.word_len);
    r.add("dim", z.dim);
    r.add("rank", z.rank);
    r.add("divisors", Json(join(int_strings(z.divisors))));
    r.add("stabilized", z.saturation.stabilized);
    r.add("matrices", z.matrices);
    r.add("note", Json(z.note));
    r.write(out, json);
    return 0;
  }
  if (cmd == "roundtrip") {
    auto s = build_schur(need_ring(), o.n, o.d);
    SModule m = o.module == "tensor" ? tensor_module(s) : o.module == "det" ? determinant_module(s) : regular_module(s);
    auto rep = roundtrip_check(m);
    write_table(out, json, {"ring", "n", "d", "module", "dimV", "certificate", "lift", "equal", "unique", "phi_surjective"},
                {{s->ring().name(), o.n, o.d, o.module, m.dimV, rep.certificate_ok, rep.lift_ok, rep.equal, rep.unique,
                  rep.surjective}});
    return 0;
  }
  if (cmd == "profile") {
    FDAlgebra A = [&] {
      if (o.algebra == "schur") return schur_fd_algebra(*build_schur(need_ring(), o.n, o.d));
      if (o.algebra == "group") return group_algebra(enumerate_gl(need_ring(), o.n));
      if (o.algebra == "dual3") {
        Ring k = o.ring.empty() ? Ring::prime_field(2) : need_ring();
        return direct_sum({dual_numbers(k), dual_numbers(k), dual_numbers(k)});
      }
      fail(Errc::bad_parameters, "unknown algebra " + o.algebra);
    }();
    auto p = algebra_profile(A);
    if (json) {
      out << to_json(p).dump(2) << '\n';
    } else {
      profile_rows(r, "", p);
      r.write(out, false);
    }
    return 0;
  }
  fail(Errc::bad_parameters, "unknown subcommand " + cmd);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur algebras, the canonical map from GL_n and Schur-Weyl duality checks", "swlab"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool ring, bool nd) {
    if (ring) sub->add_option("--ring", o.ring, "coefficient ring: F5, F9, Z/6, GF(p^e; c0,...)");
    if (nd) {
      sub->add_option("-n", o.n, "rank of E = k^n")->required()->check(CLI::PositiveNumber);
      sub->add_option("-d", o.d, "tensor degree")->required()->check(CLI::NonNegativeNumber);
    }
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"tsv", "json"}));
  };
  common(app.add_subcommand("dim", "dimension of S(n,d)"), false, true);
  common(app.add_subcommand("surj", "is phi surjective"), true, true);
  common(app.add_subcommand("epi", "is phi a ring epimorphism"), true, true);
  auto* sweep = app.add_subcommand("sweep", "surjectivity over a grid of (q, n, d)");
  common(sweep, false, false);
  sweep->add_option("--q-list", o.q_list, "field sizes, comma separated");
  sweep->add_option("--n-list", o.n_list, "values of n");
  sweep->add_option("--d-list", o.d_list, "values of d");
  auto* blocks = app.add_subcommand("blocks", "block decomposition of a group algebra");
  common(blocks, true, false);
  blocks->add_option("-n", o.n, "matrix size for --group gl")->check(CLI::PositiveNumber);
  blocks->add_option("--group", o.group, "gl, or a multiplication table file");
  auto* zcert = app.add_subcommand("zcert", "mod-p obstruction to surjectivity over Z");
  common(zcert, false, true);
  zcert->add_option("-p", o.p, "prime")->required();
  auto* zsat = app.add_subcommand("zsat", "lattice generated by images of words in GL_2(Z)");
  common(zsat, false, true);
  zsat->add_option("--word-len", o.word_len, "maximal word length");
  auto* roundtrip = app.add_subcommand("roundtrip", "restrict a module to GL and lift it back");
  common(roundtrip, true, true);
  roundtrip->add_option("--module", o.module, "module")->check(CLI::IsMember({"regular", "tensor", "det"}));
  auto* profile = app.add_subcommand("profile", "coarse invariants of an algebra");
  common(profile, true, false);
  profile->add_option("-n", o.n, "n")->check(CLI::PositiveNumber);
  profile->add_option("-d", o.d, "d")->check(CLI::NonNegativeNumber);
  profile->add_option("--algebra", o.algebra, "algebra")->check(CLI::IsMember({"schur", "group", "dual3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  if ((cmd == "blocks" && o.group == "gl") || (cmd == "profile" && o.algebra != "dual3")) {
    if (o.n < 1 || (cmd == "profile" && o.algebra == "schur" && o.d < 0)) {
      err << "usage error: " << cmd << " needs -n" << (cmd == "profile" && o.algebra == "schur" ? " and -d" : "") << '\n';
      return 2;
    }
  }
  try {
    return dispatch(cmd, o, out, err);
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::guard_exceeded ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace swlab::cli
