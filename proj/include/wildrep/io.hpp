#pragma once

// JSON descriptors and reports.
//
// Field:   {"n": 1, "eisenstein": null | [coeff, ...], "precision": 64, "modulus": optional bits}
// Element: integer | "decimal string" | {"val": v, "digits": [[bits], ...]}
//          | {"val": v, "coords": [[W-coords of pi^0], [of pi^1], ...]}
// Curve:   {"a4": element, "a6": element, "field": optional path or field object}
//
// Digits are residue-field elements as bit lists, little endian in the
// power basis of F_2[x]/(modulus). Eisenstein coefficients are elements of
// the unramified field W_n (integer, list of X-coordinates, or an element
// object over W_n); the leading 1 is implicit.

#include <gmpxx.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wildrep/classifier.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/local_field.hpp"

namespace wildrep::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "wildrep-report/1";

inline json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  require(static_cast<bool>(in), ErrorKind::Parse, "cannot read " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, p.string() + ": " + e.what());
  }
}

namespace detail {

inline mpz_class parse_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::Parse, what + ": not an integer string");
    return z;
  }
  fail(ErrorKind::Parse, what + ": expected an integer");
}

inline ResidueElement parse_digit(const json& j, unsigned n, const std::string& what) {
  require(j.is_array() && j.size() <= n, ErrorKind::Parse, what + ": a digit is a list of at most n bits");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_number_integer() && (j[i] == 0 || j[i] == 1), ErrorKind::Parse, what + ": bits must be 0 or 1");
    if (j[i] == 1) bits |= std::uint64_t{1} << i;
  }
  return {bits};
}

inline int get_int(const json& j, const char* key, int dflt, const std::string& what) {
  if (!j.contains(key)) return dflt;
  require(j[key].is_number_integer(), ErrorKind::Parse, what + ": '" + key + "' must be an integer");
  return j[key].get<int>();
}

}  // namespace detail

inline LocalElement parse_element(const json& j, const LocalField& k, const std::string& what) {
  if (j.is_number_integer() || j.is_string()) return k.integer(detail::parse_integer(j, what));
  require(j.is_object(), ErrorKind::Parse, what + ": element must be an integer, a string or an object");
  const int val = detail::get_int(j, "val", 0, what);
  if (j.contains("digits")) {
    require(j["digits"].is_array(), ErrorKind::Parse, what + ": 'digits' must be a list");
    std::vector<ResidueElement> d;
    for (const auto& x : j["digits"]) d.push_back(detail::parse_digit(x, k.n(), what));
    return k.from_digits(val, d);
  }
  if (j.contains("coords")) {
    require(j["coords"].is_array() && j["coords"].size() <= k.e(), ErrorKind::Parse,
            what + ": 'coords' must be a list of at most e rows");
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& r : j["coords"]) {
      require(r.is_array() && r.size() <= k.n(), ErrorKind::Parse, what + ": each coords row has at most n entries");
      std::vector<mpz_class> row;
      for (const auto& z : r) row.push_back(detail::parse_integer(z, what));
      rows.push_back(std::move(row));
    }
    return k.from_coordinates(val, rows);
  }
  fail(ErrorKind::Parse, what + ": element object needs 'digits' or 'coords'");
}

inline LocalField parse_field(const json& j, std::optional<int> precision_override = std::nullopt) {
  require(j.is_object(), ErrorKind::Parse, "field descriptor must be an object");
  require(j.contains("n") && j["n"].is_number_integer() && j["n"].get<int>() >= 1 && j["n"].get<int>() <= 16,
          ErrorKind::Parse, "field: 'n' must be an integer in 1..16");
  const unsigned n = j["n"].get<unsigned>();
  int prec = detail::get_int(j, "precision", 64, "field");
  if (precision_override) prec = *precision_override;
  require(prec >= 16, ErrorKind::Parse, "precision must be at least 16");
  std::optional<std::uint64_t> modulus;
  if (j.contains("modulus") && !j["modulus"].is_null()) {
    const ResidueElement m = detail::parse_digit(j["modulus"], n + 1, "field modulus");
    modulus = m.bits;
  }
  if (!j.contains("eisenstein") || j["eisenstein"].is_null()) return LocalField::unramified(n, prec, modulus);
  const json& eis = j["eisenstein"];
  require(eis.is_array() && !eis.empty(), ErrorKind::Parse, "field: 'eisenstein' must be null or a non-empty list");
  const LocalField w = LocalField::unramified(n, 4 * prec + 64, modulus);
  std::vector<std::vector<mpz_class>> co;
  for (std::size_t i = 0; i < eis.size(); ++i) {
    const std::string what = "eisenstein coefficient " + std::to_string(i);
    if (eis[i].is_array()) {
      std::vector<mpz_class> row;
      require(eis[i].size() <= n, ErrorKind::Parse, what + ": at most n coordinates");
      for (const auto& z : eis[i]) row.push_back(detail::parse_integer(z, what));
      row.resize(n);
      co.push_back(std::move(row));
      continue;
    }
    const LocalElement c = parse_element(eis[i], w, what);
    if (c.is_zero()) {
      co.emplace_back(n);
      continue;
    }
    require(c.valuation() >= 0, ErrorKind::Parse, what + ": must be integral");
    co.push_back(c.integral_coordinates());
  }
  try {
    return LocalField::eisenstein(n, co, prec, modulus);
  } catch (const Error& e) {
    fail(ErrorKind::Parse, std::string("field: ") + e.what());
  }
}

inline std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path q(p);
  return q.is_absolute() ? q : base / q;
}

/// A field given inline or as a path relative to `base`.
inline LocalField load_field(const json& j, const std::filesystem::path& base, std::optional<int> precision) {
  if (j.is_string()) return parse_field(read_json_file(resolve(base, j.get<std::string>())), precision);
  return parse_field(j, precision);
}

inline ShortWeierstrass<LocalElement> parse_curve(const json& j, const LocalField& k) {
  require(j.is_object() && j.contains("a4") && j.contains("a6"), ErrorKind::Parse, "curve needs 'a4' and 'a6'");
  return {parse_element(j["a4"], k, "a4"), parse_element(j["a6"], k, "a6")};
}

// ---- output ----

inline json rational(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

inline json number(const SqrtNeg2Number& x) { return {{"a", rational(x.a())}, {"b", rational(x.b())}}; }

inline json matrix(const MatF3& m) { return json::array({{m.e[0], m.e[1]}, {m.e[2], m.e[3]}}); }

inline json element(const LocalElement& x) {
  json j;
  if (x.is_zero()) {
    j["val"] = nullptr;
    j["digits"] = json::array();
    j["absolute_precision"] = x.absolute_precision();
    return j;
  }
  j["val"] = x.valuation();
  json d = json::array();
  const unsigned n = x.data().n;
  for (const auto& r : x.digits(32)) {
    json bits = json::array();
    for (unsigned i = 0; i < n; ++i) bits.push_back(static_cast<int>((r.bits >> i) & 1));
    d.push_back(bits);
  }
  j["digits"] = d;
  j["absolute_precision"] = x.absolute_precision();
  return j;
}

inline json table(const CharacterTable& t) {
  json j;
  j["group"] = t.group;
  j["order"] = t.group_order;
  j["orientation"] = to_string(t.orientation);
  json cls = json::array();
  for (const auto& c : t.classes) {
    json e;
    e["label"] = c.label;
    e["size"] = c.size;
    e["order"] = c.order;
    e["word"] = c.word;
    e["representative"] = matrix(c.representative);
    e["value"] = number(c.value);
    cls.push_back(e);
  }
  j["classes"] = cls;
  return j;
}

inline json profile(const FactorProfile& p) {
  json j;
  j["method"] = p.method;
  j["certified"] = p.certified;
  j["irreducible"] = p.irreducible;
  j["t_power"] = p.t_power;
  json segs = json::array();
  for (const auto& s : p.segments)
    segs.push_back({{"slope", s.slope.get_str()}, {"length", s.length}, {"residual_split", s.residual_split}});
  j["segments"] = segs;
  json parts = json::array();
  for (const auto& q : p.parts)
    parts.push_back({{"degree", q.degree}, {"e", q.e}, {"f", q.f}, {"resolved", q.resolved}});
  j["parts"] = parts;
  j["evidence"] = p.evidence;
  return j;
}

inline json tower(const std::vector<TowerLayer>& layers) {
  json j = json::array();
  for (const auto& l : layers) j.push_back({{"kind", l.kind}, {"modulus", l.modulus}, {"e", l.e}, {"f", l.f}});
  return j;
}

inline json report(const GaloisRepReport& r, const LocalField& k, const ShortWeierstrass<LocalElement>& E) {
  json j;
  j["schema"] = kReportSchema;
  j["id"] = r.batch_id;
  j["status"] = "ok";
  j["field"] = {{"n", k.n()}, {"e", k.e()}, {"precision", k.precision()}, {"description", k.describe()}};
  j["curve"] = {{"a4", element(E.a4)}, {"a6", element(E.a6)}};
  json v;
  v["full_group"] = r.full_group;
  v["inertia_group"] = r.inertia_group;
  v["parity"] = r.n % 2 == 0 ? "even" : "odd";
  v["cube_in_K"] = r.cube_in_K;
  v["cube_in_Knr"] = r.cube_in_Knr;
  v["F_over_K"] = {{"degree", r.degree_F_over_K}, {"e", r.e_F_over_K}, {"f", r.f_F_over_K}, {"galois", r.F_galois}};
  v["f_F_over_Q2"] = r.f_F;
  j["verdict"] = v;
  j["chi"] = {{"frob_K", number(r.chi_frobK)}, {"inertia", 1}};
  j["psi"] = table(r.psi);
  json rho = json::array();
  for (const auto& x : r.rho)
    rho.push_back({{"label", x.label}, {"frobenius_power", x.frobenius_power}, {"value", number(x.value)}});
  j["rho"] = rho;
  json fr;
  fr["charpoly"] = {{"c1", number(r.frob_charpoly.c1)}, {"c0", number(r.frob_charpoly.c0)},
                    {"text", r.frob_charpoly.to_string()}};
  json eig = json::array();
  for (const auto& x : r.frob_eigenvalues) eig.push_back(number(x));
  fr["eigenvalues"] = eig;
  if (r.has_unramified_frobenius)
    fr["psi_frob_K"] = {{"trace", number(r.unramified_frobenius.trace)},
                        {"det", number(r.unramified_frobenius.det)},
                        {"cube_identity", r.unramified_frobenius.cube_identity}};
  else
    fr["psi_frob_K"] = nullptr;
  j["frobenius"] = fr;
  j["mod3"] = {{"b", matrix(r.mod3.b)},
               {"sigma", matrix(r.mod3.sigma)},
               {"a", matrix(r.mod3.a)},
               {"trace_a", r.mod3.a.trace()}};
  j["orientation"] = to_string(r.orientation);
  j["dual_applied"] = r.dual_applied;
  const Evidence& ev = r.evidence;
  json e;
  e["model_scale"] = ev.model_scale;
  e["v_discriminant"] = ev.v_discriminant;
  e["v_j"] = ev.v_j;
  e["factor_profile"] = profile(ev.profile);
  e["resolvent"] = {{"cube_layer", ev.resolvent.cube_layer},
                    {"split_level", ev.resolvent.split_level},
                    {"squares", ev.resolvent.squares}};
  e["tower"] = tower(ev.tower);
  e["good_model"] = {{"discriminant_identity", ev.discriminant_identity},
                     {"v_Aprime", ev.v_Aprime},
                     {"v_discriminant", ev.v_good_discriminant},
                     {"reduction", ev.reduction}};
  json tr = json::array();
  for (const auto& s : ev.transcript) {
    json vals = json::object();
    for (const auto& [key, val] : s.values) vals[key] = val;
    tr.push_back({{"step", s.name}, {"values", vals}});
  }
  e["transcript"] = tr;
  e["congruence"] = ev.congruence;
  j["evidence"] = e;
  return j;
}

inline json diagnostic(const std::string& id, const std::string& kind, const std::string& message, int exit_code) {
  json j;
  j["schema"] = kReportSchema;
  j["id"] = id;
  j["status"] = "error";
  j["error"] = {{"kind", kind}, {"message", message}, {"exit_code", exit_code}};
  return j;
}

}  // namespace wildrep::io
