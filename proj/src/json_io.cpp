#include "kv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kv/errors.hpp"

namespace kv {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

Int int_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<Int>();
}

const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) field_error(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::string join(const std::string& a, const std::string& b) { return a.empty() ? b : a + "." + b; }

}  // namespace

json to_json(const Rational& q) { return {{"num", q.numerator()}, {"den", q.denominator()}}; }

json to_json(const Coweight& c) { return {{"num", c.numerators()}, {"den", c.denominator()}}; }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      field_error(field, e.what());
    }
  }
  if (j.is_object()) {
    Int num = int_from_json(require(j, "num", field), join(field, "num"));
    Int den = j.contains("den") ? int_from_json(j["den"], join(field, "den")) : 1;
    if (den <= 0) field_error(join(field, "den"), "must be a positive integer");
    return Rational(num, den);
  }
  field_error(field, "expected a rational ({\"num\", \"den\"}, integer or \"p/q\")");
}

Coweight coweight_from_json(const json& j, std::size_t rank, const std::string& field) {
  Coweight c;
  if (j.is_object()) {
    const json& num = require(j, "num", field);
    if (!num.is_array()) field_error(join(field, "num"), "expected an array of integers");
    Int den = j.contains("den") ? int_from_json(j["den"], join(field, "den")) : 1;
    if (den <= 0) field_error(join(field, "den"), "must be a positive integer");
    std::vector<Int> nums;
    for (std::size_t k = 0; k < num.size(); ++k)
      nums.push_back(int_from_json(num[k], join(field, "num[" + std::to_string(k) + "]")));
    c = Coweight::from_fraction(nums, den);
  } else if (j.is_array()) {
    std::vector<Rational> q;
    for (std::size_t k = 0; k < j.size(); ++k) q.push_back(rational_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    c = Coweight(std::move(q));
  } else {
    field_error(field, "expected {\"num\": [...], \"den\": d} or an array");
  }
  if (c.rank() != rank)
    field_error(field, "has " + std::to_string(c.rank()) + " coordinates, expected " + std::to_string(rank));
  return c;
}

namespace {

std::vector<std::vector<Int>> generators_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of integer vectors");
  std::vector<std::vector<Int>> gens;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string f = field + "[" + std::to_string(k) + "]";
    if (!j[k].is_array()) field_error(f, "expected an array of integers");
    std::vector<Int> g;
    for (std::size_t t = 0; t < j[k].size(); ++t) g.push_back(int_from_json(j[k][t], f + "[" + std::to_string(t) + "]"));
    gens.push_back(std::move(g));
  }
  return gens;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

IsogenySpec isogeny_from_flag(const std::string& flag) {
  if (flag == "sc" || flag == "simply_connected") return IsogenySpec::sc();
  if (flag == "adjoint" || flag == "ad") return IsogenySpec::adjoint();
  const std::string prefix = "custom:";
  if (flag.rfind(prefix, 0) == 0)
    return IsogenySpec::custom(generators_from_json(read_json_file(flag.substr(prefix.size())), "isogeny"));
  throw InputError("unknown isogeny '" + flag + "' (use sc, adjoint or custom:<file>)");
}

IsogenySpec isogeny_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "sc" || s == "simply_connected") return IsogenySpec::sc();
    if (s == "adjoint" || s == "ad") return IsogenySpec::adjoint();
    field_error(field, "unknown isogeny '" + s + "'");
  }
  return IsogenySpec::custom(generators_from_json(j, field));
}

ClassDatum class_datum_from_json(const json& j, bool allow_e6) {
  if (!j.is_object()) throw InputError("class datum must be a JSON object");
  const json& type = require(j, "type", "");
  if (!type.is_string()) field_error("type", "expected a string such as \"A2\"");
  IsogenySpec iso = j.contains("isogeny") ? isogeny_from_json(j["isogeny"], "isogeny") : IsogenySpec::sc();
  auto rd = std::make_shared<const RootDatum>(build_root_datum(type.get<std::string>(), iso, allow_e6));
  const std::size_t r = rd->rank();

  std::vector<int> word;
  if (j.contains("w")) {
    const json& w = j["w"];
    if (!w.is_array()) field_error("w", "expected an array of one-based simple reflection indices");
    for (std::size_t k = 0; k < w.size(); ++k) {
      Int s = int_from_json(w[k], "w[" + std::to_string(k) + "]");
      if (s < 1 || static_cast<std::size_t>(s) > r)
        field_error("w[" + std::to_string(k) + "]", "index " + std::to_string(s) + " outside 1.." + std::to_string(r));
      word.push_back(static_cast<int>(s - 1));
    }
  }
  std::optional<Int> e;
  if (j.contains("e")) {
    e = int_from_json(j["e"], "e");
    if (*e < 1) field_error("e", "must be a positive integer");
  }
  Coweight nu_bar = j.contains("nu_bar") ? coweight_from_json(j["nu_bar"], r, "nu_bar") : Coweight(r);

  std::map<std::size_t, Rational> residual;
  if (j.contains("residual")) {
    const json& res = j["residual"];
    if (!res.is_array()) field_error("residual", "expected an array of {\"root\", \"val\"} objects");
    for (std::size_t k = 0; k < res.size(); ++k) {
      std::string f = "residual[" + std::to_string(k) + "]";
      const json& root = require(res[k], "root", f);
      if (!root.is_array() || root.size() != r)
        field_error(f + ".root", "expected " + std::to_string(r) + " integers in simple-root coordinates");
      std::vector<Int> v;
      for (std::size_t t = 0; t < root.size(); ++t) v.push_back(int_from_json(root[t], f + ".root"));
      auto hit = rd->system().find_root(v);
      if (!hit || hit->negative) field_error(f + ".root", "is not a positive root");
      if (residual.count(hit->index)) field_error(f + ".root", "listed twice");
      residual[hit->index] = rational_from_json(require(res[k], "val", f), f + ".val");
    }
  }

  std::vector<Int> kappa;
  if (j.contains("kappa")) {
    const json& k = j["kappa"];
    if (k.is_number_integer()) {
      kappa.push_back(k.get<Int>());
    } else {
      if (!k.is_array()) field_error("kappa", "expected an array of integers");
      for (std::size_t t = 0; t < k.size(); ++t) kappa.push_back(int_from_json(k[t], "kappa[" + std::to_string(t) + "]"));
    }
  }
  try {
    return make_class_datum(rd, word, e, std::move(nu_bar), std::move(residual), kappa);
  } catch (const ValidationError&) {
    throw;
  } catch (const InputError& err) {
    throw InputError(std::string("class datum: ") + err.what());
  }
}

ClassDatum load_class_datum(const std::string& path, bool allow_e6) {
  return class_datum_from_json(read_json_file(path), allow_e6);
}

json to_json(const ClassDatum& cd) {
  json j;
  j["type"] = cd.rd->label();
  if (cd.rd->isogeny().kind == IsogenySpec::Kind::custom)
    j["isogeny"] = cd.rd->isogeny().generators;
  else
    j["isogeny"] = cd.rd->isogeny().name();
  std::vector<int> w;
  for (int s : cd.w.word) w.push_back(s + 1);
  j["w"] = w;
  j["e"] = cd.e;
  j["nu_bar"] = to_json(cd.nu_bar);
  json res = json::array();
  for (const auto& [k, v] : cd.residual)
    res.push_back({{"root", cd.rd->positive_roots()[k]}, {"val", to_json(v)}});
  j["residual"] = res;
  j["kappa"] = cd.kappa;
  return j;
}

json to_json(const KVReport& r) {
  json j;
  j["nonempty"] = r.nonempty;
  j["newton"] = to_json(r.newton);
  j["d"] = r.d;
  j["c"] = r.c;
  j["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
  j["mu_star"] = r.mu_star ? to_json(*r.mu_star) : json(nullptr);
  j["predicted_orbits"] = r.predicted_orbits ? json(*r.predicted_orbits) : json(nullptr);
  j["regular_orbit_bound"] = r.regular_orbit_bound;
  j["regular_bound_exact"] = r.regular_bound_exact;
  j["d_plus"] = to_json(r.d_plus);
  json cz = json::array();
  for (const auto& c : r.chen_zhu_mu) cz.push_back(to_json(c));
  j["chen_zhu_mu"] = cz;
  return j;
}

KVReport report_from_json(const json& j) {
  KVReport r;
  auto rank_of = [](const json& c) { return c.at("num").size(); };
  r.nonempty = j.at("nonempty").get<bool>();
  r.newton = coweight_from_json(j.at("newton"), rank_of(j.at("newton")), "newton");
  r.d = j.at("d").get<Int>();
  r.c = j.at("c").get<Int>();
  if (!j.at("dimension").is_null()) r.dimension = j["dimension"].get<Int>();
  if (!j.at("mu_star").is_null()) r.mu_star = coweight_from_json(j["mu_star"], rank_of(j["mu_star"]), "mu_star");
  if (!j.at("predicted_orbits").is_null()) r.predicted_orbits = j["predicted_orbits"].get<Int>();
  r.regular_orbit_bound = j.at("regular_orbit_bound").get<Int>();
  r.regular_bound_exact = j.at("regular_bound_exact").get<bool>();
  r.d_plus = rational_from_json(j.at("d_plus"), "d_plus");
  for (const auto& c : j.at("chen_zhu_mu")) r.chen_zhu_mu.push_back(coweight_from_json(c, rank_of(c), "chen_zhu_mu"));
  return r;
}

}  // namespace kv
