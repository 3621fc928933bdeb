#include "kv/cli.hpp"

#include <omp.h>

#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "kv/conjugacy.hpp"
#include "kv/errors.hpp"
#include "kv/json_io.hpp"
#include "kv/kv.hpp"
#include "kv/multiplicity.hpp"
#include "kv/rootdata.hpp"
#include "kv/strata.hpp"
#include "kv/sweep.hpp"
#include "kv/vinberg.hpp"
#include "kv/weyl.hpp"

namespace kv {

namespace {

struct Options {
  std::string type;
  std::string isogeny = "sc";
  bool allow_e6 = false;
  int jobs = 0;
  bool serial = false;
  bool json = false;

  // weyl
  bool coxeter = false;
  bool list = false;
  // coweights
  std::string lambda, lambda2, mu, nu, cvals, bvals;
  int sweep = -1;
  std::string class_file;
  bool open_only = false;
  // verify
  std::string suite;
  int height = -1;
  std::uint64_t seed = 20240601;
  int samples = -1;
};

std::string kappa_string(const std::vector<Int>& k) {
  if (k.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

std::string mask_string(RootMask m, std::size_t r) {
  std::string s;
  for (std::size_t i = 0; i < r; ++i)
    if (m >> i & 1) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return s.empty() ? "-" : "{" + s + "}";
}

std::vector<std::string> split_types(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Coweight parse_coweight(const std::string& text, std::size_t rank, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing --") + flag);
  Coweight c = Coweight::parse(text);
  if (c.rank() != rank)
    throw InputError(std::string("--") + flag + " has " + std::to_string(c.rank()) + " coordinates, expected " +
                     std::to_string(rank));
  return c;
}

RootDatum datum(const Options& o, const std::string& type) {
  return build_root_datum(type, isogeny_from_flag(o.isogeny), o.allow_e6);
}

Exec exec_of(const Options& o) { return o.serial ? Exec::serial : Exec::parallel; }

// ---------------------------------------------------------------- subcommands

int cmd_weyl(const Options& o, std::ostream& out) {
  RootDatum rd = datum(o, o.type);
  if (o.coxeter) {
    auto cox = coxeter_elements(rd.system());
    for (const auto& c : cox) out << c.word_string() << '\n';
    out << "count: " << cox.size() << '\n';
    return 0;
  }
  WeylGroup g(rd);
  if (o.list) {
    out << "index\tword\tlength\tsupport\n";
    for (std::size_t k = 0; k < g.size(); ++k)
      out << k << '\t' << g[k].word_string() << '\t' << g[k].length() << '\t' << mask_string(g[k].support(), rd.rank())
          << '\n';
    return 0;
  }
  out << "type: " << rd.label() << '\n'
      << "order: " << g.size() << '\n'
      << "positive roots: " << rd.system().num_positive() << '\n'
      << "longest: " << g.longest().word_string() << '\n';
  return 0;
}

int cmd_mult(const Options& o, std::ostream& out) {
  RootDatum rd = datum(o, o.type);
  const RootSystem& sys = rd.system();
  if (o.sweep >= 0) {
    auto lambdas = dominant_by_height(rd, Rational(o.sweep));
    auto parts = indexed_map<std::vector<std::pair<Coweight, Int>>>(
        lambdas.size(), [&](std::size_t i) { return WeightSystem(sys, lambdas[i]).dominant(); }, exec_of(o));
    out << "lambda\tmu\tm\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      for (const auto& [mu, m] : parts[i]) out << lambdas[i].to_string() << '\t' << mu.to_string() << '\t' << m << '\n';
    return 0;
  }
  Coweight lambda = parse_coweight(o.lambda, rd.rank(), "lambda");
  Coweight mu = parse_coweight(o.mu, rd.rank(), "mu");
  out << multiplicity_freudenthal(sys, lambda, mu) << '\n';
  return 0;
}

void print_report(const ClassDatum& cd, const Coweight& lambda, const KVReport& r, std::ostream& out) {
  out << "type: " << cd.rd->label() << " (" << cd.rd->isogeny().name() << ")\n"
      << "lambda: " << lambda.to_string() << '\n'
      << "nonempty: " << (r.nonempty ? "yes" : "no") << '\n'
      << "newton: " << r.newton.to_string() << '\n'
      << "d: " << r.d << '\n'
      << "c: " << r.c << '\n';
  if (r.dimension) out << "dimension: " << *r.dimension << '\n';
  if (r.mu_star) out << "mu_star: " << r.mu_star->to_string() << '\n';
  if (r.predicted_orbits) out << "predicted_orbits: " << *r.predicted_orbits << '\n';
  out << "regular_orbit_bound: " << r.regular_orbit_bound << '\n'
      << "regular_bound_exact: " << (r.regular_bound_exact ? "yes" : "no") << '\n'
      << "d_plus: " << to_string(r.d_plus) << '\n'
      << "chen_zhu_mu:";
  if (r.chen_zhu_mu.empty()) out << " none";
  for (const auto& c : r.chen_zhu_mu) out << ' ' << c.to_string();
  out << '\n';
}

int cmd_dim(const Options& o, std::ostream& out) {
  ClassDatum cd = load_class_datum(o.class_file, o.allow_e6);
  require_valid(cd);
  Coweight lambda = parse_coweight(o.lambda, cd.rd->rank(), "lambda");
  KVReport r = kv_report(cd, lambda);
  if (o.json)
    out << to_json(r).dump(2) << '\n';
  else
    print_report(cd, lambda, r, out);
  return 0;
}

int cmd_components(const Options& o, std::ostream& out) {
  ClassDatum cd = load_class_datum(o.class_file, o.allow_e6);
  require_valid(cd);
  Coweight lambda = parse_coweight(o.lambda, cd.rd->rank(), "lambda");
  Coweight newton = newton_point(cd);
  if (!nonempty(cd, lambda)) throw EmptyVarietyError("the variety is empty for lambda = " + lambda.to_string());
  Coweight mu = best_integral_approx(*cd.rd, newton, lambda);
  Int m = multiplicity_freudenthal(cd.rd->system(), lambda, mu);
  auto cz = chen_zhu_approx(*cd.rd, newton, cd.kappa);
  if (o.json) {
    json j{{"newton", to_json(newton)}, {"mu_star", to_json(mu)}, {"predicted_components", m}};
    json cj = json::array();
    for (const auto& c : cz) {
      WeightSystem ws(cd.rd->system(), lambda);
      cj.push_back({{"mu", to_json(c)}, {"m", ws.multiplicity(c)}});
    }
    j["chen_zhu"] = cj;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "newton: " << newton.to_string() << '\n'
      << "mu_star: " << mu.to_string() << '\n'
      << "predicted_components: " << m << '\n';
  if (cz.empty()) out << "chen_zhu: none\n";
  for (const auto& c : cz)
    out << "chen_zhu: " << c.to_string() << " m=" << multiplicity_freudenthal(cd.rd->system(), lambda, c)
        << (c == mu ? " (equal)" : " (different)") << '\n';
  return 0;
}

int cmd_polytope(const Options& o, std::ostream& out) {
  RootDatum rd = datum(o, o.type);
  Coweight lambda = parse_coweight(o.lambda, rd.rank(), "lambda");
  if (!o.lambda2.empty()) {
    Coweight l2 = parse_coweight(o.lambda2, rd.rank(), "lambda2");
    out << "intersection: " << polytope_intersection(rd, lambda, l2).to_string() << '\n';
    if (o.nu.empty()) return 0;
  }
  Coweight nu = parse_coweight(o.nu, rd.rank(), "nu");
  bool closed = polytope_member(rd, nu, lambda, false);
  bool open = closed && polytope_member(rd, nu, lambda, true);
  out << "closed: " << (closed ? "yes" : "no") << '\n' << "open: " << (open ? "yes" : "no") << '\n';
  if (closed && rd.system().is_dominant(nu)) out << "stratum: " << best_integral_approx(rd, nu, lambda).to_string() << '\n';
  return 0;
}

int cmd_steinberg(const Options& o, std::ostream& out) {
  RootDatum rd = datum(o, o.type);
  Coweight lambda = parse_coweight(o.lambda, rd.rank(), "lambda");
  ValuationVector v;
  std::stringstream ss(o.cvals);
  std::string item;
  while (std::getline(ss, item, ',')) v.c_vals.push_back(ExtendedRational::parse(item));
  if (!o.bvals.empty()) {
    std::stringstream bs(o.bvals);
    while (std::getline(bs, item, ',')) v.b_vals.push_back(parse_rational(item));
  }
  out << steinberg_stratum(rd, v, lambda).to_string() << '\n';
  return 0;
}

int cmd_nilcone(const Options& o, std::ostream& out) {
  RootDatum rd = datum(o, o.type);
  WeylGroup g(rd);
  auto strata = nilcone_strata(rd, g);
  out << "J\tw\tlength\tdim\ttop\n";
  for (const auto& s : strata)
    out << mask_string(s.J, rd.rank()) << '\t' << s.w.word_string() << '\t' << s.w.length() << '\t' << s.dim << '\t'
        << (s.is_top ? "yes" : "no") << '\n';
  auto sum = nilcone_report(rd, g, strata);
  out << "dim N = " << sum.dim_nilcone << ", components = " << sum.top_strata << ", strata = " << sum.strata
      << ", |Cox| = " << sum.coxeter_count << '\n';
  return 0;
}

// ---------------------------------------------------------------- verify

std::vector<std::string> suite_types(const Options& o, const char* defaults) {
  return split_types(o.type.empty() ? defaults : o.type);
}

int verify_lower_bound(const Options& o, std::ostream& out) {
  bool ok = true;
  Rational h(o.height >= 0 ? o.height : 10);
  out << "type\tlambda\tmu\tm\tbound\tpass\n";
  for (const auto& t : suite_types(o, "A2,B2,G2,A3")) {
    RootDatum rd = datum(o, t);
    for (const auto& row : lower_bound_sweep(rd, h, exec_of(o))) {
      out << rd.label() << '\t' << row.lambda.to_string() << '\t' << row.mu.to_string() << '\t' << row.m << '\t'
          << row.bound << '\t' << (row.pass ? "yes" : "no") << '\n';
      ok = ok && row.pass;
    }
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 2;
}

int verify_nilcone(const Options& o, std::ostream& out) {
  out << "type\tdim_G\trank\tdim_N\tcomponents\tcoxeter\tstrata\n";
  for (const auto& t : suite_types(o, "A1,A2,B2,G2,A3")) {
    RootDatum rd = datum(o, t);
    WeylGroup g(rd);
    auto sum = nilcone_report(rd, g, nilcone_strata(rd, g));
    out << rd.label() << '\t' << rd.dim_group() << '\t' << rd.rank() << '\t' << sum.dim_nilcone << '\t'
        << sum.top_strata << '\t' << sum.coxeter_count << '\t' << sum.strata << '\n';
  }
  out << "PASS\n";
  return 0;
}

int verify_freudenthal_kostant(const Options& o, std::ostream& out) {
  bool ok = true;
  Int bound = o.height >= 0 ? o.height : 12;
  out << "type\tlambda\tmu\tfreudenthal\tkostant\n";
  std::ostringstream dims;
  for (const auto& t : suite_types(o, "A1,A2,B2,G2")) {
    RootDatum rd = datum(o, t);
    WeylGroup g(rd);
    auto sweep = multiplicity_sweep(rd, g, bound, exec_of(o));
    for (const auto& row : sweep.rows)
      out << rd.label() << '\t' << row.lambda.to_string() << '\t' << row.mu.to_string() << '\t' << row.freudenthal
          << '\t' << row.kostant << '\n';
    dims << rd.label() << ": " << sweep.rows.size() << " pairs, " << sweep.disagreements << " disagreements, "
         << sweep.dimensions.size() << " dimension sums, " << sweep.dimension_failures << " failures\n";
    ok = ok && sweep.disagreements == 0 && sweep.dimension_failures == 0;
  }
  out << dims.str() << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 2;
}

int verify_dimension_consistency(const Options& o, std::ostream& out) {
  bool ok = true;
  Rational h(o.height >= 0 ? o.height : 6);
  out << "type\tlambda\tmu\ttheorem\tunramified\tdirect\torbits\n";
  for (const auto& t : suite_types(o, "A1,A2,B2,G2")) {
    RootDatum rd = datum(o, t);
    for (const auto& row : dimension_coherence_sweep(rd, h, o.seed, exec_of(o))) {
      bool same = Rational(row.theorem) == row.direct && row.theorem == row.unramified;
      ok = ok && same;
      out << rd.label() << '\t' << row.lambda.to_string() << '\t' << row.mu.to_string() << '\t' << row.theorem << '\t'
          << row.unramified << '\t' << to_string(row.direct) << '\t' << row.orbits << '\n';
    }
  }
  out << "levi\tI\tr_N\td_G\td_M\tholds\n";
  for (const char* t : {"A2", "A3"}) {
    RootDatum rd = build_root_datum(t);
    for (const auto& row : levi_sweep(rd, 4, o.seed, exec_of(o))) {
      ok = ok && row.holds;
      out << rd.label() << '\t' << mask_string(row.levi, rd.rank()) << '\t' << to_string(row.r_N) << '\t'
          << to_string(row.d_G) << '\t' << to_string(row.d_M) << '\t' << (row.holds ? "yes" : "no") << '\n';
    }
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 2;
}

int verify_stratification(const Options& o, std::ostream& out) {
  bool ok = true;
  Rational h(o.height >= 0 ? o.height : 6);
  out << "type\tnu\tkappa\topen_strata\tlambda\n";
  for (const auto& t : suite_types(o, "A2,B2")) {
    RootDatum rd = datum(o, t);
    for (const auto& row : stratification_sweep(rd, 6, h, exec_of(o))) {
      ok = ok && row.open_strata == 1;
      out << rd.label() << '\t' << row.nu.to_string() << '\t' << kappa_string(row.kappa) << '\t' << row.open_strata
          << '\t' << row.lambda.to_string() << '\n';
    }
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 2;
}

int verify_chen_zhu(const Options& o, std::ostream& out) {
  Rational h(o.height >= 0 ? o.height : 4);
  out << "type\tnu\tkappa\tmu_star\tchen_zhu\tequal\n";
  std::size_t equal = 0, total = 0;
  for (const auto& t : suite_types(o, "A2")) {
    RootDatum rd = datum(o, t);
    for (const auto& row : chen_zhu_sweep(rd, 4, h, exec_of(o))) {
      std::string cz;
      for (const auto& c : row.chen_zhu) cz += (cz.empty() ? "" : " ") + c.to_string();
      out << rd.label() << '\t' << row.nu.to_string() << '\t' << kappa_string(row.kappa) << '\t'
          << row.mu_star.to_string() << '\t' << (cz.empty() ? "none" : cz) << '\t' << (row.equal ? "yes" : "no")
          << '\n';
      ++total;
      if (row.equal) ++equal;
    }
  }
  out << "equal: " << equal << "/" << total << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.suite == "lower-bound") return verify_lower_bound(o, out);
  if (o.suite == "nilcone") return verify_nilcone(o, out);
  if (o.suite == "freudenthal-kostant") return verify_freudenthal_kostant(o, out);
  if (o.suite == "dimension-consistency") return verify_dimension_consistency(o, out);
  if (o.suite == "stratification-disjoint") return verify_stratification(o, out);
  if (o.suite == "chen-zhu-compare") return verify_chen_zhu(o, out);
  throw InputError("unknown suite '" + o.suite + "'");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kottwitz-Viehmann variety calculator"};
  app.name("kv-calc");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool type_required) {
    auto* t = s->add_option("--type", o.type, "root system label, e.g. A2, B3, A1xA1");
    if (type_required) t->required();
    s->add_option("--isogeny", o.isogeny, "sc | adjoint | custom:<file>");
    s->add_flag("--allow-e6", o.allow_e6, "permit E6 (|W| = 51840)");
    s->add_option("--jobs", o.jobs, "OpenMP threads for sweeps")->check(CLI::NonNegativeNumber);
  };

  auto* weyl = app.add_subcommand("weyl", "Weyl group data");
  common(weyl, true);
  weyl->add_flag("--coxeter", o.coxeter, "list Coxeter elements");
  weyl->add_flag("--list", o.list, "list all elements");

  auto* mult = app.add_subcommand("mult", "weight multiplicity of the dual group");
  common(mult, true);
  mult->add_option("--lambda", o.lambda, "highest weight (simple-coroot coordinates)");
  mult->add_option("--mu", o.mu, "weight");
  mult->add_option("--sweep", o.sweep, "TSV of all dominant pairs with <rho, lambda> <= N");
  mult->add_flag("--serial", o.serial, "use the serial kernels");

  auto* dim = app.add_subcommand("dim", "dimension report for (gamma, lambda)");
  common(dim, false);
  dim->add_option("--class", o.class_file, "class datum JSON file")->required();
  dim->add_option("--lambda", o.lambda, "dominant coweight, e.g. 1,1 or 1/2,1/2")->required();
  dim->add_flag("--json", o.json, "print a JSON report");

  auto* comp = app.add_subcommand("components", "predicted component orbits");
  common(comp, false);
  comp->add_option("--class", o.class_file, "class datum JSON file")->required();
  comp->add_option("--lambda", o.lambda, "dominant coweight, e.g. 1,1 or 1/2,1/2")->required();
  comp->add_flag("--json", o.json, "print a JSON report");

  auto* strata = app.add_subcommand("strata", "polytope and Steinberg strata");
  strata->require_subcommand(1);
  auto* poly = strata->add_subcommand("polytope", "membership in P_lambda and its open part");
  common(poly, true);
  poly->add_option("--lambda", o.lambda, "dominant coweight, e.g. 1,1 or 1/2,1/2")->required();
  poly->add_option("--nu", o.nu, "point to test for membership");
  poly->add_option("--lambda2", o.lambda2, "also print the intersection with P_lambda2");
  auto* stein = strata->add_subcommand("steinberg", "stratum of a valuation vector");
  common(stein, true);
  stein->add_option("--lambda", o.lambda, "dominant coweight, e.g. 1,1 or 1/2,1/2")->required();
  stein->add_option("--cvals", o.cvals, "c-valuations, e.g. 1,inf")->required();
  stein->add_option("--bvals", o.bvals, "b-valuations (checked against lambda)");

  auto* nil = app.add_subcommand("nilcone", "strata of the nilpotent cone");
  common(nil, true);

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  common(verify, false);
  verify->add_option("suite", o.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"lower-bound", "nilcone", "freudenthal-kostant", "dimension-consistency",
                             "stratification-disjoint", "chen-zhu-compare"}));
  verify->add_option("--height", o.height, "sweep bound");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_flag("--serial", o.serial, "use the serial kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (verify->parsed() && o.isogeny == "sc" && verify->count("--isogeny") == 0) o.isogeny = "adjoint";
  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  try {
    if (weyl->parsed()) return cmd_weyl(o, out);
    if (mult->parsed()) return cmd_mult(o, out);
    if (dim->parsed()) return cmd_dim(o, out);
    if (comp->parsed()) return cmd_components(o, out);
    if (poly->parsed()) return cmd_polytope(o, out);
    if (stein->parsed()) return cmd_steinberg(o, out);
    if (nil->parsed()) return cmd_nilcone(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace kv
