#include "kv/kv.hpp"

#include <algorithm>
#include <functional>

#include "kv/multiplicity.hpp"
#include "kv/weyl.hpp"

namespace kv {

void require_dominant_integral(const RootDatum& rd, const Coweight& lambda) {
  if (lambda.rank() != rd.rank())
    throw InputError("lambda has " + std::to_string(lambda.rank()) + " coordinates, expected " +
                     std::to_string(rd.rank()));
  if (!rd.system().is_dominant(lambda)) throw InputError("lambda = " + lambda.to_string() + " is not dominant");
  if (!rd.in_lattice(lambda)) throw InputError("lambda = " + lambda.to_string() + " is not in the isogeny lattice");
}

bool nonempty(const ClassDatum& cd, const Coweight& lambda) {
  require_dominant_integral(*cd.rd, lambda);
  return cd.rd->p_G(lambda) == cd.kappa && RootSystem::leq_q(newton_point(cd), lambda);
}

namespace {

Int as_integer(const Rational& q, const std::string& what) {
  if (q.denominator() != 1) throw InvariantError(what + " = " + to_string(q) + " is not an integer");
  return q.numerator();
}

}  // namespace

Int dimension(const ClassDatum& cd, const Coweight& lambda) {
  if (!nonempty(cd, lambda))
    throw EmptyVarietyError("the variety is empty for lambda = " + lambda.to_string());
  Rational d = disc_valuation(cd);
  Rational dim = lambda.height() + (d - Rational(c_invariant(cd))) / Rational(2);
  Int out = as_integer(dim, "dimension");
  if (out < 0) throw InvariantError("dimension " + std::to_string(out) + " is negative");
  return out;
}

UnramifiedDimension unramified_dimension(const ClassDatum& cd, const Coweight& lambda) {
  const RootDatum& rd = *cd.rd;
  require_dominant_integral(rd, lambda);
  if (!cd.is_split()) throw InputError("unramified_dimension needs a split class");
  const Coweight& mu = cd.nu_bar;
  if (!rd.system().is_dominant(mu) || !rd.in_lattice(mu))
    throw InputError("unramified_dimension needs an integral dominant valuation coweight");
  if (!RootSystem::leq(mu, lambda) || rd.p_G(lambda) != cd.kappa)
    throw EmptyVarietyError("mu = " + mu.to_string() + " is not below lambda = " + lambda.to_string());
  Rational via_r = (lambda - mu).height() + r_gamma(cd);
  Rational via_d = lambda.height() + disc_valuation(cd) / Rational(2);
  if (via_r != via_d)
    throw InvariantError("<rho, lambda - mu> + r(gamma) = " + to_string(via_r) + " but <rho, lambda> + d/2 = " +
                         to_string(via_d));
  return {as_integer(via_r, "dimension"), multiplicity_freudenthal(rd.system(), lambda, mu)};
}

namespace {

std::vector<Coweight> minimal_elements(const std::vector<Coweight>& s) {
  std::vector<Coweight> out;
  for (const auto& a : s) {
    bool minimal = std::none_of(s.begin(), s.end(), [&](const Coweight& b) { return !(b == a) && RootSystem::leq(b, a); });
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<Coweight> maximal_elements(const std::vector<Coweight>& s) {
  std::vector<Coweight> out;
  for (const auto& a : s) {
    bool maximal = std::none_of(s.begin(), s.end(), [&](const Coweight& b) { return !(b == a) && RootSystem::leq(a, b); });
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

Coweight best_integral_approx(const RootDatum& rd, const Coweight& nu, const Coweight& lambda) {
  require_dominant_integral(rd, lambda);
  if (!rd.system().is_dominant(nu)) throw InputError("nu = " + nu.to_string() + " is not dominant");
  if (!RootSystem::leq_q(nu, lambda))
    throw InputError("nu = " + nu.to_string() + " is not below lambda = " + lambda.to_string());
  std::vector<Coweight> candidates;
  for (auto& mu : dominant_below(rd.system(), lambda))
    if (RootSystem::leq_q(nu, mu)) candidates.push_back(std::move(mu));
  auto mins = minimal_elements(candidates);
  if (mins.size() != 1) {
    std::string msg = "best integral approximation of nu = " + nu.to_string() + " below lambda = " +
                      lambda.to_string() + " is not unique; minimal candidates:";
    for (const auto& m : mins) msg += " (" + m.to_string() + ")";
    throw InvariantError(msg);
  }
  return mins.front();
}

std::vector<Coweight> chen_zhu_approx(const RootDatum& rd, const Coweight& nu, std::span<const Int> kappa) {
  const RootSystem& sys = rd.system();
  const std::size_t r = rd.rank();
  if (!sys.is_dominant(nu)) throw InputError("nu = " + nu.to_string() + " is not dominant");
  auto target = rd.pi1().normalize(kappa);

  // mu = sum p_j omega_j^vee with p_j >= 0; each omega_j^vee has nonnegative coordinates.
  std::vector<Coweight> fund;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Rational> e(r, Rational(0));
    e[j] = 1;
    fund.push_back(sys.from_fundamental_coords(e));
  }
  std::vector<Int> bound(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    std::optional<Rational> b;
    for (std::size_t i = 0; i < r; ++i)
      if (fund[j][i] > 0) {
        Rational q = nu[i] / fund[j][i];
        if (!b || q < *b) b = q;
      }
    bound[j] = b ? boost::rational_cast<Int>(*b) : 0;  // truncation toward zero; b >= 0
  }

  std::vector<Coweight> candidates;
  std::vector<Int> p(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == r) {
      Coweight mu(r);
      for (std::size_t k = 0; k < r; ++k)
        if (p[k]) mu += Rational(p[k]) * fund[k];
      if (!RootSystem::leq_q(mu, nu)) return;
      auto coords = rd.lattice_coords(mu);
      if (!coords || rd.pi1().project_coords(*coords) != target) return;
      candidates.push_back(std::move(mu));
      return;
    }
    for (p[j] = 0; p[j] <= bound[j]; ++p[j]) rec(j + 1);
    p[j] = 0;
  };
  rec(0);
  auto out = maximal_elements(candidates);
  std::sort(out.begin(), out.end());
  return out;
}

Int predicted_components(const ClassDatum& cd, const Coweight& lambda) {
  if (!nonempty(cd, lambda))
    throw EmptyVarietyError("the variety is empty for lambda = " + lambda.to_string());
  Coweight mu = best_integral_approx(*cd.rd, newton_point(cd), lambda);
  return multiplicity_freudenthal(cd.rd->system(), lambda, mu);
}

Int regular_orbit_bound(const RootDatum& rd) { return static_cast<Int>(coxeter_elements(rd.system()).size()); }

bool regular_bound_exact(const RootDatum& rd, const Coweight& lambda, const Coweight& mu_star) {
  for (std::size_t i = 0; i < rd.rank(); ++i) {
    if (rd.system().pair_simple(lambda, i) <= 0) return false;
    if (lambda[i] - mu_star[i] <= 0) return false;
  }
  return true;
}

Rational extended_disc_valuation(const ClassDatum& cd, const Coweight& lambda) {
  Rational d_plus = Rational(2) * lambda.height() + disc_valuation(cd);
  if (!nonempty(cd, lambda)) return d_plus;
  if (d_plus < 0) throw InvariantError("d_+ = " + to_string(d_plus) + " < 0 on a nonempty variety");
  if (d_plus == 0) {
    if (!cd.is_split()) throw InvariantError("d_+ = 0 for a non-split class");
    if (!(newton_point(cd) == lambda)) throw InvariantError("d_+ = 0 but the Newton point differs from lambda");
    if (dimension(cd, lambda) != 0) throw InvariantError("d_+ = 0 but the dimension is not 0");
  }
  return d_plus;
}

Rational mv_dimension(const RootDatum& rd, const Coweight& lambda, const Coweight& mu) {
  require_dominant_integral(rd, lambda);
  if (!rd.system().is_dominant(mu) || !RootSystem::leq(mu, lambda))
    throw InputError("mv_dimension needs dominant mu <= lambda");
  return (lambda + mu).height();
}

KVReport kv_report(const ClassDatum& cd, const Coweight& lambda) {
  require_valid(cd);
  require_dominant_integral(*cd.rd, lambda);
  const RootDatum& rd = *cd.rd;
  KVReport rep;
  rep.newton = newton_point(cd);
  rep.d = as_integer(disc_valuation(cd), "d(gamma)");
  rep.c = c_invariant(cd);
  rep.nonempty = nonempty(cd, lambda);
  rep.regular_orbit_bound = regular_orbit_bound(rd);
  rep.d_plus = extended_disc_valuation(cd, lambda);
  if (rep.nonempty) {
    rep.dimension = dimension(cd, lambda);
    rep.mu_star = best_integral_approx(rd, rep.newton, lambda);
    rep.predicted_orbits = multiplicity_freudenthal(rd.system(), lambda, *rep.mu_star);
    rep.regular_bound_exact = regular_bound_exact(rd, lambda, *rep.mu_star);
    if (rep.regular_bound_exact && *rep.predicted_orbits < rep.regular_orbit_bound)
      throw InvariantError("m_{lambda mu*} = " + std::to_string(*rep.predicted_orbits) +
                           " is below the regular orbit bound " + std::to_string(rep.regular_orbit_bound));
  }
  rep.chen_zhu_mu = chen_zhu_approx(rd, rep.newton, cd.kappa);
  return rep;
}

}  // namespace kv
