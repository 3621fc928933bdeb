#include "kv/strata.hpp"

#include <algorithm>

#include "kv/errors.hpp"
#include "kv/kv.hpp"
#include "kv/multiplicity.hpp"

namespace kv {

ExtendedRational ExtendedRational::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "inf" || t == "infinity" || t == "+inf") return infinity();
  return ExtendedRational(parse_rational(t));
}

const Rational& ExtendedRational::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite valuation");
  return value_;
}

std::string ExtendedRational::to_string() const { return infinite_ ? "inf" : kv::to_string(value_); }

bool polytope_member(const RootDatum& rd, const Coweight& nu, const Coweight& lambda, bool open_stratum) {
  require_dominant_integral(rd, lambda);
  if (!rd.system().is_dominant(nu) || !RootSystem::leq_q(nu, lambda)) return false;
  if (!open_stratum) return true;
  return best_integral_approx(rd, nu, lambda) == lambda;
}

Coweight polytope_intersection(const RootDatum& rd, const Coweight& lambda1, const Coweight& lambda2) {
  require_dominant_integral(rd, lambda1);
  require_dominant_integral(rd, lambda2);
  if (rd.p_G(lambda1) != rd.p_G(lambda2))
    throw InputError("lambda1 and lambda2 lie in different pi_1 classes");
  // beta1 = positive part of lambda1 - lambda2; mu = lambda1 - beta1.
  Coweight mu(rd.rank());
  for (std::size_t i = 0; i < rd.rank(); ++i) {
    Rational diff = lambda1[i] - lambda2[i];
    mu[i] = lambda1[i] - std::max(diff, Rational(0));
  }
  if (!rd.system().is_dominant(mu))
    throw InvariantError("polytope intersection point " + mu.to_string() + " is not dominant");
  return mu;
}

std::vector<Rational> b_valuations(const RootDatum& rd, const Coweight& lambda) {
  std::vector<Rational> b(rd.rank());
  for (std::size_t i = 0; i < rd.rank(); ++i)
    b[i] = rd.system().pair_simple(lambda, static_cast<std::size_t>(rd.iota()[i]));
  return b;
}

Coweight steinberg_stratum(const RootDatum& rd, const ValuationVector& v, const Coweight& lambda) {
  require_dominant_integral(rd, lambda);
  const std::size_t r = rd.rank();
  if (v.c_vals.size() != r) throw InputError("expected " + std::to_string(r) + " c-valuations");
  if (!v.b_vals.empty()) {
    if (v.b_vals != b_valuations(rd, lambda))
      throw InputError("b-valuations are not those of lambda = " + lambda.to_string());
  }
  std::vector<Coweight> candidates;
  for (auto& mu : dominant_below(rd.system(), lambda)) {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      ok = v.c_vals[static_cast<std::size_t>(rd.iota()[i])].geq(lambda[i] - mu[i]);
    if (ok) candidates.push_back(std::move(mu));
  }
  std::vector<Coweight> mins;
  for (const auto& a : candidates)
    if (std::none_of(candidates.begin(), candidates.end(),
                     [&](const Coweight& b) { return !(b == a) && RootSystem::leq(b, a); }))
      mins.push_back(a);
  if (mins.empty()) throw InputError("valuation vector is inconsistent with lambda = " + lambda.to_string());
  if (mins.size() > 1) {
    std::string msg = "Steinberg stratum is not unique; minimal candidates:";
    for (const auto& m : mins) msg += " (" + m.to_string() + ")";
    throw InvariantError(msg);
  }
  return mins.front();
}

Rational generic_char_valuation(const RootDatum& rd, const Coweight& mu, std::size_t i) {
  const std::size_t r = rd.rank();
  if (i >= r) throw InputError("fundamental weight index out of range");
  // Weights of G live in the dual system; omega_i in simple-root coordinates is C^{-1} e_i.
  RootSystem dual = rd.system().dual();
  RatMatrix cinv = inverse(to_rational(rd.cartan()));
  std::vector<Rational> omega(r);
  for (std::size_t k = 0; k < r; ++k) omega[k] = cinv[k][i];
  WeightSystem ws(dual, Coweight(omega));
  std::optional<Rational> best;
  for (const auto& [chi, m] : ws.all_weights()) {
    Rational p(0);  // mu^T C chi
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        if (rd.cartan()(a, b) != 0) p += mu[a] * Rational(rd.cartan()(a, b)) * chi[b];
    if (!best || p < *best) best = p;
  }
  return *best;
}

ValuationVector generic_valuation_vector(const RootDatum& rd, const Coweight& lambda, const Coweight& mu) {
  ValuationVector v;
  v.b_vals = b_valuations(rd, lambda);
  for (std::size_t i = 0; i < rd.rank(); ++i)
    v.c_vals.emplace_back(lambda[static_cast<std::size_t>(rd.iota()[i])] + generic_char_valuation(rd, mu, i));
  return v;
}

}  // namespace kv
