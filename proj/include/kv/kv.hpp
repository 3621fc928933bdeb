#pragma once

#include <optional>
#include <vector>

#include "kv/conjugacy.hpp"
#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"

namespace kv {

class EmptyVarietyError : public InputError {
 public:
  using InputError::InputError;
};

/// Calculator output for a pair (gamma, lambda).
struct KVReport {
  bool nonempty = false;
  Coweight newton;
  Int d = 0;
  Int c = 0;
  std::optional<Int> dimension;
  std::optional<Coweight> mu_star;
  std::optional<Int> predicted_orbits;
  Int regular_orbit_bound = 0;
  bool regular_bound_exact = false;
  Rational d_plus;
  /// Maximal integral coweights below the Newton point in the class kappa.
  std::vector<Coweight> chen_zhu_mu;

  friend bool operator==(const KVReport&, const KVReport&) = default;
};

/// Throws InputError unless lambda is dominant and in the isogeny lattice.
void require_dominant_integral(const RootDatum& rd, const Coweight& lambda);

/// p_G(lambda) = kappa and newton <=_Q lambda.
bool nonempty(const ClassDatum& cd, const Coweight& lambda);

/// <rho, lambda> + (d - c)/2; EmptyVarietyError when empty, InvariantError when
/// not a nonnegative integer.
Int dimension(const ClassDatum& cd, const Coweight& lambda);

struct UnramifiedDimension {
  Int dimension = 0;
  Int component_orbits = 0;
};

/// Split class with integral dominant Newton point mu: (<rho, lambda - mu> + r(gamma), m_{lambda mu}).
/// Asserts agreement with <rho, lambda> + d/2.
UnramifiedDimension unramified_dimension(const ClassDatum& cd, const Coweight& lambda);

/// Unique minimal mu in dominant_below(lambda) with nu <=_Q mu.
Coweight best_integral_approx(const RootDatum& rd, const Coweight& nu, const Coweight& lambda);

/// Maximal dominant mu in the lattice with p_G(mu) = kappa and mu <=_Q nu (may be empty or several).
std::vector<Coweight> chen_zhu_approx(const RootDatum& rd, const Coweight& nu, std::span<const Int> kappa);

/// m_{lambda, mu*}.
Int predicted_components(const ClassDatum& cd, const Coweight& lambda);

/// |Cox(W, S)|.
Int regular_orbit_bound(const RootDatum& rd);
/// lambda strictly dominant and lambda - mu_star strictly positive in every coordinate.
bool regular_bound_exact(const RootDatum& rd, const Coweight& lambda, const Coweight& mu_star);

/// d_+ = <2 rho, lambda> + d(gamma); when it vanishes, checks that gamma is split,
/// nu = lambda and the dimension is 0.
Rational extended_disc_valuation(const ClassDatum& cd, const Coweight& lambda);

/// <rho, lambda + mu>.
Rational mv_dimension(const RootDatum& rd, const Coweight& lambda, const Coweight& mu);

KVReport kv_report(const ClassDatum& cd, const Coweight& lambda);

}  // namespace kv
