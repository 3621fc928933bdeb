#pragma once

#include <vector>

#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"
#include "kv/weyl.hpp"

namespace kv {

/// Stratum X_{empty, J, w} of the nilpotent cone of the Vinberg monoid.
struct NilconeStratum {
  RootMask J = 0;
  WeylElement w;
  Int dim = 0;
  bool is_top = false;
};

/// All (J, w) with w minimal in W_{J^c} w W_{J^c} and Supp(w) containing J,
/// ordered by J then by position of w in the group enumeration.
std::vector<NilconeStratum> nilcone_strata(const RootDatum& rd, const WeylGroup& g);

struct NilconeSummary {
  Int dim_nilcone = 0;
  std::size_t strata = 0;
  std::size_t top_strata = 0;
  std::size_t coxeter_count = 0;
};

/// Checks: max dim = dim G - r, the top strata are exactly the (Delta, Coxeter)
/// pairs, every other stratum is strictly smaller. Throws InvariantError otherwise.
NilconeSummary nilcone_report(const RootDatum& rd, const WeylGroup& g, const std::vector<NilconeStratum>& strata);

/// {mu dominant : mu <= lambda}.
std::vector<Coweight> arc_strata_index(const RootDatum& rd, const Coweight& lambda);

/// max_i <lambda, omega_i + omega_{iota(i)}>.
Int b_constant(const RootDatum& rd, const Coweight& lambda);

/// Positive roots of the Levi spanned by `mask`.
std::size_t levi_positive_roots(const RootSystem& sys, RootMask mask);

}  // namespace kv
