#include "kv/vinberg.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "kv/conjugacy.hpp"
#include "kv/errors.hpp"
#include "kv/kv.hpp"
#include "kv/multiplicity.hpp"

namespace kv {

std::size_t levi_positive_roots(const RootSystem& sys, RootMask mask) {
  std::size_t n = 0;
  for (const auto& a : sys.positive_roots())
    if (root_in_levi(a, mask)) ++n;
  return n;
}

std::vector<NilconeStratum> nilcone_strata(const RootDatum& rd, const WeylGroup& g) {
  const std::size_t r = rd.rank();
  const RootMask all = full_mask(r);
  const Int dim_g = static_cast<Int>(rd.dim_group());
  std::vector<NilconeStratum> out;
  for (std::uint64_t jj = 0; jj <= all; ++jj) {
    const RootMask j = static_cast<RootMask>(jj);
    const RootMask jc = all & ~j;
    const Int dim_levi = 2 * static_cast<Int>(levi_positive_roots(rd.system(), jc)) + static_cast<Int>(r);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if ((g[k].support() & j) != j) continue;
      if (!is_min_double_coset_rep(g, k, jc, jc)) continue;
      NilconeStratum s;
      s.J = j;
      s.w = g[k];
      s.dim = dim_g - dim_levi - static_cast<Int>(g[k].length()) + std::popcount(j);
      s.is_top = s.dim == dim_g - static_cast<Int>(r);
      out.push_back(std::move(s));
    }
  }
  return out;
}

NilconeSummary nilcone_report(const RootDatum& rd, const WeylGroup& g, const std::vector<NilconeStratum>& strata) {
  const Int top = static_cast<Int>(rd.dim_group() - rd.rank());
  const RootMask all = full_mask(rd.rank());
  NilconeSummary sum;
  sum.strata = strata.size();
  auto cox = coxeter_elements(g.system());
  sum.coxeter_count = cox.size();
  std::set<std::vector<Int>> cox_actions;
  for (const auto& c : cox) cox_actions.insert(c.action.data());
  std::set<std::vector<Int>> top_actions;
  for (const auto& s : strata) {
    sum.dim_nilcone = std::max(sum.dim_nilcone, s.dim);
    if (s.dim > top) throw InvariantError("stratum of dimension " + std::to_string(s.dim) + " exceeds dim G - r");
    if (s.is_top) {
      ++sum.top_strata;
      if (s.J != all) throw InvariantError("top stratum with J != Delta (w = " + s.w.word_string() + ")");
      top_actions.insert(s.w.action.data());
    }
  }
  if (sum.dim_nilcone != top)
    throw InvariantError("max stratum dimension " + std::to_string(sum.dim_nilcone) + " != dim G - r = " +
                         std::to_string(top));
  if (sum.top_strata != sum.coxeter_count || top_actions != cox_actions)
    throw InvariantError("top strata (" + std::to_string(sum.top_strata) + ") are not the Coxeter pairs (" +
                         std::to_string(sum.coxeter_count) + ")");
  return sum;
}

std::vector<Coweight> arc_strata_index(const RootDatum& rd, const Coweight& lambda) {
  if (!rd.system().is_dominant(lambda)) throw InputError("lambda = " + lambda.to_string() + " is not dominant");
  return dominant_below(rd.system(), lambda);
}

Int b_constant(const RootDatum& rd, const Coweight& lambda) {
  if (!rd.system().is_dominant(lambda)) throw InputError("lambda = " + lambda.to_string() + " is not dominant");
  Rational best(0);
  for (std::size_t i = 0; i < rd.rank(); ++i)
    best = std::max(best, lambda[i] + lambda[static_cast<std::size_t>(rd.iota()[i])]);
  if (best.denominator() != 1) throw InvariantError("b(lambda) = " + to_string(best) + " is not an integer");
  return best.numerator();
}

}  // namespace kv
