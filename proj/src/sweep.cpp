#include "kv/sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "kv/conjugacy.hpp"
#include "kv/errors.hpp"
#include "kv/kv.hpp"
#include "kv/multiplicity.hpp"
#include "kv/strata.hpp"

namespace kv {

namespace {

std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::vector<Coweight> fundamental_coweights(const RootSystem& sys) {
  std::vector<Coweight> out;
  for (std::size_t j = 0; j < sys.rank(); ++j) {
    std::vector<Rational> e(sys.rank(), Rational(0));
    e[j] = 1;
    out.push_back(sys.from_fundamental_coords(e));
  }
  return out;
}

void sort_by_height(std::vector<Coweight>& v) {
  std::sort(v.begin(), v.end(), [](const Coweight& a, const Coweight& b) {
    Rational ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

// Dominant lattice points sum_j p_j omega_j^vee with sum_j p_j weight_j <= bound.
std::vector<Coweight> dominant_weighted(const RootDatum& rd, const std::vector<Rational>& weight,
                                        const Rational& bound) {
  const std::size_t r = rd.rank();
  for (const auto& w : weight)
    if (w <= 0) throw InputError("sweep bound does not control every coordinate; use a simple type");
  auto fund = fundamental_coweights(rd.system());
  std::vector<Coweight> out;
  std::vector<Int> p(r, 0);
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t j, Rational left) {
    if (j == r) {
      Coweight c(r);
      for (std::size_t k = 0; k < r; ++k)
        if (p[k]) c += Rational(p[k]) * fund[k];
      if (rd.in_lattice(c)) out.push_back(std::move(c));
      return;
    }
    for (p[j] = 0; Rational(p[j]) * weight[j] <= left; ++p[j]) rec(j + 1, left - Rational(p[j]) * weight[j]);
    p[j] = 0;
  };
  if (bound >= 0) rec(0, bound);
  sort_by_height(out);
  return out;
}

template <class T>
std::vector<T> flatten(std::vector<std::vector<T>>&& parts) {
  std::vector<T> out;
  for (auto& p : parts)
    for (auto& x : p) out.push_back(std::move(x));
  return out;
}

// Pool entries grouped by pi_1 class, in pool order.
std::map<std::vector<Int>, std::vector<Coweight>> by_class(const RootDatum& rd, const std::vector<Coweight>& pool) {
  std::map<std::vector<Int>, std::vector<Coweight>> out;
  for (const auto& c : pool) out[rd.p_G(c)].push_back(c);
  return out;
}

}  // namespace

std::vector<Coweight> dominant_by_height(const RootDatum& rd, const Rational& max_height) {
  std::vector<Rational> w;
  for (const auto& f : fundamental_coweights(rd.system())) w.push_back(f.height());
  return dominant_weighted(rd, w, max_height);
}

std::vector<Coweight> dominant_by_theta(const RootDatum& rd, Int bound) {
  const RootSystem& sys = rd.system();
  const auto& theta = sys.positive_roots()[sys.highest_coroot_index()];
  std::vector<Rational> w;
  for (Int t : theta) w.emplace_back(t);
  Rational offset = sys.pair(sys.rho_check(), theta);
  return dominant_weighted(rd, w, Rational(bound) - offset);
}

std::vector<Coweight> dominant_grid(const RootDatum& rd, Int max_den, const Rational& max_height) {
  const std::size_t r = rd.rank();
  std::set<Coweight> seen;
  for (Int q = 1; q <= max_den; ++q) {
    Int cap = boost::rational_cast<Int>(max_height * Rational(q));
    std::vector<Int> a(r, 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t j, Int left) {
      if (j == r) {
        Coweight nu = Coweight::from_fraction(a, q);
        if (rd.system().is_dominant(nu)) seen.insert(std::move(nu));
        return;
      }
      for (a[j] = 0; a[j] <= left; ++a[j]) rec(j + 1, left - a[j]);
      a[j] = 0;
    };
    rec(0, cap);
  }
  std::vector<Coweight> out(seen.begin(), seen.end());
  sort_by_height(out);
  return out;
}

// ---------------------------------------------------------------- multiplicities

MultiplicitySweep multiplicity_sweep(const RootDatum& rd, const WeylGroup& g, Int bound, Exec exec) {
  const RootSystem& sys = rd.system();
  auto lambdas = dominant_by_theta(rd, bound);
  struct Part {
    std::vector<MultiplicityRow> rows;
    DimensionCheck dim;
  };
  auto parts = indexed_map<Part>(
      lambdas.size(),
      [&](std::size_t i) {
        const Coweight& lambda = lambdas[i];
        WeightSystem ws(sys, lambda);
        PartitionFunction p(sys);
        Part part;
        for (const auto& [mu, m] : ws.dominant())
          part.rows.push_back({lambda, mu, m, multiplicity_kostant(g, lambda, mu, p)});
        part.dim = {lambda, ws.dimension(), sys.weyl_dimension(lambda)};
        return part;
      },
      exec);
  MultiplicitySweep out;
  for (auto& part : parts) {
    for (auto& row : part.rows) {
      if (row.freudenthal != row.kostant) ++out.disagreements;
      out.rows.push_back(std::move(row));
    }
    if (part.dim.weight_sum != part.dim.weyl_dimension) ++out.dimension_failures;
    out.dimensions.push_back(std::move(part.dim));
  }
  return out;
}

std::vector<LowerBoundRow> lower_bound_sweep(const RootDatum& rd, const Rational& max_height, Exec exec) {
  const RootSystem& sys = rd.system();
  const Int cox = regular_orbit_bound(rd);
  std::vector<Coweight> lambdas;
  for (auto& l : dominant_by_height(rd, max_height)) {
    bool interior = true;
    for (std::size_t i = 0; i < rd.rank(); ++i)
      if (sys.pair_simple(l, i) <= 0) interior = false;
    if (interior) lambdas.push_back(std::move(l));
  }
  auto parts = indexed_map<std::vector<LowerBoundRow>>(
      lambdas.size(),
      [&](std::size_t i) {
        const Coweight& lambda = lambdas[i];
        WeightSystem ws(sys, lambda);
        std::vector<LowerBoundRow> rows;
        for (const auto& [mu, m] : ws.dominant()) {
          bool inside = true;
          for (std::size_t k = 0; k < rd.rank(); ++k)
            if (lambda[k] - mu[k] < 1) inside = false;
          if (inside) rows.push_back({lambda, mu, m, cox, m >= cox});
        }
        return rows;
      },
      exec);
  return flatten(std::move(parts));
}

// ---------------------------------------------------------------- polytopes

std::vector<IntersectionCheck> polytope_intersection_sweep(const RootDatum& rd, std::size_t pairs,
                                                           const Rational& max_height, Int max_den,
                                                           std::uint64_t seed, Exec exec) {
  const RootSystem& sys = rd.system();
  const std::size_t r = rd.rank();
  auto pool = dominant_by_height(rd, max_height);
  auto classes = by_class(rd, pool);
  return indexed_map<IntersectionCheck>(
      pairs,
      [&](std::size_t i) {
        auto rng = task_rng(seed, i);
        IntersectionCheck chk;
        chk.lambda1 = pool[pick(rng, pool.size())];
        const auto& same = classes.at(rd.p_G(chk.lambda1));
        chk.lambda2 = same[pick(rng, same.size())];
        chk.mu = polytope_intersection(rd, chk.lambda1, chk.lambda2);
        std::vector<Int> lo(r), hi(r);
        for (std::size_t k = 0; k < r; ++k) {
          Rational top = std::max(chk.lambda1[k], chk.lambda2[k]);
          lo[k] = -1;
          hi[k] = boost::rational_cast<Int>(top) + 2;
        }
        for (Int q = 1; q <= max_den; ++q) {
          std::vector<Int> a(r);
          std::function<void(std::size_t)> rec = [&](std::size_t j) {
            if (j == r) {
              Coweight nu = Coweight::from_fraction(a, q);
              if (nu.denominator() != q) return;
              ++chk.grid_points;
              bool cone_both = RootSystem::leq_q(nu, chk.lambda1) && RootSystem::leq_q(nu, chk.lambda2);
              bool cone_mu = RootSystem::leq_q(nu, chk.mu);
              bool dom = sys.is_dominant(nu);
              if (cone_both != cone_mu || (dom && cone_both) != (dom && sys.is_dominant(chk.mu) && cone_mu))
                ++chk.mismatches;
              return;
            }
            for (a[j] = lo[j] * q; a[j] <= hi[j] * q; ++a[j]) rec(j + 1);
          };
          rec(0);
        }
        return chk;
      },
      exec);
}

std::vector<DisjointnessRow> stratification_sweep(const RootDatum& rd, Int max_den, const Rational& max_height,
                                                  Exec exec) {
  const Rational slack(4);
  auto points = dominant_grid(rd, max_den, max_height);
  auto classes = by_class(rd, dominant_by_height(rd, max_height + slack));
  std::vector<std::pair<std::size_t, const std::pair<const std::vector<Int>, std::vector<Coweight>>*>> tasks;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (const auto& cls : classes) tasks.emplace_back(p, &cls);
  return indexed_map<DisjointnessRow>(
      tasks.size(),
      [&](std::size_t t) {
        const Coweight& nu = points[tasks[t].first];
        const auto& [kappa, lambdas] = *tasks[t].second;
        DisjointnessRow row{nu, kappa, 0, Coweight(rd.rank())};
        for (const auto& lambda : lambdas)
          if (polytope_member(rd, nu, lambda, true)) {
            ++row.open_strata;
            row.lambda = lambda;
          }
        return row;
      },
      exec);
}

std::vector<SteinbergRow> steinberg_sweep(const RootDatum& rd, std::size_t samples, const Rational& max_height,
                                          std::uint64_t seed, Exec exec) {
  auto pool = dominant_by_height(rd, max_height);
  return indexed_map<SteinbergRow>(
      samples,
      [&](std::size_t i) {
        auto rng = task_rng(seed, i);
        SteinbergRow row;
        row.lambda = pool[pick(rng, pool.size())];
        auto below = dominant_below(rd.system(), row.lambda);
        row.mu = below[pick(rng, below.size())];
        row.steinberg = steinberg_stratum(rd, generic_valuation_vector(rd, row.lambda, row.mu), row.lambda);
        row.best = best_integral_approx(rd, row.mu, row.lambda);
        return row;
      },
      exec);
}

// ---------------------------------------------------------------- dimension formulas

std::vector<CoherenceRow> dimension_coherence_sweep(const RootDatum& rd, const Rational& max_height,
                                                    std::uint64_t seed, Exec exec) {
  auto shared = std::make_shared<const RootDatum>(rd);
  const RootSystem& sys = rd.system();
  std::vector<std::pair<Coweight, Coweight>> pairs;
  for (const auto& lambda : dominant_by_height(rd, max_height))
    for (auto& mu : dominant_below(sys, lambda)) pairs.emplace_back(lambda, std::move(mu));
  return indexed_map<CoherenceRow>(
      pairs.size(),
      [&](std::size_t i) {
        auto rng = task_rng(seed, i);
        const auto& [lambda, mu] = pairs[i];
        std::map<std::size_t, Rational> residual;
        for (std::size_t k = 0; k < sys.num_positive(); ++k)
          if (sys.pair(mu, sys.positive_roots()[k]) == 0)
            residual[k] = Rational(static_cast<Int>(pick(rng, 4)));
        ClassDatum cd = split_class(shared, mu, residual);
        require_valid(cd);
        CoherenceRow row;
        row.lambda = lambda;
        row.mu = mu;
        row.theorem = dimension(cd, lambda);
        auto unr = unramified_dimension(cd, lambda);
        row.unramified = unr.dimension;
        row.orbits = unr.component_orbits;
        row.direct = (lambda - mu).height() + r_gamma(cd);
        return row;
      },
      exec);
}

std::vector<LeviRow> levi_sweep(const RootDatum& rd, std::size_t trials, std::uint64_t seed, Exec exec) {
  auto shared = std::make_shared<const RootDatum>(rd);
  const RootSystem& sys = rd.system();
  const RootMask all = full_mask(rd.rank());
  const std::size_t subsets = static_cast<std::size_t>(all) + 1;
  return indexed_map<LeviRow>(
      subsets * trials,
      [&](std::size_t t) {
        auto rng = task_rng(seed, t);
        RootMask levi = static_cast<RootMask>(t / trials);
        std::map<std::size_t, Rational> residual;
        for (std::size_t k = 0; k < sys.num_positive(); ++k) residual[k] = Rational(static_cast<Int>(pick(rng, 5)));
        ClassDatum cd = split_class(shared, Coweight(rd.rank()), residual);
        auto rel = levi_relation(cd, levi);
        return LeviRow{levi, rel.r_N, rel.d_G, rel.d_M, rel.holds};
      },
      exec);
}

// ---------------------------------------------------------------- degenerate cases

namespace {

struct TrialOutcome {
  bool rejected = false;
  bool nonempty = false;
  bool ramified = false;
  bool d_plus_zero = false;
  bool d_plus_zero_ok = false;
  bool failed = false;
  std::string message;
};

// Residuals constant on <w>-orbits of positive roots orthogonal to nu_bar, in (1/e)Z.
std::map<std::size_t, Rational> orbit_residuals(const RootSystem& sys, const WeylElement& w, Int e,
                                                const Coweight& nu_bar, std::mt19937_64& rng, bool zero) {
  std::map<std::size_t, Rational> out;
  std::vector<bool> done(sys.num_positive(), false);
  for (std::size_t k = 0; k < sys.num_positive(); ++k) {
    if (done[k] || sys.pair(nu_bar, sys.positive_roots()[k]) != 0) continue;
    Rational val = zero ? Rational(0) : Rational(static_cast<Int>(pick(rng, static_cast<std::size_t>(2 * e + 1))), e);
    std::size_t j = k;
    while (!done[j]) {
      done[j] = true;
      out[j] = val;
      auto hit = sys.find_coroot(w.action.apply(sys.positive_coroots()[j]));
      j = hit->index;
    }
  }
  return out;
}

}  // namespace

DegenerateStats degenerate_sweep(const RootDatum& rd, const WeylGroup& g, std::size_t trials, std::uint64_t seed,
                                 Exec exec) {
  auto shared = std::make_shared<const RootDatum>(rd);
  const RootSystem& sys = rd.system();
  auto pool = dominant_by_height(rd, Rational(5));
  auto outcomes = indexed_map<TrialOutcome>(
      trials,
      [&](std::size_t i) {
        auto rng = task_rng(seed, i);
        TrialOutcome out;
        const int mode = static_cast<int>(i % 3);
        Coweight lambda = pool[pick(rng, pool.size())];
        ClassDatum cd;
        if (mode == 0) {
          // nu = lambda with zero residuals: d_+ = 0 by construction.
          cd = split_class(shared, lambda, orbit_residuals(sys, g[0], 1, lambda, rng, true));
        } else if (mode == 1) {
          auto below = dominant_below(sys, lambda);
          Coweight mu = below[pick(rng, below.size())];
          Coweight nu_bar = g[pick(rng, g.size())].action.apply(mu);
          cd = split_class(shared, nu_bar, orbit_residuals(sys, g[0], 1, nu_bar, rng, false));
        } else {
          out.ramified = true;
          const WeylElement& w = g[pick(rng, g.size())];
          Int e = element_order(w);
          Coweight x = g[pick(rng, g.size())].action.apply(pool[pick(rng, pool.size())]);
          Coweight sum(rd.rank()), cur = x;
          for (Int k = 0; k < e; ++k) {
            sum += cur;
            cur = w.action.apply(cur);
          }
          Coweight nu_bar = Rational(1, e) * sum;
          auto residual = orbit_residuals(sys, w, e, nu_bar, rng, pick(rng, 4) == 0);
          Coweight newton = sys.dominant_reduce(nu_bar).first;
          std::vector<Coweight> above;
          for (const auto& l : pool)
            if (RootSystem::leq_q(newton, l)) above.push_back(l);
          if (above.empty()) {
            out.rejected = true;
            return out;
          }
          lambda = above[pick(rng, above.size())];
          cd = make_class_datum(shared, w.word, e, nu_bar, residual, rd.p_G(lambda));
        }
        if (!validate(cd).empty()) {
          out.rejected = true;
          return out;
        }
        out.nonempty = nonempty(cd, lambda);
        if (!out.nonempty) return out;
        try {
          dimension(cd, lambda);
        } catch (const InvariantError& e) {
          // Twisted data need not come from an actual class; a non-integral or
          // negative dimension marks such data as inconsistent.
          if (out.ramified) {
            out.rejected = true;
            return out;
          }
          out.failed = true;
          out.message = e.what();
          return out;
        }
        try {
          Rational d_plus = extended_disc_valuation(cd, lambda);
          if (d_plus == 0) {
            out.d_plus_zero = true;
            out.d_plus_zero_ok = cd.is_split() && newton_point(cd) == lambda && dimension(cd, lambda) == 0;
            if (!out.d_plus_zero_ok) out.failed = true;
          }
          best_integral_approx(rd, newton_point(cd), lambda);
        } catch (const InvariantError& e) {
          out.failed = true;
          out.message = e.what();
        }
        return out;
      },
      exec);
  DegenerateStats stats;
  for (const auto& o : outcomes) {
    ++stats.generated;
    if (o.rejected) {
      ++stats.rejected;
      continue;
    }
    if (o.ramified) ++stats.ramified;
    if (o.nonempty) ++stats.nonempty;
    if (o.d_plus_zero) ++stats.d_plus_zero;
    if (o.d_plus_zero_ok) ++stats.d_plus_zero_ok;
    if (o.failed) {
      ++stats.failures;
      stats.messages.push_back(o.message);
    }
  }
  return stats;
}

std::vector<ChenZhuRow> chen_zhu_sweep(const RootDatum& rd, Int max_den, const Rational& max_height, Exec exec) {
  auto points = dominant_grid(rd, max_den, max_height);
  auto classes = by_class(rd, dominant_by_height(rd, max_height + Rational(4)));
  std::vector<std::pair<std::size_t, const std::pair<const std::vector<Int>, std::vector<Coweight>>*>> tasks;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (const auto& cls : classes) tasks.emplace_back(p, &cls);
  auto rows = indexed_map<ChenZhuRow>(
      tasks.size(),
      [&](std::size_t t) {
        const Coweight& nu = points[tasks[t].first];
        const auto& [kappa, lambdas] = *tasks[t].second;
        ChenZhuRow row{nu, kappa, Coweight(rd.rank()), {}, false};
        for (const auto& lambda : lambdas)
          if (RootSystem::leq_q(nu, lambda)) {
            row.mu_star = best_integral_approx(rd, nu, lambda);
            break;
          }
        row.chen_zhu = chen_zhu_approx(rd, nu, kappa);
        row.equal = row.chen_zhu.size() == 1 && row.chen_zhu.front() == row.mu_star;
        return row;
      },
      exec);
  return rows;
}

}  // namespace kv
