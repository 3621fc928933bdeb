#pragma once

// Bounded sweeps behind the verification suites. Each kernel runs either
// serially or as an OpenMP loop writing index-addressed results, so both modes
// produce identical output.

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"
#include "kv/weyl.hpp"

namespace kv {

enum class Exec { serial, parallel };

template <class T, class F>
std::vector<T> indexed_map(std::size_t n, F&& f, Exec exec) {
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < sn; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Dominant lambda in the isogeny lattice with <rho, lambda> <= max_height, sorted by height then lex.
std::vector<Coweight> dominant_by_height(const RootDatum& rd, const Rational& max_height);
/// Dominant lambda in the lattice with <lambda + rho^vee, theta> <= bound, theta the
/// root aligned with the highest coroot.
std::vector<Coweight> dominant_by_theta(const RootDatum& rd, Int bound);
/// Dominant rational points with common denominator <= max_den and height <= max_height.
std::vector<Coweight> dominant_grid(const RootDatum& rd, Int max_den, const Rational& max_height);

struct MultiplicityRow {
  Coweight lambda;
  Coweight mu;
  Int freudenthal = 0;
  Int kostant = 0;
  friend bool operator==(const MultiplicityRow&, const MultiplicityRow&) = default;
};

struct DimensionCheck {
  Coweight lambda;
  Int weight_sum = 0;
  Int weyl_dimension = 0;
  friend bool operator==(const DimensionCheck&, const DimensionCheck&) = default;
};

struct MultiplicitySweep {
  std::vector<MultiplicityRow> rows;
  std::vector<DimensionCheck> dimensions;
  std::size_t disagreements = 0;
  std::size_t dimension_failures = 0;
  friend bool operator==(const MultiplicitySweep&, const MultiplicitySweep&) = default;
};

/// Freudenthal vs Kostant for every dominant pair below each lambda with
/// <lambda + rho^vee, theta> <= bound, plus the dimension sum per lambda.
MultiplicitySweep multiplicity_sweep(const RootDatum& rd, const WeylGroup& g, Int bound, Exec exec);

struct LowerBoundRow {
  Coweight lambda;
  Coweight mu;
  Int m = 0;
  Int bound = 0;
  bool pass = false;
  friend bool operator==(const LowerBoundRow&, const LowerBoundRow&) = default;
};

/// m_{lambda mu} >= |Cox| for strictly dominant lambda of height <= max_height
/// and mu with lambda - mu >= 1 in every simple-coroot coordinate.
std::vector<LowerBoundRow> lower_bound_sweep(const RootDatum& rd, const Rational& max_height, Exec exec);

struct IntersectionCheck {
  Coweight lambda1;
  Coweight lambda2;
  Coweight mu;
  std::size_t grid_points = 0;
  std::size_t mismatches = 0;
  friend bool operator==(const IntersectionCheck&, const IntersectionCheck&) = default;
};

/// Random class-compatible pairs of height <= max_height; mu from
/// polytope_intersection checked pointwise on a denominator <= max_den grid,
/// both for the cones lambda - D and for the dominant polytopes.
std::vector<IntersectionCheck> polytope_intersection_sweep(const RootDatum& rd, std::size_t pairs,
                                                           const Rational& max_height, Int max_den,
                                                           std::uint64_t seed, Exec exec);

struct DisjointnessRow {
  Coweight nu;
  std::vector<Int> kappa;
  std::size_t open_strata = 0;
  Coweight lambda;  // the stratum when open_strata == 1
  friend bool operator==(const DisjointnessRow&, const DisjointnessRow&) = default;
};

/// For each grid point and each pi_1 class, the number of open polytopes P_lambda
/// containing it, over all dominant lambda of the class with height <= max_height + slack.
std::vector<DisjointnessRow> stratification_sweep(const RootDatum& rd, Int max_den, const Rational& max_height,
                                                  Exec exec);

struct SteinbergRow {
  Coweight lambda;
  Coweight mu;
  Coweight steinberg;
  Coweight best;
  friend bool operator==(const SteinbergRow&, const SteinbergRow&) = default;
};

/// Random split generic classes mu <= lambda: Steinberg stratum of the generic
/// valuation vector and best integral approximation of mu.
std::vector<SteinbergRow> steinberg_sweep(const RootDatum& rd, std::size_t samples, const Rational& max_height,
                                          std::uint64_t seed, Exec exec);

struct CoherenceRow {
  Coweight lambda;
  Coweight mu;
  Int theorem = 0;      // <rho, lambda> + (d - c)/2
  Int unramified = 0;   // <rho, lambda> + d/2 via the corollary
  Rational direct;      // <rho, lambda - mu> + r(gamma)
  Int orbits = 0;
  friend bool operator==(const CoherenceRow&, const CoherenceRow&) = default;
};

/// All split classes nu = mu integral below lambda of height <= max_height,
/// with random residuals on the roots orthogonal to mu.
std::vector<CoherenceRow> dimension_coherence_sweep(const RootDatum& rd, const Rational& max_height,
                                                    std::uint64_t seed, Exec exec);

struct LeviRow {
  RootMask levi = 0;
  Rational r_N;
  Rational d_G;
  Rational d_M;
  bool holds = false;
  friend bool operator==(const LeviRow&, const LeviRow&) = default;
};

/// Every standard Levi, `trials` random residual vectors each, nu_bar = 0.
std::vector<LeviRow> levi_sweep(const RootDatum& rd, std::size_t trials, std::uint64_t seed, Exec exec);

struct DegenerateStats {
  std::size_t generated = 0;
  std::size_t rejected = 0;     // inconsistent data filtered out
  std::size_t nonempty = 0;
  std::size_t ramified = 0;
  std::size_t d_plus_zero = 0;
  std::size_t d_plus_zero_ok = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;
  friend bool operator==(const DegenerateStats&, const DegenerateStats&) = default;
};

/// Random class data (ramified included, plus deliberate d_+ = 0 cases) checked
/// against the d_+ = 0 proposition.
DegenerateStats degenerate_sweep(const RootDatum& rd, const WeylGroup& g, std::size_t trials, std::uint64_t seed,
                                 Exec exec);

struct ChenZhuRow {
  Coweight nu;
  std::vector<Int> kappa;
  Coweight mu_star;
  std::vector<Coweight> chen_zhu;
  bool equal = false;
  friend bool operator==(const ChenZhuRow&, const ChenZhuRow&) = default;
};

/// Minimal-above vs maximal-below integral approximations on a grid. Report only.
std::vector<ChenZhuRow> chen_zhu_sweep(const RootDatum& rd, Int max_den, const Rational& max_height, Exec exec);

}  // namespace kv
