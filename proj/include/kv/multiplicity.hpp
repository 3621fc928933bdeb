#pragma once

// Weight multiplicities for the Langlands dual group.
//
// Everything here is phrased for "the dual of sys": its simple roots are the
// simple coroots of sys, its weights are coweights of sys, and its rho is
// rho_check(). Passing G's system gives representations of the dual group;
// passing G.dual() gives representations of G itself.

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"
#include "kv/weyl.hpp"

namespace kv {

/// Number of ways to write beta as an N-combination of positive coroots. Memoised;
/// one instance per thread.
class PartitionFunction {
 public:
  explicit PartitionFunction(const RootSystem& sys);
  Int operator()(std::span<const Int> beta);

 private:
  Int count(std::vector<Int>& beta, std::size_t k);
  struct KeyHash {
    std::size_t operator()(const std::vector<Int>& v) const;
  };
  std::vector<std::vector<Int>> coroots_;
  std::unordered_map<std::vector<Int>, Int, KeyHash> memo_;
};

Int kostant_partition(const RootSystem& sys, std::span<const Int> beta);

/// Dominant mu with lambda - mu a nonnegative integral combination of simple
/// coroots, by height descending. Walks down by positive coroots, staying dominant.
std::vector<Coweight> dominant_below(const RootSystem& sys, const Coweight& lambda);

/// W-orbit of mu (breadth first from mu).
std::vector<Coweight> weyl_orbit(const RootSystem& sys, const Coweight& mu);
std::size_t orbit_size(const RootSystem& sys, const Coweight& mu);

/// Dominant weights and multiplicities of V(lambda), by Freudenthal's formula.
class WeightSystem {
 public:
  WeightSystem(const RootSystem& sys, const Coweight& lambda);

  const Coweight& highest() const { return lambda_; }
  /// (mu, m_{lambda mu}) for dominant mu, by height descending.
  const std::vector<std::pair<Coweight, Int>>& dominant() const { return dominant_; }
  /// Multiplicity of any weight; 0 when mu is not a weight.
  Int multiplicity(const Coweight& mu) const;
  /// sum over dominant mu of m * |W mu|.
  Int dimension() const;
  /// Every weight (with multiplicity) as (weight, m).
  std::vector<std::pair<Coweight, Int>> all_weights() const;

 private:
  const RootSystem* sys_;
  Coweight lambda_;
  std::vector<std::pair<Coweight, Int>> dominant_;
  std::unordered_map<Coweight, Int, CoweightHash> index_;
};

/// m_{lambda mu} for dominant lambda, mu. Zero when lambda - mu is not in the
/// positive integral coroot cone. Throws InputError on non-dominant input.
Int multiplicity_freudenthal(const RootSystem& sys, const Coweight& lambda, const Coweight& mu);

/// Kostant's alternating sum over W. Independent of Freudenthal.
Int multiplicity_kostant(const WeylGroup& g, const Coweight& lambda, const Coweight& mu, PartitionFunction& p);
Int multiplicity_kostant(const WeylGroup& g, const Coweight& lambda, const Coweight& mu);

}  // namespace kv
