#include "kv/multiplicity.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "kv/errors.hpp"

namespace kv {

std::size_t PartitionFunction::KeyHash::operator()(const std::vector<Int>& v) const {
  std::size_t h = v.size();
  for (Int x : v) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

PartitionFunction::PartitionFunction(const RootSystem& sys) : coroots_(sys.positive_coroots()) {}

Int PartitionFunction::operator()(std::span<const Int> beta) {
  if (beta.size() != (coroots_.empty() ? beta.size() : coroots_[0].size()))
    throw InputError("partition argument has the wrong rank");
  std::vector<Int> b(beta.begin(), beta.end());
  if (std::any_of(b.begin(), b.end(), [](Int x) { return x < 0; })) return 0;
  return count(b, coroots_.size());
}

// Partitions of beta using coroots [0, k).
Int PartitionFunction::count(std::vector<Int>& beta, std::size_t k) {
  if (k == 0) return std::all_of(beta.begin(), beta.end(), [](Int x) { return x == 0; }) ? 1 : 0;
  beta.push_back(static_cast<Int>(k));
  auto it = memo_.find(beta);
  beta.pop_back();
  if (it != memo_.end()) return it->second;

  Int total = count(beta, k - 1);
  const auto& g = coroots_[k - 1];
  bool fits = true;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] < g[i]) fits = false;
  if (fits) {
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] -= g[i];
    total += count(beta, k);
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += g[i];
  }
  beta.push_back(static_cast<Int>(k));
  memo_.emplace(beta, total);
  beta.pop_back();
  return total;
}

Int kostant_partition(const RootSystem& sys, std::span<const Int> beta) {
  PartitionFunction p(sys);
  return p(beta);
}

std::vector<Coweight> dominant_below(const RootSystem& sys, const Coweight& lambda) {
  if (!sys.is_dominant(lambda)) throw InputError("dominant_below needs a dominant coweight, got " + lambda.to_string());
  std::vector<Coweight> coroots;
  for (const auto& cv : sys.positive_coroots()) coroots.push_back(Coweight::from_ints(cv));
  std::unordered_set<Coweight, CoweightHash> seen{lambda};
  std::vector<Coweight> out{lambda};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& b : coroots) {
      Coweight next = out[k] - b;
      if (!sys.is_dominant(next) || seen.count(next)) continue;
      seen.insert(next);
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), [](const Coweight& a, const Coweight& b) {
    Rational ha = a.height(), hb = b.height();
    if (ha != hb) return ha > hb;
    return b < a;
  });
  return out;
}

std::vector<Coweight> weyl_orbit(const RootSystem& sys, const Coweight& mu) {
  std::unordered_set<Coweight, CoweightHash> seen{mu};
  std::vector<Coweight> out{mu};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t i = 0; i < sys.rank(); ++i) {
      if (sys.pair_simple(out[k], i) == 0) continue;
      Coweight next = out[k];
      sys.reflect(next, i);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  return out;
}

std::size_t orbit_size(const RootSystem& sys, const Coweight& mu) { return weyl_orbit(sys, mu).size(); }

// ---------------------------------------------------------------- Freudenthal

WeightSystem::WeightSystem(const RootSystem& sys, const Coweight& lambda) : sys_(&sys), lambda_(lambda) {
  const Coweight& rho = sys.rho_check();
  std::vector<Coweight> roots;
  for (const auto& cv : sys.positive_coroots()) roots.push_back(Coweight::from_ints(cv));
  const Coweight top = lambda + rho;
  const Rational top_norm = sys.form(top, top);

  for (const auto& mu : dominant_below(sys, lambda)) {
    Int m = 0;
    if (mu == lambda) {
      m = 1;
    } else {
      Rational sum(0);
      for (const auto& a : roots) {
        Coweight v = mu + a;
        while (true) {
          Int mv = multiplicity(v);
          if (mv == 0) break;
          sum += Rational(mv) * sys.form(v, a);
          v += a;
        }
      }
      Coweight shifted = mu + rho;
      Rational q = Rational(2) * sum / (top_norm - sys.form(shifted, shifted));
      if (q.denominator() != 1) throw InvariantError("Freudenthal recursion produced " + to_string(q));
      m = q.numerator();
    }
    index_.emplace(mu, m);
    dominant_.emplace_back(mu, m);
  }
}

Int WeightSystem::multiplicity(const Coweight& mu) const {
  auto it = index_.find(sys_->dominant_reduce(mu).first);
  return it == index_.end() ? 0 : it->second;
}

Int WeightSystem::dimension() const {
  Int total = 0;
  for (const auto& [mu, m] : dominant_) total += m * static_cast<Int>(orbit_size(*sys_, mu));
  return total;
}

std::vector<std::pair<Coweight, Int>> WeightSystem::all_weights() const {
  std::vector<std::pair<Coweight, Int>> out;
  for (const auto& [mu, m] : dominant_)
    for (auto& chi : weyl_orbit(*sys_, mu)) out.emplace_back(std::move(chi), m);
  return out;
}

Int multiplicity_freudenthal(const RootSystem& sys, const Coweight& lambda, const Coweight& mu) {
  if (!sys.is_dominant(lambda)) throw InputError("lambda " + lambda.to_string() + " is not dominant");
  if (!sys.is_dominant(mu)) throw InputError("mu " + mu.to_string() + " is not dominant");
  if (!RootSystem::leq(mu, lambda)) return 0;
  return WeightSystem(sys, lambda).multiplicity(mu);
}

// ---------------------------------------------------------------- Kostant

Int multiplicity_kostant(const WeylGroup& g, const Coweight& lambda, const Coweight& mu, PartitionFunction& p) {
  const RootSystem& sys = g.system();
  if (!sys.is_dominant(lambda)) throw InputError("lambda " + lambda.to_string() + " is not dominant");
  if (!sys.is_dominant(mu)) throw InputError("mu " + mu.to_string() + " is not dominant");
  const Coweight top = lambda + sys.rho_check();
  const Coweight bottom = mu + sys.rho_check();
  Int total = 0;
  for (const auto& w : g.elements()) {
    Coweight diff = w.action.apply(top) - bottom;
    if (!diff.is_integral()) continue;
    Int term = p(diff.to_ints());
    total += (w.length() % 2 == 0) ? term : -term;
  }
  return total;
}

Int multiplicity_kostant(const WeylGroup& g, const Coweight& lambda, const Coweight& mu) {
  PartitionFunction p(g.system());
  return multiplicity_kostant(g, lambda, mu, p);
}

}  // namespace kv
