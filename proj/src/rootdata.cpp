#include "kv/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "kv/errors.hpp"

namespace kv {

Rational Weight::pair(const Coweight& c) const {
  Rational s(0);
  for (std::size_t j = 0; j < coords.size(); ++j) s += Rational(coords[j]) * c[j];
  return s;
}

// ---------------------------------------------------------------- RootSystem

namespace {

std::vector<Int> compute_symmetrizer(const IntMatrix& c) {
  const std::size_t r = c.rows();
  std::vector<Rational> d(r, Rational(0));
  std::vector<Int> out(r, 0);
  for (std::size_t start = 0; start < r; ++start) {
    if (d[start] != 0) continue;
    std::vector<std::size_t> comp{start};
    d[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      std::size_t i = comp[k];
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i || c(i, j) == 0) continue;
        if (c(j, i) == 0) throw InputError("Cartan matrix is not symmetrizable");
        Rational dj = d[i] * Rational(c(i, j), c(j, i));
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
        } else if (d[j] != dj) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Int den = 1;
    for (std::size_t i : comp) den = lcm(den, d[i].denominator());
    Int g = 0;
    for (std::size_t i : comp) {
      out[i] = (d[i] * Rational(den)).numerator();
      g = gcd(g, out[i]);
    }
    for (std::size_t i : comp) out[i] /= g;
  }
  return out;
}

bool all_nonneg(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

}  // namespace

RootSystem::RootSystem(IntMatrix cartan) : cartan_(std::move(cartan)) {
  const std::size_t r = cartan_.rows();
  if (cartan_.cols() != r) throw InputError("Cartan matrix must be square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j && cartan_(i, j) != 2) throw InputError("Cartan matrix diagonal must be 2");
      if (i != j && cartan_(i, j) > 0) throw InputError("Cartan matrix off-diagonal entries must be <= 0");
    }
  sym_ = compute_symmetrizer(cartan_);

  std::set<std::vector<Int>> seen;
  std::deque<std::vector<Int>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      Int k = 0;
      for (std::size_t j = 0; j < r; ++j) k += cartan_(i, j) * beta[j];
      if (k == 0) continue;
      auto next = beta;
      next[i] -= k;
      if (!all_nonneg(next) || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
      if (seen.size() > 1000) throw InputError("Cartan matrix is not of finite type");
    }
  }
  roots_.assign(seen.begin(), seen.end());
  std::stable_sort(roots_.begin(), roots_.end(), [](const auto& a, const auto& b) {
    Int ha = std::accumulate(a.begin(), a.end(), Int(0)), hb = std::accumulate(b.begin(), b.end(), Int(0));
    if (ha != hb) return ha < hb;
    return a > b;
  });

  coroots_.reserve(roots_.size());
  for (const auto& beta : roots_) {
    Int norm2 = 0;  // (beta, beta) with (alpha_i, alpha_j) = d_i C[i][j]
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) norm2 += beta[i] * beta[j] * sym_[i] * cartan_(i, j);
    std::vector<Int> cv(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int num = 2 * beta[i] * sym_[i];
      if (num % norm2 != 0) throw InvariantError("non-integral coroot");
      cv[i] = num / norm2;
    }
    coroots_.push_back(std::move(cv));
  }

  rho_check_ = Coweight(r);
  for (const auto& cv : coroots_)
    for (std::size_t i = 0; i < r; ++i) rho_check_[i] += Rational(cv[i], 2);
}

namespace {

std::optional<SignedRoot> find_in(const std::vector<std::vector<Int>>& list, std::span<const Int> v) {
  std::vector<Int> key(v.begin(), v.end());
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] == key) return SignedRoot{k, false};
  for (auto& x : key) x = -x;
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] == key) return SignedRoot{k, true};
  return std::nullopt;
}

}  // namespace

std::optional<SignedRoot> RootSystem::find_coroot(std::span<const Int> v) const { return find_in(coroots_, v); }
std::optional<SignedRoot> RootSystem::find_root(std::span<const Int> v) const { return find_in(roots_, v); }

Rational RootSystem::pair_simple(const Coweight& c, std::size_t j) const {
  Rational s(0);
  for (std::size_t k = 0; k < rank(); ++k)
    if (cartan_(k, j) != 0) s += Rational(cartan_(k, j)) * c[k];
  return s;
}

std::vector<Rational> RootSystem::fundamental_coords(const Coweight& c) const {
  std::vector<Rational> p(rank());
  for (std::size_t j = 0; j < rank(); ++j) p[j] = pair_simple(c, j);
  return p;
}

Coweight RootSystem::from_fundamental_coords(std::span<const Rational> p) const {
  // Solve C^T c = p.
  RatMatrix ct = to_rational(cartan_.transpose());
  return Coweight(multiply(inverse(ct), p));
}

Rational RootSystem::pair(const Coweight& c, std::span<const Int> root) const {
  Rational s(0);
  for (std::size_t j = 0; j < rank(); ++j)
    if (root[j] != 0) s += Rational(root[j]) * pair_simple(c, j);
  return s;
}

Rational RootSystem::pair(const Coweight& c, SignedRoot a) const {
  Rational v = pair(c, roots_[a.index]);
  return a.negative ? -v : v;
}

bool RootSystem::is_dominant(const Coweight& c) const {
  for (std::size_t j = 0; j < rank(); ++j)
    if (pair_simple(c, j) < 0) return false;
  return true;
}

void RootSystem::reflect(Coweight& c, std::size_t i) const { c[i] -= pair_simple(c, i); }

IntMatrix RootSystem::reflection(std::size_t i) const {
  IntMatrix m = IntMatrix::identity(rank());
  for (std::size_t k = 0; k < rank(); ++k) m(i, k) -= cartan_(k, i);
  return m;
}

std::pair<Coweight, std::vector<int>> RootSystem::dominant_reduce(const Coweight& c) const {
  Coweight v = c;
  std::vector<int> word;
  while (true) {
    std::size_t i = 0;
    while (i < rank() && pair_simple(v, i) >= 0) ++i;
    if (i == rank()) break;
    reflect(v, i);
    word.push_back(static_cast<int>(i));
  }
  return {std::move(v), std::move(word)};
}

bool RootSystem::leq_q(const Coweight& nu, const Coweight& lambda) {
  for (std::size_t i = 0; i < nu.rank(); ++i)
    if (lambda[i] < nu[i]) return false;
  return true;
}

bool RootSystem::leq(const Coweight& mu, const Coweight& lambda) {
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    Rational d = lambda[i] - mu[i];
    if (d < 0 || d.denominator() != 1) return false;
  }
  return true;
}

Rational RootSystem::form(const Coweight& a, const Coweight& b) const {
  Rational s(0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (cartan_(i, j) != 0 && b[j] != 0) s += a[i] * b[j] * Rational(cartan_(i, j), sym_[j]);
  }
  return s;
}

Int RootSystem::weyl_dimension(const Coweight& lambda) const {
  if (!is_dominant(lambda)) throw InputError("weyl_dimension needs a dominant weight, got " + lambda.to_string());
  Coweight shifted = lambda + rho_check_;
  Rational prod(1);
  for (const auto& a : roots_) prod *= pair(shifted, a) / pair(rho_check_, a);
  if (prod.denominator() != 1) throw InvariantError("Weyl dimension is not an integer for " + lambda.to_string());
  return prod.numerator();
}

std::size_t RootSystem::highest_coroot_index() const {
  std::size_t best = 0;
  Int best_h = -1;
  for (std::size_t k = 0; k < coroots_.size(); ++k) {
    Int h = std::accumulate(coroots_[k].begin(), coroots_[k].end(), Int(0));
    if (h > best_h) {
      best_h = h;
      best = k;
    }
  }
  return best;
}

RootSystem RootSystem::dual() const { return RootSystem(cartan_.transpose()); }

// ---------------------------------------------------------------- labels

std::vector<SimpleFactor> parse_label(const std::string& label) {
  std::vector<SimpleFactor> out;
  std::size_t pos = 0, offset = 0;
  if (label.empty()) throw InputError("empty root system label");
  while (pos <= label.size()) {
    std::size_t x = label.find_first_of("xX*", pos);
    std::string tok = label.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
    if (tok.size() < 2 || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
      throw InputError("unknown root system label '" + label + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    int n = std::stoi(tok.substr(1));
    bool ok = false;
    switch (t) {
      case 'A': ok = n >= 1; break;
      case 'B': ok = n >= 2; break;
      case 'C': ok = n >= 2; break;
      case 'D': ok = n >= 4; break;
      case 'E': ok = n == 6; break;
      case 'F': ok = n == 4; break;
      case 'G': ok = n == 2; break;
      default: ok = false;
    }
    if (!ok) throw InputError("unsupported simple type '" + tok + "'");
    if (n > 6) throw InputError("rank of '" + tok + "' exceeds the cap of 6 per factor");
    out.push_back({t, n, offset});
    offset += static_cast<std::size_t>(n);
    if (x == std::string::npos) break;
    pos = x + 1;
  }
  return out;
}

IntMatrix cartan_matrix(const std::vector<SimpleFactor>& factors) {
  std::size_t r = 0;
  for (const auto& f : factors) r += static_cast<std::size_t>(f.rank);
  IntMatrix c(r, r);
  for (const auto& f : factors) {
    const std::size_t o = f.offset, n = static_cast<std::size_t>(f.rank);
    auto link = [&](std::size_t i, std::size_t j, Int cij, Int cji) {
      c(o + i, o + j) = cij;
      c(o + j, o + i) = cji;
    };
    for (std::size_t i = 0; i < n; ++i) c(o + i, o + i) = 2;
    switch (f.type) {
      case 'A':
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
        break;
      case 'B':
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -1, -2);
        break;
      case 'C':
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -2, -1);
        break;
      case 'D':
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 3, n - 1, -1, -1);
        break;
      case 'E':
        link(0, 2, -1, -1);
        link(2, 3, -1, -1);
        link(3, 4, -1, -1);
        link(4, 5, -1, -1);
        link(1, 3, -1, -1);
        break;
      case 'F':
        link(0, 1, -1, -1);
        link(1, 2, -1, -2);
        link(2, 3, -1, -1);
        break;
      case 'G':
        link(0, 1, -3, -1);
        break;
      default:
        throw InputError("unknown simple type");
    }
  }
  return c;
}

std::uint64_t weyl_group_order(const std::vector<SimpleFactor>& factors) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    std::uint64_t o = 1;
    switch (f.type) {
      case 'A': o = fact(f.rank + 1); break;
      case 'B':
      case 'C': o = (std::uint64_t{1} << f.rank) * fact(f.rank); break;
      case 'D': o = (std::uint64_t{1} << (f.rank - 1)) * fact(f.rank); break;
      case 'E': o = 51840; break;
      case 'F': o = 1152; break;
      case 'G': o = 12; break;
      default: break;
    }
    total *= o;
  }
  return total;
}

// ---------------------------------------------------------------- pi_1

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::vector<Int>> basis, const IntMatrix& cartan) {
  const std::size_t r = cartan.rows();
  // Columns: simple coroots (rows of C in fundamental-coweight coordinates) in the lattice basis.
  IntMatrix a(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Int> row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = cartan(j, k);
    auto x = lattice_coordinates(basis, row);
    if (!x) throw InputError("isogeny lattice does not contain the coroot lattice");
    for (std::size_t i = 0; i < r; ++i) a(i, j) = (*x)[i];
  }
  SmithForm snf = smith_normal_form(a);
  factors_ = snf.diagonal;
  for (std::size_t i = 0; i < r; ++i) {
    if (factors_[i] == 0) throw InvariantError("coroot lattice is not of full rank");
    if (factors_[i] > 1) nontrivial_.push_back(i);
  }
  proj_ = IntMatrix(nontrivial_.size(), r);
  for (std::size_t t = 0; t < nontrivial_.size(); ++t)
    for (std::size_t k = 0; k < r; ++k) proj_(t, k) = snf.left(nontrivial_[t], k);
}

std::vector<Int> FiniteAbelianGroup::nontrivial_factors() const {
  std::vector<Int> out;
  for (std::size_t i : nontrivial_) out.push_back(factors_[i]);
  return out;
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (Int d : factors_) o *= d;
  return o;
}

std::vector<Int> FiniteAbelianGroup::project_coords(std::span<const Int> coords) const {
  std::vector<Int> y = proj_.apply(coords);
  for (std::size_t t = 0; t < y.size(); ++t) y[t] = floor_mod(y[t], factors_[nontrivial_[t]]);
  return y;
}

std::vector<Int> FiniteAbelianGroup::normalize(std::span<const Int> kappa) const {
  std::vector<Int> out;
  if (kappa.size() == nontrivial_.size()) {
    for (std::size_t t = 0; t < kappa.size(); ++t) out.push_back(floor_mod(kappa[t], factors_[nontrivial_[t]]));
    return out;
  }
  if (kappa.size() == factors_.size()) {
    for (std::size_t i : nontrivial_) out.push_back(floor_mod(kappa[i], factors_[i]));
    return out;
  }
  if (is_trivial() && std::all_of(kappa.begin(), kappa.end(), [](Int x) { return x == 0; })) return out;
  throw InputError("kappa has " + std::to_string(kappa.size()) + " entries; pi_1 has " +
                   std::to_string(nontrivial_.size()) + " nontrivial invariant factors");
}

// ---------------------------------------------------------------- RootDatum

std::string IsogenySpec::name() const {
  switch (kind) {
    case Kind::simply_connected: return "sc";
    case Kind::adjoint: return "adjoint";
    case Kind::custom: return "custom";
  }
  return "?";
}

Weight RootDatum::rho() const { return Weight{std::vector<Int>(rank(), 1)}; }

std::optional<std::vector<Int>> RootDatum::lattice_coords(const Coweight& c) const {
  if (c.rank() != rank()) return std::nullopt;
  std::vector<Int> p(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    Rational q = sys_.pair_simple(c, j);
    if (q.denominator() != 1) return std::nullopt;
    p[j] = q.numerator();
  }
  return lattice_coordinates(basis_, p);
}

std::vector<Int> RootDatum::p_G(const Coweight& c) const {
  auto x = lattice_coords(c);
  if (!x) throw InputError("coweight " + c.to_string() + " is not in the isogeny lattice");
  return pi1_.project_coords(*x);
}

RootDatum build_root_datum(const std::string& label, const IsogenySpec& iso, bool allow_e6) {
  RootDatum rd;
  rd.factors_ = parse_label(label);
  for (const auto& f : rd.factors_)
    if (f.type == 'E' && !allow_e6)
      throw SizeGuardError("E6 has |W| = 51840 and must be enabled explicitly");
  std::string norm;
  for (const auto& f : rd.factors_) norm += (norm.empty() ? "" : "x") + f.label();
  rd.label_ = norm;
  rd.isogeny_ = iso;
  rd.sys_ = RootSystem(cartan_matrix(rd.factors_));
  const std::size_t r = rd.rank();
  const IntMatrix& c = rd.sys_.cartan();

  std::vector<std::vector<Int>> gens;
  switch (iso.kind) {
    case IsogenySpec::Kind::simply_connected:
      for (std::size_t j = 0; j < r; ++j) {
        std::vector<Int> row(r);
        for (std::size_t k = 0; k < r; ++k) row[k] = c(j, k);
        gens.push_back(std::move(row));
      }
      break;
    case IsogenySpec::Kind::adjoint:
      for (std::size_t j = 0; j < r; ++j) {
        std::vector<Int> e(r, 0);
        e[j] = 1;
        gens.push_back(std::move(e));
      }
      break;
    case IsogenySpec::Kind::custom:
      for (const auto& g : iso.generators) {
        if (g.size() != r)
          throw InputError("isogeny generator has " + std::to_string(g.size()) + " entries, expected " +
                           std::to_string(r));
        gens.push_back(g);
      }
      break;
  }
  rd.basis_ = hermite_basis(gens, r);
  if (rd.basis_.size() != r) throw InputError("isogeny generators do not span a lattice of full rank");
  rd.pi1_ = FiniteAbelianGroup(rd.basis_, c);

  auto [dom, word] = rd.sys_.dominant_reduce(-rd.sys_.rho_check());
  rd.w0_word_.assign(word.rbegin(), word.rend());
  rd.iota_.assign(r, -1);
  for (std::size_t i = 0; i < r; ++i) {
    Coweight v(r);
    v[i] = -1;
    for (int s : word) rd.sys_.reflect(v, static_cast<std::size_t>(s));
    auto ints = v.to_ints();
    auto hit = rd.sys_.find_coroot(ints);
    if (!hit || hit->negative || hit->index >= r) throw InvariantError("-w0 does not permute the simple coroots");
    rd.iota_[i] = static_cast<int>(hit->index);
  }
  return rd;
}

}  // namespace kv
