#include "kv/conjugacy.hpp"

#include <algorithm>

namespace kv {

Rational ClassDatum::residual_at(std::size_t k) const {
  auto it = residual.find(k);
  return it == residual.end() ? Rational(0) : it->second;
}

Rational ClassDatum::root_valuation(SignedRoot a) const {
  Rational x = rd->system().pair(nu_bar, a);
  if (x == 0) return residual_at(a.index);
  return std::min(Rational(0), x);
}

ClassDatum make_class_datum(std::shared_ptr<const RootDatum> rd, std::span<const int> word, std::optional<Int> e,
                            Coweight nu_bar, std::map<std::size_t, Rational> residual, std::span<const Int> kappa) {
  if (!rd) throw InputError("class datum without a root datum");
  const RootSystem& sys = rd->system();
  if (nu_bar.rank() != rd->rank())
    throw InputError("nu_bar has " + std::to_string(nu_bar.rank()) + " coordinates, expected " +
                     std::to_string(rd->rank()));
  for (const auto& [k, v] : residual)
    if (k >= sys.num_positive()) throw InputError("residual root index out of range");
  ClassDatum cd;
  cd.w = element_from_word(sys, word);
  cd.e = e.value_or(element_order(cd.w));
  if (cd.e < 1) throw InputError("e must be a positive integer");
  cd.nu_bar = std::move(nu_bar);
  cd.residual = std::move(residual);
  cd.kappa = rd->pi1().normalize(kappa);
  cd.rd = std::move(rd);
  return cd;
}

ClassDatum split_class(std::shared_ptr<const RootDatum> rd, Coweight nu, std::map<std::size_t, Rational> residual) {
  auto kappa = rd->p_G(nu);
  return make_class_datum(std::move(rd), {}, Int{1}, std::move(nu), std::move(residual), kappa);
}

namespace {

// Index of the positive root +-w(alpha_k), via the coroot action.
std::size_t transport(const RootSystem& sys, const IntMatrix& action, std::size_t k) {
  auto img = action.apply(sys.positive_coroots()[k]);
  auto hit = sys.find_coroot(img);
  if (!hit) throw InvariantError("Weyl element does not permute the coroots");
  return hit->index;
}

}  // namespace

std::vector<ValidationIssue> validate(const ClassDatum& cd) {
  std::vector<ValidationIssue> issues;
  const RootDatum& rd = *cd.rd;
  const RootSystem& sys = rd.system();
  auto add = [&](const char* code, std::string msg) { issues.push_back({code, std::move(msg)}); };

  if (!(cd.w.action.apply(cd.nu_bar) == cd.nu_bar))
    add("w_fixes_nu", "w(nu_bar) != nu_bar for w = " + cd.w.word_string() + ", nu_bar = " + cd.nu_bar.to_string());
  Int ord = element_order(cd.w);
  if (cd.e != ord) add("order", "e = " + std::to_string(cd.e) + " but w has order " + std::to_string(ord));
  Coweight scaled = Rational(cd.e) * cd.nu_bar;
  if (!rd.in_lattice(scaled))
    add("nu_lattice", "e * nu_bar = " + scaled.to_string() + " is not in the isogeny lattice");

  for (const auto& [k, r] : cd.residual) {
    const auto& root = sys.positive_roots()[k];
    std::string name = Coweight::from_ints(root).to_string();
    if (sys.pair(cd.nu_bar, root) != 0)
      add("residual_domain", "residual given on root (" + name + ") with <alpha, nu_bar> != 0");
    if (r < 0) add("residual_negative", "r_alpha = " + to_string(r) + " < 0 on root (" + name + ")");
    if (cd.e % r.denominator() != 0)
      add("residual_denominator",
          "denominator of r_alpha = " + to_string(r) + " on root (" + name + ") does not divide e = " +
              std::to_string(cd.e));
  }
  for (std::size_t k = 0; k < sys.num_positive(); ++k) {
    if (sys.pair(cd.nu_bar, sys.positive_roots()[k]) != 0) continue;
    std::size_t j = transport(sys, cd.w.action, k);
    if (cd.residual_at(j) != cd.residual_at(k)) {
      add("residual_w_invariance", "r differs on root (" + Coweight::from_ints(sys.positive_roots()[k]).to_string() +
                                       ") and its w-image (" +
                                       Coweight::from_ints(sys.positive_roots()[j]).to_string() + ")");
      break;
    }
  }

  if (cd.is_split() && rd.in_lattice(cd.nu_bar)) {
    auto expected = rd.p_G(cd.nu_bar);
    if (expected != cd.kappa) add("kappa", "kappa does not equal p_G(nu_bar) for split data");
  }

  if (issues.empty()) {
    Rational d = disc_valuation(cd);
    if (d.denominator() != 1) add("disc_integrality", "d(gamma) = " + to_string(d) + " is not an integer");
  }
  return issues;
}

void require_valid(const ClassDatum& cd) {
  auto issues = validate(cd);
  if (issues.empty()) return;
  std::string msg = "invalid class datum:";
  for (const auto& i : issues) msg += " [" + i.code + "] " + i.message + ";";
  msg.pop_back();
  throw ValidationError(msg, std::move(issues));
}

Coweight newton_point(const ClassDatum& cd) { return cd.rd->system().dominant_reduce(cd.nu_bar).first; }

Rational disc_valuation(const ClassDatum& cd) {
  const RootSystem& sys = cd.rd->system();
  auto [nu, word] = sys.dominant_reduce(cd.nu_bar);
  IntMatrix u = IntMatrix::identity(sys.rank());
  for (int s : word) u = sys.reflection(static_cast<std::size_t>(s)) * u;
  Rational sum(0);
  for (std::size_t k = 0; k < sys.num_positive(); ++k) {
    if (sys.pair(cd.nu_bar, sys.positive_roots()[k]) != 0) continue;
    // u carries the roots orthogonal to nu_bar onto those orthogonal to nu.
    std::size_t j = transport(sys, u, k);
    if (sys.pair(nu, sys.positive_roots()[j]) != 0) throw InvariantError("transported root is not orthogonal to nu");
    sum += cd.residual_at(k);
  }
  return Rational(2) * sum - Rational(2) * nu.height();
}

Int c_invariant(const ClassDatum& cd) {
  return static_cast<Int>(cd.rd->rank()) - static_cast<Int>(fixed_space_dim(cd.w));
}

Rational r_gamma(const ClassDatum& cd) {
  Rational s(0);
  for (std::size_t k = 0; k < cd.rd->system().num_positive(); ++k) s += cd.root_valuation({k, false});
  return s;
}

bool root_in_levi(std::span<const Int> root, RootMask mask) {
  for (std::size_t i = 0; i < root.size(); ++i)
    if (root[i] != 0 && !(mask >> i & 1)) return false;
  return true;
}

LeviRelation levi_relation(const ClassDatum& cd, RootMask levi) {
  if (!cd.is_split()) throw InputError("r_N is only defined here for split data");
  const RootSystem& sys = cd.rd->system();
  LeviRelation out;
  for (std::size_t k = 0; k < sys.num_positive(); ++k) {
    const auto& root = sys.positive_roots()[k];
    Rational x = sys.pair(cd.nu_bar, root);
    if (root_in_levi(root, levi)) {
      out.d_M += x == 0 ? Rational(2) * cd.residual_at(k) : -(x < 0 ? -x : x);
    } else {
      if (x != 0)
        throw InputError("nu_bar pairs nontrivially with the root (" + Coweight::from_ints(root).to_string() +
                         ") of the unipotent radical");
      out.r_N += cd.root_valuation({k, false});
    }
  }
  out.d_G = disc_valuation(cd);
  out.holds = out.d_G == out.d_M + Rational(2) * out.r_N;
  return out;
}

}  // namespace kv
