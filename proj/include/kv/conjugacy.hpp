#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kv/errors.hpp"
#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"
#include "kv/weyl.hpp"

namespace kv {

/// Cameral model of a regular semisimple class: twist w, splitting degree e,
/// valuation coweight nu_bar, residual valuations r_alpha on the roots
/// orthogonal to nu_bar, and the Kottwitz class kappa.
struct ClassDatum {
  std::shared_ptr<const RootDatum> rd;
  WeylElement w;
  Int e = 1;
  Coweight nu_bar;
  /// Positive-root index -> r_alpha; r_{-alpha} = r_alpha. Missing entries are 0.
  std::map<std::size_t, Rational> residual;
  /// Normalised residues over the nontrivial invariant factors of pi_1.
  std::vector<Int> kappa;

  bool is_split() const { return w.length() == 0; }
  Rational residual_at(std::size_t k) const;
  /// val(alpha(gamma_bar) - 1) for a signed root.
  Rational root_valuation(SignedRoot a) const;
};

/// Assembles a datum from raw pieces. Throws InputError on shape errors only;
/// call validate() for the mathematical invariants.
ClassDatum make_class_datum(std::shared_ptr<const RootDatum> rd, std::span<const int> word, std::optional<Int> e,
                            Coweight nu_bar, std::map<std::size_t, Rational> residual, std::span<const Int> kappa);

/// Split datum with kappa = p_G(nu).
ClassDatum split_class(std::shared_ptr<const RootDatum> rd, Coweight nu, std::map<std::size_t, Rational> residual = {});

struct ValidationIssue {
  std::string code;
  std::string message;
};

class ValidationError : public InputError {
 public:
  ValidationError(const std::string& what, std::vector<ValidationIssue> issues)
      : InputError(what), issues_(std::move(issues)) {}
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// Every violated invariant, in a fixed order. Empty means valid.
std::vector<ValidationIssue> validate(const ClassDatum& cd);
void require_valid(const ClassDatum& cd);

/// Dominant representative of nu_bar.
Coweight newton_point(const ClassDatum& cd);

/// d(gamma) = 2 sum_{alpha>0, <alpha,nu>=0} r_alpha - <2 rho, nu> after moving
/// nu_bar (and the residuals with it) to the dominant chamber.
Rational disc_valuation(const ClassDatum& cd);

/// rank - dim of the w-fixed space.
Int c_invariant(const ClassDatum& cd);

/// sum_{alpha > 0} val(alpha(gamma) - 1).
Rational r_gamma(const ClassDatum& cd);

struct LeviRelation {
  Rational r_N;
  Rational d_G;
  Rational d_M;
  bool holds = false;
};

/// r_N for the standard Levi with simple roots I, and the check d_G = d_M + 2 r_N.
/// Split data only, with nu_bar orthogonal to the roots of the unipotent radical.
LeviRelation levi_relation(const ClassDatum& cd, RootMask levi);

/// alpha lies in the root subsystem spanned by the simple roots in `mask`.
bool root_in_levi(std::span<const Int> root, RootMask mask);

}  // namespace kv
