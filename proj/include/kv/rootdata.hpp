#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kv/linalg.hpp"

namespace kv {

/// A root +/- positive_roots()[index].
struct SignedRoot {
  std::size_t index = 0;
  bool negative = false;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/// Weight in fundamental-weight coordinates.
struct Weight {
  std::vector<Int> coords;
  /// <coords . omega, c> = sum_j coords_j c_j.
  Rational pair(const Coweight& c) const;
};

/// A reduced root system given by its Cartan matrix C[i][j] = <alpha_j, alpha_i^vee>.
///
/// Vectors called "coweights" are rational combinations of simple coroots.
/// Roots are integer vectors in the simple-root basis, and positive_coroots()[k]
/// is the coroot of positive_roots()[k].
class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(IntMatrix cartan);

  std::size_t rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  /// d_i > 0 with d_i C[i][j] = d_j C[j][i]; d_i = (alpha_i, alpha_i)/2.
  const std::vector<Int>& symmetrizer() const { return sym_; }
  std::size_t num_positive() const { return roots_.size(); }
  const std::vector<std::vector<Int>>& positive_roots() const { return roots_; }
  const std::vector<std::vector<Int>>& positive_coroots() const { return coroots_; }

  /// Signed lookup of an integral coroot vector.
  std::optional<SignedRoot> find_coroot(std::span<const Int> v) const;
  std::optional<SignedRoot> find_root(std::span<const Int> v) const;

  /// <root, c> for a root in simple-root coordinates.
  Rational pair(const Coweight& c, std::span<const Int> root) const;
  Rational pair(const Coweight& c, SignedRoot a) const;
  /// <alpha_j, c>.
  Rational pair_simple(const Coweight& c, std::size_t j) const;
  /// Coordinates in the fundamental-coweight basis: (<alpha_j, c>)_j.
  std::vector<Rational> fundamental_coords(const Coweight& c) const;
  Coweight from_fundamental_coords(std::span<const Rational> p) const;

  bool is_dominant(const Coweight& c) const;
  void reflect(Coweight& c, std::size_t i) const;
  /// Action of s_i on coweight coordinates.
  IntMatrix reflection(std::size_t i) const;

  /// Dominant W-conjugate of c and a word (s_{word[0]} applied first) reaching it.
  std::pair<Coweight, std::vector<int>> dominant_reduce(const Coweight& c) const;

  /// lambda - nu is a nonnegative rational combination of simple coroots.
  static bool leq_q(const Coweight& nu, const Coweight& lambda);
  /// lambda - mu is a nonnegative integral combination of simple coroots.
  static bool leq(const Coweight& mu, const Coweight& lambda);

  /// Half the sum of the positive coroots.
  const Coweight& rho_check() const { return rho_check_; }
  /// W-invariant form on coweights, normalised so that (alpha_i^vee, alpha_j^vee) = C[i][j]/d_j.
  Rational form(const Coweight& a, const Coweight& b) const;
  /// Dimension of the irreducible representation of the dual group with highest weight lambda.
  Int weyl_dimension(const Coweight& lambda) const;
  /// Index of the highest coroot (first one of maximal height).
  std::size_t highest_coroot_index() const;

  /// Root system with the transposed Cartan matrix.
  RootSystem dual() const;

 private:
  IntMatrix cartan_;
  std::vector<Int> sym_;
  std::vector<std::vector<Int>> roots_;
  std::vector<std::vector<Int>> coroots_;
  Coweight rho_check_;
};

struct SimpleFactor {
  char type = 'A';
  int rank = 1;
  std::size_t offset = 0;
  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

/// Parses "A2", "B3", "A1xA1", ... Throws InputError on anything else.
std::vector<SimpleFactor> parse_label(const std::string& label);
IntMatrix cartan_matrix(const std::vector<SimpleFactor>& factors);
/// |W| from the classical order formulas.
std::uint64_t weyl_group_order(const std::vector<SimpleFactor>& factors);

/// pi_1(G) = Lambda / (coroot lattice) with the projection p_G.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  FiniteAbelianGroup(std::vector<std::vector<Int>> lattice_basis, const IntMatrix& cartan);

  /// All r Smith invariants, ones included.
  const std::vector<Int>& invariant_factors() const { return factors_; }
  /// The invariants > 1; elements of the group are residue vectors of this length.
  std::vector<Int> nontrivial_factors() const;
  Int order() const;
  bool is_trivial() const { return order() == 1; }
  /// Projection matrix from lattice coordinates (rows for the nontrivial factors).
  const IntMatrix& projection() const { return proj_; }

  /// Residues of a coweight given by its lattice coordinates.
  std::vector<Int> project_coords(std::span<const Int> coords) const;
  /// Accepts a residue vector over the nontrivial factors, a full-length vector
  /// over all invariants, or an all-zero vector for the trivial group.
  std::vector<Int> normalize(std::span<const Int> kappa) const;

 private:
  std::vector<Int> factors_;
  std::vector<std::size_t> nontrivial_;
  IntMatrix proj_;
};

struct IsogenySpec {
  enum class Kind { simply_connected, adjoint, custom };
  Kind kind = Kind::simply_connected;
  /// Generators in fundamental-coweight coordinates (custom only).
  std::vector<std::vector<Int>> generators;

  static IsogenySpec sc() { return {}; }
  static IsogenySpec adjoint() { return {Kind::adjoint, {}}; }
  static IsogenySpec custom(std::vector<std::vector<Int>> g) { return {Kind::custom, std::move(g)}; }
  std::string name() const;
};

class RootDatum {
 public:
  const std::string& label() const { return label_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  const IsogenySpec& isogeny() const { return isogeny_; }
  std::size_t rank() const { return sys_.rank(); }
  const RootSystem& system() const { return sys_; }
  const IntMatrix& cartan() const { return sys_.cartan(); }
  const std::vector<std::vector<Int>>& positive_roots() const { return sys_.positive_roots(); }
  std::size_t dim_group() const { return rank() + 2 * sys_.num_positive(); }
  std::uint64_t weyl_order() const { return weyl_group_order(factors_); }

  /// Half-sum of positive roots; equals omega_1 + ... + omega_r.
  Weight rho() const;
  const Coweight& rho_check() const { return sys_.rho_check(); }
  /// <rho, c> = sum of simple-coroot coordinates.
  static Rational rho_pairing(const Coweight& c) { return c.height(); }

  /// Zero-based involution with -w0(alpha_i^vee) = alpha_{iota(i)}^vee.
  const std::vector<int>& iota() const { return iota_; }
  /// A reduced word of the longest element.
  const std::vector<int>& w0_word() const { return w0_word_; }

  /// Hermite basis of the isogeny lattice in fundamental-coweight coordinates.
  const std::vector<std::vector<Int>>& lattice_basis() const { return basis_; }
  /// Lattice coordinates, or nullopt if c is not in the isogeny lattice.
  std::optional<std::vector<Int>> lattice_coords(const Coweight& c) const;
  bool in_lattice(const Coweight& c) const { return lattice_coords(c).has_value(); }

  const FiniteAbelianGroup& pi1() const { return pi1_; }
  /// Kottwitz class p_G; throws InputError if c is not in the lattice.
  std::vector<Int> p_G(const Coweight& c) const;

 private:
  friend RootDatum build_root_datum(const std::string&, const IsogenySpec&, bool);
  std::string label_;
  std::vector<SimpleFactor> factors_;
  IsogenySpec isogeny_;
  RootSystem sys_;
  std::vector<int> iota_;
  std::vector<int> w0_word_;
  std::vector<std::vector<Int>> basis_;
  FiniteAbelianGroup pi1_;
};

/// Largest Weyl group order accepted without an explicit opt-in.
inline constexpr std::uint64_t kWeylOrderCap = 51840;

/// Builds a root datum. E6 (|W| = 51840) is refused unless allow_e6.
RootDatum build_root_datum(const std::string& label, const IsogenySpec& iso = IsogenySpec::sc(),
                           bool allow_e6 = false);

}  // namespace kv
