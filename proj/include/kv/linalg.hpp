#pragma once

// Exact integer and rational linear algebra for small (rank <= 12) systems.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost 1.74 resolves `rational == int`
// to its own reversed template and recurses forever. Exact-match overloads win.
namespace boost {

#define KV_RATIONAL_EQ(T)                                                                                   \
  inline bool operator==(const rational<std::int64_t>& a, T b) { return a == rational<std::int64_t>(b); } \
  inline bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); }                        \
  inline bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == b); }
KV_RATIONAL_EQ(int)
KV_RATIONAL_EQ(long)
KV_RATIONAL_EQ(long long)
#undef KV_RATIONAL_EQ

}  // namespace boost

namespace kv {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// A rational vector in a simple-coroot basis.
///
/// Coweights of G are stored in simple-coroot coordinates. The same type is
/// used for weights of the Langlands dual group (whose simple roots are the
/// simple coroots of G), so the multiplicity engine works on it directly.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::size_t rank) : coords_(rank, Rational(0)) {}
  explicit Coweight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Coweight from_ints(std::span<const Int> coords);
  static Coweight from_ints(std::initializer_list<Int> coords);
  /// Numerators over a common positive denominator.
  static Coweight from_fraction(std::span<const Int> numerators, Int denominator);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  /// Least common denominator of the coordinates (always >= 1).
  Int denominator() const;
  /// Coordinates scaled by denominator(); gcd(numerators, denominator) == 1.
  std::vector<Int> numerators() const;
  bool is_integral() const { return denominator() == 1; }
  std::vector<Int> to_ints() const;  // throws unless integral
  bool is_zero() const;
  /// Sum of the coordinates, i.e. the pairing with rho.
  Rational height() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  Coweight& operator*=(const Rational& s);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator*(const Rational& s, Coweight a) { return a *= s; }
  friend Coweight operator-(Coweight a) { return a *= Rational(-1); }

  friend bool operator==(const Coweight&, const Coweight&) = default;
  /// Lexicographic; a total order for use as a map key, not the dominance order.
  friend bool operator<(const Coweight& a, const Coweight& b);

  /// "1/2,0,3" style.
  std::string to_string() const;
  static Coweight parse(const std::string& text);

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Coweight& c);

struct CoweightHash {
  std::size_t operator()(const Coweight& c) const;
};

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Int>& data() const { return a_; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  std::vector<Int> apply(std::span<const Int> v) const;
  Coweight apply(const Coweight& v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m);
/// Rank over Q by Gaussian elimination on exact rationals.
std::size_t rank(RatMatrix m);
/// Inverse over Q; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);
std::vector<Rational> multiply(const RatMatrix& m, std::span<const Rational> v);

/// Row-style Hermite normal form of the lattice spanned by `generators`
/// (each a length-n integer row). Returns the nonzero rows, upper triangular
/// with positive pivots.
std::vector<std::vector<Int>> hermite_basis(std::vector<std::vector<Int>> generators, std::size_t n);

/// Coordinates of `v` with respect to a Hermite basis, or nullopt when v is not
/// in the lattice. The basis must have full rank n.
std::optional<std::vector<Int>> lattice_coordinates(const std::vector<std::vector<Int>>& basis,
                                                    std::span<const Int> v);

/// Smith normal form D = U * A * V of a square integer matrix.
struct SmithForm {
  std::vector<Int> diagonal;  // invariant factors, d_1 | d_2 | ... ; 0 for rank defects
  IntMatrix left;             // U
  IntMatrix right;            // V
};
SmithForm smith_normal_form(const IntMatrix& a);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
/// Floor division / non-negative remainder.
Int floor_mod(Int a, Int m);

}  // namespace kv
