#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"

namespace kv {

/// A rational or +infinity. Infinity is an explicit tag.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational v) : value_(v) {}
  static ExtendedRational infinity() {
    ExtendedRational x;
    x.infinite_ = true;
    return x;
  }
  static ExtendedRational parse(const std::string& text);  // "inf" or a rational

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;
  /// *this >= q for a finite q.
  bool geq(const Rational& q) const { return infinite_ || value_ >= q; }
  std::string to_string() const;
  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

 private:
  bool infinite_ = false;
  Rational value_;
};

/// Valuations of the coordinates (a_1..a_r, b_1..b_r) of a point of the extended Steinberg base.
struct ValuationVector {
  std::vector<Rational> b_vals;
  std::vector<ExtendedRational> c_vals;
};

/// Closed: nu dominant and nu <=_Q lambda. Open: additionally lambda is the best
/// integral approximation of nu.
bool polytope_member(const RootDatum& rd, const Coweight& nu, const Coweight& lambda, bool open_stratum);

/// mu with (lambda1 - D) cap (lambda2 - D) = mu - D.
Coweight polytope_intersection(const RootDatum& rd, const Coweight& lambda1, const Coweight& lambda2);

/// b-valuations <lambda, alpha_{iota(i)}> attached to lambda.
std::vector<Rational> b_valuations(const RootDatum& rd, const Coweight& lambda);

/// Unique minimal mu in dominant_below(lambda) with val(c_{iota(i)}) >= <lambda - mu, omega_i>.
Coweight steinberg_stratum(const RootDatum& rd, const ValuationVector& v, const Coweight& lambda);

/// min over the weights chi of V(omega_i) of <chi, mu>. i is zero-based.
Rational generic_char_valuation(const RootDatum& rd, const Coweight& mu, std::size_t i);

/// Valuation vector of a generic point with valuation coweight mu in the lambda stratum:
/// c_i = <lambda, omega_{iota(i)}> + generic_char_valuation(mu, i).
ValuationVector generic_valuation_vector(const RootDatum& rd, const Coweight& lambda, const Coweight& mu);

}  // namespace kv
