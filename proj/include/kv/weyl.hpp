#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "kv/linalg.hpp"
#include "kv/rootdata.hpp"

namespace kv {

/// Subset of the simple roots as a bit mask (bit i = alpha_i).
using RootMask = std::uint32_t;

inline RootMask full_mask(std::size_t r) { return r >= 32 ? ~RootMask{0} : (RootMask{1} << r) - 1; }

/// A Weyl group element, identified by its action on simple-coroot coordinates.
/// word[0..k) is reduced and w = s_{word[0]} ... s_{word[k-1]}; indices are 0-based.
struct WeylElement {
  IntMatrix action;
  std::vector<int> word;

  std::size_t length() const { return word.size(); }
  RootMask support() const;
  std::vector<int> support_list() const;
  /// One-based "s1 s2" rendering; "e" for the identity.
  std::string word_string() const;
};

/// Number of positive coroots sent to negative coroots.
std::size_t inversion_count(const RootSystem& sys, const IntMatrix& action);
IntMatrix word_action(const RootSystem& sys, std::span<const int> word);
/// Reduced word by descent-following.
std::vector<int> reduced_word(const RootSystem& sys, IntMatrix action);
/// Builds an element from any word (reduced or not). Throws InputError on bad indices.
WeylElement element_from_word(const RootSystem& sys, std::span<const int> word);
WeylElement inverse(const RootSystem& sys, const WeylElement& w);
/// w(alpha_j) > 0.
bool keeps_simple_positive(const IntMatrix& action, std::size_t j);
/// Order of w in W.
Int element_order(const WeylElement& w);
/// Dimension of the fixed subspace of w on the rational coweight space.
std::size_t fixed_space_dim(const WeylElement& w);

/// Full Weyl group, BFS order from the identity. Immutable after construction.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& sys, std::uint64_t cap = kWeylOrderCap);
  /// Checks the classical order formula against the cap before enumerating.
  explicit WeylGroup(const RootDatum& rd, std::uint64_t cap = kWeylOrderCap);

  const RootSystem& system() const { return sys_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<WeylElement>& elements() const { return elems_; }
  const WeylElement& operator[](std::size_t k) const { return elems_[k]; }
  std::optional<std::size_t> find(const IntMatrix& action) const;
  std::size_t inverse_index(std::size_t k) const { return inverse_[k]; }
  const WeylElement& longest() const { return elems_.back(); }

 private:
  void enumerate(std::uint64_t cap);
  RootSystem sys_;
  std::vector<WeylElement> elems_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> index_;
};

std::vector<WeylElement> enumerate_group(const RootDatum& rd, std::uint64_t cap = kWeylOrderCap);

/// Distinct products of all simple reflections, each once, sorted by word.
std::vector<WeylElement> coxeter_elements(const RootSystem& sys);

/// w is of minimal length in W_{J1} w W_{J2}.
bool is_min_double_coset_rep(const WeylGroup& g, std::size_t k, RootMask j1, RootMask j2);
std::vector<WeylElement> min_double_coset_reps(const WeylGroup& g, RootMask j1, RootMask j2);
/// |W_J|.
std::size_t parabolic_order(const WeylGroup& g, RootMask j);

}  // namespace kv
