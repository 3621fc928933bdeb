#include "kv/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "kv/errors.hpp"

namespace kv {

RootMask WeylElement::support() const {
  RootMask m = 0;
  for (int i : word) m |= RootMask{1} << i;
  return m;
}

std::vector<int> WeylElement::support_list() const {
  std::vector<int> s(word);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ' ';
    s += 's' + std::to_string(word[k] + 1);
  }
  return s;
}

std::size_t inversion_count(const RootSystem& sys, const IntMatrix& action) {
  std::size_t n = 0;
  for (const auto& cv : sys.positive_coroots()) {
    auto img = action.apply(cv);
    if (std::any_of(img.begin(), img.end(), [](Int x) { return x < 0; })) ++n;
  }
  return n;
}

IntMatrix word_action(const RootSystem& sys, std::span<const int> word) {
  IntMatrix m = IntMatrix::identity(sys.rank());
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= sys.rank())
      throw InputError("simple reflection index " + std::to_string(i + 1) + " out of range");
    m = m * sys.reflection(static_cast<std::size_t>(i));
  }
  return m;
}

bool keeps_simple_positive(const IntMatrix& action, std::size_t j) {
  for (std::size_t i = 0; i < action.rows(); ++i)
    if (action(i, j) < 0) return false;
  return true;
}

std::vector<int> reduced_word(const RootSystem& sys, IntMatrix m) {
  const IntMatrix id = IntMatrix::identity(sys.rank());
  std::vector<int> rev;
  while (!(m == id)) {
    std::size_t i = 0;
    while (i < sys.rank() && keeps_simple_positive(m, i)) ++i;
    if (i == sys.rank()) throw InvariantError("non-identity Weyl element without a descent");
    m = m * sys.reflection(i);
    rev.push_back(static_cast<int>(i));
  }
  return {rev.rbegin(), rev.rend()};
}

WeylElement element_from_word(const RootSystem& sys, std::span<const int> word) {
  WeylElement w;
  w.action = word_action(sys, word);
  if (inversion_count(sys, w.action) == word.size())
    w.word.assign(word.begin(), word.end());
  else
    w.word = reduced_word(sys, w.action);
  return w;
}

WeylElement inverse(const RootSystem& sys, const WeylElement& w) {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return element_from_word(sys, rev);
}

Int element_order(const WeylElement& w) {
  const IntMatrix id = IntMatrix::identity(w.action.rows());
  IntMatrix p = w.action;
  Int k = 1;
  while (!(p == id)) {
    p = p * w.action;
    ++k;
  }
  return k;
}

std::size_t fixed_space_dim(const WeylElement& w) {
  IntMatrix d = w.action;
  for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= 1;
  return d.rows() - rank(to_rational(d));
}

// ---------------------------------------------------------------- WeylGroup

WeylGroup::WeylGroup(const RootSystem& sys, std::uint64_t cap) : sys_(sys) { enumerate(cap); }

WeylGroup::WeylGroup(const RootDatum& rd, std::uint64_t cap) : sys_(rd.system()) {
  if (rd.weyl_order() > cap)
    throw SizeGuardError("|W(" + rd.label() + ")| = " + std::to_string(rd.weyl_order()) + " exceeds the cap " +
                         std::to_string(cap));
  enumerate(cap);
}

void WeylGroup::enumerate(std::uint64_t cap) {
  const std::size_t r = sys_.rank();
  std::vector<IntMatrix> refl;
  for (std::size_t i = 0; i < r; ++i) refl.push_back(sys_.reflection(i));
  elems_.push_back({IntMatrix::identity(r), {}});
  index_.emplace(elems_[0].action, 0);
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix next = elems_[k].action * refl[i];
      if (index_.count(next)) continue;
      if (elems_.size() >= cap)
        throw SizeGuardError("Weyl group enumeration exceeded the cap " + std::to_string(cap));
      WeylElement e{std::move(next), elems_[k].word};
      e.word.push_back(static_cast<int>(i));
      index_.emplace(e.action, elems_.size());
      elems_.push_back(std::move(e));
    }
  }
  inverse_.resize(elems_.size());
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    std::vector<int> rev(elems_[k].word.rbegin(), elems_[k].word.rend());
    inverse_[k] = index_.at(word_action(sys_, rev));
  }
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& action) const {
  auto it = index_.find(action);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<WeylElement> enumerate_group(const RootDatum& rd, std::uint64_t cap) {
  return WeylGroup(rd, cap).elements();
}

std::vector<WeylElement> coxeter_elements(const RootSystem& sys) {
  std::vector<int> perm(sys.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<WeylElement> out;
  std::unordered_map<IntMatrix, bool, IntMatrixHash> seen;
  do {
    IntMatrix m = word_action(sys, perm);
    if (seen.emplace(m, true).second) out.push_back({std::move(m), perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_min_double_coset_rep(const WeylGroup& g, std::size_t k, RootMask j1, RootMask j2) {
  const auto& w = g[k].action;
  const auto& winv = g[g.inverse_index(k)].action;
  for (std::size_t j = 0; j < g.system().rank(); ++j) {
    if ((j1 >> j & 1) && !keeps_simple_positive(winv, j)) return false;
    if ((j2 >> j & 1) && !keeps_simple_positive(w, j)) return false;
  }
  return true;
}

std::vector<WeylElement> min_double_coset_reps(const WeylGroup& g, RootMask j1, RootMask j2) {
  std::vector<WeylElement> out;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (is_min_double_coset_rep(g, k, j1, j2)) out.push_back(g[k]);
  return out;
}

std::size_t parabolic_order(const WeylGroup& g, RootMask j) {
  return static_cast<std::size_t>(
      std::count_if(g.elements().begin(), g.elements().end(), [j](const WeylElement& w) { return (w.support() & ~j) == 0; }));
}

}  // namespace kv
