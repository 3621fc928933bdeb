#include "kv/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kv/errors.hpp"

namespace kv {

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int l = (a / g) * b;
  return l < 0 ? -l : l;
}

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw InputError("empty rational");
  try {
    std::size_t used = 0;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      Int v = std::stoll(s, &used);
      if (used != s.size()) throw InputError("trailing characters in '" + text + "'");
      return Rational(v);
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    Int n = std::stoll(ns, &used);
    if (used != ns.size()) throw InputError("bad numerator in '" + text + "'");
    Int d = std::stoll(ds, &used);
    if (used != ds.size()) throw InputError("bad denominator in '" + text + "'");
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(n, d);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError("cannot parse rational '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// ---------------------------------------------------------------- Coweight

Coweight Coweight::from_ints(std::span<const Int> coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (Int x : coords) c.emplace_back(x);
  return Coweight(std::move(c));
}

Coweight Coweight::from_ints(std::initializer_list<Int> coords) {
  return from_ints(std::span<const Int>(coords.begin(), coords.size()));
}

Coweight Coweight::from_fraction(std::span<const Int> numerators, Int denominator) {
  if (denominator <= 0) throw InputError("coweight denominator must be positive");
  std::vector<Rational> c;
  c.reserve(numerators.size());
  for (Int x : numerators) c.emplace_back(x, denominator);
  return Coweight(std::move(c));
}

Int Coweight::denominator() const {
  Int d = 1;
  for (const auto& q : coords_) d = lcm(d, q.denominator());
  return d;
}

std::vector<Int> Coweight::numerators() const {
  Int d = denominator();
  std::vector<Int> out;
  out.reserve(coords_.size());
  for (const auto& q : coords_) out.push_back(q.numerator() * (d / q.denominator()));
  return out;
}

std::vector<Int> Coweight::to_ints() const {
  std::vector<Int> out;
  out.reserve(coords_.size());
  for (const auto& q : coords_) {
    if (q.denominator() != 1) throw InputError("coweight " + to_string() + " is not integral");
    out.push_back(q.numerator());
  }
  return out;
}

bool Coweight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

Rational Coweight::height() const {
  Rational h(0);
  for (const auto& q : coords_) h += q;
  return h;
}

Coweight& Coweight::operator+=(const Coweight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Coweight& Coweight::operator*=(const Rational& s) {
  for (auto& q : coords_) q *= s;
  return *this;
}

bool operator<(const Coweight& a, const Coweight& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string Coweight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += kv::to_string(coords_[i]);
  }
  return s;
}

Coweight Coweight::parse(const std::string& text) {
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) throw InputError("empty coordinate list");
  return Coweight(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Coweight& c) { return os << '(' << c.to_string() << ')'; }

std::size_t CoweightHash::operator()(const Coweight& c) const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& q : c.coords()) {
    h ^= std::hash<Int>{}(q.numerator()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<Int>{}(q.denominator()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> v) const {
  std::vector<Int> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Coweight IntMatrix::apply(const Coweight& v) const {
  Coweight out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) s += Rational((*this)(i, j)) * v[j];
    out[i] = s;
  }
  return out;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const {
  std::size_t h = m.rows() * 31 + m.cols();
  for (Int x : m.data()) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------- rationals

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
  return out;
}

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m, inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::vector<Rational> multiply(const RatMatrix& m, std::span<const Rational> v) {
  std::vector<Rational> out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// ---------------------------------------------------------------- lattices

std::vector<std::vector<Int>> hermite_basis(std::vector<std::vector<Int>> g, std::size_t n) {
  std::vector<std::vector<Int>> basis;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < g.size(); ++c) {
    // Euclid on column c among rows [row, end) until only one nonzero remains.
    while (true) {
      std::size_t best = g.size();
      for (std::size_t i = row; i < g.size(); ++i)
        if (g[i][c] != 0 && (best == g.size() || std::llabs(g[i][c]) < std::llabs(g[best][c]))) best = i;
      if (best == g.size()) break;
      std::swap(g[row], g[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < g.size(); ++i) {
        if (g[i][c] == 0) continue;
        Int q = g[i][c] / g[row][c];
        for (std::size_t j = 0; j < n; ++j) g[i][j] -= q * g[row][j];
        if (g[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (g[row][c] == 0) continue;
    if (g[row][c] < 0)
      for (auto& x : g[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      Int q = g[i][c] >= 0 ? g[i][c] / g[row][c] : -((-g[i][c] + g[row][c] - 1) / g[row][c]);
      for (std::size_t j = 0; j < n; ++j) g[i][j] -= q * g[row][j];
    }
    ++row;
  }
  for (std::size_t i = 0; i < row; ++i) basis.push_back(g[i]);
  return basis;
}

std::optional<std::vector<Int>> lattice_coordinates(const std::vector<std::vector<Int>>& basis,
                                                    std::span<const Int> v) {
  const std::size_t n = v.size();
  if (basis.size() != n) throw std::invalid_argument("lattice basis is not of full rank");
  std::vector<Int> rest(v.begin(), v.end()), x(n, 0);
  // Basis rows are upper triangular with pivot of row k in column k.
  for (std::size_t k = 0; k < n; ++k) {
    Int piv = basis[k][k];
    if (rest[k] % piv != 0) return std::nullopt;
    x[k] = rest[k] / piv;
    for (std::size_t j = k; j < n; ++j) rest[j] -= x[k] * basis[k][j];
  }
  return x;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Int f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Int f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t n = a.rows(), m = a.cols();
  IntMatrix u = IntMatrix::identity(n), v = IntMatrix::identity(m);
  const std::size_t k = std::min(n, m);
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = n, pj = m;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (a(i, j) != 0 && (pi == n || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;
      swap_rows(a, t, pi);
      swap_rows(u, t, pi);
      swap_cols(a, t, pj);
      swap_cols(v, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        Int q = a(i, t) / a(t, t);
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        Int q = a(t, j) / a(t, t);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      add_row(a, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < m; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < n; ++j) u(t, j) = -u(t, j);
    }
  }
  SmithForm out;
  out.diagonal.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.diagonal[t] = a(t, t);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

}  // namespace kv
