#include "gnum/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gnum/error.hpp"

namespace gnum {

IntPolynomial IntPolynomial::from_coeffs(std::vector<long long> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return IntPolynomial{std::move(coeffs)};
}

long long IntPolynomial::eval(long long x) const {
  long long acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    long long v = c[k];
    if (!out.empty()) {
      out += v < 0 ? " - " : " + ";
      v = std::llabs(v);
    } else if (v < 0) {
      out += "-";
      v = -v;
    }
    std::string term;
    if (k == 0)
      term = std::to_string(v);
    else {
      if (v != 1) term = std::to_string(v) + "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<long long> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<long long> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return IntPolynomial::from_coeffs(std::move(c));
}

std::vector<long long> f_vector(const Graph& g) { return whitney_complex(g).f_vector(); }

long long euler_characteristic(const Graph& g) {
  long long chi = 0, sign = 1;
  for (long long fk : f_vector(g)) {
    chi += sign * fk;
    sign = -sign;
  }
  return chi;
}

IntPolynomial euler_polynomial(const Graph& g) { return IntPolynomial::from_coeffs(f_vector(g)); }

long long kalai_number(const Graph& g) { return whitney_complex(g).total(); }

namespace {

// Rational polynomial scratch type for the Kronecker search.
using QPoly = std::vector<Rat>;

QPoly trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Returns remainder of a / b (b nonzero).
QPoly poly_rem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size()) {
    Rat q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

std::vector<Int> divisors_with_sign(const Int& value) {
  Int v = abs(value);
  if (v > Int("100000000000000"))
    throw DomainError("polynomial values too large for the Kronecker search");
  std::vector<Int> out;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    if (d * d != v) out.push_back(v / d);
  }
  size_t k = out.size();
  for (size_t i = 0; i < k; ++i) out.push_back(-out[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Lagrange interpolation through (x_i, y_i); empty result if non-integer.
bool interpolate_integer(const std::vector<long long>& xs, const std::vector<Int>& ys, QPoly& out) {
  size_t m = xs.size();
  QPoly acc(m, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    QPoly basis = {Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      QPoly next(basis.size() + 1, Rat(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= Rat(xs[j]) * basis[k];
      }
      basis = std::move(next);
      denom *= Rat(xs[i]) - Rat(xs[j]);
    }
    Rat scale = Rat(ys[i]) / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
  }
  acc = trim(std::move(acc));
  for (const Rat& q : acc)
    if (q.get_den() != 1) return false;
  out = std::move(acc);
  return true;
}

bool search_divisor_tuples(const QPoly& p, const std::vector<long long>& xs,
                           const std::vector<std::vector<Int>>& choices, size_t level,
                           std::vector<Int>& picked) {
  if (level == xs.size()) {
    QPoly g;
    if (!interpolate_integer(xs, picked, g)) return false;
    if (g.size() < 2 || g.size() >= p.size()) return false; // need 1 <= deg g < deg p
    return trim(poly_rem(p, g)).empty();
  }
  for (const Int& d : choices[level]) {
    picked[level] = d;
    if (search_divisor_tuples(p, xs, choices, level + 1, picked)) return true;
  }
  return false;
}

} // namespace

bool is_irreducible(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no irreducibility verdict");
  if (p.degree() > 12) throw DomainError("irreducibility test capped at degree 12");
  // Content is a unit over the rationals (Gauss's lemma).
  std::vector<long long> prim = p.c;
  long long content = 0;
  for (long long v : prim) content = std::gcd(content, v);
  for (long long& v : prim) v /= content;
  int deg = static_cast<int>(prim.size()) - 1;
  if (deg <= 1) return true;

  QPoly pq(prim.begin(), prim.end());
  auto eval_int = [&](long long x) {
    Int acc = 0;
    for (auto it = prim.rbegin(); it != prim.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  for (int d = 1; d <= deg / 2; ++d) {
    std::vector<long long> xs;
    std::vector<std::vector<Int>> choices;
    for (long long x = 0; static_cast<int>(xs.size()) < d + 1; x = x > 0 ? -x : -x + 1) {
      Int y = eval_int(x);
      if (y == 0) return false; // integer root => linear factor
      xs.push_back(x);
      choices.push_back(divisors_with_sign(y));
    }
    std::vector<Int> picked(xs.size());
    if (search_divisor_tuples(pq, xs, choices, 0, picked)) return false;
  }
  return true;
}

namespace {

long long wu2_by_subset_transform(const SimplicialComplex& c) {
  int n = c.vertex_count();
  std::vector<long long> s(size_t(1) << n, 0);
  for (int i = 0; i < c.total(); ++i) {
    const Simplex& x = c.simplex(i);
    s[c.mask(i)[0]] += x.size() % 2 ? 1 : -1;
  }
  for (int b = 0; b < n; ++b)
    for (size_t m = 0; m < s.size(); ++m)
      if (!(m >> b & 1)) s[m] += s[m | (size_t(1) << b)];
  // sum over nonempty cliques U of (-1)^{|U|+1} (sum_{x >= U} w(x))^2;
  // inclusion-exclusion over the common intersection of the pair
  long long wu = 0;
  for (int i = 0; i < c.total(); ++i) {
    uint64_t u = c.mask(i)[0];
    long long sq = s[u] * s[u];
    wu += (c.simplex(i).size() % 2) ? sq : -sq;
  }
  return wu;
}

std::vector<std::vector<uint64_t>> intersection_rows(const SimplicialComplex& c) {
  int t = static_cast<int>(c.total());
  int words = (t + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(t, std::vector<uint64_t>(words, 0));
  for (int i = 0; i < t; ++i) {
    rows[i][i / 64] |= uint64_t(1) << (i % 64);
    for (int j = i + 1; j < t; ++j)
      if (simplices_intersect(c, i, j)) {
        rows[i][j / 64] |= uint64_t(1) << (j % 64);
        rows[j][i / 64] |= uint64_t(1) << (i % 64);
      }
  }
  return rows;
}

} // namespace

long long wu_characteristic(const SimplicialComplex& c, int k) {
  if (k < 1 || k > 3) throw DomainError("wu characteristic supported for k in 1..3");
  std::vector<long long> omega(c.total());
  for (int i = 0; i < c.total(); ++i) omega[i] = c.simplex(i).size() % 2 ? 1 : -1;
  if (k == 1) return std::accumulate(omega.begin(), omega.end(), 0ll);
  if (k == 2 && c.vertex_count() <= 20 && c.vertex_count() <= 64) return wu2_by_subset_transform(c);

  auto rows = intersection_rows(c);
  int t = static_cast<int>(c.total());
  if (k == 2) {
    long long wu = 0;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (rows[i][j / 64] >> (j % 64) & 1) wu += omega[i] * omega[j];
    return wu;
  }
  // k == 3: ordered triples, pairwise intersecting
  if (t > 4000) throw DomainError("wu_3 capped at 4000 simplices");
  long long wu = 0;
  int words = (t + 63) / 64;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (!(rows[i][j / 64] >> (j % 64) & 1)) continue;
      long long inner = 0;
      for (int w = 0; w < words; ++w) {
        uint64_t both = rows[i][w] & rows[j][w];
        while (both) {
          int z = w * 64 + __builtin_ctzll(both);
          both &= both - 1;
          inner += omega[z];
        }
      }
      wu += omega[i] * omega[j] * inner;
    }
  return wu;
}

long long wu_characteristic(const Graph& g, int k) { return wu_characteristic(whitney_complex(g), k); }

namespace {

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g), words_(g.row_words()) {}

  int run() {
    std::vector<uint64_t> all(words_, 0);
    for (int v = 0; v < g_.vertex_count(); ++v) all[v / 64] |= uint64_t(1) << (v % 64);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::vector<uint64_t> cands, int size) {
    best_ = std::max(best_, size);
    int remaining = 0;
    for (uint64_t w : cands) remaining += __builtin_popcountll(w);
    for (int w = 0; w < words_; ++w) {
      while (cands[w]) {
        if (size + remaining <= best_) return;
        int v = w * 64 + __builtin_ctzll(cands[w]);
        cands[w] &= cands[w] - 1;
        --remaining;
        std::vector<uint64_t> next(words_);
        const uint64_t* rv = g_.row(v);
        for (int x = 0; x < words_; ++x) next[x] = cands[x] & rv[x];
        expand(std::move(next), size + 1);
      }
    }
  }

  const Graph& g_;
  int words_;
  int best_ = 0;
};

} // namespace

int clique_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return MaxCliqueSearch(g).run();
}

int independence_number(const Graph& g) {
  if (g.vertex_count() > 64) throw DomainError("independence search capped at 64 vertices");
  return clique_number(complement(g));
}

double shannon_capacity_lower_bound(const Graph& g, int n) {
  if (n < 1) throw DomainError("capacity exponent must be positive");
  double size = std::pow(static_cast<double>(g.vertex_count()), n);
  if (size > 64) throw DomainError("strong power exceeds the independence desk scale");
  Graph power = strong_power(g, n);
  return std::pow(static_cast<double>(independence_number(power)), 1.0 / n);
}

Rat curvature(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw DomainError("vertex out of range");
  SimplicialComplex c = whitney_complex(g);
  // V[k] = number of (k+1)-dimensional simplices containing v; V[-1] = 1.
  std::vector<long long> upper(std::max(0, c.dimension()), 0);
  for (int i = 0; i < c.total(); ++i) {
    const Simplex& s = c.simplex(i);
    if (s.size() >= 2 && std::binary_search(s.begin(), s.end(), v))
      ++upper[s.size() - 2];
  }
  Rat k = rat(1);
  Rat sign(-1);
  for (size_t j = 0; j < upper.size(); ++j) {
    k += sign * Rat(upper[j]) / Rat(static_cast<long>(j) + 2);
    sign = -sign;
  }
  return k;
}

std::vector<Rat> curvature_vector(const Graph& g) {
  std::vector<Rat> out;
  out.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(curvature(g, v));
  return out;
}

long long poincare_hopf_index(const Graph& g, int v, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count())
    throw DomainError("order must rank every vertex");
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("order must be injective");
  }
  std::vector<int> below;
  for (int u : g.neighbors(v))
    if (order[u] < order[v]) below.push_back(u);
  return 1 - euler_characteristic(g.induced(below));
}

Rat curvature_as_index_expectation(const Graph& g, int v) {
  std::vector<int> nbrs = g.neighbors(v);
  int d = static_cast<int>(nbrs.size());
  if (d > 20) throw DomainError("index expectation capped at degree 20");
  // P(below-set == S) = |S|! (d-|S|)! / (d+1)! over rankings of v and its
  // neighbors; expectation of 1 - chi(S^-).
  std::vector<Rat> weight(d + 1);
  for (int s = 0; s <= d; ++s) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), d, s);
    weight[s] = Rat(1) / (Rat(binom) * Rat(d + 1));
  }
  Rat expectation = rat(1);
  for (uint64_t mask = 0; mask < (uint64_t(1) << d); ++mask) {
    std::vector<int> below;
    for (int b = 0; b < d; ++b)
      if (mask >> b & 1) below.push_back(nbrs[b]);
    long long chi = euler_characteristic(g.induced(below));
    if (chi != 0) expectation -= weight[below.size()] * Rat(chi);
  }
  return expectation;
}

} // namespace gnum
