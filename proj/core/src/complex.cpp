#include "gnum/complex.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "gnum/canonical.hpp"
#include "gnum/error.hpp"

namespace gnum {

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices, int vertex_count) {
  SimplicialComplex c;
  c.n_ = vertex_count;
  for (auto& s : simplices) {
    if (s.empty()) throw DomainError("empty simplex rejected");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw DomainError("simplex with repeated vertex");
    if (s.back() >= vertex_count || s.front() < 0) throw DomainError("simplex vertex out of range");
    int d = static_cast<int>(s.size()) - 1;
    if (d >= static_cast<int>(c.by_dim_.size())) c.by_dim_.resize(d + 1);
    c.by_dim_[d].push_back(std::move(s));
  }
  for (auto& level : c.by_dim_) {
    std::sort(level.begin(), level.end());
    if (std::adjacent_find(level.begin(), level.end()) != level.end())
      throw DomainError("duplicate simplex");
  }
  c.offsets_.resize(c.by_dim_.size() + 1, 0);
  for (size_t d = 0; d < c.by_dim_.size(); ++d)
    c.offsets_[d + 1] = c.offsets_[d] + static_cast<int>(c.by_dim_[d].size());
  int words = (vertex_count + 63) / 64;
  c.masks_.reserve(c.offsets_.back());
  for (const auto& level : c.by_dim_)
    for (const auto& s : level) {
      std::vector<uint64_t> m(words, 0);
      for (int v : s) m[v / 64] |= uint64_t(1) << (v % 64);
      c.masks_.push_back(std::move(m));
    }
  return c;
}

long long SimplicialComplex::total() const { return offsets_.empty() ? 0 : offsets_.back(); }

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  for (const auto& level : by_dim_) f.push_back(static_cast<long long>(level.size()));
  return f;
}

const Simplex& SimplicialComplex::simplex(int global_index) const {
  int d = dim_of(global_index);
  return by_dim_[d][global_index - offsets_[d]];
}

int SimplicialComplex::dim_of(int global_index) const {
  int d = 0;
  while (offsets_[d + 1] <= global_index) ++d;
  return d;
}

int SimplicialComplex::global_index(int dim, int pos_in_dim) const { return offsets_[dim] + pos_in_dim; }

int SimplicialComplex::index_of(const Simplex& s) const {
  int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return -1;
  const auto& level = by_dim_[d];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return offsets_[d] + static_cast<int>(it - level.begin());
}

bool SimplicialComplex::closed_under_subsets() const {
  for (const auto& level : by_dim_)
    for (const auto& s : level) {
      if (s.size() == 1) continue;
      for (size_t skip = 0; skip < s.size(); ++skip) {
        Simplex face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != skip) face.push_back(s[i]);
        if (index_of(face) < 0) return false;
      }
    }
  return true;
}

std::string SimplicialComplex::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& level : by_dim_)
    for (const auto& s : level) arr.push_back(s);
  nlohmann::json j;
  j["simplices"] = arr;
  return j.dump();
}

namespace {

void extend_clique(const Graph& g, Simplex& clique, const std::vector<uint64_t>& cands,
                   std::vector<Simplex>& out, long long max_cells) {
  int words = g.row_words();
  for (int w = 0; w < words; ++w) {
    uint64_t bits = cands[w];
    while (bits) {
      int v = w * 64 + __builtin_ctzll(bits);
      bits &= bits - 1;
      clique.push_back(v);
      if (static_cast<long long>(out.size()) >= max_cells)
        throw DomainError("clique complex exceeds the desk-scale cell cap");
      out.push_back(clique);
      std::vector<uint64_t> next(words);
      const uint64_t* rv = g.row(v);
      for (int x = 0; x < words; ++x) next[x] = cands[x] & rv[x];
      // keep only candidates above v so each clique is emitted once, in lex order
      int wv = v / 64;
      for (int x = 0; x < wv; ++x) next[x] = 0;
      next[wv] &= ~((uint64_t(2) << (v % 64)) - 1);
      extend_clique(g, clique, next, out, max_cells);
      clique.pop_back();
    }
  }
}

} // namespace

SimplicialComplex whitney_complex(const Graph& g, long long max_cells) {
  std::vector<Simplex> cliques;
  int n = g.vertex_count();
  int words = g.row_words();
  Simplex clique;
  std::vector<uint64_t> all(words, 0);
  for (int v = 0; v < n; ++v) all[v / 64] |= uint64_t(1) << (v % 64);
  extend_clique(g, clique, all, cliques, max_cells);
  return SimplicialComplex::from_simplices(std::move(cliques), n);
}

Graph barycentric_refinement(const Graph& g, long long max_cells) {
  SimplicialComplex c = whitney_complex(g, max_cells);
  int t = static_cast<int>(c.total());
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      const auto &mi = c.mask(i), &mj = c.mask(j);
      bool i_in_j = true, j_in_i = true;
      for (size_t w = 0; w < mi.size(); ++w) {
        if ((mi[w] & mj[w]) != mi[w]) i_in_j = false;
        if ((mi[w] & mj[w]) != mj[w]) j_in_i = false;
      }
      if (i_in_j != j_in_i) es.emplace_back(i, j); // strict containment either way
    }
  return Graph(t, es);
}

Graph connection_graph(const Graph& g, long long max_cells) {
  SimplicialComplex c = whitney_complex(g, max_cells);
  int t = static_cast<int>(c.total());
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (simplices_intersect(c, i, j)) es.emplace_back(i, j);
  return Graph(t, es);
}

std::vector<Simplex> stanley_reisner_monomials(const Graph& g) {
  SimplicialComplex c = whitney_complex(g);
  std::vector<Simplex> out;
  out.reserve(c.total());
  for (const auto& level : c.by_dim())
    for (const auto& s : level) out.push_back(s);
  return out;
}

bool simplices_intersect(const SimplicialComplex& c, int x, int y) {
  const auto &mx = c.mask(x), &my = c.mask(y);
  for (size_t w = 0; w < mx.size(); ++w)
    if (mx[w] & my[w]) return true;
  return false;
}

Graph product_cells_intersection_graph(const Graph& a, const Graph& b) {
  SimplicialComplex ca = whitney_complex(a), cb = whitney_complex(b);
  int ta = static_cast<int>(ca.total()), tb = static_cast<int>(cb.total());
  std::vector<std::pair<int, int>> es;
  for (int ia = 0; ia < ta; ++ia)
    for (int ib = 0; ib < tb; ++ib) {
      int u = ia * tb + ib;
      for (int ja = ia; ja < ta; ++ja) {
        if (ja != ia && !simplices_intersect(ca, ia, ja)) continue;
        for (int jb = (ja == ia ? ib + 1 : 0); jb < tb; ++jb) {
          if (jb != ib && !simplices_intersect(cb, ib, jb)) continue;
          es.emplace_back(u, ja * tb + jb);
        }
      }
    }
  return Graph(ta * tb, es);
}

bool shannon_connection_identity_check(const Graph& a, const Graph& b) {
  Graph lhs = strong_product(connection_graph(a), connection_graph(b));
  Graph rhs = product_cells_intersection_graph(a, b);
  if (lhs.vertex_count() != rhs.vertex_count()) return false;
  return certificate(lhs) == certificate(rhs);
}

} // namespace gnum
