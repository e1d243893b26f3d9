#include "gnum/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

namespace gnum {
namespace {

constexpr int kBruteForceMaxVertices = 7;
constexpr size_t kMaxStoredAutomorphisms = 128;

std::string pack_certificate(const Graph& g, const std::vector<int>& new_of_old) {
  int n = g.vertex_count();
  std::vector<int> old_of_new(n);
  for (int v = 0; v < n; ++v) old_of_new[new_of_old[v]] = v;
  size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  std::string out(4 + (bits + 7) / 8, '\0');
  out[0] = static_cast<char>(n >> 24 & 0xff);
  out[1] = static_cast<char>(n >> 16 & 0xff);
  out[2] = static_cast<char>(n >> 8 & 0xff);
  out[3] = static_cast<char>(n & 0xff);
  size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(old_of_new[i], old_of_new[j]))
        out[4 + bit / 8] |= static_cast<char>(0x80 >> (bit % 8));
  return out;
}

CanonicalForm brute_force_form(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> old_of_new(n);
  std::iota(old_of_new.begin(), old_of_new.end(), 0);
  std::string best;
  std::vector<int> best_perm;
  do {
    std::vector<int> new_of_old(n);
    for (int i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;
    std::string cert = pack_certificate(g, new_of_old);
    if (best.empty() || cert < best) {
      best = std::move(cert);
      best_perm = new_of_old;
    }
  } while (std::next_permutation(old_of_new.begin(), old_of_new.end()));
  return {std::move(best), std::move(best_perm)};
}

// Individualization-refinement canonical search. Colors are an ordered
// partition: color indices respect the partition order, refinement only
// splits cells. The minimum leaf certificate over the search tree is the
// canonical form; automorphisms discovered at equal leaves prune sibling
// branches whose individualized vertex lies in the orbit of an explored
// one (under generators fixing the current prefix pointwise).
class IrSearch {
 public:
  explicit IrSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  CanonicalForm run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors);
    return {std::move(best_), std::move(best_perm_)};
  }

 private:
  void refine(std::vector<int>& colors) const {
    int k = 1 + (n_ ? *std::max_element(colors.begin(), colors.end()) : 0);
    while (true) {
      // signature = (own color, neighbor color counts)
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<int> cnt(k, 0);
        for (int u : g_.neighbors(v)) ++cnt[colors[u]];
        sig[v].reserve(8);
        sig[v].push_back(colors[v]);
        for (int c = 0; c < k; ++c)
          if (cnt[c]) {
            sig[v].push_back(c);
            sig[v].push_back(cnt[c]);
          }
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (sig[a] != sig[b]) return sig[a] < sig[b];
        return a < b;
      });
      std::vector<int> next(n_);
      int kk = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++kk;
        next[order[i]] = kk;
      }
      ++kk;
      if (kk == k && next == colors) break;
      colors = std::move(next);
      k = kk;
    }
  }

  static std::vector<int> individualize(const std::vector<int>& colors, int v) {
    std::vector<int> out(colors.size());
    for (size_t u = 0; u < colors.size(); ++u)
      out[u] = colors[u] + (colors[u] > colors[v] || (colors[u] == colors[v] && static_cast<int>(u) != v) ? 1 : 0);
    return out;
  }

  void leaf(const std::vector<int>& colors) {
    std::string cert = pack_certificate(g_, colors);
    if (best_.empty() || cert < best_) {
      best_ = std::move(cert);
      best_perm_ = colors;
      return;
    }
    if (cert != best_ || autos_.size() >= kMaxStoredAutomorphisms) return;
    // Equal certificates: best_perm_^{-1} o colors is an automorphism.
    std::vector<int> inv_best(n_);
    for (int v = 0; v < n_; ++v) inv_best[best_perm_[v]] = v;
    std::vector<int> sigma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      sigma[v] = inv_best[colors[v]];
      identity &= sigma[v] == v;
    }
    if (!identity) autos_.push_back(std::move(sigma));
  }

  void search(const std::vector<int>& colors) {
    int target = -1, target_size = 0;
    {
      int k = 1 + *std::max_element(colors.begin(), colors.end());
      std::vector<int> size(k, 0);
      for (int c : colors) ++size[c];
      if (k == n_) {
        leaf(colors);
        return;
      }
      for (int c = 0; c < k; ++c)
        if (size[c] > 1 && (target < 0 || size[c] < target_size)) {
          target = c;
          target_size = size[c];
        }
    }
    std::vector<int> candidates;
    for (int v = 0; v < n_; ++v)
      if (colors[v] == target) candidates.push_back(v);

    std::vector<int> explored;
    for (int v : candidates) {
      if (in_explored_orbit(v, explored)) continue;
      explored.push_back(v);
      std::vector<int> child = individualize(colors, v);
      refine(child);
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
    }
  }

  bool in_explored_orbit(int v, const std::vector<int>& explored) {
    if (explored.empty() || autos_.empty()) return false;
    // Union-find over vertices via generators that fix the prefix.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& sigma : autos_) {
      bool fixes = true;
      for (int p : prefix_)
        if (sigma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(sigma[x]);
        if (a != b) parent[a] = b;
      }
    }
    int rv = find(v);
    for (int u : explored)
      if (find(u) == rv) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::string best_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> autos_;
  std::vector<int> prefix_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.vertex_count() <= 1) {
    std::vector<int> id(g.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    return {pack_certificate(g, id), id};
  }
  if (g.vertex_count() <= kBruteForceMaxVertices) return brute_force_form(g);
  return IrSearch(g).run();
}

std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

Graph canonical_copy(const Graph& g) {
  CanonicalForm cf = canonical_form(g);
  std::vector<std::pair<int, int>> es;
  for (auto [i, j] : g.edges()) {
    int a = cf.relabeling[i], b = cf.relabeling[j];
    es.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(g.vertex_count(), es);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return certificate(a) == certificate(b);
}

std::string certificate_tag(const std::string& cert) {
  // FNV-1a over the certificate bytes, rendered as 8 hex chars.
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : cert) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(8, '0');
  for (int i = 0; i < 8; ++i) out[i] = hex[h >> (60 - 4 * i) & 0xf];
  return out;
}

} // namespace gnum
