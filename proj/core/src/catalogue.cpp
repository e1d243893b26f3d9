#include "gnum/catalogue.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "gnum/canonical.hpp"
#include "gnum/error.hpp"
#include "gnum/parallel.hpp"

namespace gnum {
namespace {

constexpr int kMaxLevel = 8;

struct Level {
  std::vector<Graph> reps;
  std::vector<std::string> certs;
};

std::mutex g_mutex;
std::map<int, Level> g_levels;

const char* cache_path() { return std::getenv("GNUM_CATALOG"); }

nlohmann::json load_cache_file() {
  const char* path = cache_path();
  if (!path) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) return nlohmann::json::object();
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  return j.is_object() ? j : nlohmann::json::object();
}

void store_cache_level(int n, const Level& level) {
  const char* path = cache_path();
  if (!path) return;
  nlohmann::json j = load_cache_file();
  nlohmann::json arr = nlohmann::json::array();
  for (const Graph& g : level.reps) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    arr.push_back(edges);
  }
  j[std::to_string(n)] = arr;
  std::ofstream out(path);
  if (out) out << j.dump();
}

bool load_cache_level(int n, Level& level) {
  nlohmann::json j = load_cache_file();
  auto it = j.find(std::to_string(n));
  if (it == j.end() || !it->is_array()) return false;
  for (const auto& edges : *it) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : edges) es.emplace_back(e[0].get<int>(), e[1].get<int>());
    level.reps.emplace_back(n, es);
  }
  for (const Graph& g : level.reps) level.certs.push_back(certificate(g));
  return true;
}

// Caller holds g_mutex.
const Level& level_locked(int n) {
  if (n < 0 || n > kMaxLevel) throw DomainError("iso-class catalogue capped at 8 vertices");
  auto it = g_levels.find(n);
  if (it != g_levels.end()) return it->second;

  Level level;
  if (load_cache_level(n, level)) return g_levels.emplace(n, std::move(level)).first->second;

  if (n == 0) {
    level.reps.push_back(Graph(0, {}));
    level.certs.push_back(certificate(level.reps[0]));
  } else {
    const Level& below = level_locked(n - 1);
    long long masks = 1ll << (n - 1);
    long long total = static_cast<long long>(below.reps.size()) * masks;
    std::vector<std::pair<std::string, Graph>> scratch(total);
    parallel_for(total, [&](long long idx) {
      const Graph& base = below.reps[idx / masks];
      long long mask = idx % masks;
      std::vector<std::pair<int, int>> es = base.edges();
      for (int b = 0; b < n - 1; ++b)
        if (mask >> b & 1) es.emplace_back(b, n - 1);
      Graph cand = canonical_copy(Graph(n, es));
      scratch[idx] = {certificate(cand), std::move(cand)};
    });
    std::map<std::string, Graph> dedup;
    for (auto& [cert, g] : scratch) dedup.emplace(std::move(cert), std::move(g));
    for (auto& [cert, g] : dedup) {
      level.certs.push_back(cert);
      level.reps.push_back(std::move(g));
    }
    store_cache_level(n, level);
  }
  return g_levels.emplace(n, std::move(level)).first->second;
}

} // namespace

const std::vector<Graph>& iso_classes(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  return level_locked(n).reps;
}

const std::vector<std::string>& iso_class_certificates(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  return level_locked(n).certs;
}

std::vector<Graph> connected_iso_classes(int n) {
  std::vector<Graph> out;
  for (const Graph& g : iso_classes(n))
    if (g.is_connected()) out.push_back(g);
  return out;
}

} // namespace gnum
