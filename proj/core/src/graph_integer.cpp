#include "gnum/graph_integer.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "gnum/canonical.hpp"
#include "gnum/error.hpp"

namespace gnum {
namespace {

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer coefficient overflow");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer coefficient overflow");
  return out;
}

} // namespace

GraphInteger GraphInteger::one() { return from_graph(complete_graph(1)); }

GraphInteger GraphInteger::from_int(long long n) {
  if (n == 0) return {};
  return gi_scale(one(), n);
}

GraphInteger GraphInteger::from_graph(const Graph& g) {
  GraphInteger out;
  for (const Graph& comp : components(g)) {
    std::string cert = certificate(comp);
    auto it = out.terms_.find(cert);
    if (it == out.terms_.end())
      out.terms_.emplace(std::move(cert), Term{1, comp});
    else
      ++it->second.mult;
  }
  return out;
}

GraphInteger GraphInteger::from_connected(const Graph& g, long long mult, const std::string& cert) {
  GraphInteger out;
  if (mult != 0) out.terms_.emplace(cert, Term{mult, g});
  return out;
}

bool GraphInteger::operator==(const GraphInteger& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [cert, term] : terms_) {
    if (cert != it->first || term.mult != it->second.mult) return false;
    ++it;
  }
  return true;
}

bool GraphInteger::is_pure_scalar(long long* value) const {
  if (terms_.empty()) {
    if (value) *value = 0;
    return true;
  }
  if (terms_.size() != 1) return false;
  const auto& [cert, term] = *terms_.begin();
  if (term.rep.vertex_count() != 1) return false;
  if (value) *value = term.mult;
  return true;
}

const Graph* GraphInteger::single_class() const {
  if (terms_.size() != 1 || terms_.begin()->second.mult != 1) return nullptr;
  return &terms_.begin()->second.rep;
}

long long GraphInteger::component_count() const {
  long long b0 = 0;
  for (const auto& [cert, term] : terms_) b0 = checked_add(b0, term.mult);
  return b0;
}

long long GraphInteger::vertex_count_functional() const {
  long long f0 = 0;
  for (const auto& [cert, term] : terms_)
    f0 = checked_add(f0, checked_mul(term.mult, term.rep.vertex_count()));
  return f0;
}

long long GraphInteger::euler_characteristic_functional() const {
  long long chi = 0;
  for (const auto& [cert, term] : terms_)
    chi = checked_add(chi, checked_mul(term.mult, euler_characteristic(term.rep)));
  return chi;
}

std::vector<long long> GraphInteger::f_vector_functional() const {
  std::vector<long long> f;
  for (const auto& [cert, term] : terms_) {
    std::vector<long long> fc = f_vector(term.rep);
    if (fc.size() > f.size()) f.resize(fc.size(), 0);
    for (size_t k = 0; k < fc.size(); ++k) f[k] += term.mult * fc[k];
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

long long GraphInteger::wu_functional(int k) const {
  long long wu = 0;
  for (const auto& [cert, term] : terms_)
    wu = checked_add(wu, checked_mul(term.mult, wu_characteristic(term.rep, k)));
  return wu;
}

long long GraphInteger::norm() const {
  long long n = 0;
  for (const auto& [cert, term] : terms_)
    n = checked_add(n, checked_mul(std::llabs(term.mult), term.rep.vertex_count()));
  return n;
}

std::string GraphInteger::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [cert, term] : terms_) {
    long long m = term.mult;
    if (out.empty()) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    long long mag = std::llabs(m);
    std::string name = component_name(term.rep);
    if (name == "1") {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += name;
    }
  }
  return out;
}

std::string GraphInteger::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [cert, term] : terms_) {
    nlohmann::json t;
    t["name"] = component_name(term.rep);
    t["mult"] = term.mult;
    t["graph"] = nlohmann::json::parse(term.rep.to_json());
    terms.push_back(t);
  }
  nlohmann::json j;
  j["terms"] = terms;
  j["norm"] = norm();
  return j.dump();
}

GraphInteger gi_add(const GraphInteger& x, const GraphInteger& y) {
  GraphInteger out = x;
  for (const auto& [cert, term] : y.terms_) {
    auto it = out.terms_.find(cert);
    if (it == out.terms_.end()) {
      out.terms_.emplace(cert, term);
    } else {
      it->second.mult = checked_add(it->second.mult, term.mult);
      if (it->second.mult == 0) out.terms_.erase(it);
    }
  }
  return out;
}

GraphInteger gi_neg(const GraphInteger& x) {
  GraphInteger out = x;
  for (auto& [cert, term] : out.terms_) term.mult = -term.mult;
  return out;
}

GraphInteger gi_scale(const GraphInteger& x, long long k) {
  if (k == 0) return {};
  GraphInteger out = x;
  for (auto& [cert, term] : out.terms_) term.mult = checked_mul(term.mult, k);
  return out;
}

GraphInteger gi_sub(const GraphInteger& x, const GraphInteger& y) { return gi_add(x, gi_neg(y)); }

GraphInteger gi_mul(const GraphInteger& x, const GraphInteger& y) {
  GraphInteger out;
  for (const auto& [cx, tx] : x.terms_)
    for (const auto& [cy, ty] : y.terms_) {
      // product of connected graphs is connected
      Graph prod = strong_product(tx.rep, ty.rep);
      GraphInteger piece =
          GraphInteger::from_connected(prod, checked_mul(tx.mult, ty.mult), certificate(prod));
      out = gi_add(out, piece);
    }
  return out;
}

GraphInteger gi_pow(const GraphInteger& x, int exponent) {
  if (exponent < 0) throw DomainError("negative powers live in the rational layer");
  GraphInteger acc = GraphInteger::one();
  for (int i = 0; i < exponent; ++i) acc = gi_mul(acc, x);
  return acc;
}

std::string component_name(const Graph& g) {
  int n = g.vertex_count();
  long long m = g.edge_count();
  if (n == 1) return "1";
  const std::string cert = certificate(g);
  auto matches = [&](const Graph& named) {
    return named.vertex_count() == n && named.edge_count() == m && certificate(named) == cert;
  };
  if (m == static_cast<long long>(n) * (n - 1) / 2) return "K" + std::to_string(n);
  if (n >= 3 && m == n && matches(cycle_graph(n))) return "C" + std::to_string(n);
  if (n >= 2 && m == n - 1) {
    if (matches(path_graph(n))) return "L" + std::to_string(n);
    if (n >= 3 && matches(star_graph(n - 1))) return "S" + std::to_string(n - 1);
  }
  if (n == 6 && m == 12 && matches(octahedron_graph())) return "Oct";
  return "g" + std::to_string(n) + "e" + std::to_string(m) + "#" + certificate_tag(cert);
}

} // namespace gnum
