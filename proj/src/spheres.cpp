#include "comass/spheres.hpp"

#include <algorithm>
#include <set>

namespace comass {

SimplicialComplex boundary_delta(int n) {
  if (n < 0) throw DomainError("boundary_delta: negative dimension");
  std::vector<Simplex> maximal;
  for (int skip = 0; skip <= n + 1; ++skip) {
    Simplex s;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) s.push_back(v);
    maximal.push_back(s);
  }
  return SimplicialComplex::from_maximal(maximal, n);
}

SimplicialComplex cross_polytope_sphere(int n) {
  if (n < 0) throw DomainError("cross_polytope_sphere: negative dimension");
  std::vector<Simplex> maximal;
  for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
    Simplex s;
    for (int i = 0; i <= n; ++i)
      s.push_back((mask & (1u << i)) ? i + n + 1 : i);
    std::sort(s.begin(), s.end());
    maximal.push_back(s);
  }
  return SimplicialComplex::from_maximal(maximal, n);
}

SimplicialComplex bipyramid(int K) {
  if (K < 2) throw DomainError("bipyramid: need K >= 2");
  std::vector<Simplex> maximal;
  const int top = 2 * K, bottom = 2 * K + 1;
  for (int i = 0; i < 2 * K; ++i) {
    const int j = (i + 1) % (2 * K);
    maximal.push_back({i, j, top});
    maximal.push_back({i, j, bottom});
  }
  return SimplicialComplex::from_maximal(maximal, 2);
}

namespace {

// weights key: {(vertex, weight > 0)}, vertex-sorted
using WeightKey = std::vector<std::pair<int, int>>;

int weight_vertex(std::map<WeightKey, int>& registry, int& next_id,
                  const Simplex& verts, const std::vector<int>& bary) {
  WeightKey key;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (bary[i] > 0) key.emplace_back(verts[i], bary[i]);
  auto [it, inserted] = registry.emplace(key, next_id);
  if (inserted) ++next_id;
  return it->second;
}

}  // namespace

Subdivision edgewise_subdivision(const SimplicialComplex& x, int t) {
  if (t < 1) throw DomainError("edgewise_subdivision: need t >= 1");
  std::map<WeightKey, int> registry;
  int next_id = 0;
  Subdivision out;
  std::vector<Simplex> maximal;

  for (const auto& level : x.all())
    for (const auto& s : level) {
      const int k = static_cast<int>(s.size()) - 1;
      // staircase coordinates: p in Z^k with 0 <= p_1 <= ... <= p_k <= t
      // recovers barycentric a_0 = p_1, a_i = p_{i+1} - p_i, a_k = t - p_k;
      // each facet is a base point p plus prefix sums of e_{pi(1..k)}
      std::vector<int> p(k, 0);
      auto bary_of = [&](const std::vector<int>& q) {
        std::vector<int> a(k + 1);
        a[0] = k > 0 ? q[0] : t;
        for (int i = 1; i < k; ++i) a[i] = q[i] - q[i - 1];
        if (k > 0) a[k] = t - q[k - 1];
        return a;
      };
      auto valid = [&](const std::vector<int>& q) {
        if (q.empty()) return true;
        if (q[0] < 0 || q[k - 1] > t) return false;
        for (int i = 1; i < k; ++i)
          if (q[i - 1] > q[i]) return false;
        return true;
      };
      std::vector<int> perm(k);
      for (int i = 0; i < k; ++i) perm[i] = i;
      // iterate over base points p and permutations
      for (;;) {
        if (valid(p)) {
          std::vector<int> sorted_perm = perm;
          do {
            std::vector<int> q = p;
            bool ok = true;
            Simplex cell = {
                weight_vertex(registry, next_id, s, bary_of(q))};
            for (int step = 0; step < k && ok; ++step) {
              ++q[sorted_perm[step]];
              if (!valid(q)) {
                ok = false;
                break;
              }
              cell.push_back(weight_vertex(registry, next_id, s, bary_of(q)));
            }
            if (ok) {
              std::sort(cell.begin(), cell.end());
              maximal.push_back(cell);
            }
          } while (std::next_permutation(sorted_perm.begin(),
                                         sorted_perm.end()));
        }
        // advance p over {0..t-1}^k (base points; the final +1s reach t)
        int i = 0;
        for (; i < k; ++i) {
          if (++p[i] < t) break;
          p[i] = 0;
        }
        if (i == k) break;
        if (k == 0) break;
      }
    }

  out.complex = SimplicialComplex::from_maximal(maximal);
  out.complex.set_edge_scale(x.edge_scale() / t);
  for (const auto& [key, id] : registry) out.vertex_weights[id] = key;
  return out;
}

Chain fundamental_cycle(const SimplicialComplex& x, int n) {
  const auto& facets = x.simplices(n);
  if (facets.empty()) throw DomainError("fundamental_cycle: empty top level");
  // ridge -> incident facets
  std::map<Simplex, std::vector<int>> ridges;
  for (int i = 0; i < static_cast<int>(facets.size()); ++i)
    for (const auto& r : facets_of(facets[i])) ridges[r].push_back(i);
  for (const auto& [r, inc] : ridges)
    if (inc.size() != 2)
      throw DomainError("fundamental_cycle: not a closed pseudomanifold");

  // sign of ridge r inside del(facet), both in increasing order
  auto ridge_sign = [](const Simplex& facet, const Simplex& r) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      bool skip_match = true;
      std::size_t jj = 0;
      for (std::size_t j = 0; j < facet.size(); ++j) {
        if (j == i) continue;
        if (facet[j] != r[jj++]) {
          skip_match = false;
          break;
        }
      }
      if (skip_match) return i % 2 == 0 ? 1 : -1;
    }
    throw DomainError("ridge not a face of facet");
  };

  std::vector<int> orient(facets.size(), 0);
  std::vector<int> stack = {0};
  orient[0] = 1;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (const auto& r : facets_of(facets[cur])) {
      const auto& inc = ridges.at(r);
      int other = inc[0] == cur ? inc[1] : inc[0];
      int want = -orient[cur] * ridge_sign(facets[cur], r) *
                 ridge_sign(facets[other], r);
      if (orient[other] == 0) {
        orient[other] = want;
        stack.push_back(other);
      } else if (orient[other] != want) {
        throw DomainError("fundamental_cycle: not orientable");
      }
    }
  }
  for (int o : orient)
    if (o == 0) throw DomainError("fundamental_cycle: not connected");

  Chain z(n);
  for (std::size_t i = 0; i < facets.size(); ++i)
    z.coeffs[facets[i]] = orient[i];
  if (!boundary(z).is_zero())
    throw DomainError("fundamental_cycle: boundary is nonzero");
  return z;
}

}  // namespace comass
