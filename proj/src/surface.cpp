#include "comass/surface.hpp"

#include "comass/smith.hpp"
#include "comass/spheres.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace comass {

namespace {

// ---- weighted-hop metric helpers (all edges of a complex share one length)

struct VertexGraph {
  std::vector<int> labels;             // sorted vertex labels
  std::map<int, int> index;            // label -> index
  std::vector<std::vector<int>> adj;   // by index, sorted
};

VertexGraph make_graph(const SimplicialComplex& x) {
  VertexGraph g;
  g.labels = x.vertices();
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    g.index[g.labels[i]] = static_cast<int>(i);
  g.adj.resize(g.labels.size());
  if (x.dim() >= 1) {
    for (const Simplex& e : x.simplices(1)) {
      int a = g.index.at(e[0]), b = g.index.at(e[1]);
      g.adj[a].push_back(b);
      g.adj[b].push_back(a);
    }
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

constexpr int kUnreached = -1;

/// hop counts from src (by index); -1 where unreachable
std::vector<int> bfs_hops(const VertexGraph& g, int src) {
  std::vector<int> d(g.labels.size(), kUnreached);
  std::deque<int> q;
  d[src] = 0;
  q.push_back(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[v])
      if (d[w] == kUnreached) {
        d[w] = d[v] + 1;
        q.push_back(w);
      }
  }
  return d;
}

/// Shortest path src -> dst as vertex labels, deterministic (smallest-label
/// parents win via sorted adjacency + FIFO order).
std::vector<int> bfs_path(const VertexGraph& g, int src_label, int dst_label) {
  int src = g.index.at(src_label), dst = g.index.at(dst_label);
  std::vector<int> parent(g.labels.size(), -2);
  std::deque<int> q;
  parent[src] = -1;
  q.push_back(src);
  while (!q.empty() && parent[dst] == -2) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[v])
      if (parent[w] == -2) {
        parent[w] = v;
        q.push_back(w);
      }
  }
  if (parent[dst] == -2) throw DomainError("vertices in different components");
  std::vector<int> path;
  for (int v = dst; v != -1; v = parent[v]) path.push_back(g.labels[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---- tube triangulation

using Ring = std::array<int, 3>;

Simplex sorted3(int a, int b, int c) {
  Simplex s = {a, b, c};
  std::sort(s.begin(), s.end());
  return s;
}

/// Prism triangles between two 3-vertex rings; with rings read as ordered
/// triples the coherent orientation has boundary d(a0 a1 a2) - d(b0 b1 b2).
void add_prism(std::vector<Simplex>& tris, const Ring& a, const Ring& b) {
  tris.push_back(sorted3(a[0], a[1], b[1]));
  tris.push_back(sorted3(a[0], b[0], b[1]));
  tris.push_back(sorted3(a[1], a[2], b[2]));
  tris.push_back(sorted3(a[1], b[1], b[2]));
  tris.push_back(sorted3(a[0], a[2], b[0]));
  tris.push_back(sorted3(a[2], b[0], b[2]));
}

/// A tube is a chain of prisms along `rings`.  `eps_a`/`eps_b` are the
/// orientation coefficients of the two removed hole triangles in their own
/// pieces; the last ring is reflected when needed so the glued surface
/// stays orientable (the tube's own sign is eps_a, and its far boundary
/// cancels the far hole iff eps_b = -eps_a after the optional reflection).
void add_tube(std::vector<Simplex>& tris, std::vector<Ring> rings,
              const Integer& eps_a, const Integer& eps_b) {
  if (eps_b == eps_a) std::swap(rings.back()[1], rings.back()[2]);
  for (std::size_t t = 0; t + 1 < rings.size(); ++t)
    add_prism(tris, rings[t], rings[t + 1]);
}

struct Hole {
  Ring ring;     // removed triangle, sorted
  Integer eps;   // its coefficient in the piece's fundamental cycle
};

bool is_rational_boundary(const SimplicialComplex& x, const Chain& z) {
  if (z.is_zero()) return true;
  int k = z.degree;
  if (x.dim() < k + 1) return false;
  MatZ dz = boundary_matrix(x, k + 1);
  MatR d(dz.rows(), dz.cols());
  for (Eigen::Index i = 0; i < dz.rows(); ++i)
    for (Eigen::Index j = 0; j < dz.cols(); ++j) d(i, j) = Rational(dz(i, j));
  VecR rhs = vector_from_chain(x, z);
  return solve_rational(d, rhs).has_value();
}

}  // namespace

void check_surface(const SimplicialComplex& x) {
  if (x.dim() != 2) throw DomainError("surface check: dimension must be 2");
  // every edge in exactly two triangles
  std::map<Simplex, int> edge_deg;
  for (const Simplex& t : x.simplices(2))
    for (const Simplex& e : facets_of(t)) edge_deg[e] += 1;
  for (const Simplex& e : x.simplices(1))
    if (edge_deg[e] != 2)
      throw DomainError("surface check: edge with triangle degree != 2");
  // every vertex link a single cycle
  for (int v : x.vertices()) {
    std::map<int, std::vector<int>> link;
    for (const Simplex& t : x.simplices(2)) {
      if (!std::binary_search(t.begin(), t.end(), v)) continue;
      std::vector<int> rest;
      for (int u : t)
        if (u != v) rest.push_back(u);
      link[rest[0]].push_back(rest[1]);
      link[rest[1]].push_back(rest[0]);
    }
    if (link.empty())
      throw DomainError("surface check: isolated vertex");
    for (const auto& [u, nb] : link)
      if (nb.size() != 2)
        throw DomainError("surface check: vertex link is not a cycle");
    // connectivity of the link
    std::set<int> seen;
    std::deque<int> q = {link.begin()->first};
    seen.insert(q.front());
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : link.at(u))
        if (seen.insert(w).second) q.push_back(w);
    }
    if (seen.size() != link.size())
      throw DomainError("surface check: vertex link has several components");
  }
}

Integer euler_characteristic(const SimplicialComplex& x) {
  Integer chi = 0;
  for (int k = 0; k <= x.dim(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * Integer(x.count(k));
  return chi;
}

NetSurface build_net_surface(const SimplicialComplex& x, const Chain& h,
                             const Rational& s) {
  if (x.dim() < 2) throw DomainError("build_net_surface: dim(X) must be >= 2");
  if (s <= 0 || s > 1)
    throw DomainError("build_net_surface: scale must satisfy 0 < s <= 1");
  if (!h.is_zero()) {
    if (h.degree != 2)
      throw DomainError("build_net_surface: h must be a 2-chain");
    if (!is_integral(h)) throw DomainError("build_net_surface: h not integral");
    if (!boundary(h).is_zero())
      throw DomainError("build_net_surface: h is not a cycle");
    for (const auto& [t, c] : h.coeffs)
      if (!x.contains(t))
        throw DomainError("build_net_surface: h not supported on X");
  }

  VertexGraph gx = make_graph(x);
  const Rational scale = x.edge_scale();
  const int nv = static_cast<int>(gx.labels.size());
  std::vector<std::vector<int>> hx(nv);
  for (int i = 0; i < nv; ++i) hx[i] = bfs_hops(gx, i);
  auto within = [&](int i, int j, const Rational& r) {
    return hx[i][j] != kUnreached && Rational(hx[i][j]) * scale <= r;
  };

  NetSurface out;
  // ---- s-net
  std::vector<int> net;  // indices into gx.labels
  if (s <= scale) {
    for (int i = 0; i < nv; ++i) net.push_back(i);
  } else {
    for (int i = 0; i < nv; ++i) {
      bool covered = false;
      for (int u : net)
        if (within(u, i, s)) {
          covered = true;
          break;
        }
      if (!covered) net.push_back(i);
    }
  }
  for (int i : net) out.report.net.push_back(gx.labels[i]);

  // ---- tube pairs: net points within 10 s
  const Rational ten_s = 10 * s;
  std::vector<std::pair<int, int>> tube_pairs;  // net-list positions
  for (std::size_t a = 0; a < net.size(); ++a)
    for (std::size_t b = a + 1; b < net.size(); ++b)
      if (within(net[a], net[b], ten_s))
        tube_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));

  // ---- class piece: support of h must carry h as +-fundamental cycle
  SimplicialComplex supp;
  Chain supp_cycle;  // h restricted, = +-fundamental_cycle(supp)
  Simplex tau;
  int class_target = -1;  // net-list position nearest to tau's last vertex
  if (!h.is_zero()) {
    std::vector<Simplex> supp_tris;
    for (const auto& [t, c] : h.coeffs) supp_tris.push_back(t);
    try {
      supp = SimplicialComplex::from_maximal(supp_tris, 2);
      Chain fc = fundamental_cycle(supp, 2);
      if (!(h == fc) && !(h == Rational(-1) * fc))
        throw DomainError("support carries h with wrong coefficients");
    } catch (const Error&) {
      throw DomainError(
          "build_net_surface: support of h is not a connected closed "
          "orientable surface carried with coefficients +-1; not surgerable");
    }
    supp_cycle = h;
    tau = supp.simplices(2).front();
    int tc = gx.index.at(tau[2]);
    for (std::size_t a = 0; a < net.size(); ++a) {
      if (hx[net[a]][tc] == kUnreached) continue;
      if (class_target < 0 || hx[net[a]][tc] < hx[net[class_target]][tc])
        class_target = static_cast<int>(a);
    }
    if (class_target < 0)
      throw DomainError("build_net_surface: h's support is disconnected from "
                        "the net");
  }

  // ---- slots per net point
  std::vector<int> slots(net.size(), 0);
  for (auto [a, b] : tube_pairs) {
    slots[a] += 1;
    slots[b] += 1;
  }
  if (class_target >= 0) slots[class_target] += 1;

  // ---- spheres: one bipyramid per net point, holes on top triangles
  std::vector<Simplex> tris;
  std::map<int, int> vmap;  // sigma vertex -> X vertex
  int next = 0;
  std::map<int, Chain> bipyramid_cycle;  // by K
  std::vector<std::vector<Hole>> holes(net.size());
  std::vector<int> holes_used(net.size(), 0);
  for (std::size_t a = 0; a < net.size(); ++a) {
    int K = std::max(2, slots[a]);
    SimplicialComplex bp = bipyramid(K);
    auto it = bipyramid_cycle.find(K);
    if (it == bipyramid_cycle.end())
      it = bipyramid_cycle.emplace(K, fundamental_cycle(bp, 2)).first;
    const Chain& fc = it->second;
    int off = next;
    next += 2 * K + 2;
    for (int v = 0; v < 2 * K + 2; ++v) vmap[off + v] = gx.labels[net[a]];
    for (int j = 0; j < slots[a]; ++j) {
      Hole hole;
      hole.ring = {off + j, off + j + 1, off + 2 * K};
      hole.eps = numerator(fc.coeff({j, j + 1, 2 * K}));
      holes[a].push_back(hole);
    }
    for (const Simplex& t : bp.simplices(2)) {
      bool removed = false;
      for (int j = 0; j < slots[a]; ++j)
        if (t == Simplex{j, j + 1, 2 * K}) removed = true;
      if (removed) continue;
      tris.push_back(sorted3(off + t[0], off + t[1], off + t[2]));
    }
  }

  // ---- copy of h's support, minus one triangle
  std::map<int, int> copy_of;  // supp vertex -> sigma vertex
  if (class_target >= 0) {
    for (int v : supp.vertices()) {
      copy_of[v] = next;
      vmap[next] = v;
      ++next;
    }
    for (const Simplex& t : supp.simplices(2)) {
      if (t == tau) continue;
      tris.push_back(sorted3(copy_of[t[0]], copy_of[t[1]], copy_of[t[2]]));
    }
  }

  auto fresh_ring = [&](int x_vertex) {
    Ring r = {next, next + 1, next + 2};
    for (int v : {r[0], r[1], r[2]}) vmap[v] = x_vertex;
    next += 3;
    return r;
  };
  auto take_hole = [&](int a) -> const Hole& {
    return holes[a][holes_used[a]++];
  };

  // ---- ordinary tubes along shortest edge paths
  for (auto [a, b] : tube_pairs) {
    const Hole& ha = take_hole(a);
    const Hole& hb = take_hole(b);
    std::vector<int> path =
        bfs_path(gx, gx.labels[net[a]], gx.labels[net[b]]);
    std::vector<Ring> rings = {ha.ring};
    for (std::size_t t = 1; t + 1 < path.size(); ++t)
      rings.push_back(fresh_ring(path[t]));
    rings.push_back(hb.ring);
    add_tube(tris, rings, ha.eps, hb.eps);
    out.report.tubes += 1;
  }

  // ---- class tube: hole in the copy -> constant ring at tau[2] -> sphere
  if (class_target >= 0) {
    Hole hc;
    hc.ring = {copy_of[tau[0]], copy_of[tau[1]], copy_of[tau[2]]};
    hc.eps = numerator(supp_cycle.coeff(tau));
    const Hole& hb = take_hole(class_target);
    std::vector<Ring> rings = {hc.ring, fresh_ring(tau[2])};
    std::vector<int> path =
        bfs_path(gx, tau[2], gx.labels[net[class_target]]);
    for (std::size_t t = 1; t + 1 < path.size(); ++t)
      rings.push_back(fresh_ring(path[t]));
    rings.push_back(hb.ring);
    add_tube(tris, rings, hc.eps, hb.eps);
    out.report.tubes += 1;
  }

  out.sigma = SimplicialComplex::from_maximal(tris, 2);
  out.sigma.set_edge_scale(s / 10);
  out.vertex_map = vmap;

  // ---- checks: closed orientable surface mapping simplicially onto h
  check_surface(out.sigma);
  if (!is_simplicial(out.sigma, x, vmap))
    throw DomainError("build_net_surface: internal: map not simplicial");
  SimplicialMap p(&out.sigma, &x, vmap);
  Chain fc = fundamental_cycle(out.sigma, 2);
  Chain z = pushforward(p, fc);
  if (!is_rational_boundary(x, z - h)) {
    if (!is_rational_boundary(x, Rational(-1) * z - h))
      throw DomainError("build_net_surface: internal: class mismatch");
  }

  out.report.euler = euler_characteristic(out.sigma);
  Integer two_g = 2 - out.report.euler;
  if (two_g < 0 || two_g % 2 != 0)
    throw DomainError("build_net_surface: internal: bad Euler characteristic");
  out.report.genus = two_g / 2;
  out.report.simplex_count = static_cast<long long>(out.sigma.size());
  // polynomial cap: |Sigma| <~ s^{-3} |X|^2, generous constant
  Integer inv_s_ceil =
      (denominator(s) + numerator(s) - 1) / numerator(s);
  Integer budget = 512 * inv_s_ceil * inv_s_ceil * inv_s_ceil *
                   Integer(x.size()) * Integer(x.size());
  out.report.simplex_budget =
      budget.convert_to<long long>();
  if (Integer(out.report.simplex_count) > budget)
    throw DomainError("build_net_surface: simplex budget exceeded");
  return out;
}

GirthReport epsilon_girth(const SimplicialMap& p, const Rational& eps) {
  if (eps <= 0) throw DomainError("epsilon_girth: eps must be positive");
  const SimplicialComplex& sig = p.domain();
  const SimplicialComplex& x = p.codomain();
  VertexGraph gs = make_graph(sig);
  VertexGraph gx = make_graph(x);
  const int ns = static_cast<int>(gs.labels.size());
  const int nx = static_cast<int>(gx.labels.size());
  const Rational ss = sig.edge_scale(), sx = x.edge_scale();

  // all hop counts in Sigma; Sigma must be connected
  std::vector<std::vector<int>> hs(ns);
  for (int i = 0; i < ns; ++i) {
    hs[i] = bfs_hops(gs, i);
    for (int d : hs[i])
      if (d == kUnreached)
        throw DomainError("epsilon_girth: Sigma is disconnected");
  }
  // image of each Sigma vertex, as an X index
  std::vector<int> img(ns);
  for (int i = 0; i < ns; ++i) img[i] = gx.index.at(p.apply(gs.labels[i]));

  GirthReport out;
  out.epsilon = eps;
  out.dense = true;
  for (int xi = 0; xi < nx; ++xi) {
    std::vector<int> dx = bfs_hops(gx, xi);
    bool near = false;
    std::vector<int> ball;  // Sigma vertices mapping into the 2 eps ball
    for (int i = 0; i < ns; ++i) {
      int d = dx[img[i]];
      if (d == kUnreached) continue;
      Rational dist = Rational(d) * sx;
      if (dist <= eps) near = true;
      if (dist <= 2 * eps) ball.push_back(i);
    }
    if (!near) out.dense = false;
    for (std::size_t a = 0; a < ball.size(); ++a)
      for (std::size_t b = a + 1; b < ball.size(); ++b) {
        Rational d = Rational(hs[ball[a]][ball[b]]) * ss;
        if (d > out.delta) {
          out.delta = d;
          out.witness.center = gx.labels[xi];
          out.witness.v1 = gs.labels[ball[a]];
          out.witness.v2 = gs.labels[ball[b]];
        }
      }
  }
  return out;
}

}  // namespace comass
