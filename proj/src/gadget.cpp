#include "comass/gadget.hpp"

#include "comass/collapse.hpp"
#include "comass/smith.hpp"
#include "comass/spheres.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace comass {

namespace {

constexpr long kEntryCap = 1000000;  // polynomial cap on basis entries

// One covering block of a domain sphere: a fresh outer n-simplex glued to a
// slot boundary of the central sphere by a staircase prism.  Under the map
// sending outer vertices to a target facet and slot vertices to the target
// base point, the block covers the target sphere exactly once.
struct Block {
  std::vector<int> outer;  ///< fresh labels, increasing
  std::vector<int> slot;   ///< central-sphere slot facet, increasing
};

struct DomainSphere {
  SimplicialComplex complex;
  std::vector<Block> blocks;
  Chain cycle;
};

void append_block_simplices(const Block& b, int n,
                            std::vector<Simplex>& out) {
  out.push_back(b.outer);
  for (int m = 0; m <= n; ++m) {
    std::vector<int> idx;
    for (int i = 0; i <= n; ++i)
      if (i != m) idx.push_back(i);
    for (int r = 1; r <= n; ++r) {
      Simplex s;
      for (int q = 0; q < r; ++q) s.push_back(b.outer[idx[q]]);
      for (int q = r - 1; q < n; ++q) s.push_back(b.slot[idx[q]]);
      std::sort(s.begin(), s.end());
      out.push_back(s);
    }
  }
}

// Central sphere with at least K pairwise ridge-disjoint slot facets:
// a bipyramid with alternating apex triangles for n = 2, an edgewise
// subdivided cross-polytope boundary with vertex-disjoint facets for n >= 3.
std::vector<Simplex> central_sphere(int n, int K,
                                    std::vector<Simplex>& slots) {
  if (n == 2) {
    const int kk = std::max(K, 2);
    SimplicialComplex bip = bipyramid(kk);
    for (int m = 0; m < K; ++m) {
      Simplex s = {2 * m, 2 * m + 1, 2 * kk};
      std::sort(s.begin(), s.end());
      slots.push_back(s);
    }
    std::vector<Simplex> facets = bip.simplices(2);
    return facets;
  }
  for (int t = 1;; ++t) {
    Subdivision sub = edgewise_subdivision(cross_polytope_sphere(n), t);
    std::set<int> used;
    std::vector<Simplex> chosen;
    for (const auto& f : sub.complex.simplices(n)) {
      bool free = true;
      for (int v : f)
        if (used.count(v)) {
          free = false;
          break;
        }
      if (!free) continue;
      chosen.push_back(f);
      used.insert(f.begin(), f.end());
      if (static_cast<int>(chosen.size()) == K) break;
    }
    if (static_cast<int>(chosen.size()) == K) {
      slots = chosen;
      return sub.complex.simplices(n);
    }
  }
}

DomainSphere build_domain_sphere(int n, int K, int& next_label) {
  std::vector<Simplex> slots;
  std::vector<Simplex> facets = central_sphere(n, K, slots);
  int local_max = 0;
  for (const auto& f : facets)
    for (int v : f) local_max = std::max(local_max, v + 1);
  const int offset = next_label;
  next_label += local_max;
  auto relab = [offset](Simplex s) {
    for (int& v : s) v += offset;
    return s;
  };

  std::set<Simplex> slot_set(slots.begin(), slots.end());
  std::vector<Simplex> maximal;
  for (const auto& f : facets)
    if (!slot_set.count(f)) maximal.push_back(relab(f));

  DomainSphere out;
  for (const auto& s : slots) {
    Block b;
    b.slot = relab(s);
    for (int k = 0; k <= n; ++k) b.outer.push_back(next_label++);
    append_block_simplices(b, n, maximal);
    out.blocks.push_back(std::move(b));
  }
  out.complex = SimplicialComplex::from_maximal(maximal, n);
  out.cycle = fundamental_cycle(out.complex, n);
  return out;
}

// Wedge of M+1 copies of the boundary of Delta^{n+1} at a shared vertex.
struct Wedge {
  SimplicialComplex complex;
  int w = 0;
  std::vector<std::vector<int>> a;  ///< a[j] = the n+1 non-base vertices
  std::vector<Chain> sigma;         ///< fundamental cycles
  std::vector<Simplex> far;         ///< far facet of each summand
};

Wedge build_wedge(int n, int M, int& next_label) {
  Wedge out;
  out.w = next_label++;
  std::vector<Simplex> maximal;
  for (int j = 0; j <= M; ++j) {
    std::vector<int> a;
    for (int k = 0; k <= n; ++k) a.push_back(next_label++);
    std::vector<int> all = {out.w};
    all.insert(all.end(), a.begin(), a.end());
    for (std::size_t skip = 0; skip < all.size(); ++skip) {
      Simplex f;
      for (std::size_t q = 0; q < all.size(); ++q)
        if (q != skip) f.push_back(all[q]);
      maximal.push_back(f);
    }
    out.a.push_back(a);
    out.far.push_back(a);
  }
  out.complex = SimplicialComplex::from_maximal(maximal, n);
  for (int j = 0; j <= M; ++j) {
    std::vector<Simplex> fac;
    std::vector<int> all = {out.w};
    all.insert(all.end(), out.a[j].begin(), out.a[j].end());
    for (std::size_t skip = 0; skip < all.size(); ++skip) {
      Simplex f;
      for (std::size_t q = 0; q < all.size(); ++q)
        if (q != skip) f.push_back(all[q]);
      fac.push_back(f);
    }
    out.sigma.push_back(
        fundamental_cycle(SimplicialComplex::from_maximal(fac, n), n));
  }
  return out;
}

// Assigns a block's outer vertices to the target facet, choosing the order
// so its covering degree has the wanted sign relative to the target cycle.
void assign_block(const Block& b, const std::vector<int>& target,
                  const Chain& domain_cycle, const Chain& target_cycle,
                  int want_sign, std::map<int, int>& vmap) {
  Simplex far = target;
  std::sort(far.begin(), far.end());
  const Rational contrib =
      domain_cycle.coeff(b.outer) * target_cycle.coeff(far);
  const bool swap = (contrib != want_sign);
  for (std::size_t k = 0; k < b.outer.size(); ++k) {
    std::size_t kk = k;
    if (swap && k < 2) kk = 1 - k;
    vmap[b.outer[k]] = target[kk];
  }
}

// The ordered mapping cylinder of f over global labels; requires every
// domain vertex label to be smaller than every image label.
void append_cylinder_simplices(const SimplicialComplex& dom,
                               const std::map<int, int>& f,
                               std::vector<Simplex>& out) {
  for (const auto& level : dom.all())
    for (const auto& s : level)
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex t;
        for (std::size_t q = 0; q <= i; ++q) t.push_back(s[q]);
        for (std::size_t q = i; q < s.size(); ++q)
          t.push_back(f.at(s[q]));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        out.push_back(t);
      }
}

// Single-facet dual cocycle: pairs to 1 with the given fundamental cycle.
Cochain facet_dual(const Simplex& facet, const Chain& cycle) {
  Cochain out(cycle.degree);
  out.coeffs[facet] = cycle.coeff(facet);  // +-1
  return out;
}

void merge_cochain(Cochain& dst, const Cochain& src) {
  for (const auto& [s, v] : src.coeffs) {
    auto it = dst.coeffs.find(s);
    if (it != dst.coeffs.end()) {
      if (it->second != v)
        throw DomainError("gadget: inconsistent cocycle assembly");
    } else if (v != 0) {
      dst.coeffs[s] = v;
    }
  }
}

}  // namespace

void validate_basis(const LatticeBasis& basis) {
  if (basis.N < 1 || basis.vectors.empty())
    throw MalformedInput("lattice basis: need N >= 1 and at least one row");
  for (const auto& row : basis.vectors) {
    if (static_cast<int>(row.size()) != basis.N)
      throw MalformedInput("lattice basis: row length != N");
    for (const auto& e : row)
      if (e > kEntryCap || e < -kEntryCap)
        throw MalformedInput("lattice basis: entry cap exceeded");
  }
  MatZ u(basis.vectors.size(), basis.N);
  for (std::size_t j = 0; j < basis.vectors.size(); ++j)
    for (int i = 0; i < basis.N; ++i) u(j, i) = basis.vectors[j][i];
  if (rational_rank(u) != static_cast<int>(basis.vectors.size()))
    throw DomainError("lattice basis: rows are rationally dependent");
}

GadgetComplex build_gadget(const LatticeBasis& basis, int n) {
  if (n < 2) throw DomainError("build_gadget: need n >= 2");
  validate_basis(basis);
  const int N = basis.N;
  const int M = basis.M();

  // labels: domain spheres first, then the wedge, then the model spheres,
  // so every mapping cylinder is ordered (domain below codomain)
  int next_label = 0;
  std::vector<DomainSphere> domain(N);
  std::vector<int> kblocks(N);
  for (int i = 0; i < N; ++i) {
    Integer total = 0;
    for (int j = 0; j <= M; ++j) {
      Integer e = basis.vectors[j][i];
      total += e < 0 ? -e : e;
    }
    kblocks[i] = static_cast<int>((n + 1) * total) + 1;  // +1: the q-block
    domain[i] = build_domain_sphere(n, kblocks[i], next_label);
  }
  Wedge wedge = build_wedge(n, M, next_label);
  std::vector<std::vector<int>> model_b(N);
  std::vector<Chain> model_cycle(N);
  std::vector<SimplicialComplex> model(N);
  for (int i = 0; i < N; ++i) {
    std::vector<int> b;
    for (int k = 0; k <= n + 1; ++k) b.push_back(next_label++);
    std::vector<Simplex> fac;
    for (std::size_t skip = 0; skip < b.size(); ++skip) {
      Simplex f;
      for (std::size_t q = 0; q < b.size(); ++q)
        if (q != skip) f.push_back(b[q]);
      fac.push_back(f);
    }
    model_b[i] = b;
    model[i] = SimplicialComplex::from_maximal(fac, n);
    model_cycle[i] = fundamental_cycle(model[i], n);
  }

  // vertex maps f_i (to the wedge) and q_i (to the model sphere)
  std::vector<std::map<int, int>> fmap(N), qmap(N);
  for (int i = 0; i < N; ++i) {
    for (int v : domain[i].complex.vertices()) {
      fmap[i][v] = wedge.w;
      qmap[i][v] = model_b[i][0];
    }
    std::size_t blk = 0;
    for (int j = 0; j <= M; ++j) {
      const Integer e = basis.vectors[j][i];
      const int sgn = e < 0 ? -1 : 1;
      const Integer cnt = (n + 1) * (e < 0 ? -e : e);
      for (Integer c = 0; c < cnt; ++c, ++blk)
        assign_block(domain[i].blocks[blk], wedge.a[j], domain[i].cycle,
                     wedge.sigma[j], sgn, fmap[i]);
    }
    // the q-block: degree +1 onto the model sphere
    std::vector<int> btail(model_b[i].begin() + 1, model_b[i].end());
    assign_block(domain[i].blocks[blk], btail, domain[i].cycle,
                 model_cycle[i], 1, qmap[i]);
  }

  // Relabel each domain sphere so its vertex order is monotone for BOTH
  // f_i and q_i: the ordered-prefix cylinder construction below is a
  // genuine mapping cylinder only for monotone vertex maps.  The label
  // block of T_i is reused, so domain labels stay below codomain labels.
  for (int i = 0; i < N; ++i) {
    const std::vector<int>& labels = domain[i].complex.vertices();
    std::vector<std::tuple<int, int, int>> keyed;  // (f(v), q(v), v)
    for (int v : labels) keyed.emplace_back(fmap[i].at(v), qmap[i].at(v), v);
    std::sort(keyed.begin(), keyed.end());
    std::map<int, int> perm;
    for (std::size_t p = 0; p < labels.size(); ++p)
      perm[std::get<2>(keyed[p])] = labels[p];
    domain[i].complex = relabel(domain[i].complex, perm);
    Chain new_cycle(n);
    for (const auto& [s, c] : domain[i].cycle.coeffs) {
      Simplex t;
      for (int v : s) t.push_back(perm.at(v));
      new_cycle.add_term(t, c);
    }
    domain[i].cycle = new_cycle;
    std::map<int, int> nf, nq;
    for (const auto& [v, img] : fmap[i]) nf[perm.at(v)] = img;
    for (const auto& [v, img] : qmap[i]) nq[perm.at(v)] = img;
    fmap[i] = nf;
    qmap[i] = nq;
  }

  // exact degree checks
  for (int i = 0; i < N; ++i) {
    SimplicialMap f(&domain[i].complex, &wedge.complex, fmap[i]);
    Chain want(n);
    for (int j = 0; j <= M; ++j)
      want += Rational((n + 1) * basis.vectors[j][i]) * wedge.sigma[j];
    if (!(pushforward(f, domain[i].cycle) == want))
      throw DomainError("build_gadget: attaching degree check failed");
    SimplicialMap q(&domain[i].complex, &model[i], qmap[i]);
    if (!(pushforward(q, domain[i].cycle) == model_cycle[i]))
      throw DomainError("build_gadget: model degree check failed");
  }

  // correction cochains xi_ij with d xi = f_i^* t_j - (n+1)u_ji q_i^* m_i
  std::vector<Cochain> tj(M + 1), mi(N);
  for (int j = 0; j <= M; ++j)
    tj[j] = facet_dual(wedge.far[j], wedge.sigma[j]);
  for (int i = 0; i < N; ++i) {
    Simplex farb(model_b[i].begin() + 1, model_b[i].end());
    mi[i] = facet_dual(farb, model_cycle[i]);
  }
  std::vector<std::vector<Cochain>> xi(N, std::vector<Cochain>(M + 1));
  for (int i = 0; i < N; ++i) {
    const SimplicialComplex& t = domain[i].complex;
    SimplicialMap f(&t, &wedge.complex, fmap[i]);
    SimplicialMap q(&t, &model[i], qmap[i]);
    MatZ dmat = boundary_matrix(t, n);
    MatZ cobd = dmat.transpose();  // C^{n-1}(T) -> C^n(T)
    SmithForm snf = smith_normal_form(cobd);
    for (int j = 0; j <= M; ++j) {
      Cochain c = pullback(f, tj[j]) -
                  Rational((n + 1) * basis.vectors[j][i]) * pullback(q, mi[i]);
      VecZ rhs = VecZ::Zero(t.count(n));
      for (const auto& [s, v] : c.coeffs) rhs[t.index_of(s)] = numerator(v);
      auto sol = solve_integer(snf, rhs);
      if (!sol)
        throw DomainError("build_gadget: correction cochain not integral");
      xi[i][j] = Cochain(n - 1);
      for (int p = 0; p < t.count(n - 1); ++p)
        if ((*sol)[p] != 0)
          xi[i][j].coeffs[t.simplices(n - 1)[p]] = Rational((*sol)[p]);
    }
  }

  // assemble X from the cylinders and the generator cocycles piecewise
  GadgetComplex g;
  g.n = n;
  g.basis = basis;
  g.generator_cocycles.assign(M + 1, Cochain(n));
  std::vector<Simplex> x_max;
  for (const auto& level : wedge.complex.all())
    for (const auto& s : level) x_max.push_back(s);
  for (int i = 0; i < N; ++i) {
    std::vector<Simplex> cf_max, cq_max;
    for (const auto& level : wedge.complex.all())
      for (const auto& s : level) cf_max.push_back(s);
    append_cylinder_simplices(domain[i].complex, fmap[i], cf_max);
    for (const auto& level : model[i].all())
      for (const auto& s : level) cq_max.push_back(s);
    append_cylinder_simplices(domain[i].complex, qmap[i], cq_max);

    SimplicialComplex cf = SimplicialComplex::from_maximal(cf_max);
    SimplicialComplex cq = SimplicialComplex::from_maximal(cq_max);
    std::map<int, int> rf, rq;
    for (int v : cf.vertices()) {
      auto it = fmap[i].find(v);
      rf[v] = it != fmap[i].end() ? it->second : v;
    }
    for (int v : cq.vertices()) {
      auto it = qmap[i].find(v);
      rq[v] = it != qmap[i].end() ? it->second : v;
    }
    SimplicialMap retf(&cf, &wedge.complex, rf);
    SimplicialMap retq(&cq, &model[i], rq);
    for (int j = 0; j <= M; ++j) {
      merge_cochain(g.generator_cocycles[j], pullback(retf, tj[j]));
      Cochain qpart =
          Rational((n + 1) * basis.vectors[j][i]) * pullback(retq, mi[i]) +
          coboundary(cq, xi[i][j]);
      merge_cochain(g.generator_cocycles[j], qpart);
    }
    for (const auto& s : cf_max) x_max.push_back(s);
    for (const auto& s : cq_max) x_max.push_back(s);
  }
  g.x = SimplicialComplex::from_maximal(x_max);
  g.sigma_cycles = wedge.sigma;
  g.s_cycles = model_cycle;

  // build-time invariants
  for (int j = 0; j <= M; ++j) {
    if (!coboundary(g.x, g.generator_cocycles[j]).is_zero())
      throw DomainError("build_gadget: generator is not a cocycle");
    for (int k = 0; k <= M; ++k)
      if (pairing(g.generator_cocycles[j], g.sigma_cycles[k]) !=
          Rational(j == k ? 1 : 0))
        throw DomainError("build_gadget: dual-basis pairing failed");
    for (int i = 0; i < N; ++i)
      if (pairing(g.generator_cocycles[j], g.s_cycles[i]) !=
          Rational((n + 1) * basis.vectors[j][i]))
        throw DomainError("build_gadget: evaluation pairing failed");
  }
  for (int i = 0; i < N; ++i) {
    if (!boundary(g.s_cycles[i]).is_zero())
      throw DomainError("build_gadget: certificate chain is not a cycle");
    if (!times_volume_le(l1_norm(g.s_cycles[i]), n, Rational(n + 1)))
      throw DomainError("build_gadget: certificate sphere too heavy");
  }
  HomologyGroup h = homology(collapse(g.x), n);
  if (h.betti != M + 1 || !h.torsion.empty())
    throw DomainError("build_gadget: homology of X is not Z^{M+1}");

  std::ostringstream rep;
  rep << "gadget n=" << n << " N=" << N << " M=" << M << "\n";
  rep << "simplices total=" << g.x.size() << " top=" << g.x.count(n + 1)
      << " n-simplices=" << g.x.count(n) << "\n";
  long long budget = 0;
  Integer umax = 0;
  for (const auto& row : basis.vectors)
    for (const auto& e : row) umax = std::max(umax, e < 0 ? Integer(-e) : e);
  // block count is (n+1)*sum|u| + N; every block and its cylinder prisms
  // contribute O(n^2) simplices each, so the budget is quadratic-by-linear
  budget = 256LL * (n + 2) * (n + 2) * (n + 2) * N * (M + 1) *
           (static_cast<long long>(umax) + 1);
  rep << "size budget poly = 256(n+2)^3 N (M+1) max|u| = " << budget
      << (static_cast<long long>(g.x.size()) <= budget ? " (ok)"
                                                       : " (EXCEEDED)") << "\n";
  rep << "checked: degrees, cocycles, dual pairings, evaluation pairings, "
         "certificate mass, homology\n";
  g.build_report = rep.str();
  if (static_cast<long long>(g.x.size()) > budget)
    throw DomainError("build_gadget: size budget exceeded");
  return g;
}

Cochain class_of_vector(const GadgetComplex& g,
                        const std::vector<Integer>& v) {
  if (static_cast<int>(v.size()) != g.basis.M() + 1)
    throw MalformedInput("class_of_vector: coefficient length mismatch");
  Cochain out(g.n);
  for (std::size_t j = 0; j < v.size(); ++j)
    out += Rational(v[j]) * g.generator_cocycles[j];
  return out;
}

DegreeMap build_degree_map(int n, const std::vector<Integer>& degrees) {
  if (n < 1) throw DomainError("build_degree_map: need n >= 1");
  if (degrees.empty()) throw DomainError("build_degree_map: no targets");
  Integer total = 0;
  for (const auto& d : degrees) total += d < 0 ? -d : d;

  int next_label = 0;
  DegreeMap out;
  if (n == 1 && total > 0) {
    // circle case: a polygon of 3·total edges, each consecutive triple of
    // vertices walking once around one wedge triangle
    const int L = 3 * static_cast<int>(total);
    std::vector<Simplex> edges;
    for (int v = 0; v < L; ++v) {
      Simplex e = {v, (v + 1) % L};
      std::sort(e.begin(), e.end());
      edges.push_back(e);
    }
    SimplicialComplex dom = SimplicialComplex::from_maximal(edges, 1);
    Chain cycle = fundamental_cycle(dom, 1);
    next_label = L;
    Wedge w = build_wedge(1, static_cast<int>(degrees.size()) - 1,
                          next_label);
    std::map<int, int> vmap;
    std::size_t blk = 0;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      const Integer d = degrees[j];
      const int sgn = d < 0 ? -1 : 1;
      for (Integer c = 0; c < (d < 0 ? -d : d); ++c, ++blk) {
        Block b;
        b.outer = {static_cast<int>(3 * blk) + 1,
                   static_cast<int>(3 * blk) + 2};
        vmap[3 * static_cast<int>(blk)] = w.w;
        assign_block(b, w.a[j], cycle, w.sigma[j], sgn, vmap);
      }
    }
    SimplicialMap f(&dom, &w.complex, vmap);
    Chain want(1);
    for (std::size_t j = 0; j < degrees.size(); ++j)
      want += Rational(degrees[j]) * w.sigma[j];
    if (!(pushforward(f, cycle) == want))
      throw DomainError("build_degree_map: degree check failed");
    out.domain = dom;
    out.codomain = w.complex;
    out.vertex_map = vmap;
    out.domain_cycle = cycle;
    out.sigma_cycles = w.sigma;
    out.wedge_vertex = w.w;
    return out;
  }
  if (total == 0) {
    // constant map to the wedge point
    SimplicialComplex s = boundary_delta(n);
    out.domain = s;
    next_label = n + 2;
    Wedge w = build_wedge(n, static_cast<int>(degrees.size()) - 1, next_label);
    out.codomain = w.complex;
    out.wedge_vertex = w.w;
    out.sigma_cycles = w.sigma;
    for (int v : s.vertices()) out.vertex_map[v] = w.w;
    out.domain_cycle = fundamental_cycle(s, n);
    return out;
  }

  DomainSphere dom = build_domain_sphere(n, static_cast<int>(total),
                                         next_label);
  Wedge w = build_wedge(n, static_cast<int>(degrees.size()) - 1, next_label);
  std::map<int, int> vmap;
  for (int v : dom.complex.vertices()) vmap[v] = w.w;
  std::size_t blk = 0;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    const Integer d = degrees[j];
    const int sgn = d < 0 ? -1 : 1;
    for (Integer c = 0; c < (d < 0 ? -d : d); ++c, ++blk)
      assign_block(dom.blocks[blk], w.a[j], dom.cycle, w.sigma[j], sgn, vmap);
  }
  SimplicialMap f(&dom.complex, &w.complex, vmap);
  Chain want(n);
  for (std::size_t j = 0; j < degrees.size(); ++j)
    want += Rational(degrees[j]) * w.sigma[j];
  if (!(pushforward(f, dom.cycle) == want))
    throw DomainError("build_degree_map: degree check failed");
  out.domain = dom.complex;
  out.codomain = w.complex;
  out.vertex_map = vmap;
  out.domain_cycle = dom.cycle;
  out.sigma_cycles = w.sigma;
  out.wedge_vertex = w.w;
  return out;
}

}  // namespace comass
