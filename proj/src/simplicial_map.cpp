#include "comass/simplicial_map.hpp"

#include <algorithm>

namespace comass {

SimplicialMap::SimplicialMap(const SimplicialComplex* domain,
                             const SimplicialComplex* codomain,
                             std::map<int, int> vertex_map)
    : domain_(domain), codomain_(codomain), vertex_map_(std::move(vertex_map)) {
  if (!is_simplicial(*domain_, *codomain_, vertex_map_))
    throw DomainError("vertex map is not simplicial");
}

int SimplicialMap::apply(int v) const {
  auto it = vertex_map_.find(v);
  if (it == vertex_map_.end()) throw DomainError("vertex outside domain");
  return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex t;
  for (int v : s) t.push_back(apply(v));
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

bool is_simplicial(const SimplicialComplex& domain,
                   const SimplicialComplex& codomain,
                   const std::map<int, int>& vertex_map) {
  for (int v : domain.vertices())
    if (!vertex_map.count(v)) return false;
  for (const auto& level : domain.all())
    for (const auto& s : level) {
      Simplex t;
      for (int v : s) t.push_back(vertex_map.at(v));
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      if (!codomain.contains(t)) return false;
    }
  return true;
}

Chain pushforward(const SimplicialMap& f, const Chain& z) {
  Chain out(z.degree);
  for (const auto& [s, c] : z.coeffs) {
    Simplex t;
    for (int v : s) t.push_back(f.apply(v));
    // add_term drops degenerate images via its zero permutation sign
    out.add_term(t, c);
  }
  return out;
}

Cochain pullback(const SimplicialMap& f, const Cochain& b) {
  Cochain out(b.degree);
  for (const auto& s : f.domain().simplices(b.degree)) {
    Simplex t;
    for (int v : s) t.push_back(f.apply(v));
    // sign-correct coefficient lookup on the (possibly unsorted) image tuple
    Chain probe(b.degree);
    probe.add_term(t, 1);
    Rational v = pairing(b, probe);
    if (v != 0) out.coeffs[s] = v;
  }
  return out;
}

MappingCylinder mapping_cylinder(const SimplicialMap& f) {
  const SimplicialComplex& a = f.domain();
  const SimplicialComplex& b = f.codomain();
  MappingCylinder cyl;
  // Domain vertices are ordered before codomain vertices AND sorted by
  // image, so the vertex map becomes monotone; the prefix prisms below
  // triangulate the genuine mapping cylinder only for monotone maps.
  int next = 0;
  std::vector<std::pair<int, int>> keyed;  // (image, domain vertex)
  for (int v : a.vertices()) keyed.emplace_back(f.apply(v), v);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [img, v] : keyed) cyl.domain_vertex[v] = next++;
  for (int w : b.vertices()) cyl.codomain_vertex[w] = next++;
  for (int v : a.vertices())
    cyl.retraction[cyl.domain_vertex.at(v)] = f.apply(v);
  for (int w : b.vertices()) cyl.retraction[cyl.codomain_vertex.at(w)] = w;

  std::vector<Simplex> maximal;
  for (const auto& level : b.all())
    for (const auto& s : level) {
      Simplex t;
      for (int w : s) t.push_back(cyl.codomain_vertex.at(w));
      maximal.push_back(t);
    }
  for (const auto& level : a.all())
    for (const auto& s : level) {
      // prisms: {a_0..a_i, f(a_i)..f(a_k)} for i = 0..k, the standard
      // triangulation of the simplex prism (pivot vertex on both levels)
      for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        Simplex t;
        for (int j = 0; j <= i; ++j) t.push_back(cyl.domain_vertex.at(s[j]));
        for (int j = i; j < static_cast<int>(s.size()); ++j)
          t.push_back(cyl.codomain_vertex.at(f.apply(s[j])));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        maximal.push_back(t);
      }
    }
  cyl.complex = SimplicialComplex::from_maximal(maximal);
  cyl.complex.set_edge_scale(a.edge_scale());
  return cyl;
}

}  // namespace comass
