#include "comass/complex.hpp"

#include <algorithm>

namespace comass {

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> kEmpty;
  if (k < 0 || k >= static_cast<int>(simplices_.size())) return kEmpty;
  return simplices_[k];
}

int SimplicialComplex::count(int k) const {
  return static_cast<int>(simplices(k).size());
}

bool SimplicialComplex::contains(const Simplex& s) const {
  int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k >= static_cast<int>(index_.size())) return false;
  return index_[k].count(s) > 0;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  int k = static_cast<int>(s.size()) - 1;
  if (k >= 0 && k < static_cast<int>(index_.size())) {
    auto it = index_[k].find(s);
    if (it != index_[k].end()) return it->second;
  }
  throw DomainError("simplex not in complex");
}

void SimplicialComplex::set_edge_scale(const Rational& r) {
  if (r <= 0) throw DomainError("edge_scale must be positive");
  edge_scale_ = r;
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& level : simplices_) n += level.size();
  return n;
}

void SimplicialComplex::rebuild_index() {
  index_.assign(simplices_.size(), {});
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    std::sort(simplices_[k].begin(), simplices_[k].end());
    simplices_[k].erase(
        std::unique(simplices_[k].begin(), simplices_[k].end()),
        simplices_[k].end());
    for (std::size_t i = 0; i < simplices_[k].size(); ++i)
      index_[k][simplices_[k][i]] = static_cast<int>(i);
  }
  vertices_.clear();
  if (!simplices_.empty())
    for (const auto& v : simplices_[0]) vertices_.push_back(v[0]);
}

SimplicialComplex SimplicialComplex::from_maximal(
    const std::vector<Simplex>& maximal, int dim_hint) {
  std::set<Simplex> closure;
  for (const auto& raw : maximal) {
    Simplex s = raw;
    for (int v : s)
      if (v < 0) throw MalformedInput("negative vertex label");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw MalformedInput("repeated vertex within a simplex");
    // enumerate all nonempty subsets; simplices here are tiny (dim <= ~4)
    int n = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      closure.insert(f);
    }
  }
  int dim = -1;
  for (const auto& s : closure)
    dim = std::max(dim, static_cast<int>(s.size()) - 1);
  if (dim_hint >= 0 && dim >= 0 && dim != dim_hint)
    throw MalformedInput("dimension hint does not match maximal simplices");
  SimplicialComplex x;
  x.simplices_.assign(dim + 1, {});
  for (const auto& s : closure)
    x.simplices_[s.size() - 1].push_back(s);
  x.rebuild_index();
  return x;
}

SimplicialComplex validate_complex(const std::vector<Simplex>& maximal,
                                   int dim_hint) {
  return SimplicialComplex::from_maximal(maximal, dim_hint);
}

std::vector<Simplex> facets_of(const Simplex& s) {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) f.push_back(s[j]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                 const SimplicialComplex& b) {
  int offset = 0;
  for (int v : a.vertices()) offset = std::max(offset, v + 1);
  std::vector<Simplex> maximal;
  for (const auto& level : a.all())
    for (const auto& s : level) maximal.push_back(s);
  for (const auto& level : b.all())
    for (const auto& s : level) {
      Simplex t = s;
      for (auto& v : t) v += offset;
      maximal.push_back(t);
    }
  SimplicialComplex u = SimplicialComplex::from_maximal(maximal);
  u.set_edge_scale(a.edge_scale());
  return u;
}

SimplicialComplex relabel(const SimplicialComplex& x,
                          const std::map<int, int>& vmap) {
  std::vector<Simplex> maximal;
  for (const auto& level : x.all())
    for (const auto& s : level) {
      Simplex t;
      for (int v : s) {
        auto it = vmap.find(v);
        if (it == vmap.end()) throw DomainError("relabel: missing vertex");
        t.push_back(it->second);
      }
      std::sort(t.begin(), t.end());
      if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw DomainError("relabel: labels collide");
      maximal.push_back(t);
    }
  SimplicialComplex y = SimplicialComplex::from_maximal(maximal);
  y.set_edge_scale(x.edge_scale());
  return y;
}

}  // namespace comass
