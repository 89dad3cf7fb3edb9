#include "comass/collapse.hpp"

#include <algorithm>
#include <set>

namespace comass {

SimplicialComplex collapse(const SimplicialComplex& x) {
  // alive simplices and, for each, its direct (codimension-one) cofaces
  std::set<Simplex> alive;
  std::map<Simplex, std::set<Simplex>> cofaces;
  for (const auto& level : x.all())
    for (const auto& s : level) {
      alive.insert(s);
      if (s.size() > 1) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i) {
          f.clear();
          for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) f.push_back(s[j]);
          cofaces[f].insert(s);
        }
      }
    }

  std::set<Simplex> candidates = alive;  // possibly-free faces to revisit
  while (!candidates.empty()) {
    Simplex sigma = *candidates.begin();
    candidates.erase(candidates.begin());
    if (!alive.count(sigma)) continue;
    const auto& up = cofaces[sigma];
    if (up.size() != 1) continue;
    const Simplex tau = *up.begin();
    if (!cofaces[tau].empty()) continue;  // tau is not maximal
    // elementary collapse: drop sigma and tau, re-expose their faces
    for (const Simplex* s : {const_cast<const Simplex*>(&sigma), &tau}) {
      alive.erase(*s);
      if (s->size() > 1) {
        Simplex f;
        for (std::size_t i = 0; i < s->size(); ++i) {
          f.clear();
          for (std::size_t j = 0; j < s->size(); ++j)
            if (j != i) f.push_back((*s)[j]);
          cofaces[f].erase(*s);
          if (alive.count(f)) candidates.insert(f);
        }
      }
    }
  }

  std::vector<Simplex> remaining(alive.begin(), alive.end());
  SimplicialComplex y = SimplicialComplex::from_maximal(remaining);
  y.set_edge_scale(x.edge_scale());
  return y;
}

}  // namespace comass
