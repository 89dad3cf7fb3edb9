#pragma once

#include "comass/simplicial_map.hpp"

#include <string>

namespace comass {

/// Lattice in Z^N spanned by integer rows u_0, ..., u_M.
struct LatticeBasis {
  int N = 0;
  std::vector<std::vector<Integer>> vectors;

  int M() const { return static_cast<int>(vectors.size()) - 1; }
};

/// Throws on inconsistent sizes, rank deficiency, or entries beyond the cap.
void validate_basis(const LatticeBasis& basis);

/// Hardness gadget: wedge of spheres Sigma_0..Sigma_M with, per lattice
/// coordinate i, a light certificate sphere S_i whose class is
/// (n+1) sum_j u_ji [Sigma_j].
struct GadgetComplex {
  SimplicialComplex x;
  int n = 2;
  LatticeBasis basis;
  std::vector<Cochain> generator_cocycles;  ///< g_j with <g_j,[Sigma_k]> = d_jk
  std::vector<Chain> sigma_cycles;          ///< fundamental cycles [Sigma_j]
  std::vector<Chain> s_cycles;              ///< fundamental cycles [S_i]
  std::string build_report;
};

GadgetComplex build_gadget(const LatticeBasis& basis, int n);

/// gamma(sum v_j u_j) = sum v_j generator_cocycles[j]; v has M+1 entries.
Cochain class_of_vector(const GadgetComplex& g, const std::vector<Integer>& v);

/// Sphere with a simplicial map onto a wedge of M+1 copies of the boundary
/// of Delta^{n+1}, hitting prescribed degrees; the pushforward identity
/// domain_cycle -> sum_j degrees[j] sigma_cycles[j] is asserted at build.
struct DegreeMap {
  SimplicialComplex domain;
  SimplicialComplex codomain;  ///< the wedge
  std::map<int, int> vertex_map;
  Chain domain_cycle;
  std::vector<Chain> sigma_cycles;  ///< [Sigma_j] inside the wedge
  int wedge_vertex = 0;
};

DegreeMap build_degree_map(int n, const std::vector<Integer>& degrees);

}  // namespace comass
