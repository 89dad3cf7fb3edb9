#pragma once

#include "comass/comass.hpp"
#include "comass/gadget.hpp"

namespace comass {

struct SvpResult {
  Integer norm = 0;
  std::vector<Integer> coeffs;  ///< lexicographically least minimizer
};

/// Exhaustive minimum of linf(sum a_j u_j) over nonzero a with |a_j| <= B.
/// The enumeration size (2B+1)^{M+1} is capped by COMASS_MAX_ENUM.
SvpResult svp_linf_bruteforce(const LatticeBasis& basis, int B);

enum class SearchMode { Nonzero, PairingNonzero, PairingOne };

struct MinComassOptions {
  int coeff_bound = 1;
  SearchMode mode = SearchMode::Nonzero;
  const Chain* h = nullptr;  ///< pairing target for the pairing modes
  /// Cycles used for exact lower-bound pruning: candidates whose certified
  /// bound already exceeds the incumbent skip their LP solve.  Does not
  /// change results, only the number of LP calls.
  std::vector<Chain> prune_cycles;
};

struct MinComassResult {
  ComassValue value;
  std::vector<Integer> coeffs;  ///< lexicographically least argmin
  Chain witness;                ///< LP witness of the minimizing class
  int lp_calls = 0;
};

/// Minimizes comass_Delta(sum a_j generators[j]) over the coefficient box,
/// each surviving candidate evaluated exactly by the comass LP.
MinComassResult min_comass_search(const SimplicialComplex& x, int n,
                                  const std::vector<Cochain>& generators,
                                  const MinComassOptions& opts);

struct LhntEstimate {
  ComassValue comass_min;  ///< exact minimized comass
  double value = 0;        ///< comass_min^{1/n}, up to a dimensional constant
};

LhntEstimate lhnt_estimate(const SimplicialComplex& x, int n,
                           const std::vector<Cochain>& generators,
                           const MinComassOptions& opts);

/// Enumeration budget from COMASS_MAX_ENUM (default 10^7).
long long max_enum_budget();

}  // namespace comass
