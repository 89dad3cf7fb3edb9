#include "comass/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>

namespace comass {

namespace {

// lexicographic enumeration of {-B..B}^k, starting at all -B
bool next_in_box(std::vector<Integer>& a, int B) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] < B) {
      ++a[i];
      for (std::size_t j = i + 1; j < a.size(); ++j) a[j] = -B;
      return true;
    }
  }
  return false;
}

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

long long max_enum_budget() {
  const char* env = std::getenv("COMASS_MAX_ENUM");
  if (!env) return 10000000LL;
  long long v = std::atoll(env);
  if (v <= 0) throw MalformedInput("COMASS_MAX_ENUM must be positive");
  return v;
}

SvpResult svp_linf_bruteforce(const LatticeBasis& basis, int B) {
  if (B < 1) throw DomainError("svp: need B >= 1");
  validate_basis(basis);
  const int k = basis.M() + 1;
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= 2LL * B + 1;
    if (count > max_enum_budget())
      throw DomainError("svp: enumeration budget exceeded");
  }
  SvpResult best;
  std::vector<Integer> a(k, Integer(-B));
  do {
    bool zero = true;
    for (const auto& c : a)
      if (c != 0) zero = false;
    if (zero) continue;
    Integer norm = 0;
    for (int i = 0; i < basis.N; ++i) {
      Integer v = 0;
      for (int j = 0; j < k; ++j) v += a[j] * basis.vectors[j][i];
      if (v < 0) v = -v;
      norm = std::max(norm, v);
    }
    if (best.coeffs.empty() || norm < best.norm) {
      best.norm = norm;
      best.coeffs = a;
    }
  } while (next_in_box(a, B));
  return best;
}

MinComassResult min_comass_search(const SimplicialComplex& x, int n,
                                  const std::vector<Cochain>& generators,
                                  const MinComassOptions& opts) {
  if (generators.empty())
    throw DomainError("min_comass_search: no generators, search infeasible");
  const int k = static_cast<int>(generators.size());
  const int B = opts.coeff_bound;
  if (B < 1) throw DomainError("min_comass_search: need coeff_bound >= 1");
  if ((opts.mode == SearchMode::PairingNonzero ||
       opts.mode == SearchMode::PairingOne) &&
      opts.h == nullptr)
    throw DomainError("min_comass_search: pairing mode needs a target h");
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= 2LL * B + 1;
    if (count > max_enum_budget())
      throw DomainError("min_comass_search: enumeration budget exceeded");
  }

  // pairings of each generator with the mode target and the pruning cycles
  std::vector<Rational> hpair(k, Rational(0));
  if (opts.h)
    for (int j = 0; j < k; ++j) hpair[j] = pairing(generators[j], *opts.h);
  std::vector<std::vector<Rational>> zpair(opts.prune_cycles.size());
  std::vector<Rational> zlen(opts.prune_cycles.size());
  for (std::size_t z = 0; z < opts.prune_cycles.size(); ++z) {
    zlen[z] = l1_norm(opts.prune_cycles[z]);
    if (zlen[z] == 0 || !boundary(opts.prune_cycles[z]).is_zero())
      throw DomainError("min_comass_search: bad pruning cycle");
    zpair[z].resize(k);
    for (int j = 0; j < k; ++j)
      zpair[z][j] = pairing(generators[j], opts.prune_cycles[z]);
  }

  struct Candidate {
    std::vector<Integer> a;
    Rational lb;  ///< certified lower bound on the comass coefficient
  };
  std::vector<Candidate> cands;
  std::vector<Integer> a(k, Integer(-B));
  do {
    bool zero = true;
    for (const auto& c : a)
      if (c != 0) zero = false;
    if (opts.mode == SearchMode::Nonzero && zero) continue;
    if (opts.h) {
      Rational p = 0;
      for (int j = 0; j < k; ++j) p += Rational(a[j]) * hpair[j];
      if (opts.mode == SearchMode::PairingNonzero && p == 0) continue;
      if (opts.mode == SearchMode::PairingOne && p != 1) continue;
    }
    Candidate c;
    c.a = a;
    for (std::size_t z = 0; z < opts.prune_cycles.size(); ++z) {
      Rational p = 0;
      for (int j = 0; j < k; ++j) p += Rational(a[j]) * zpair[z][j];
      if (p < 0) p = -p;
      c.lb = std::max(c.lb, p / zlen[z]);
    }
    cands.push_back(std::move(c));
  } while (next_in_box(a, B));
  if (cands.empty())
    throw DomainError("min_comass_search: no feasible candidate");

  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& l, const Candidate& r) {
                     return l.lb < r.lb ||
                            (l.lb == r.lb && lex_less(l.a, r.a));
                   });

  MinComassResult best;
  bool have = false;
  std::map<std::vector<Integer>, ComassResult> cache;
  for (const auto& c : cands) {
    if (have) {
      // candidates are sorted by certified lower bound, so once the bound
      // passes the incumbent nothing later can win; equal bounds are kept
      // only when they could steal the lexicographic tie
      if (c.lb > best.value.coeff) break;
      if (c.lb == best.value.coeff && !lex_less(c.a, best.coeffs)) continue;
    }
    ComassResult r;
    std::vector<Integer> neg(c.a.size());
    for (std::size_t j = 0; j < c.a.size(); ++j) neg[j] = -c.a[j];
    auto mirror = cache.find(neg);
    if (mirror != cache.end()) {
      // comass(-b) = comass(b), with the negated witness
      r = mirror->second;
      r.witness *= Rational(-1);
    } else {
      Cochain b(n);
      for (int j = 0; j < k; ++j) b += Rational(c.a[j]) * generators[j];
      if (std::getenv("COMASS_DEBUG")) {
        std::cerr << "[min-comass] LP on";
        for (const auto& v : c.a) std::cerr << " " << v.str();
        std::cerr << " lb=" << c.lb << "\n";
      }
      r = simplicial_comass(x, b, n);
      ++best.lp_calls;
      cache[c.a] = r;
    }
    if (!have || r.value.coeff < best.value.coeff ||
        (r.value.coeff == best.value.coeff && lex_less(c.a, best.coeffs))) {
      best.value = r.value;
      best.coeffs = c.a;
      best.witness = r.witness;
      have = true;
    }
  }
  return best;
}

LhntEstimate lhnt_estimate(const SimplicialComplex& x, int n,
                           const std::vector<Cochain>& generators,
                           const MinComassOptions& opts) {
  MinComassResult r = min_comass_search(x, n, generators, opts);
  LhntEstimate out;
  out.comass_min = r.value;
  out.value = std::pow(r.value.numeric(), 1.0 / n);
  return out;
}

}  // namespace comass
