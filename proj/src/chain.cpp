#include "comass/chain.hpp"

#include <algorithm>

namespace comass {

namespace {

// Sorts `tuple`, returning the permutation sign, or 0 on a repeated vertex.
int sort_sign(Simplex& tuple) {
  int sign = 1;
  // insertion sort; tuples have <= ~6 entries
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i - 1] == tuple[i]) return 0;
  return sign;
}

}  // namespace

void Chain::add_term(const Simplex& tuple, const Rational& c) {
  if (static_cast<int>(tuple.size()) != degree + 1)
    throw DomainError("add_term: wrong simplex dimension");
  Simplex s = tuple;
  int sign = sort_sign(s);
  if (sign == 0 || c == 0) return;
  Rational& v = coeffs[s];
  v += sign > 0 ? c : -c;
  if (v == 0) coeffs.erase(s);
}

Rational Chain::coeff(const Simplex& s) const {
  auto it = coeffs.find(s);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && coeffs.empty()) degree = other.degree;
  if (degree != other.degree) throw DomainError("chain degree mismatch");
  for (const auto& [s, c] : other.coeffs) {
    Rational& v = coeffs[s];
    v += c;
    if (v == 0) coeffs.erase(s);
  }
  return *this;
}

Chain& Chain::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [s, v] : coeffs) v *= c;
  return *this;
}

Chain operator+(Chain a, const Chain& b) { return a += b; }

Chain operator-(Chain a, const Chain& b) {
  Chain nb = b;
  nb *= Rational(-1);
  return a += nb;
}

Chain operator*(const Rational& c, Chain z) { return z *= c; }

bool operator==(const Chain& a, const Chain& b) {
  return a.coeffs == b.coeffs && (a.is_zero() || a.degree == b.degree);
}

Chain boundary(const Chain& z) {
  Chain out(z.degree - 1);
  if (z.degree == 0) return out;
  for (const auto& [s, c] : z.coeffs) {
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      out.add_term(f, sign > 0 ? c : -c);
      sign = -sign;
    }
  }
  return out;
}

Cochain coboundary(const SimplicialComplex& x, const Cochain& b) {
  Cochain out(b.degree + 1);
  for (const auto& t : x.simplices(b.degree + 1)) {
    Rational v = 0;
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != i) f.push_back(t[j]);
      Rational c = b.coeff(f);
      v += sign > 0 ? c : -c;
      sign = -sign;
    }
    if (v != 0) out.coeffs[t] = v;
  }
  return out;
}

Rational pairing(const Cochain& b, const Chain& z) {
  if (!b.is_zero() && !z.is_zero() && b.degree != z.degree)
    throw DomainError("pairing: degree mismatch");
  Rational out = 0;
  for (const auto& [s, c] : z.coeffs) out += b.coeff(s) * c;
  return out;
}

Rational linf_norm(const Cochain& b) {
  Rational m = 0;
  for (const auto& [s, c] : b.coeffs) m = std::max(m, c < 0 ? -c : c);
  return m;
}

Rational l1_norm(const Chain& z) {
  Rational m = 0;
  for (const auto& [s, c] : z.coeffs) m += c < 0 ? -c : c;
  return m;
}

bool is_integral(const Chain& z) {
  for (const auto& [s, c] : z.coeffs)
    if (!is_integral(c)) return false;
  return true;
}

Rational mass_sq(const SimplicialComplex& x, const Chain& z) {
  Rational l1 = l1_norm(z);
  Rational scale = 1;
  for (int i = 0; i < z.degree; ++i) scale *= x.edge_scale();
  return l1 * l1 * simplex_volume_sq(z.degree) * scale * scale;
}

double mass(const SimplicialComplex& x, const Chain& z) {
  return std::sqrt(static_cast<double>(mass_sq(x, z)));
}

MatZ boundary_matrix(const SimplicialComplex& x, int k) {
  MatZ d = MatZ::Zero(x.count(k - 1), x.count(k));
  if (k <= 0) return d;
  for (int col = 0; col < x.count(k); ++col) {
    const Simplex& s = x.simplices(k)[col];
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      d(x.index_of(f), col) += sign;
      sign = -sign;
    }
  }
  return d;
}

Chain chain_from_vector(const SimplicialComplex& x, int k, const VecR& v) {
  if (v.size() != x.count(k))
    throw DomainError("chain_from_vector: size mismatch");
  Chain z(k);
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != 0) z.coeffs[x.simplices(k)[i]] = v[i];
  return z;
}

VecR vector_from_chain(const SimplicialComplex& x, const Chain& z) {
  VecR v = VecR::Zero(x.count(z.degree));
  for (const auto& [s, c] : z.coeffs) v[x.index_of(s)] = c;
  return v;
}

}  // namespace comass
