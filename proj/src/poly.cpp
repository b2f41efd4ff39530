#include "cglab/poly.hpp"

#include <algorithm>
#include <map>

#include "cglab/errors.hpp"

namespace cglab {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool poly_is_zero(const Poly& p) { return p.empty(); }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(out));
}

Poly poly_neg(Poly a) {
  for (auto& c : a) c = -c;
  return a;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (poly_is_zero(b)) throw InvariantViolation("poly_divexact: division by zero polynomial");
  Poly rem = a;
  Poly quot;
  int db = poly_deg(b);
  if (poly_deg(rem) >= db) quot.assign(static_cast<std::size_t>(poly_deg(rem) - db) + 1, 0);
  while (poly_deg(rem) >= db) {
    int dr = poly_deg(rem);
    BigInt lead = rem.back();
    if (lead % b.back() != 0) throw InvariantViolation("poly_divexact: inexact division");
    BigInt q = lead / b.back();
    quot[static_cast<std::size_t>(dr - db)] = q;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(dr - db + i)] -= q * b[static_cast<std::size_t>(i)];
    }
    rem = poly_trim(std::move(rem));
  }
  if (!poly_is_zero(rem)) throw InvariantViolation("poly_divexact: nonzero remainder");
  return poly_trim(std::move(quot));
}

BigInt poly_content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

Poly poly_primitive(const Poly& p) {
  if (poly_is_zero(p)) return p;
  BigInt c = poly_content(p);
  Poly out = p;
  for (auto& x : out) x /= c;
  if (out.back() < 0) out = poly_neg(std::move(out));
  return out;
}

namespace {

// Pseudo-remainder of a by b: rem(lead(b)^(da-db+1) * a, b).
Poly poly_prem(Poly a, const Poly& b) {
  int db = poly_deg(b);
  while (poly_deg(a) >= db && !poly_is_zero(a)) {
    int da = poly_deg(a);
    BigInt la = a.back();
    // a = a*lead(b) - la * z^(da-db) * b
    for (auto& c : a) c *= b.back();
    for (int i = 0; i <= db; ++i) {
      a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  if (poly_is_zero(a)) return poly_primitive(b);
  if (poly_is_zero(b)) return poly_primitive(a);
  BigInt ca = poly_content(a), cb = poly_content(b);
  BigInt cg = boost::multiprecision::gcd(ca, cb);
  a = poly_primitive(std::move(a));
  b = poly_primitive(std::move(b));
  if (poly_deg(a) < poly_deg(b)) std::swap(a, b);
  while (!poly_is_zero(b)) {
    Poly r = poly_primitive(poly_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  Poly g = poly_primitive(std::move(a));
  for (auto& c : g) c *= cg;
  return g;
}

std::string poly_to_string(const Poly& p) {
  if (poly_is_zero(p)) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    std::string term;
    BigInt c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0) {
      term = c.str();
    } else {
      term = (c == 1 ? "" : c.str() + "*");
      term += "z";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

namespace {

// Fraction-free Bareiss determinant of a square polynomial matrix.
Poly poly_det(std::vector<std::vector<Poly>> mat) {
  const int n = static_cast<int>(mat.size());
  if (n == 0) return {BigInt(1)};
  int sign = 1;
  Poly prev = {BigInt(1)};
  for (int k = 0; k + 1 < n; ++k) {
    if (poly_is_zero(mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)])) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!poly_is_zero(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return {};  // singular
      std::swap(mat[static_cast<std::size_t>(k)], mat[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    const Poly& pivot = mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly t = poly_sub(
            poly_mul(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], pivot),
            poly_mul(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                     mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = poly_divexact(t, prev);
      }
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = {};
    }
    prev = pivot;
  }
  Poly det = mat[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  if (sign < 0) det = poly_neg(std::move(det));
  return det;
}

}  // namespace

RationalGF rational_gf(const Dfa& a) {
  // Restrict to states reachable from start; fail and dead rows only inflate
  // the determinants.
  const int nsym = a.symbols.num_symbols();
  std::vector<int> idx(static_cast<std::size_t>(a.num_states), -1);
  std::vector<int> states;
  std::vector<int> stack = {a.start};
  if (a.start != 0) {
    idx[static_cast<std::size_t>(a.start)] = 0;
    states.push_back(a.start);
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int x = 0; x < nsym; ++x) {
        int t = a.tr(s, x);
        if (t == 0) continue;
        if (idx[static_cast<std::size_t>(t)] < 0) {
          idx[static_cast<std::size_t>(t)] = static_cast<int>(states.size());
          states.push_back(t);
          stack.push_back(t);
        }
      }
    }
  }
  const int n = static_cast<int>(states.size());
  if (n == 0) return RationalGF{{}, {BigInt(1)}};

  // A = I - zT on the reachable part.
  std::vector<std::vector<Poly>> A(static_cast<std::size_t>(n),
                                   std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    std::map<int, int> mult;
    for (int x = 0; x < nsym; ++x) {
      int t = a.tr(states[static_cast<std::size_t>(i)], x);
      if (t != 0) mult[idx[static_cast<std::size_t>(t)]]++;
    }
    A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = {BigInt(1)};
    for (auto [j, m] : mult) {
      Poly& cell = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (cell.empty()) cell = {BigInt(0), BigInt(-m)};
      else cell = poly_sub(cell, Poly{BigInt(0), BigInt(m)});
    }
  }
  Poly den = poly_det(A);

  // Bordered matrix [[A, v], [u, 0]]: gf = -det(B)/det(A).
  std::vector<std::vector<Poly>> B(static_cast<std::size_t>(n) + 1,
                                   std::vector<Poly>(static_cast<std::size_t>(n) + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (a.accepting[static_cast<std::size_t>(states[static_cast<std::size_t>(i)])]) {
      B[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = {BigInt(1)};
    }
  }
  B[static_cast<std::size_t>(n)][0] = {BigInt(1)};  // u = e_start; start has index 0
  Poly num = poly_neg(poly_det(std::move(B)));

  if (poly_is_zero(den) || den[0] == 0) {
    throw InvariantViolation("rational_gf: denominator vanishes at 0");
  }
  if (poly_is_zero(num)) {
    return RationalGF{{}, {BigInt(1)}};
  }
  Poly g = poly_gcd(num, den);
  if (poly_deg(g) >= 1 || (g.size() == 1 && g[0] != 1)) {
    num = poly_divexact(num, g);
    den = poly_divexact(den, g);
  }
  BigInt cn = poly_content(num), cd = poly_content(den);
  BigInt cg = boost::multiprecision::gcd(cn, cd);
  if (cg > 1) {
    for (auto& c : num) c /= cg;
    for (auto& c : den) c /= cg;
  }
  if (den[0] < 0) {
    num = poly_neg(std::move(num));
    den = poly_neg(std::move(den));
  }
  return RationalGF{std::move(num), std::move(den)};
}

std::vector<BigInt> series_expand(const RationalGF& f, int n_max) {
  if (f.den.empty() || f.den[0] == 0) {
    throw InvariantViolation("series_expand: denominator must not vanish at 0");
  }
  const BigInt& d0 = f.den[0];
  std::vector<BigRat> c(static_cast<std::size_t>(n_max) + 1, BigRat(0));
  for (int i = 0; i <= n_max; ++i) {
    BigRat acc = 0;
    if (i < static_cast<int>(f.num.size())) acc = BigRat(f.num[static_cast<std::size_t>(i)]);
    for (int j = 1; j <= std::min<int>(i, poly_deg(f.den)); ++j) {
      acc -= BigRat(f.den[static_cast<std::size_t>(j)]) * c[static_cast<std::size_t>(i - j)];
    }
    c[static_cast<std::size_t>(i)] = acc / BigRat(d0);
  }
  std::vector<BigInt> out;
  out.reserve(c.size());
  for (const auto& x : c) {
    if (boost::multiprecision::denominator(x) != 1) {
      throw InvariantViolation("series_expand: non-integer coefficient");
    }
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

}  // namespace cglab
