#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ffield/field.hpp"

namespace qclab::ff {

// Coefficient-field adapters so the polynomial code runs over F_p or F_{p^2}.
struct FpField {
  const FieldCtx* F;
  using Elem = i64;
  i64 q() const { return F->p(); }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return F->add(a, b); }
  Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
  Elem inv(Elem a) const { return F->inv(a); }
  Elem neg(Elem a) const { return F->neg(a); }
  bool is_zero(Elem a) const { return mod(a, F->p()) == 0; }
  bool eq(Elem a, Elem b) const { return mod(a - b, F->p()) == 0; }
  // Field elements in a fixed enumeration order, index 0..q-1.
  Elem element(i64 idx) const { return idx; }
};

struct Fp2Field {
  const FieldCtx* F;
  using Elem = Fp2;
  i64 q() const { return F->p() * F->p(); }
  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  Elem add(Elem a, Elem b) const { return {F->add(a.u, b.u), F->add(a.v, b.v)}; }
  Elem sub(Elem a, Elem b) const { return {F->sub(a.u, b.u), F->sub(a.v, b.v)}; }
  Elem mul(Elem a, Elem b) const { return fp2_mul(*F, a, b); }
  Elem inv(Elem a) const { return fp2_inv(*F, a); }
  Elem neg(Elem a) const { return {F->neg(a.u), F->neg(a.v)}; }
  bool is_zero(Elem a) const { return a.u == 0 && a.v == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem element(i64 idx) const { return {idx % F->p(), idx / F->p()}; }
};

// Dense univariate polynomial, low-degree-first coefficients.
template <class K>
struct Poly {
  using Elem = typename K::Elem;
  std::vector<Elem> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

template <class K>
Poly<K> poly_trim(const K& k, Poly<K> f) {
  while (!f.c.empty() && k.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

template <class K>
Poly<K> poly_from(const K& k, std::vector<typename K::Elem> c) {
  return poly_trim(k, Poly<K>{std::move(c)});
}

template <class K>
typename K::Elem poly_eval(const K& k, const Poly<K>& f, typename K::Elem x) {
  typename K::Elem r = k.zero();
  for (int i = f.deg(); i >= 0; --i) r = k.add(k.mul(r, x), f.c[i]);
  return r;
}

template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.add(r.c[i], b.c[i]);
  return poly_trim(k, r);
}

template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.sub(r.c[i], b.c[i]);
  return poly_trim(k, r);
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly<K> r;
  r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  return poly_trim(k, r);
}

template <class K>
Poly<K> poly_scale(const K& k, const Poly<K>& a, typename K::Elem s) {
  Poly<K> r = a;
  for (auto& x : r.c) x = k.mul(x, s);
  return poly_trim(k, r);
}

// Division with remainder; divisor must be nonzero.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const K& k, Poly<K> a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
  Poly<K> q;
  if (a.deg() < b.deg()) return {q, a};
  q.c.assign(a.deg() - b.deg() + 1, k.zero());
  auto lcinv = k.inv(b.c.back());
  while (!a.is_zero() && a.deg() >= b.deg()) {
    int shift = a.deg() - b.deg();
    auto f = k.mul(a.c.back(), lcinv);
    q.c[shift] = f;
    for (int i = 0; i <= b.deg(); ++i)
      a.c[i + shift] = k.sub(a.c[i + shift], k.mul(f, b.c[i]));
    a = poly_trim(k, a);
  }
  return {poly_trim(k, q), a};
}

template <class K>
Poly<K> poly_mod(const K& k, const Poly<K>& a, const Poly<K>& b) {
  return poly_divmod(k, a, b).second;
}

template <class K>
Poly<K> poly_monic(const K& k, const Poly<K>& a) {
  if (a.is_zero()) return a;
  return poly_scale(k, a, k.inv(a.c.back()));
}

template <class K>
Poly<K> poly_gcd(const K& k, Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = poly_mod(k, a, b);
    a = b;
    b = r;
  }
  return a.is_zero() ? a : poly_monic(k, a);
}

template <class K>
Poly<K> poly_powmod_x(const K& k, i64 e, const Poly<K>& m) {
  // x^e mod m
  Poly<K> base = poly_mod(k, poly_from(k, {k.zero(), k.one()}), m);
  Poly<K> r = poly_from(k, {k.one()});
  while (e > 0) {
    if (e & 1) r = poly_mod(k, poly_mul(k, r, base), m);
    base = poly_mod(k, poly_mul(k, base, base), m);
    e >>= 1;
  }
  return r;
}

// Irreducibility over K via Frobenius powers: f (deg d) is irreducible iff
// x^(q^d) = x mod f and gcd(x^(q^(d/r)) - x, f) = 1 for every prime r | d.
template <class K>
bool poly_is_irreducible(const K& k, const Poly<K>& f) {
  int d = f.deg();
  if (d <= 0) return false;
  if (d == 1) return true;
  const Poly<K> x = poly_from(k, {k.zero(), k.one()});
  auto frob_pow = [&](int times) {
    Poly<K> r = x;
    for (int i = 0; i < times; ++i) {
      // r -> r^q mod f, computed by exponentiating the polynomial.
      Poly<K> acc = poly_from(k, {k.one()});
      Poly<K> base = r;
      i64 e = k.q();
      while (e > 0) {
        if (e & 1) acc = poly_mod(k, poly_mul(k, acc, base), f);
        base = poly_mod(k, poly_mul(k, base, base), f);
        e >>= 1;
      }
      r = acc;
    }
    return r;
  };
  if (!poly_sub(k, frob_pow(d), x).is_zero()) return false;
  for (auto [r, e] : factorize(d)) {
    auto g = poly_gcd(k, poly_sub(k, frob_pow(d / static_cast<int>(r)), x), f);
    if (g.deg() > 0) return false;
  }
  return true;
}

template <class K>
std::vector<typename K::Elem> poly_roots(const K& k, const Poly<K>& f) {
  std::vector<typename K::Elem> out;
  for (i64 i = 0; i < k.q(); ++i) {
    auto x = k.element(i);
    if (k.is_zero(poly_eval(k, f, x))) out.push_back(x);
  }
  return out;
}

// Full factorization for deg <= 4 (all this project needs): linear factors by
// root scan, then the quartic two-irreducible-quadratics case by coefficient
// matching.
template <class K>
std::vector<Poly<K>> poly_factor_deg4(const K& k, Poly<K> f) {
  std::vector<Poly<K>> factors;
  f = poly_monic(k, f);
  if (f.deg() > 4) throw std::invalid_argument("poly_factor_deg4: degree > 4");
  // Strip linear factors.
  bool found = true;
  while (f.deg() > 0 && found) {
    found = false;
    for (i64 i = 0; i < k.q() && !found; ++i) {
      auto r = k.element(i);
      if (k.is_zero(poly_eval(k, f, r))) {
        factors.push_back(poly_from(k, {k.neg(r), k.one()}));
        f = poly_divmod(k, f, factors.back()).first;
        found = true;
      }
    }
  }
  if (f.deg() <= 0) return factors;
  if (f.deg() == 2 || f.deg() == 3) {
    factors.push_back(f);  // rootless deg 2/3 is irreducible
    return factors;
  }
  // Rootless quartic: irreducible or a product of two irreducible quadratics
  // x^2+ax+b, x^2+cx+d.
  const auto f3 = f.c[3], f2 = f.c[2], f1 = f.c[1], f0 = f.c[0];
  for (i64 i = 0; i < k.q(); ++i) {
    auto a = k.element(i);
    auto cc = k.sub(f3, a);
    auto s = k.sub(f2, k.mul(a, cc));  // b + d
    // a*d + b*c = f1 with b + d = s, b*d = f0.
    auto den = k.sub(cc, a);
    typename K::Elem b, d;
    if (!k.is_zero(den)) {
      // d = (f1 - a*s) / (c - a)
      d = k.mul(k.sub(f1, k.mul(a, s)), k.inv(den));
      b = k.sub(s, d);
    } else {
      // a == c: need b*d = f0, b + d = s; any split works if discriminant ok.
      // Try all b with d = s - b.
      bool ok = false;
      for (i64 jb = 0; jb < k.q() && !ok; ++jb) {
        b = k.element(jb);
        d = k.sub(s, b);
        if (k.eq(k.mul(b, d), f0) && k.eq(k.add(k.mul(a, d), k.mul(b, cc)), f1)) ok = true;
      }
      if (!ok) continue;
    }
    if (!k.eq(k.mul(b, d), f0)) continue;
    if (!k.eq(k.add(k.mul(a, d), k.mul(b, cc)), f1)) continue;
    Poly<K> q1 = poly_from(k, {b, a, k.one()});
    Poly<K> q2 = poly_from(k, {d, cc, k.one()});
    if (!poly_divmod(k, f, q1).second.is_zero()) continue;
    factors.push_back(q1);
    factors.push_back(q2);
    return factors;
  }
  factors.push_back(f);
  return factors;
}

// res(P, Q) = prod over roots x of Q (with multiplicity, in the splitting
// field) of P(x); computed by the Euclidean-remainder recurrence. Inputs are
// normalized to monic with the leading-coefficient factor tracked.
template <class K>
typename K::Elem poly_resultant(const K& k, const Poly<K>& P, const Poly<K>& Q) {
  // res(P, Q) = Res(Q, P) / lc(Q)^deg(P) for the classical resultant
  // Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a). For monic Q this is just
  // Res(Q, P).
  std::function<typename K::Elem(Poly<K>, Poly<K>)> res = [&](Poly<K> f, Poly<K> g) {
    // classical Res(f, g)
    if (f.is_zero() || g.is_zero()) return k.zero();
    if (f.deg() == 0) {
      typename K::Elem r = k.one();
      for (int i = 0; i < g.deg(); ++i) r = k.mul(r, f.c[0]);
      return r;
    }
    if (g.deg() == 0) {
      typename K::Elem r = k.one();
      for (int i = 0; i < f.deg(); ++i) r = k.mul(r, g.c[0]);
      return r;
    }
    auto r = poly_mod(k, f, g);
    if (r.is_zero()) return k.zero();
    // Res(f, g) = (-1)^(deg f * deg g) Res(g, f)
    //           = (-1)^(deg f * deg g) lc(g)^(deg f - deg r) Res(g, r)
    typename K::Elem lead = k.one();
    for (int i = 0; i < f.deg() - r.deg(); ++i) lead = k.mul(lead, g.c.back());
    auto tail = res(g, r);
    auto val = k.mul(lead, tail);
    if ((f.deg() * g.deg()) % 2 == 1) val = k.neg(val);
    return val;
  };
  auto Qm = poly_monic(k, Q);
  auto Pm = P;
  typename K::Elem lcP = k.one();
  if (!P.is_zero() && !k.eq(P.c.back(), k.one())) {
    lcP = P.c.back();
    Pm = poly_monic(k, P);
  }
  auto base = res(Qm, Pm);
  // Multiply back lc(P)^deg(Q): res(P,Q) = lc(P)^degQ * res(P/lc, Q).
  typename K::Elem scale = k.one();
  for (int i = 0; i < Q.deg(); ++i) scale = k.mul(scale, lcP);
  return k.mul(scale, base);
}

}  // namespace qclab::ff
