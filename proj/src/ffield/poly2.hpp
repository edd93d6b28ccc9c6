#pragma once

#include "ffield/poly.hpp"

namespace qclab::ff {

// Dense bivariate polynomial of small total degree: coeff[i][j] * X^i * Y^j.
template <class K>
struct Poly2 {
  using Elem = typename K::Elem;
  std::vector<std::vector<Elem>> c;  // c[i][j]

  static Poly2 zero(const K& k, int dx, int dy) {
    Poly2 p;
    p.c.assign(dx + 1, std::vector<Elem>(dy + 1, k.zero()));
    return p;
  }
  typename K::Elem get(const K& k, int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(c.size())) return k.zero();
    if (j >= static_cast<int>(c[i].size())) return k.zero();
    return c[i][j];
  }
  int total_degree(const K& k) const {
    int d = -1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
      for (int j = 0; j < static_cast<int>(c[i].size()); ++j)
        if (!k.is_zero(c[i][j])) d = std::max(d, i + j);
    return d;
  }
  bool is_zero(const K& k) const { return total_degree(k) < 0; }
};

template <class K>
typename K::Elem poly2_eval(const K& k, const Poly2<K>& p, typename K::Elem x,
                            typename K::Elem y) {
  typename K::Elem r = k.zero();
  for (int i = static_cast<int>(p.c.size()) - 1; i >= 0; --i) {
    typename K::Elem row = k.zero();
    for (int j = static_cast<int>(p.c[i].size()) - 1; j >= 0; --j)
      row = k.add(k.mul(row, y), p.c[i][j]);
    r = k.add(k.mul(r, x), row);
  }
  return r;
}

template <class K>
Poly2<K> poly2_mul(const K& k, const Poly2<K>& a, const Poly2<K>& b) {
  int adx = static_cast<int>(a.c.size()) - 1, bdx = static_cast<int>(b.c.size()) - 1;
  int ady = 0, bdy = 0;
  for (auto& r : a.c) ady = std::max(ady, static_cast<int>(r.size()) - 1);
  for (auto& r : b.c) bdy = std::max(bdy, static_cast<int>(r.size()) - 1);
  Poly2<K> out = Poly2<K>::zero(k, adx + bdx, ady + bdy);
  for (int i = 0; i <= adx; ++i)
    for (int j = 0; j < static_cast<int>(a.c[i].size()); ++j) {
      if (k.is_zero(a.c[i][j])) continue;
      for (int s = 0; s <= bdx; ++s)
        for (int t = 0; t < static_cast<int>(b.c[s].size()); ++t)
          out.c[i + s][j + t] = k.add(out.c[i + s][j + t], k.mul(a.c[i][j], b.c[s][t]));
    }
  return out;
}

template <class K>
Poly2<K> poly2_sub(const K& k, const Poly2<K>& a, const Poly2<K>& b) {
  int dx = std::max(a.c.size(), b.c.size()) - 1;
  int dy = 0;
  for (auto& r : a.c) dy = std::max<int>(dy, r.size() - 1);
  for (auto& r : b.c) dy = std::max<int>(dy, r.size() - 1);
  Poly2<K> out = Poly2<K>::zero(k, dx, dy);
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j)
      out.c[i][j] = k.sub(a.get(k, i, j), b.get(k, i, j));
  return out;
}

// Substitute X = t, producing a univariate polynomial in Y.
template <class K>
Poly<K> poly2_specialize_x(const K& k, const Poly2<K>& p, typename K::Elem t) {
  int dy = 0;
  for (auto& r : p.c) dy = std::max<int>(dy, r.size() - 1);
  std::vector<typename K::Elem> out(dy + 1, k.zero());
  typename K::Elem tp = k.one();
  for (int i = 0; i < static_cast<int>(p.c.size()); ++i) {
    for (int j = 0; j < static_cast<int>(p.c[i].size()); ++j)
      out[j] = k.add(out[j], k.mul(p.c[i][j], tp));
    tp = k.mul(tp, t);
  }
  return poly_from(k, out);
}

// Homogeneous part of total degree m.
template <class K>
Poly2<K> poly2_homogeneous_part(const K& k, const Poly2<K>& p, int m) {
  Poly2<K> out = Poly2<K>::zero(k, m, m);
  for (int i = 0; i <= m; ++i) out.c[i][m - i] = p.get(k, i, m - i);
  return out;
}

// Shear X -> X + s*Y (Y unchanged).
template <class K>
Poly2<K> poly2_shear(const K& k, const Poly2<K>& p, typename K::Elem s) {
  int dx = static_cast<int>(p.c.size()) - 1;
  int dy = 0;
  for (auto& r : p.c) dy = std::max<int>(dy, r.size() - 1);
  int D = dx + dy;
  Poly2<K> out = Poly2<K>::zero(k, D, D);
  for (int i = 0; i <= dx; ++i) {
    // (X + sY)^i expanded via binomials.
    std::vector<typename K::Elem> binom(i + 1, k.zero());
    binom[0] = k.one();
    for (int row = 1; row <= i; ++row)
      for (int col = row; col >= 1; --col)
        binom[col] = k.add(binom[col], binom[col - 1]);
    for (int j = 0; j < static_cast<int>(p.c[i].size()); ++j) {
      if (k.is_zero(p.c[i][j])) continue;
      typename K::Elem spow = k.one();
      for (int t = 0; t <= i; ++t) {
        // term: C(i,t) s^t X^(i-t) Y^(j+t)
        out.c[i - t][j + t] =
            k.add(out.c[i - t][j + t], k.mul(p.c[i][j], k.mul(binom[t], spow)));
        spow = k.mul(spow, s);
      }
    }
  }
  return out;
}

// Exact division test by a candidate factor that is monic in Y.
template <class K>
bool poly2_divides_monic_y(const K& k, const Poly2<K>& factor, Poly2<K> p) {
  int fdy = 0;
  for (auto& r : factor.c) fdy = std::max<int>(fdy, r.size() - 1);
  // Treat both as polynomials in Y with coefficients in K[X].
  auto y_deg = [&](const Poly2<K>& a) {
    int d = -1;
    for (auto& row : a.c)
      for (int j = 0; j < static_cast<int>(row.size()); ++j)
        if (!k.is_zero(row[j])) d = std::max(d, j);
    return d;
  };
  int pd = y_deg(p);
  while (pd >= fdy) {
    // leading Y-coefficient of p as a poly in X
    int dx = static_cast<int>(p.c.size()) - 1;
    std::vector<typename K::Elem> lead(dx + 1, k.zero());
    for (int i = 0; i <= dx; ++i) lead[i] = p.get(k, i, pd);
    // subtract lead(X) * Y^(pd-fdy) * factor
    Poly2<K> m = Poly2<K>::zero(k, dx, pd - fdy);
    for (int i = 0; i <= dx; ++i) m.c[i][pd - fdy] = lead[i];
    p = poly2_sub(k, p, poly2_mul(k, m, factor));
    int npd = y_deg(p);
    if (npd == pd) return false;  // no progress: lc in Y not constant
    pd = npd;
  }
  return p.is_zero(k);
}

// Irreducibility over K for total degree <= 4, by specialization and
// interpolation: shear to make p monic in Y, enumerate candidate factors of
// Y-degree 1 and 2 from univariate factorizations at 2 (resp. 3) sample
// points, and test divisibility.
template <class K>
bool poly2_irreducible_deg4(const K& k, const Poly2<K>& p_in) {
  int D = p_in.total_degree(k);
  if (D <= 0) return false;
  if (D == 1) return true;
  if (D > 4) throw std::invalid_argument("poly2_irreducible_deg4: degree > 4");
  // Shear until the Y^D coefficient is a nonzero constant.
  Poly2<K> p = p_in;
  {
    auto lead = poly2_homogeneous_part(k, p_in, D);
    typename K::Elem s = k.zero();
    bool ok = false;
    for (i64 i = 0; i < k.q(); ++i) {
      s = k.element(i);
      // leading form at (X, Y) = (s, 1)
      if (!k.is_zero(poly2_eval(k, lead, s, k.one()))) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;  // leading form vanishes identically: degenerate
    p = poly2_shear(k, p_in, s);
    typename K::Elem lc = p.get(k, 0, D);
    typename K::Elem ilc = k.inv(lc);
    for (auto& row : p.c)
      for (auto& x : row) x = k.mul(x, ilc);
  }
  // Sample points t=0,1,2 -> univariate in Y, always degree D (monic).
  std::vector<Poly<K>> spec;
  std::vector<typename K::Elem> ts;
  for (i64 i = 0; i < 3; ++i) {
    ts.push_back(k.element(i % k.q()));
    spec.push_back(poly2_specialize_x(k, p, ts.back()));
  }
  // Y-degree-1 candidates: Y - w(X), deg w <= 1, from root pairs at t0, t1.
  auto roots0 = poly_roots(k, spec[0]);
  auto roots1 = poly_roots(k, spec[1]);
  for (auto r0 : roots0) {
    for (auto r1 : roots1) {
      // w(X) = r0 + (r1 - r0)/(t1 - t0) * (X - t0)
      auto slope = k.mul(k.sub(r1, r0), k.inv(k.sub(ts[1], ts[0])));
      auto w0 = k.sub(r0, k.mul(slope, ts[0]));
      Poly2<K> f = Poly2<K>::zero(k, 1, 1);
      f.c[0][1] = k.one();
      f.c[0][0] = k.neg(w0);
      f.c[1][0] = k.neg(slope);
      if (poly2_divides_monic_y(k, f, p)) return false;
    }
  }
  if (D == 4) {
    // Y-degree-2 candidates: Y^2 + u(X) Y + v(X), interpolated through monic
    // quadratic divisors at three sample points.
    auto quad_divisors = [&](const Poly<K>& f) {
      std::vector<std::array<typename K::Elem, 2>> out;  // (u, v): y^2+uy+v
      auto factors = poly_factor_deg4(k, f);
      int n = static_cast<int>(factors.size());
      // pairs of linear factors
      for (int i = 0; i < n; ++i) {
        if (factors[i].deg() == 2) out.push_back({factors[i].c[1], factors[i].c[0]});
        for (int j = i + 1; j < n; ++j) {
          if (factors[i].deg() == 1 && factors[j].deg() == 1) {
            auto a = k.neg(factors[i].c[0]);  // roots (monic linear: y + c)
            auto b = k.neg(factors[j].c[0]);
            out.push_back({k.neg(k.add(a, b)), k.mul(a, b)});
          }
        }
      }
      return out;
    };
    auto d0 = quad_divisors(spec[0]);
    auto d1 = quad_divisors(spec[1]);
    auto d2 = quad_divisors(spec[2]);
    for (auto& q0 : d0)
      for (auto& q1 : d1)
        for (auto& q2 : d2) {
          // interpolate u(X) and v(X) of degree <= 2 through three points
          Poly2<K> f = Poly2<K>::zero(k, 2, 2);
          f.c[0][2] = k.one();
          for (int comp = 0; comp < 2; ++comp) {
            // Newton interpolation of w(X) with w(t_i) = q_i[comp], deg <= 2;
            // comp 0 is the Y coefficient u(X), comp 1 the constant v(X).
            typename K::Elem y0 = q0[comp], y1 = q1[comp], y2 = q2[comp];
            auto d01 = k.mul(k.sub(y1, y0), k.inv(k.sub(ts[1], ts[0])));
            auto d12 = k.mul(k.sub(y2, y1), k.inv(k.sub(ts[2], ts[1])));
            auto c2 = k.mul(k.sub(d12, d01), k.inv(k.sub(ts[2], ts[0])));
            auto c0 = k.add(k.sub(y0, k.mul(d01, ts[0])), k.mul(c2, k.mul(ts[0], ts[1])));
            auto c1 = k.sub(d01, k.mul(c2, k.add(ts[0], ts[1])));
            int ypow = comp == 0 ? 1 : 0;
            f.c[0][ypow] = c0;
            f.c[1][ypow] = c1;
            f.c[2][ypow] = c2;
          }
          if (poly2_divides_monic_y(k, f, p)) return false;
        }
  }
  return true;
}

}  // namespace qclab::ff
