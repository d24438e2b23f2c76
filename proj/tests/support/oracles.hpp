#pragma once

// Slow reference implementations built straight from the definitions.
// Nothing here calls into the library's arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

struct RingSpec {
  bool series;
  u64 p;
  unsigned n;

  u64 size() const {
    u64 s = 1;
    for (unsigned i = 0; i < n; ++i) s *= p;
    return s;
  }
  Vec digits(u64 x) const {
    Vec out(n);
    for (unsigned i = 0; i < n; ++i) {
      out[i] = x % p;
      x /= p;
    }
    return out;
  }
  u64 pack(const Vec& digits) const {
    u64 x = 0;
    for (unsigned i = n; i-- > 0;) x = x * p + digits[i];
    return x;
  }

  u64 add(u64 x, u64 y) const {
    if (!series) return (x + y) % size();
    Vec a = digits(x), b = digits(y), c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = (a[i] + b[i]) % p;
    return pack(c);
  }
  u64 neg(u64 x) const {
    if (!series) return (size() - x) % size();
    Vec a = digits(x);
    for (auto& v : a) v = (p - v) % p;
    return pack(a);
  }
  u64 sub(u64 x, u64 y) const { return add(x, neg(y)); }
  u64 mul(u64 x, u64 y) const {
    if (!series) {
      u64 r = 0;
      for (u64 k = 0; k < y; ++k) r = (r + x) % size();
      return r;
    }
    Vec a = digits(x), b = digits(y), c(n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; i + j < n; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return pack(c);
  }
  bool unit(u64 x) const { return x % p != 0; }
  unsigned valuation(u64 x) const {
    Vec a = digits(x);
    for (unsigned i = 0; i < n; ++i)
      if (a[i]) return i;
    return n;
  }
  u64 reduce(u64 x, unsigned m) const {
    u64 s = 1;
    for (unsigned i = 0; i < m; ++i) s *= p;
    return x % s;
  }
  RingSpec at(unsigned m) const { return {series, p, m}; }
  std::vector<u64> units() const {
    std::vector<u64> out;
    for (u64 x = 0; x < size(); ++x)
      if (unit(x)) out.push_back(x);
    return out;
  }
};

inline Vec scale(const RingSpec& r, u64 lambda, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = r.mul(lambda, v[i]);
  return out;
}

inline bool on_sphere(const RingSpec& r, const Vec& v) {
  return std::any_of(v.begin(), v.end(), [&](u64 x) { return r.unit(x); });
}

/// The class {lambda v : lambda a unit}, as a sorted set.
inline std::set<Vec> unit_orbit(const RingSpec& r, const Vec& v) {
  std::set<Vec> orbit;
  for (u64 lambda : r.units()) orbit.insert(scale(r, lambda, v));
  return orbit;
}

/// The member of the orbit whose first unit coordinate is 1.
inline Vec canonical_by_search(const RingSpec& r, const Vec& v) {
  for (const Vec& w : unit_orbit(r, v)) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (r.unit(w[i])) {
        if (w[i] == 1) return w;
        break;
      }
    }
  }
  return {};
}

/// Every vector of R^d, d at most 3 and tiny rings.
inline void for_each_vector(const RingSpec& r, unsigned d, const std::function<void(const Vec&)>& visit) {
  Vec v(d, 0);
  const u64 size = r.size();
  for (;;) {
    visit(v);
    unsigned i = 0;
    while (i < d && ++v[i] == size) v[i++] = 0;
    if (i == d) return;
  }
}

/// Canonical representatives of P^{d-1}(R), one per class of the sphere.
inline std::set<Vec> projective_classes(const RingSpec& r, unsigned d) {
  std::set<Vec> seen;
  std::set<Vec> classes;
  for_each_vector(r, d, [&](const Vec& v) {
    if (!on_sphere(r, v) || seen.count(v)) return;
    const auto orbit = unit_orbit(r, v);
    seen.insert(orbit.begin(), orbit.end());
    classes.insert(canonical_by_search(r, v));
  });
  return classes;
}

inline Vec reduce_vec(const RingSpec& r, const Vec& v, unsigned m) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = r.reduce(v[i], m);
  return out;
}

/// Largest v such that the level-v images are the same projective point.
inline unsigned distance_by_search(const RingSpec& r, const Vec& a, const Vec& b) {
  unsigned best = 0;
  for (unsigned v = 1; v <= r.n; ++v) {
    const RingSpec rv = r.at(v);
    const auto orbit = unit_orbit(rv, reduce_vec(r, a, v));
    if (orbit.count(reduce_vec(r, b, v))) best = v;
  }
  return best;
}

/// Naive set { t can(a) + f(a) }.
inline std::set<Vec> naive_kakeya(const RingSpec& r, const std::vector<Vec>& directions, const std::vector<Vec>& f) {
  std::set<Vec> cells;
  for (std::size_t k = 0; k < directions.size(); ++k)
    for (u64 t = 0; t < r.size(); ++t) {
      Vec x(directions[k].size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = r.add(r.mul(t, directions[k][i]), f[k][i]);
      cells.insert(x);
    }
  return cells;
}

/// M(h)(j) straight from the definition.
inline std::vector<u64> naive_multiplicity(const std::vector<unsigned>& h) {
  std::vector<u64> out;
  for (std::size_t j = 0; j < h.size(); ++j) {
    u64 count = 0;
    for (std::size_t k = 0; k <= j; ++k) {
      if (h[k] != h[j]) continue;
      bool bounded = true;
      for (std::size_t i = k; i <= j; ++i) bounded = bounded && h[i] <= h[j];
      if (bounded) ++count;
    }
    out.push_back(count);
  }
  return out;
}

}  // namespace oracle
