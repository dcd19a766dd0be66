// gf.hpp -- exact arithmetic in prime fields GF(p)
//
// Values are plain int64_t kept in the canonical range [0, p).  A Gf object
// carries the modulus; all operations go through it so there is exactly one
// place where reduction happens.  Desk-scale moduli only (p fits in 32 bits),
// so products never overflow int64_t.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdsembed {

using Fe = std::int64_t;  // field element, canonical range [0, p)

inline bool is_prime(Fe m) {
    if (m < 2) return false;
    for (Fe f = 2; f * f <= m; ++f)
        if (m % f == 0) return false;
    return true;
}

/// Least prime >= m (trial division; inputs are desk-scale).
inline Fe smallest_prime_geq(Fe m) {
    if (m < 2) m = 2;
    Fe p = m;
    while (!is_prime(p)) ++p;
    return p;
}

class Gf {
  public:
    explicit Gf(Fe p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("Gf: modulus " + std::to_string(p) + " is not prime");
    }

    Fe p() const { return p_; }

    Fe norm(Fe a) const {
        Fe r = a % p_;
        return r < 0 ? r + p_ : r;
    }
    Fe add(Fe a, Fe b) const { return norm(a + b); }
    Fe sub(Fe a, Fe b) const { return norm(a - b); }
    Fe mul(Fe a, Fe b) const { return norm(norm(a) * norm(b)); }
    Fe neg(Fe a) const { return norm(-a); }

    Fe pow(Fe a, Fe e) const {
        a = norm(a);
        Fe r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Fe inv(Fe a) const {
        a = norm(a);
        if (a == 0) throw std::domain_error("Gf: division by zero");
        return pow(a, p_ - 2);
    }
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    bool operator==(const Gf&) const = default;

  private:
    Fe p_;
};

// Vectors over GF(p), used both as rows of matrices and as the symbols of
// the vector alphabet V = GF(p)^n.
using Vec = std::vector<Fe>;

inline Vec vec_zero(int n) { return Vec(static_cast<std::size_t>(n), 0); }

inline Vec vec_unit(int n, int i) {
    Vec v = vec_zero(n);
    v.at(static_cast<std::size_t>(i)) = 1;
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (Fe x : v)
        if (x != 0) return false;
    return true;
}

inline Vec vec_add(const Gf& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

inline Vec vec_sub(const Gf& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

inline Vec vec_scale(const Gf& f, Fe c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

// r += c*a, in place
inline void vec_axpy(const Gf& f, Vec& r, Fe c, const Vec& a) {
    if (r.size() != a.size()) throw std::invalid_argument("vec_axpy: size mismatch");
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(r[i], f.mul(c, a[i]));
}

}  // namespace mdsembed
