// linear.hpp -- GF(p) matrices, systematic MDS check matrices, plane
// completion by exact solves, subspaces of V = GF(p)^n, and the linear and
// affine subcodes M|_W and u + M|_W.
//
// The check matrix A of a linear code has the code as its kernel; the code
// is MDS with distance t+1 exactly when every txt minor of A is nonzero.
// Everything here is desk-scale: dense Gaussian elimination throughout.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdsembed/code.hpp"
#include "mdsembed/gf.hpp"
#include "mdsembed/rng.hpp"

namespace mdsembed {

using Mat = std::vector<Vec>;          // row-major
using VectorTuple = std::vector<Vec>;  // a word over the vector alphabet V, d entries of length n

inline Mat mat_identity(int t) {
    Mat m(static_cast<std::size_t>(t), vec_zero(t));
    for (int i = 0; i < t; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

/// A * Y where Y is a d-tuple of length-n vectors; result is a t-tuple.
inline VectorTuple mat_apply(const Gf& f, const Mat& a, const VectorTuple& y) {
    if (a.empty()) return {};
    const std::size_t d = a[0].size();
    if (y.size() != d) throw std::invalid_argument("mat_apply: tuple length mismatch");
    const std::size_t n = y.empty() ? 0 : y[0].size();
    VectorTuple r(a.size(), vec_zero(static_cast<int>(n)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (a[i][j] != 0) vec_axpy(f, r[i], a[i][j], y[j]);
    return r;
}

inline bool tuple_is_zero(const VectorTuple& y) {
    for (const auto& v : y)
        if (!vec_is_zero(v)) return false;
    return true;
}

inline Fe mat_det(const Gf& f, Mat m) {
    const std::size_t t = m.size();
    Fe det = 1;
    for (std::size_t col = 0; col < t; ++col) {
        std::size_t pivot = col;
        while (pivot < t && m[pivot][col] == 0) ++pivot;
        if (pivot == t) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = f.neg(det);
        }
        det = f.mul(det, m[col][col]);
        Fe inv = f.inv(m[col][col]);
        for (std::size_t r = col + 1; r < t; ++r) {
            if (m[r][col] == 0) continue;
            Fe factor = f.mul(m[r][col], inv);
            for (std::size_t c = col; c < t; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
        }
    }
    return det;
}

// Solve A X = B for square invertible A (txt), B given as t rows of length m.
inline Mat solve_square(const Gf& f, Mat a, Mat b) {
    const std::size_t t = a.size();
    if (b.size() != t) throw std::invalid_argument("solve_square: shape mismatch");
    for (std::size_t col = 0; col < t; ++col) {
        std::size_t pivot = col;
        while (pivot < t && a[pivot][col] == 0) ++pivot;
        if (pivot == t) throw std::domain_error("solve_square: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Fe inv = f.inv(a[col][col]);
        for (auto& x : a[col]) x = f.mul(x, inv);
        for (auto& x : b[col]) x = f.mul(x, inv);
        for (std::size_t r = 0; r < t; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Fe factor = a[r][col];
            for (std::size_t c = 0; c < t; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
            for (std::size_t c = 0; c < b[col].size(); ++c) b[r][c] = f.sub(b[r][c], f.mul(factor, b[col][c]));
        }
    }
    return b;
}

struct CheckMatrix {
    Gf field;
    int t = 0;  // rows (code distance is t+1)
    int d = 0;  // columns (code length)
    Mat rows;
    bool systematic_flag = false;

    int k() const { return d - t; }
    bool operator==(const CheckMatrix&) const = default;
};

/// Systematic reduction of the Vandermonde matrix H[i][j] = j^i on the field
/// points 0..d-1.  t = 1 uses the all-ones parity row for any d.  For t >= 2,
/// d = p+1 appends the unit column (0,..,0,1)^T before reduction; d > p+1 has
/// no construction in scope.
inline CheckMatrix build_check_matrix(Fe p, int d, int t) {
    Gf f(p);
    if (t < 1 || t >= d) throw std::invalid_argument("build_check_matrix: need 1 <= t < d");
    if (t == 1) {
        CheckMatrix m{f, 1, d, Mat{Vec(static_cast<std::size_t>(d), 1)}, true};
        return m;
    }
    if (static_cast<Fe>(d) > p + 1)
        throw std::invalid_argument("build_check_matrix: d = " + std::to_string(d) + " exceeds p+1 = " +
                                    std::to_string(p + 1) + " for t >= 2 (no construction in scope)");
    const int vcols = std::min<Fe>(d, p);
    Mat h(static_cast<std::size_t>(t), vec_zero(d));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < vcols; ++j)
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.pow(j, i);  // 0^0 = 1
    if (vcols < d) h[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(d - 1)] = 1;

    // Gauss-Jordan on the leading txt block (a Vandermonde on distinct
    // points, hence invertible) to reach the (I|A') form.
    Mat lead(static_cast<std::size_t>(t), vec_zero(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            lead[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Mat reduced = solve_square(f, lead, h);
    return CheckMatrix{f, t, d, std::move(reduced), true};
}

struct MatrixReport {
    bool ok = false;
    bool minors_ok = false;
    std::uint64_t minors_checked = 0;
    std::optional<std::vector<int>> zero_minor_columns;
    bool dual_weight_ok = false;
    bool dual_weight_exhaustive = true;
    std::uint64_t dual_combos_checked = 0;
    std::optional<Vec> dual_witness;  // row-combination coefficients
    std::string note;

    explicit operator bool() const { return ok; }
};

/// True iff every txt minor is nonzero; the report also checks that every
/// nonzero row combination has Hamming weight >= d-t+1 (the MDS dual bound;
/// enumerated when p^t <= 1e5, sampled otherwise).
inline MatrixReport verify_mds_matrix(const CheckMatrix& m, std::uint64_t seed = 0) {
    const Gf& f = m.field;
    MatrixReport rep;
    rep.minors_ok = true;

    std::vector<int> cols(static_cast<std::size_t>(m.t));
    for (int i = 0; i < m.t; ++i) cols[static_cast<std::size_t>(i)] = i;
    do {
        Mat sub(static_cast<std::size_t>(m.t), vec_zero(m.t));
        for (int i = 0; i < m.t; ++i)
            for (int j = 0; j < m.t; ++j)
                sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
        ++rep.minors_checked;
        if (mat_det(f, sub) == 0) {
            rep.minors_ok = false;
            rep.zero_minor_columns = cols;
            break;
        }
    } while (detail::next_combination(cols, m.d));

    // dual weight: weight(c.A) >= d-t+1 for every c != 0 (the k+1 bound; the
    // stricter "greater than k+1" phrasing is not asserted)
    const int bound = m.d - m.t + 1;
    rep.dual_weight_ok = true;
    auto combos = detail::checked_pow(static_cast<std::uint64_t>(f.p()), m.t);
    const std::uint64_t kExhaustiveLimit = 100000;
    auto weight_of = [&](const Vec& coeff) {
        Vec combo = vec_zero(m.d);
        for (int i = 0; i < m.t; ++i)
            if (coeff[static_cast<std::size_t>(i)] != 0)
                vec_axpy(f, combo, coeff[static_cast<std::size_t>(i)], m.rows[static_cast<std::size_t>(i)]);
        int w = 0;
        for (Fe x : combo)
            if (x != 0) ++w;
        return w;
    };
    if (combos && *combos <= kExhaustiveLimit) {
        Vec coeff(static_cast<std::size_t>(m.t), 0);
        while (true) {
            int pos = m.t - 1;
            while (pos >= 0 && ++coeff[static_cast<std::size_t>(pos)] == f.p()) coeff[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++rep.dual_combos_checked;
            if (weight_of(coeff) < bound) {
                rep.dual_weight_ok = false;
                rep.dual_witness = coeff;
                break;
            }
        }
        rep.note = "dual weight enumerated over all " + std::to_string(rep.dual_combos_checked) + " nonzero combinations";
    } else {
        rep.dual_weight_exhaustive = false;
        Rng rng(seed);
        for (std::uint64_t it = 0; it < kExhaustiveLimit && rep.dual_weight_ok; ++it) {
            Vec coeff(static_cast<std::size_t>(m.t));
            bool zero = true;
            for (auto& x : coeff) {
                x = static_cast<Fe>(rng.below(static_cast<std::uint64_t>(f.p())));
                zero = zero && x == 0;
            }
            if (zero) continue;
            ++rep.dual_combos_checked;
            if (weight_of(coeff) < bound) {
                rep.dual_weight_ok = false;
                rep.dual_witness = coeff;
            }
        }
        rep.note = "dual weight sampled (" + std::to_string(rep.dual_combos_checked) + " combinations, seed " +
                   std::to_string(seed) + ")";
    }

    rep.ok = rep.minors_ok && rep.dual_weight_ok;
    return rep;
}

/// A linear [d, d-t, t+1] MDS code over GF(p), held as its check matrix.
/// Construction re-verifies the matrix; the kernel over V = GF(p)^n is MDS
/// for every n (coordinate-wise product of the scalar code).
class LinearMdsCode {
  public:
    explicit LinearMdsCode(CheckMatrix m) : m_(std::move(m)) {
        auto rep = verify_mds_matrix(m_);
        if (!rep.ok) throw std::invalid_argument("LinearMdsCode: check matrix is not MDS");
    }

    const CheckMatrix& matrix() const { return m_; }
    const Gf& field() const { return m_.field; }
    Fe p() const { return m_.field.p(); }
    int d() const { return m_.d; }
    int t() const { return m_.t; }

    bool contains(const VectorTuple& y) const { return tuple_is_zero(mat_apply(field(), m_.rows, y)); }

    bool operator==(const LinearMdsCode&) const = default;

  private:
    CheckMatrix m_;
};

inline LinearMdsCode make_linear_mds(Fe p, int d, int t) { return LinearMdsCode(build_check_matrix(p, d, t)); }

/// The unique codeword over V = GF(p)^n agreeing with the fixed assignment
/// on d-t coordinates, via inversion of the txt submatrix on the free ones.
inline VectorTuple complete_plane_vector(const LinearMdsCode& code, int n,
                                         const std::vector<std::pair<int, Vec>>& fixed) {
    const Gf& f = code.field();
    const int d = code.d();
    const int t = code.t();
    if (fixed.size() != static_cast<std::size_t>(d - t))
        throw std::invalid_argument("complete_plane: plane must fix exactly d-t coordinates");
    std::vector<bool> is_fixed(static_cast<std::size_t>(d), false);
    VectorTuple y(static_cast<std::size_t>(d), vec_zero(n));
    for (const auto& [coord, value] : fixed) {
        if (coord < 0 || coord >= d) throw std::invalid_argument("complete_plane: coordinate out of range");
        if (is_fixed[static_cast<std::size_t>(coord)])
            throw std::invalid_argument("complete_plane: coordinate fixed twice");
        if (value.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("complete_plane: fixed value has wrong length");
        is_fixed[static_cast<std::size_t>(coord)] = true;
        for (Fe x : value)
            if (x < 0 || x >= f.p()) throw std::invalid_argument("complete_plane: fixed value out of field range");
        y[static_cast<std::size_t>(coord)] = value;
    }
    std::vector<int> free_coords;
    for (int j = 0; j < d; ++j)
        if (!is_fixed[static_cast<std::size_t>(j)]) free_coords.push_back(j);

    // rhs_i = -sum over fixed j of A[i][j] * y_j
    Mat rhs(static_cast<std::size_t>(t), vec_zero(n));
    const Mat& a = code.matrix().rows;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < d; ++j)
            if (is_fixed[static_cast<std::size_t>(j)] && a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                vec_axpy(f, rhs[static_cast<std::size_t>(i)],
                         f.neg(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]),
                         y[static_cast<std::size_t>(j)]);
    Mat lead(static_cast<std::size_t>(t), vec_zero(t));
    for (int i = 0; i < t; ++i)
        for (int jj = 0; jj < t; ++jj)
            lead[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] =
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(free_coords[static_cast<std::size_t>(jj)])];
    Mat sol = solve_square(f, lead, rhs);  // invertible by the MDS minor property
    for (int jj = 0; jj < t; ++jj) y[static_cast<std::size_t>(free_coords[static_cast<std::size_t>(jj)])] = sol[static_cast<std::size_t>(jj)];
    return y;
}

/// Scalar-alphabet convenience wrapper (n = 1).
inline Word complete_plane_linear(const LinearMdsCode& code, const std::vector<std::pair<int, Fe>>& fixed) {
    std::vector<std::pair<int, Vec>> lifted;
    lifted.reserve(fixed.size());
    for (auto [c, v] : fixed) lifted.emplace_back(c, Vec{code.field().norm(v)});
    VectorTuple y = complete_plane_vector(code, 1, lifted);
    Word w(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) w[j] = y[j][0];
    return w;
}

/// Row-reduced subspace of GF(p)^n with membership and coset tests.
class Subspace {
  public:
    Subspace(Gf f, int n) : field_(f), n_(n) {}

    const Gf& field() const { return field_; }
    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const Mat& basis() const { return basis_; }

    /// Residue of v after elimination against the basis; zero iff member.
    Vec reduce(Vec v) const {
        if (v.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("Subspace::reduce: length mismatch");
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            Fe c = v[static_cast<std::size_t>(pivots_[r])];
            if (c != 0) {
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = field_.sub(v[j], field_.mul(c, basis_[r][j]));
            }
        }
        return v;
    }

    bool member(const Vec& v) const { return vec_is_zero(reduce(v)); }
    bool coset_equal(const Vec& u, const Vec& v) const { return member(vec_sub(field_, u, v)); }

    /// Insert a vector; returns false if it was already in the span.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) return false;
        Fe inv = field_.inv(v[pivot]);
        for (auto& x : v) x = field_.mul(x, inv);
        // eliminate the new pivot from existing rows, keep rows ordered by pivot
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            Fe c = basis_[r][pivot];
            if (c != 0)
                for (std::size_t j = 0; j < basis_[r].size(); ++j)
                    basis_[r][j] = field_.sub(basis_[r][j], field_.mul(c, v[j]));
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(pivot));
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, static_cast<int>(pivot));
        basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    std::optional<std::uint64_t> cardinality() const {
        return detail::checked_pow(static_cast<std::uint64_t>(field_.p()), dim());
    }

    /// All p^dim elements, coefficient-odometer order. Guarded.
    std::vector<Vec> enumerate(std::uint64_t limit = 100000) const {
        auto count = cardinality();
        if (!count || *count > limit) throw std::invalid_argument("Subspace::enumerate: too many elements");
        std::vector<Vec> out;
        out.reserve(static_cast<std::size_t>(*count));
        Vec coeff(static_cast<std::size_t>(dim()), 0);
        while (true) {
            Vec v = vec_zero(n_);
            for (std::size_t r = 0; r < basis_.size(); ++r)
                if (coeff[r] != 0) vec_axpy(field_, v, coeff[r], basis_[r]);
            out.push_back(std::move(v));
            int pos = dim() - 1;
            while (pos >= 0 && ++coeff[static_cast<std::size_t>(pos)] == field_.p())
                coeff[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
        return out;
    }

    bool operator==(const Subspace&) const = default;

  private:
    Gf field_;
    int n_;
    Mat basis_;                // RREF rows, ordered by pivot
    std::vector<int> pivots_;  // pivot column per row
};

inline Subspace subspace_span(const Gf& f, int n, const std::vector<Vec>& vectors) {
    Subspace s(f, n);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

/// Affine subcode u + M|_W of the vector-alphabet code M = ker A over V^d
/// (Eq.-style restriction).  With the free-standing flag the anchor need not
/// lie in M; the descriptor then names the translated MDS code w + M|_W on
/// the same subcube.
class SubcodeRestriction {
  public:
    SubcodeRestriction(LinearMdsCode base, Subspace w, VectorTuple anchor, bool free_standing = false)
        : base_(std::move(base)), w_(std::move(w)), anchor_(std::move(anchor)), free_standing_(free_standing) {
        if (anchor_.size() != static_cast<std::size_t>(base_.d()))
            throw std::invalid_argument("SubcodeRestriction: anchor has wrong length");
        for (const auto& v : anchor_)
            if (v.size() != static_cast<std::size_t>(w_.ambient_dim()))
                throw std::invalid_argument("SubcodeRestriction: anchor entry has wrong vector length");
        if (!free_standing_ && !base_.contains(anchor_))
            throw std::invalid_argument("SubcodeRestriction: anchor is not a codeword (pass free_standing for w + M|_W)");
    }

    const LinearMdsCode& base() const { return base_; }
    const Subspace& direction() const { return w_; }
    const VectorTuple& anchor() const { return anchor_; }
    bool free_standing() const { return free_standing_; }

    /// Y is a member iff every row of Y - anchor lies in W and A(Y - anchor) = 0.
    bool contains(const VectorTuple& y) const {
        if (y.size() != anchor_.size()) throw std::invalid_argument("SubcodeRestriction::contains: shape mismatch");
        VectorTuple diff(y.size());
        for (std::size_t j = 0; j < y.size(); ++j) {
            diff[j] = vec_sub(base_.field(), y[j], anchor_[j]);
            if (!w_.member(diff[j])) return false;
        }
        return tuple_is_zero(mat_apply(base_.field(), base_.matrix().rows, diff));
    }

    /// |W|^(d-t), nullopt on uint64 overflow.
    std::optional<std::uint64_t> cardinality() const {
        auto wsize = w_.cardinality();
        if (!wsize) return std::nullopt;
        std::uint64_t r = 1;
        for (int i = 0; i < base_.d() - base_.t(); ++i) {
            if (*wsize != 0 && r > UINT64_MAX / *wsize) return std::nullopt;
            r *= *wsize;
        }
        return r;
    }

    /// Coordinate j ranges over the coset anchor_j + W.
    std::vector<Vec> coordinate_alphabet(int j, std::uint64_t limit = 100000) const {
        std::vector<Vec> out;
        for (const auto& w : w_.enumerate(limit))
            out.push_back(vec_add(base_.field(), anchor_[static_cast<std::size_t>(j)], w));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Full enumeration: anchor + solutions of A Z = 0 with Z in W^d,
    /// parametrized by the last d-t coordinates ranging over W.
    std::vector<VectorTuple> enumerate(std::uint64_t limit = 100000) const {
        auto count = cardinality();
        if (!count || *count > limit) throw std::invalid_argument("SubcodeRestriction::enumerate: too many elements");
        const int d = base_.d();
        const int t = base_.t();
        const int n = w_.ambient_dim();
        std::vector<Vec> welems = w_.enumerate(limit);
        std::vector<VectorTuple> out;
        out.reserve(static_cast<std::size_t>(*count));
        std::vector<std::size_t> odo(static_cast<std::size_t>(d - t), 0);
        while (true) {
            std::vector<std::pair<int, Vec>> fixed;
            for (int j = 0; j < d - t; ++j) fixed.emplace_back(t + j, welems[odo[static_cast<std::size_t>(j)]]);
            VectorTuple z = complete_plane_vector(base_, n, fixed);  // stays in W^d: GF(p)-combinations of W elements
            VectorTuple y(z.size());
            for (std::size_t j = 0; j < z.size(); ++j) y[j] = vec_add(base_.field(), anchor_[j], z[j]);
            out.push_back(std::move(y));
            int pos = d - t - 1;
            while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == welems.size())
                odo[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    LinearMdsCode base_;
    Subspace w_;
    VectorTuple anchor_;
    bool free_standing_;
};

inline SubcodeRestriction subcode_restriction(const LinearMdsCode& base, const Subspace& w, const VectorTuple& anchor,
                                              bool free_standing = false) {
    return SubcodeRestriction(base, w, anchor, free_standing);
}

}  // namespace mdsembed
