#pragma once

/// Block-unitriangular matrix groups: an upper block-triangular shape whose
/// size-1 diagonal blocks are pinned to 1 and whose larger diagonal blocks
/// have determinant 1. Products and inverses stay inside the shape, which is
/// what makes these matrices a group.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rings.hpp"

namespace gal {

/// Partition of N into diagonal block sizes; first and last block are 1x1.
class GroupShape {
public:
    explicit GroupShape(std::vector<int> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.size() < 2) throw std::invalid_argument("shape needs at least two blocks");
        if (blocks_.front() != 1 || blocks_.back() != 1)
            throw std::invalid_argument("first and last block must have size 1");
        n_ = 0;
        for (size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b] < 1) throw std::invalid_argument("block sizes must be >= 1");
            block_of_.insert(block_of_.end(), static_cast<size_t>(blocks_[b]), static_cast<int>(b));
            n_ += blocks_[b];
        }
    }

    int dim() const { return n_; }
    const std::vector<int>& blocks() const { return blocks_; }
    int block_of(int index) const { return block_of_[static_cast<size_t>(index)]; }
    bool operator==(const GroupShape& o) const { return blocks_ == o.blocks_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
        return s + ")";
    }

private:
    std::vector<int> blocks_;
    std::vector<int> block_of_;
    int n_ = 0;
};

inline GroupShape g0_shape() { return GroupShape({1, 3, 1}); }
inline GroupShape k0_shape() { return GroupShape({1, 3, 3, 1}); }
inline GroupShape heis_shape() { return GroupShape({1, 1, 1}); }

namespace detail {

/// Determinant of a small dense matrix by cofactor expansion along the first
/// row. Exact over any commutative ring; fine for the <= 3x3 diagonal blocks.
template <RingElem R>
R small_det(const std::vector<R>& a, int d) {
    if (d == 1) return a[0];
    R det = a[0].zero_like();
    std::vector<R> minor;
    minor.reserve(static_cast<size_t>((d - 1) * (d - 1)));
    for (int j = 0; j < d; ++j) {
        minor.clear();
        for (int r = 1; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (c != j) minor.push_back(a[static_cast<size_t>(r * d + c)]);
        R term = a[static_cast<size_t>(j)] * small_det(minor, d - 1);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Adjugate: transpose of the cofactor matrix.
template <RingElem R>
std::vector<R> small_adjugate(const std::vector<R>& a, int d) {
    std::vector<R> adj(a.size(), a[0].zero_like());
    if (d == 1) {
        adj[0] = a[0].one_like();
        return adj;
    }
    std::vector<R> minor;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            minor.clear();
            for (int r = 0; r < d; ++r) {
                if (r == i) continue;
                for (int c = 0; c < d; ++c)
                    if (c != j) minor.push_back(a[static_cast<size_t>(r * d + c)]);
            }
            R cof = small_det(minor, d - 1);
            adj[static_cast<size_t>(j * d + i)] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

}  // namespace detail

/// Exact inverse of a square matrix with determinant 1, via the adjugate.
/// Throws std::domain_error when det != 1.
template <RingElem R>
std::vector<R> sl_inverse(const std::vector<R>& a, int d) {
    if (d < 1 || a.size() != static_cast<size_t>(d) * static_cast<size_t>(d))
        throw std::invalid_argument("sl_inverse: bad dimension");
    if (!detail::small_det(a, d).is_one()) throw std::domain_error("sl_inverse: determinant is not 1");
    return detail::small_adjugate(a, d);
}

/// A matrix constrained to a GroupShape: zero below the block diagonal,
/// 1 on size-1 diagonal blocks, determinant 1 on larger diagonal blocks.
template <RingElem R>
class ShapedMatrix {
public:
    ShapedMatrix(GroupShape shape, std::vector<R> entries)
        : shape_(std::move(shape)), a_(std::move(entries)) {
        size_t n = static_cast<size_t>(shape_.dim());
        if (a_.size() != n * n) throw std::invalid_argument("entry count does not match shape");
        validate();
    }

    static ShapedMatrix identity(const GroupShape& shape, const R& proto) {
        int n = shape.dim();
        std::vector<R> e(static_cast<size_t>(n) * n, proto.zero_like());
        for (int i = 0; i < n; ++i) e[static_cast<size_t>(i * n + i)] = proto.one_like();
        return ShapedMatrix(shape, std::move(e));
    }

    /// Elementary matrix I + value * E_{i,j} for 1-based indices i < j.
    static ShapedMatrix elementary(const GroupShape& shape, int i, int j, const R& value) {
        if (i < 1 || j < 1 || i > shape.dim() || j > shape.dim() || i >= j)
            throw std::invalid_argument("elementary: need 1 <= i < j <= N");
        ShapedMatrix m = identity(shape, value);
        m.a_[static_cast<size_t>((i - 1) * shape.dim() + (j - 1))] = value;
        m.validate();
        return m;
    }

    const GroupShape& shape() const { return shape_; }
    int dim() const { return shape_.dim(); }
    const R& at(int i, int j) const { return a_[static_cast<size_t>(i * dim() + j)]; }
    /// Top-right entry, the coordinate of the centre.
    const R& corner() const { return at(0, dim() - 1); }

    /// Same matrix with the corner replaced.
    ShapedMatrix with_corner(const R& c) const {
        ShapedMatrix m = *this;
        m.a_[static_cast<size_t>(dim() - 1)] = c;
        return m;
    }

    ShapedMatrix operator*(const ShapedMatrix& o) const {
        if (!(shape_ == o.shape_)) throw std::invalid_argument("shape mismatch in product");
        int n = dim();
        std::vector<R> r(a_.size(), a_[0].zero_like());
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const R& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    const R& b = o.at(k, j);
                    if (b.is_zero()) continue;
                    size_t s = static_cast<size_t>(i * n + j);
                    r[s] = r[s] + aik * b;
                }
            }
        return raw(shape_, std::move(r));
    }

    /// Exact inverse by block back-substitution; diagonal blocks are inverted
    /// with sl_inverse.
    ShapedMatrix inverse() const {
        int nb = static_cast<int>(shape_.blocks().size());
        std::vector<int> offset(static_cast<size_t>(nb) + 1, 0);
        for (int b = 0; b < nb; ++b) offset[static_cast<size_t>(b) + 1] = offset[static_cast<size_t>(b)] + shape_.blocks()[static_cast<size_t>(b)];

        auto block = [&](const ShapedMatrix& m, int bi, int bj) {
            std::vector<R> v;
            for (int i = offset[static_cast<size_t>(bi)]; i < offset[static_cast<size_t>(bi) + 1]; ++i)
                for (int j = offset[static_cast<size_t>(bj)]; j < offset[static_cast<size_t>(bj) + 1]; ++j) v.push_back(m.at(i, j));
            return v;
        };
        auto mul_blocks = [&](const std::vector<R>& x, int rx, int cx, const std::vector<R>& y, int cy) {
            std::vector<R> r(static_cast<size_t>(rx) * cy, x[0].zero_like());
            for (int i = 0; i < rx; ++i)
                for (int k = 0; k < cx; ++k)
                    for (int j = 0; j < cy; ++j)
                        r[static_cast<size_t>(i * cy + j)] =
                            r[static_cast<size_t>(i * cy + j)] + x[static_cast<size_t>(i * cx + k)] * y[static_cast<size_t>(k * cy + j)];
            return r;
        };

        ShapedMatrix inv = identity(shape_, a_[0]);
        std::vector<std::vector<std::vector<R>>> X(static_cast<size_t>(nb),
                                                   std::vector<std::vector<R>>(static_cast<size_t>(nb)));
        for (int bi = nb - 1; bi >= 0; --bi) {
            int di = shape_.blocks()[static_cast<size_t>(bi)];
            X[static_cast<size_t>(bi)][static_cast<size_t>(bi)] = sl_inverse(block(*this, bi, bi), di);
            for (int bj = bi + 1; bj < nb; ++bj) {
                int dj = shape_.blocks()[static_cast<size_t>(bj)];
                std::vector<R> acc(static_cast<size_t>(di) * dj, a_[0].zero_like());
                for (int bk = bi + 1; bk <= bj; ++bk) {
                    int dk = shape_.blocks()[static_cast<size_t>(bk)];
                    std::vector<R> term = mul_blocks(block(*this, bi, bk), di, dk, X[static_cast<size_t>(bk)][static_cast<size_t>(bj)], dj);
                    for (size_t s = 0; s < acc.size(); ++s) acc[s] = acc[s] + term[s];
                }
                std::vector<R> xij = mul_blocks(X[static_cast<size_t>(bi)][static_cast<size_t>(bi)], di, di, acc, dj);
                for (auto& v : xij) v = -v;
                X[static_cast<size_t>(bi)][static_cast<size_t>(bj)] = std::move(xij);
            }
        }
        int n = dim();
        std::vector<R> out(a_.size(), a_[0].zero_like());
        for (int bi = 0; bi < nb; ++bi)
            for (int bj = bi; bj < nb; ++bj) {
                int di = shape_.blocks()[static_cast<size_t>(bi)];
                int dj = shape_.blocks()[static_cast<size_t>(bj)];
                const auto& blk = X[static_cast<size_t>(bi)][static_cast<size_t>(bj)];
                for (int i = 0; i < di; ++i)
                    for (int j = 0; j < dj; ++j)
                        out[static_cast<size_t>((offset[static_cast<size_t>(bi)] + i) * n + offset[static_cast<size_t>(bj)] + j)] =
                            blk[static_cast<size_t>(i * dj + j)];
            }
        return raw(shape_, std::move(out));
    }

    bool operator==(const ShapedMatrix& o) const { return shape_ == o.shape_ && a_ == o.a_; }
    bool is_identity() const {
        int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j && !at(i, j).is_one()) return false;
                if (i != j && !at(i, j).is_zero()) return false;
            }
        return true;
    }

    /// Entrywise image under a ring map; the target must again satisfy the
    /// shape predicate (any unital ring homomorphism does).
    template <typename F>
    auto map_entries(F&& f) const {
        using S = decltype(f(a_[0]));
        std::vector<S> out;
        out.reserve(a_.size());
        for (const R& v : a_) out.push_back(f(v));
        return ShapedMatrix<S>(shape_, std::move(out));
    }

    /// Whether the shape predicate holds (used by tests; construction enforces it).
    bool shape_ok() const {
        int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (shape_.block_of(i) > shape_.block_of(j) && !at(i, j).is_zero()) return false;
        int off = 0;
        for (int b : shape_.blocks()) {
            if (b == 1) {
                if (!at(off, off).is_one()) return false;
            } else {
                std::vector<R> blk;
                for (int i = off; i < off + b; ++i)
                    for (int j = off; j < off + b; ++j) blk.push_back(at(i, j));
                if (!detail::small_det(blk, b).is_one()) return false;
            }
            off += b;
        }
        return true;
    }

    std::string key() const {
        std::string s = shape_.str() + "[";
        for (size_t i = 0; i < a_.size(); ++i) {
            if (i) s += ",";
            s += a_[i].str();
        }
        return s + "]";
    }

private:
    static ShapedMatrix raw(const GroupShape& shape, std::vector<R>&& entries) {
        ShapedMatrix m(shape, entries, 0);
        return m;
    }
    ShapedMatrix(GroupShape shape, std::vector<R> entries, int) : shape_(std::move(shape)), a_(std::move(entries)) {}
    void validate() const {
        if (!shape_ok()) throw std::invalid_argument("matrix violates its shape");
    }

    GroupShape shape_;
    std::vector<R> a_;
};

}  // namespace gal
