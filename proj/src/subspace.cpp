#include "lialg/subspace.hpp"

namespace lialg {

Subspace Subspace::zero(FieldDescriptor f, int ambient_dim) {
    return Subspace(f, ambient_dim, Matrix(f, 0, ambient_dim), {});
}

Subspace Subspace::full(FieldDescriptor f, int ambient_dim) {
    std::vector<int> piv(static_cast<std::size_t>(ambient_dim));
    for (int i = 0; i < ambient_dim; ++i) piv[static_cast<std::size_t>(i)] = i;
    return Subspace(f, ambient_dim, Matrix::identity(f, ambient_dim), std::move(piv));
}

Subspace Subspace::from_canonical_rows(Matrix rref_rows, int ambient_dim) {
    std::vector<int> piv;
    for (int r = 0; r < rref_rows.rows(); ++r) {
        int c = 0;
        while (c < rref_rows.cols() && rref_rows.at(r, c).is_zero()) ++c;
        piv.push_back(c);
    }
    FieldDescriptor f = rref_rows.field();
    return Subspace(f, ambient_dim, std::move(rref_rows), std::move(piv));
}

Subspace canonical_basis(const std::vector<Vec>& vectors, int ambient_dim, FieldDescriptor field) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient_dim)
            throw DimensionMismatch("generating vector has wrong length");
    Matrix m = Matrix::from_rows(field, vectors, ambient_dim);
    RrefResult rr = rref(m);
    Matrix basis(field, rr.rank, ambient_dim);
    for (int r = 0; r < rr.rank; ++r)
        for (int c = 0; c < ambient_dim; ++c) basis.at(r, c) = rr.mat.at(r, c);
    return Subspace(field, ambient_dim, std::move(basis), std::move(rr.pivots));
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("membership vector length");
    Vec w = v;
    for (int r = 0; r < dim(); ++r) {
        const Scalar c = w[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
        if (c.is_zero()) continue;
        for (int j = pivots_[static_cast<std::size_t>(r)]; j < ambient_; ++j)
            w[static_cast<std::size_t>(j)] -= c * basis_.at(r, j);
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient mismatch");
    if (other.dim() > dim()) return false;
    for (int r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Vec Subspace::coordinates(const Vec& v) const {
    // RREF basis: the coordinate along row r is the entry at its pivot column.
    Vec coords;
    coords.reserve(static_cast<std::size_t>(dim()));
    for (int r = 0; r < dim(); ++r)
        coords.push_back(v[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])]);
    return coords;
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ <=> o.ambient_;
    if (dim() != o.dim()) return dim() <=> o.dim();
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < ambient_; ++c) {
            auto cmp = basis_.at(r, c) <=> o.basis_.at(r, c);
            if (cmp != std::strong_ordering::equal) return cmp;
        }
    return std::strong_ordering::equal;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
        throw DimensionMismatch("subspace sum ambient mismatch");
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(u.dim() + v.dim()));
    for (int r = 0; r < u.dim(); ++r) rows.push_back(u.basis().row(r));
    for (int r = 0; r < v.dim(); ++r) rows.push_back(v.basis().row(r));
    return canonical_basis(rows, u.ambient_dim(), u.field());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
        throw DimensionMismatch("subspace intersection ambient mismatch");
    // Zassenhaus: rref of [U|U; V|0]; rows with zero left half span U cap V.
    int n = u.ambient_dim();
    FieldDescriptor f = u.field();
    Matrix block(f, u.dim() + v.dim(), 2 * n);
    for (int r = 0; r < u.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            block.at(r, c) = u.basis().at(r, c);
            block.at(r, n + c) = u.basis().at(r, c);
        }
    for (int r = 0; r < v.dim(); ++r)
        for (int c = 0; c < n; ++c) block.at(u.dim() + r, c) = v.basis().at(r, c);
    RrefResult rr = rref(block);
    std::vector<Vec> rows;
    for (int r = 0; r < rr.rank; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (!rr.mat.at(r, c).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec w;
        w.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) w.push_back(rr.mat.at(r, n + c));
        rows.push_back(std::move(w));
    }
    return canonical_basis(rows, n, f);
}

std::pair<Subspace, Subspace> span_sum_intersect(const Subspace& u, const Subspace& v) {
    return {sum(u, v), intersect(u, v)};
}

std::vector<int> complement_positions(const Subspace& w) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(w.ambient_dim()), false);
    for (int c : w.pivots()) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> out;
    for (int c = 0; c < w.ambient_dim(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

Vec coords_mod(const Subspace& w, const Vec& v) {
    if (static_cast<int>(v.size()) != w.ambient_dim())
        throw DimensionMismatch("coords_mod vector length");
    Vec r = v;
    for (int i = 0; i < w.dim(); ++i) {
        const Scalar c = r[static_cast<std::size_t>(w.pivots()[static_cast<std::size_t>(i)])];
        if (c.is_zero()) continue;
        for (int j = w.pivots()[static_cast<std::size_t>(i)]; j < w.ambient_dim(); ++j)
            r[static_cast<std::size_t>(j)] -= c * w.basis().at(i, j);
    }
    Vec out;
    for (int c : complement_positions(w)) out.push_back(r[static_cast<std::size_t>(c)]);
    return out;
}

Subspace apply_map(const Matrix& m, const Subspace& s) {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(s.dim()));
    for (int r = 0; r < s.dim(); ++r) rows.push_back(m.apply(s.basis().row(r)));
    return canonical_basis(rows, m.rows(), m.field());
}

} // namespace lialg
