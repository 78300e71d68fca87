#include "lialg/matrix.hpp"

#include <cstdint>

namespace lialg {

Vec zero_vec(FieldDescriptor f, int n) {
    return Vec(static_cast<std::size_t>(n), Scalar::zero(f));
}

Matrix::Matrix(FieldDescriptor f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimensions");
}

Matrix Matrix::identity(FieldDescriptor f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(FieldDescriptor f, const std::vector<Vec>& rows, int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw DimensionMismatch("row length mismatch");
        m.set_row(r, rows[r]);
    }
    return m;
}

Vec Matrix::row(int r) const {
    Vec v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    for (int c = 0; c < cols_; ++c) {
        if (v[c].field() != field_) throw FieldMismatch("matrix entry field mismatch");
        at(r, c) = v[c];
    }
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix product field mismatch");
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix apply shape mismatch");
    Vec out = zero_vec(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::pow(int e) const {
    if (rows_ != cols_) throw DimensionMismatch("pow of non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

RrefResult rref(const Matrix& a) {
    Matrix m = a;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots), r};
}

int rank(const Matrix& a) { return rref(a).rank; }

Matrix kernel_basis(const Matrix& a) {
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        Vec v = zero_vec(a.field(), a.cols());
        v[c] = Scalar::one(a.field());
        for (int r = 0; r < rr.rank; ++r)
            v[rr.pivots[static_cast<std::size_t>(r)]] = -rr.mat.at(r, c);
        rows.push_back(std::move(v));
    }
    Matrix k = Matrix::from_rows(a.field(), rows, a.cols());
    return rref(k).mat; // canonical basis of the null space
}

namespace {

using Poly = std::vector<Scalar>; // low-degree-first, no trailing zeros

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_derivative(const Poly& p, FieldDescriptor f) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Scalar::from_int(static_cast<std::int64_t>(i), f));
    poly_trim(d);
    return d;
}

Poly poly_mod(Poly a, const Poly& b) {
    poly_trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        Scalar q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - q * b[i];
        poly_trim(a); // leading term cancelled exactly, degree drops
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

} // namespace

std::vector<Scalar> minimal_polynomial(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("minimal polynomial of non-square matrix");
    FieldDescriptor f = a.field();
    int n = a.cols();
    std::size_t len = static_cast<std::size_t>(n) * n;
    std::vector<Vec> powers; // flattened I, A, A^2, ...
    Matrix cur = Matrix::identity(f, n);
    for (int k = 0; ; ++k) {
        Vec flat = flatten(cur);
        // is flat dependent on powers[0..k-1]?  solve via augmented RREF
        Matrix sys(f, static_cast<int>(len), k + 1);
        for (std::size_t r = 0; r < len; ++r) {
            for (int c = 0; c < k; ++c) sys.at(static_cast<int>(r), c) = powers[static_cast<std::size_t>(c)][r];
            sys.at(static_cast<int>(r), k) = flat[r];
        }
        RrefResult rr = rref(sys);
        bool dependent = true;
        for (int c : rr.pivots)
            if (c == k) { dependent = false; break; }
        if (dependent) {
            // coefficients of A^k = sum c_i A^i read off the RREF
            Poly p(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
            for (int r = 0; r < rr.rank; ++r)
                p[static_cast<std::size_t>(rr.pivots[static_cast<std::size_t>(r)])] = -rr.mat.at(r, k);
            p[static_cast<std::size_t>(k)] = Scalar::one(f);
            return p;
        }
        powers.push_back(std::move(flat));
        cur = cur * a;
        if (k > n) throw Error("minimal polynomial iteration overran dimension bound");
    }
}

bool is_semisimple(const Matrix& a) {
    std::vector<Scalar> m = minimal_polynomial(a);
    std::vector<Scalar> d = poly_derivative(m, a.field());
    if (d.empty()) return false; // derivative vanished: repeated-root in char p (or constant)
    std::vector<Scalar> g = poly_gcd(m, d);
    return g.size() == 1;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector diff length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = x * c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace lialg
