#ifndef LIALG_MATRIX_HPP
#define LIALG_MATRIX_HPP

#include <vector>

#include "lialg/field.hpp"

namespace lialg {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldDescriptor f, int n);

/// Dense exact matrix over a single field, row-major.
class Matrix {
public:
    Matrix(FieldDescriptor f, int rows, int cols);
    static Matrix identity(FieldDescriptor f, int n);
    static Matrix from_rows(FieldDescriptor f, const std::vector<Vec>& rows, int cols);

    const FieldDescriptor& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    void set_row(int r, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const; // matrix * column vector
    Matrix transpose() const;
    Matrix pow(int e) const; // square matrices
    bool is_zero() const;

    bool operator==(const Matrix& o) const;

private:
    FieldDescriptor field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix mat;
    std::vector<int> pivots; // pivot column per pivot row, strictly increasing
    int rank;
};

/// Reduced row echelon form; the unique canonical form of the row space.
RrefResult rref(const Matrix& a);

int rank(const Matrix& a);

/// Basis of {x : a x = 0}, returned as rows of an RREF matrix.
Matrix kernel_basis(const Matrix& a);

/// Monic minimal polynomial of a square matrix, low-degree-first coefficients.
std::vector<Scalar> minimal_polynomial(const Matrix& a);

/// True iff the minimal polynomial is squarefree (gcd with derivative constant).
bool is_semisimple(const Matrix& a);

// vector helpers
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

} // namespace lialg

#endif
