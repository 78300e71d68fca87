#ifndef LIALG_SUBSPACE_HPP
#define LIALG_SUBSPACE_HPP

#include <compare>
#include <utility>

#include "lialg/matrix.hpp"

namespace lialg {

/// A subspace of F^n in canonical form: RREF basis, zero rows removed,
/// pivot columns strictly increasing. Equality of subspaces is entrywise
/// equality of bases.
class Subspace {
public:
    static Subspace zero(FieldDescriptor f, int ambient_dim);
    static Subspace full(FieldDescriptor f, int ambient_dim);

    const FieldDescriptor& field() const { return field_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool is_zero() const { return dim() == 0; }

    /// Coordinates of v in this basis; requires contains(v).
    Vec coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    /// Canonical total order: dimension, then basis entries row-major.
    std::strong_ordering operator<=>(const Subspace& o) const;

    friend Subspace canonical_basis(const std::vector<Vec>& vectors, int ambient_dim,
                                    FieldDescriptor field);
    /// Rows must already be canonical RREF (used by enumeration fast paths).
    static Subspace from_canonical_rows(Matrix rref_rows, int ambient_dim);

private:
    Subspace(FieldDescriptor f, int ambient, Matrix basis, std::vector<int> pivots)
        : field_(f), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
    FieldDescriptor field_;
    int ambient_;
    Matrix basis_;
    std::vector<int> pivots_;
};

/// Canonical subspace spanned by the given vectors.
Subspace canonical_basis(const std::vector<Vec>& vectors, int ambient_dim, FieldDescriptor field);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
std::pair<Subspace, Subspace> span_sum_intersect(const Subspace& u, const Subspace& v);

/// Coordinates of v + W in the canonical complement of W, spanned by the
/// standard basis vectors at the non-pivot columns of W. Zero iff v is in W.
Vec coords_mod(const Subspace& w, const Vec& v);

/// The non-pivot column indices of W, i.e. the canonical complement basis.
std::vector<int> complement_positions(const Subspace& w);

/// Image of a subspace under a linear map given as a matrix acting on columns.
Subspace apply_map(const Matrix& m, const Subspace& s);

} // namespace lialg

#endif
