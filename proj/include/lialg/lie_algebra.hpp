#ifndef LIALG_LIE_ALGEBRA_HPP
#define LIALG_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lialg/subspace.hpp"

namespace lialg {

/// One bracket assignment [u, v] = sum of coefficient*label terms.
struct BracketAssignment {
    std::string left;
    std::string right;
    std::vector<std::pair<Scalar, std::string>> terms;
};

/// A finite-dimensional Lie algebra given by structure constants on a basis.
/// Antisymmetry and the Jacobi identity are checked at construction.
class LieAlgebra {
public:
    const FieldDescriptor& field() const { return field_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int label_index(const std::string& name) const;

    /// c[i][j][.] as a coordinate vector: [b_i, b_j].
    Vec bracket_basis(int i, int j) const;
    /// Bilinear bracket of coordinate vectors.
    Vec bracket(const Vec& u, const Vec& v) const;
    /// Matrix of ad x acting on column vectors: (ad x) v = [x, v].
    Matrix ad(const Vec& x) const;

    Subspace full_space() const { return Subspace::full(field_, dim_); }
    Subspace zero_space() const { return Subspace::zero(field_, dim_); }

    std::string render_vector(const Vec& v) const;   // e.g. "e0 + 2*x"
    std::string render_subspace(const Subspace& s) const; // e.g. "span(e0+e1, x)"

    bool operator==(const LieAlgebra& o) const;

    friend LieAlgebra validate_algebra(FieldDescriptor field, int dim,
                                       std::vector<std::string> labels,
                                       const std::vector<BracketAssignment>& assignments);
    friend LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

private:
    LieAlgebra(FieldDescriptor f, int dim, std::vector<std::string> labels,
               std::vector<Scalar> table)
        : field_(f), dim_(dim), labels_(std::move(labels)), table_(std::move(table)) {}
    const Scalar& c(int i, int j, int k) const {
        return table_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }
    void check_structure() const;
    FieldDescriptor field_;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<Scalar> table_; // dense n^3, antisymmetric completion included
};

/// Build and check a Lie algebra from brackets given for i < j pairs only.
LieAlgebra validate_algebra(FieldDescriptor field, int dim, std::vector<std::string> labels,
                            const std::vector<BracketAssignment>& assignments);

enum class SeriesKind { derived, lower_central, nilpotent_series };

struct SeriesChain {
    SeriesKind kind;
    std::vector<Subspace> terms; // derived/lower central: descending from L;
                                 // nilpotent series: ascending from 0
    bool reaches_zero() const { return terms.back().is_zero(); }
};

struct StructureFlags {
    bool solvable;
    bool nilpotent;
    bool abelian;
    bool completely_solvable;
    int derived_length; // -1 when not solvable
};

enum class InducedMode { subalgebra, quotient };

/// A subalgebra or quotient of a parent algebra, carried as an algebra of its
/// own together with the linear maps relating it to the parent.
struct InducedAlgebra {
    LieAlgebra algebra;
    Subspace carrier;  // the subalgebra, or the quotient kernel
    InducedMode mode;
    Matrix embed;      // parent_dim x algebra.dim, child coords -> parent vector
    Matrix project;    // algebra.dim x parent_dim, parent vector -> child coords

    Vec to_parent(const Vec& child) const { return embed.apply(child); }
    Vec to_child(const Vec& parent) const { return project.apply(parent); }
    Subspace pull_up(const Subspace& child_sub) const;   // image in parent (plus kernel for quotients)
    Subspace push_down(const Subspace& parent_sub) const; // image in child coords
};

// Spans and series -----------------------------------------------------------

Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v);

SeriesChain derived_series(const LieAlgebra& l);
SeriesChain lower_central_series(const LieAlgebra& l);
Subspace nilpotent_residual(const LieAlgebra& l);

Subspace centralizer(const LieAlgebra& l, const Subspace& s);
Subspace normalizer(const LieAlgebra& l, const Subspace& s);
Subspace center(const LieAlgebra& l);

StructureFlags structure_flags(const LieAlgebra& l);

bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_ideal(const LieAlgebra& l, const Subspace& s);
bool is_abelian_subspace(const LieAlgebra& l, const Subspace& s);

/// Lower-central iteration of s (a subalgebra of l) reaches zero.
bool is_nilpotent_subalgebra(const LieAlgebra& l, const Subspace& s);

InducedAlgebra induced_algebra(const LieAlgebra& l, const Subspace& s, InducedMode mode);

Subspace ideal_closure(const LieAlgebra& l, const Subspace& s);
Subspace subalgebra_closure(const LieAlgebra& l, const Subspace& s);

// Constructions ---------------------------------------------------------------

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Abelian A of dimension a_dim acted on by the abelian span of pairwise
/// commuting semisimple matrices: [a, b] = b(a).
LieAlgebra semidirect_type1(int a_dim, const std::vector<Matrix>& acting_matrices);

/// exp(ad x) as a checked automorphism. Requires ad x nilpotent, and
/// (ad x)^p = 0 in characteristic p.
Matrix exp_ad(const LieAlgebra& l, const Vec& x);

/// Fitting decomposition of `target` relative to the adjoint action of the
/// subalgebra E. Throws DecompositionFailure when the sum is not direct.
std::pair<Subspace, Subspace> fitting_decomposition(const LieAlgebra& l, const Subspace& target,
                                                    const Subspace& e);

/// Nilradical over the rationals (solvable algebras only): the set of x with
/// ad x nilpotent, computed through the radical of the associative envelope
/// of ad L, then re-verified as a nilpotent ideal.
Subspace nilradical_char0(const LieAlgebra& l);

} // namespace lialg

#endif
