#ifndef LIALG_LATTICE_HPP
#define LIALG_LATTICE_HPP

#include <optional>

#include "lialg/lie_algebra.hpp"

namespace lialg {

/// Guard rails for brute-force enumeration over finite prime fields.
struct EnumerationBudget {
    std::int64_t max_field_size = 3;
    int max_dim = 6;
    std::int64_t max_count = 10'000'000; // subspaces visited
};

/// Number of subspaces of GF(p)^n (sum of Gaussian binomials).
BigInt subspace_count(std::int64_t p, int n);

/// All subspaces of GF(p)^n, dimension ascending then lexicographic on the
/// canonical basis. Cached per (p, n).
const std::vector<Subspace>& enumerate_subspaces(FieldDescriptor field, int n,
                                                 const EnumerationBudget& budget);

/// All subspaces contained in b, in canonical order.
std::vector<Subspace> subspaces_within(const Subspace& b, const EnumerationBudget& budget);

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget,
                                            bool ideals_only = false);

std::vector<Subspace> maximal_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget);

std::vector<Subspace> minimal_ideals(const LieAlgebra& l, const EnumerationBudget& budget);
Subspace abelian_socle(const LieAlgebra& l, const EnumerationBudget& budget);

/// First subalgebra T (canonical order) with b + T = L and b cap T = anchor,
/// where anchor is contained in the ideal b. Default anchor is 0.
std::optional<Subspace> find_complement_subalgebra(const LieAlgebra& l, const Subspace& b,
                                                   const Subspace& anchor,
                                                   const EnumerationBudget& budget);
std::optional<Subspace> find_complement_subalgebra(const LieAlgebra& l, const Subspace& b,
                                                   const EnumerationBudget& budget);

struct IntervalComplementedResult {
    bool value;
    std::optional<Subspace> witness; // first subalgebra with no complement
};

/// Definitional oracle: every subalgebra S has a subalgebra T with
/// S cap T = 0 and <S, T> = L.
IntervalComplementedResult is_interval_complemented(const LieAlgebra& l,
                                                    const EnumerationBudget& budget);

/// Largest nilpotent ideal, by exhaustive ideal enumeration (finite fields).
Subspace nilradical(const LieAlgebra& l, const EnumerationBudget& budget);

/// Nilradical by the route appropriate to the field: lattice enumeration over
/// GF(p), the verified adjoint-nilpotency route over the rationals.
Subspace nilradical_any(const LieAlgebra& l, const EnumerationBudget& budget);

} // namespace lialg

#endif
