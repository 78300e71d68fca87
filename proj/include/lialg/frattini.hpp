#ifndef LIALG_FRATTINI_HPP
#define LIALG_FRATTINI_HPP

#include "lialg/lattice.hpp"

namespace lialg {

enum class FactorClass { frattini, complemented };

/// An ascending chief series 0 = A_0 < A_1 < ... < A_n = L with each factor
/// classified, a complementing maximal subalgebra as witness where one
/// exists, and the candidate maximal-subalgebra sets used to build
/// prefrattini subalgebras.
struct ChiefSeries {
    std::vector<Subspace> terms; // A_0 .. A_n ascending
    std::vector<FactorClass> factor_class;          // per factor i (1-based factor i is terms[i]/terms[i-1])
    std::vector<std::optional<Subspace>> witnesses; // complementing maximal M per factor
    std::vector<int> index_set;                     // I = { i : factor i not Frattini }, 1-based
    std::vector<std::vector<Subspace>> candidate_sets; // M_i per factor (empty when Frattini)

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

struct PrefrattiniSet {
    std::vector<Subspace> members; // canonical, deduplicated
    ChiefSeries source_series;
};

enum class CoverAvoid { covers, avoids, neither, trivial };

/// Intersection of the maximal subalgebras.
Subspace frattini_subalgebra(const LieAlgebra& l, const EnumerationBudget& budget);

/// Canonical chief series: ascend by the lexicographically least minimal
/// ideal of the current quotient at each step.
ChiefSeries chief_series(const LieAlgebra& l, const EnumerationBudget& budget);

/// Up to max_series distinct chief series, found by trying every minimal
/// ideal choice at each step (bounded depth-first).
std::vector<ChiefSeries> all_chief_series(const LieAlgebra& l, const EnumerationBudget& budget,
                                          int max_series = 10);

/// All intersections over the Cartesian product of the candidate sets M_i of
/// the canonical chief series. The empty index set yields {L}.
PrefrattiniSet prefrattini_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget);
PrefrattiniSet prefrattini_from_series(const LieAlgebra& l, const ChiefSeries& series);

std::vector<CoverAvoid> cover_avoid_profile(const Subspace& b, const ChiefSeries& series);

/// pi(L): smallest ideal with complemented quotient. Computed two ways
/// (ideal-lattice intersection and ideal closure of the prefrattini members)
/// and asserted equal.
Subspace prefrattini_residual(const LieAlgebra& l, const EnumerationBudget& budget);

/// Ascending nilpotent series N_0 = 0, N_{i+1}/N_i = N(L/N_i), ending at L.
SeriesChain nilpotent_series(const LieAlgebra& l, const EnumerationBudget& budget);

/// E(L): smallest ideal with elementary quotient.
Subspace elementary_residual(const LieAlgebra& l, const EnumerationBudget& budget);

/// All nilpotent self-normalizing subalgebras, canonical order.
std::vector<Subspace> cartan_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget);

} // namespace lialg

#endif
