#ifndef LIALG_CLASSIFICATION_HPP
#define LIALG_CLASSIFICATION_HPP

#include <string>

#include "lialg/frattini.hpp"

namespace lialg {

enum class ComplementedRoute { splits_over_ideals, prefrattini, phi_free_hereditary, definitional };

struct Verdict {
    bool value;
    std::string witness; // rendered counterexample data, empty when none
};

/// The four equivalent complementedness tests. The default route is the
/// cheapest (ideal lattices are small); the definitional route is the oracle.
Verdict is_complemented(const LieAlgebra& l, const EnumerationBudget& budget,
                        ComplementedRoute route = ComplementedRoute::splits_over_ideals);

/// phi(B) = 0 for every subalgebra B.
Verdict is_elementary(const LieAlgebra& l, const EnumerationBudget& budget);

/// Every nilpotent subalgebra is abelian.
Verdict is_A_algebra(const LieAlgebra& l, const EnumerationBudget& budget);

struct MonolithResult {
    bool monolithic;
    std::optional<Subspace> monolith;
};
MonolithResult is_monolithic(const LieAlgebra& l, const EnumerationBudget& budget);

/// The abelian decomposition L = A_n + ... + A_0 of a complemented algebra,
/// with partial sums equal to the derived terms.
struct ComplementedDecomposition {
    std::vector<Subspace> parts;        // A_n first, A_0 last
    std::vector<Subspace> derived_terms; // L^(0) .. L^(n)
    Subspace complement_of_top;          // C = A_{n-1} + ... + A_0, a subalgebra
    bool parts_abelian;
    bool partial_sums_match;
    bool completely_reducible;           // checked for 1 <= i <= n
    bool completely_reducible_i0;        // reported separately, not part of pass/fail
};

struct DecompositionOutcome {
    std::optional<ComplementedDecomposition> decomposition;
    std::string failure_witness; // set when the algebra is not complemented
};

DecompositionOutcome complemented_decomposition(const LieAlgebra& l,
                                                const EnumerationBudget& budget);

enum class RecordStatus { pass, fail, skipped, budget };

struct Record {
    std::string id;
    RecordStatus status;
    std::string witness; // counterexample or skip reason
};

struct VerificationReport {
    std::string algebra_id;
    std::vector<Record> records;
    bool all_passed() const {
        for (const auto& r : records)
            if (r.status == RecordStatus::fail) return false;
        return true;
    }
};

/// Ideal/nilradical/center decomposition checks against a valid decomposition.
std::vector<Record> decomposition_theorems_check(const LieAlgebra& l,
                                                 const ComplementedDecomposition& d,
                                                 const EnumerationBudget& budget);

/// Run every theorem statement as a concrete assertion on l. An empty select
/// list runs all; otherwise ids must match record ids.
VerificationReport verify_theorems(const LieAlgebra& l, const EnumerationBudget& budget,
                                   const std::vector<std::string>& select = {},
                                   std::uint64_t seed = 0);

std::string to_string(RecordStatus s);
std::string to_string(ComplementedRoute r);
ComplementedRoute route_from_string(const std::string& s);

} // namespace lialg

#endif
