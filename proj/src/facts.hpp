// Internal memoization of per-algebra lattice data. Not installed.
#ifndef LIALG_FACTS_HPP
#define LIALG_FACTS_HPP

#include <memory>
#include <mutex>
#include <optional>

#include "lialg/lattice.hpp"

namespace lialg::detail {

struct Facts {
    LieAlgebra algebra;
    EnumerationBudget budget;

    const std::vector<Subspace>& subalgebras();
    const std::vector<Subspace>& ideals();
    const std::vector<Subspace>& maximals();
    const std::vector<Subspace>& minimal_ideals();
    const Subspace& frattini();
    const Subspace& nilradical();
    bool solvable();

    Facts(LieAlgebra l, EnumerationBudget b) : algebra(std::move(l)), budget(b) {}

private:
    std::mutex mu_;
    std::optional<std::vector<Subspace>> subalgebras_, ideals_, maximals_, minimal_ideals_;
    std::optional<Subspace> frattini_, nilradical_;
    std::optional<bool> solvable_;
};

std::shared_ptr<Facts> facts_for(const LieAlgebra& l, const EnumerationBudget& budget);

} // namespace lialg::detail

#endif
