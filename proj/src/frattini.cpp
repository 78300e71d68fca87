#include "lialg/frattini.hpp"

#include <algorithm>
#include <set>

#include "lialg/classification.hpp"
#include "facts.hpp"

namespace lialg {

namespace {

void require_solvable(const LieAlgebra& l) {
    if (!derived_series(l).reaches_zero())
        throw NonSolvable("this construction assumes a solvable algebra");
}

ChiefSeries classify_series(const LieAlgebra&, std::vector<Subspace> terms,
                            const std::vector<Subspace>& maximals) {
    ChiefSeries out;
    out.terms = std::move(terms);
    int n = out.length();
    out.factor_class.resize(static_cast<std::size_t>(n), FactorClass::frattini);
    out.witnesses.resize(static_cast<std::size_t>(n));
    out.candidate_sets.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const Subspace& lo = out.terms[static_cast<std::size_t>(i - 1)];
        const Subspace& hi = out.terms[static_cast<std::size_t>(i)];
        std::vector<Subspace> mi;
        for (const auto& m : maximals)
            if (m.contains(lo) && !m.contains(hi)) mi.push_back(m);
        if (!mi.empty()) {
            out.factor_class[static_cast<std::size_t>(i - 1)] = FactorClass::complemented;
            out.witnesses[static_cast<std::size_t>(i - 1)] = mi.front();
            out.index_set.push_back(i);
        }
        out.candidate_sets[static_cast<std::size_t>(i - 1)] = std::move(mi);
    }
    return out;
}

} // namespace

Subspace frattini_subalgebra(const LieAlgebra& l, const EnumerationBudget& budget) {
    auto facts = detail::facts_for(l, budget);
    const Subspace& phi = facts->frattini();
    if (facts->solvable() && !is_ideal(l, phi))
        throw TheoremViolation("Frattini subalgebra of a solvable algebra is not an ideal");
    return phi;
}

ChiefSeries chief_series(const LieAlgebra& l, const EnumerationBudget& budget) {
    require_solvable(l);
    auto facts = detail::facts_for(l, budget);
    std::vector<Subspace> terms{l.zero_space()};
    while (terms.back().dim() < l.dim()) {
        InducedAlgebra q = induced_algebra(l, terms.back(), InducedMode::quotient);
        auto mins = minimal_ideals(q.algebra, budget);
        // canonical choice: the lexicographically least minimal ideal
        terms.push_back(q.pull_up(mins.front()));
    }
    return classify_series(l, std::move(terms), facts->maximals());
}

std::vector<ChiefSeries> all_chief_series(const LieAlgebra& l, const EnumerationBudget& budget,
                                          int max_series) {
    require_solvable(l);
    auto facts = detail::facts_for(l, budget);
    std::vector<ChiefSeries> out;
    std::vector<Subspace> stack{l.zero_space()};
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(out.size()) >= max_series) return;
        if (stack.back().dim() == l.dim()) {
            out.push_back(classify_series(l, stack, facts->maximals()));
            return;
        }
        InducedAlgebra q = induced_algebra(l, stack.back(), InducedMode::quotient);
        for (const auto& m : minimal_ideals(q.algebra, budget)) {
            stack.push_back(q.pull_up(m));
            self(self);
            stack.pop_back();
            if (static_cast<int>(out.size()) >= max_series) return;
        }
    };
    dfs(dfs);
    return out;
}

PrefrattiniSet prefrattini_from_series(const LieAlgebra& l, const ChiefSeries& series) {
    constexpr std::int64_t kProductCap = 100'000;
    std::int64_t tuples = 1;
    std::vector<const std::vector<Subspace>*> sets;
    for (int i : series.index_set) {
        const auto& mi = series.candidate_sets[static_cast<std::size_t>(i - 1)];
        sets.push_back(&mi);
        tuples *= static_cast<std::int64_t>(mi.size());
        if (tuples > kProductCap)
            throw BudgetExceeded("prefrattini candidate product exceeds the tuple cap");
    }
    std::set<Subspace> members;
    if (sets.empty()) {
        members.insert(l.full_space()); // empty intersection convention
    } else {
        std::vector<std::size_t> odo(sets.size(), 0);
        for (;;) {
            Subspace b = l.full_space();
            for (std::size_t k = 0; k < sets.size(); ++k) b = intersect(b, (*sets[k])[odo[k]]);
            members.insert(std::move(b));
            std::size_t d = 0;
            while (d < odo.size() && ++odo[d] == sets[d]->size()) odo[d++] = 0;
            if (d == odo.size()) break;
        }
    }
    PrefrattiniSet out;
    out.members.assign(members.begin(), members.end());
    out.source_series = series;
    return out;
}

PrefrattiniSet prefrattini_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget) {
    return prefrattini_from_series(l, chief_series(l, budget));
}

std::vector<CoverAvoid> cover_avoid_profile(const Subspace& b, const ChiefSeries& series) {
    std::vector<CoverAvoid> out;
    for (int i = 1; i <= series.length(); ++i) {
        const Subspace& lo = series.terms[static_cast<std::size_t>(i - 1)];
        const Subspace& hi = series.terms[static_cast<std::size_t>(i)];
        bool covers = sum(b, hi) == sum(b, lo);
        bool avoids = intersect(b, hi) == intersect(b, lo);
        if (covers && avoids)
            out.push_back(CoverAvoid::trivial); // only possible for a trivial factor
        else if (covers)
            out.push_back(CoverAvoid::covers);
        else if (avoids)
            out.push_back(CoverAvoid::avoids);
        else
            out.push_back(CoverAvoid::neither);
    }
    return out;
}

Subspace prefrattini_residual(const LieAlgebra& l, const EnumerationBudget& budget) {
    require_solvable(l);
    auto facts = detail::facts_for(l, budget);
    // route (a): intersection of all ideals with complemented quotient
    Subspace via_lattice = l.full_space();
    for (const auto& b : facts->ideals()) {
        InducedAlgebra q = induced_algebra(l, b, InducedMode::quotient);
        if (is_complemented(q.algebra, budget).value) via_lattice = intersect(via_lattice, b);
    }
    // route (b): ideal closure of the prefrattini subalgebras
    Subspace via_closure = l.zero_space();
    for (const auto& m : prefrattini_subalgebras(l, budget).members)
        via_closure = sum(via_closure, ideal_closure(l, m));
    if (!(via_lattice == via_closure))
        throw TheoremViolation("prefrattini residual routes disagree: lattice " +
                               l.render_subspace(via_lattice) + " vs closure " +
                               l.render_subspace(via_closure));
    return via_lattice;
}

SeriesChain nilpotent_series(const LieAlgebra& l, const EnumerationBudget& budget) {
    require_solvable(l);
    SeriesChain chain{SeriesKind::nilpotent_series, {l.zero_space()}};
    while (chain.terms.back().dim() < l.dim()) {
        InducedAlgebra q = induced_algebra(l, chain.terms.back(), InducedMode::quotient);
        Subspace nr = nilradical_any(q.algebra, budget);
        if (nr.is_zero())
            throw NonSolvable("nilpotent series stalled below the full algebra");
        chain.terms.push_back(q.pull_up(nr));
    }
    return chain;
}

Subspace elementary_residual(const LieAlgebra& l, const EnumerationBudget& budget) {
    require_solvable(l);
    auto facts = detail::facts_for(l, budget);
    Subspace residual = l.full_space();
    for (const auto& b : facts->ideals()) {
        InducedAlgebra q = induced_algebra(l, b, InducedMode::quotient);
        if (is_elementary(q.algebra, budget).value) residual = intersect(residual, b);
    }
    // least-ideal property: the quotient by the intersection is elementary
    InducedAlgebra q = induced_algebra(l, residual, InducedMode::quotient);
    if (!is_elementary(q.algebra, budget).value)
        throw TheoremViolation("elementary residual is not itself an ideal with elementary quotient");
    return residual;
}

std::vector<Subspace> cartan_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget) {
    auto facts = detail::facts_for(l, budget);
    std::vector<Subspace> out;
    for (const auto& s : facts->subalgebras()) {
        if (!is_nilpotent_subalgebra(l, s)) continue;
        if (!(normalizer(l, s) == s)) continue;
        out.push_back(s);
    }
    return out;
}

} // namespace lialg
