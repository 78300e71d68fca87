#include "lialg/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "facts.hpp"

namespace lialg {

BigInt subspace_count(std::int64_t p, int n) {
    // sum over k of the Gaussian binomial [n choose k]_p
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) {
        BigInt num = 1, den = 1;
        for (int i = 0; i < k; ++i) {
            num *= boost::multiprecision::pow(BigInt(p), n - i) - 1;
            den *= boost::multiprecision::pow(BigInt(p), i + 1) - 1;
        }
        total += num / den;
    }
    return total;
}

namespace {

void check_budget(FieldDescriptor field, int n, const EnumerationBudget& budget) {
    if (!field.is_prime_field())
        throw InfiniteFieldEnumeration("subspace enumeration requires a finite prime field");
    if (field.p() > budget.max_field_size)
        throw BudgetExceeded("field size " + std::to_string(field.p()) + " exceeds budget " +
                             std::to_string(budget.max_field_size));
    if (n > budget.max_dim)
        throw BudgetExceeded("ambient dimension " + std::to_string(n) + " exceeds budget " +
                             std::to_string(budget.max_dim));
    if (subspace_count(field.p(), n) > budget.max_count)
        throw BudgetExceeded("subspace count exceeds the enumeration guard");
}

// all k-subsets of {0..n-1}, lexicographic
void pivot_sets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<Subspace> generate_all_subspaces(FieldDescriptor f, int n) {
    std::int64_t p = f.p();
    std::vector<Subspace> out;
    out.push_back(Subspace::zero(f, n));
    for (int k = 1; k <= n; ++k) {
        std::vector<Subspace> stratum;
        std::vector<std::vector<int>> psets;
        pivot_sets(n, k, psets);
        for (const auto& piv : psets) {
            std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
            for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
            // free cells: row r, non-pivot column c > piv[r]
            std::vector<std::pair<int, int>> free_cells;
            for (int r = 0; r < k; ++r)
                for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                    if (!is_piv[static_cast<std::size_t>(c)]) free_cells.push_back({r, c});
            std::vector<std::int64_t> odo(free_cells.size(), 0);
            for (;;) {
                Matrix m(f, k, n);
                for (int r = 0; r < k; ++r)
                    m.at(r, piv[static_cast<std::size_t>(r)]) = Scalar::one(f);
                for (std::size_t i = 0; i < free_cells.size(); ++i)
                    m.at(free_cells[i].first, free_cells[i].second) =
                        Scalar::from_int(odo[i], f);
                stratum.push_back(Subspace::from_canonical_rows(std::move(m), n));
                std::size_t d = 0;
                while (d < odo.size() && ++odo[d] == p) odo[d++] = 0;
                if (d == odo.size()) break;
            }
        }
        std::sort(stratum.begin(), stratum.end());
        for (auto& s : stratum) out.push_back(std::move(s));
    }
    return out;
}

std::map<std::pair<std::int64_t, int>, std::vector<Subspace>> g_subspace_cache;
std::mutex g_subspace_mutex;

} // namespace

const std::vector<Subspace>& enumerate_subspaces(FieldDescriptor field, int n,
                                                 const EnumerationBudget& budget) {
    check_budget(field, n, budget);
    std::lock_guard<std::mutex> lock(g_subspace_mutex);
    auto key = std::make_pair(field.p(), n);
    auto it = g_subspace_cache.find(key);
    if (it == g_subspace_cache.end())
        it = g_subspace_cache.emplace(key, generate_all_subspaces(field, n)).first;
    return it->second;
}

std::vector<Subspace> subspaces_within(const Subspace& b, const EnumerationBudget& budget) {
    // An RREF matrix in b's coordinates maps through b's RREF basis to an
    // RREF matrix in the ambient space, so no re-canonicalization is needed.
    const auto& inner = enumerate_subspaces(b.field(), b.dim(), budget);
    std::vector<Subspace> out;
    out.reserve(inner.size());
    for (const auto& s : inner) {
        Matrix rows(b.field(), s.dim(), b.ambient_dim());
        for (int r = 0; r < s.dim(); ++r)
            for (int c = 0; c < b.ambient_dim(); ++c) {
                Scalar acc = Scalar::zero(b.field());
                for (int k = 0; k < b.dim(); ++k) {
                    const Scalar& x = s.basis().at(r, k);
                    if (!x.is_zero()) acc += x * b.basis().at(k, c);
                }
                rows.at(r, c) = acc;
            }
        out.push_back(Subspace::from_canonical_rows(std::move(rows), b.ambient_dim()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget,
                                            bool ideals_only) {
    const auto& all = enumerate_subspaces(l.field(), l.dim(), budget);
    std::vector<Subspace> out;
    for (const auto& s : all) {
        bool ok = ideals_only ? is_ideal(l, s) : is_subalgebra(l, s);
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<Subspace> maximal_subalgebras(const LieAlgebra& l, const EnumerationBudget& budget) {
    if (l.dim() == 0) return {}; // no proper subalgebras at all
    auto facts = detail::facts_for(l, budget);
    const auto& subs = facts->subalgebras();
    std::vector<Subspace> out;
    for (const auto& s : subs) {
        if (s.dim() == l.dim()) continue;
        bool maximal = true;
        for (const auto& t : subs) {
            if (t.dim() == l.dim() || t.dim() <= s.dim()) continue;
            if (t.contains(s)) { maximal = false; break; }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<Subspace> minimal_ideals(const LieAlgebra& l, const EnumerationBudget& budget) {
    auto facts = detail::facts_for(l, budget);
    const auto& ideals = facts->ideals();
    std::vector<Subspace> out;
    for (const auto& s : ideals) {
        if (s.is_zero()) continue;
        bool minimal = true;
        for (const auto& t : ideals) {
            if (t.is_zero() || t.dim() >= s.dim()) continue;
            if (s.contains(t)) { minimal = false; break; }
        }
        if (minimal) out.push_back(s);
    }
    if (facts->solvable())
        for (const auto& s : out)
            if (!is_abelian_subspace(l, s))
                throw TheoremViolation("non-abelian minimal ideal in a solvable algebra: " +
                                       l.render_subspace(s));
    return out;
}

Subspace abelian_socle(const LieAlgebra& l, const EnumerationBudget& budget) {
    Subspace socle = l.zero_space();
    for (const auto& s : minimal_ideals(l, budget))
        if (is_abelian_subspace(l, s)) socle = sum(socle, s);
    return socle;
}

std::optional<Subspace> find_complement_subalgebra(const LieAlgebra& l, const Subspace& b,
                                                   const Subspace& anchor,
                                                   const EnumerationBudget& budget) {
    if (!is_ideal(l, b)) throw NotAnIdeal("complement search requires an ideal");
    if (!b.contains(anchor)) throw DimensionMismatch("anchor must be contained in the ideal");
    // the split equations force dim T = dim L - dim B + dim anchor
    int want = l.dim() - b.dim() + anchor.dim();
    auto facts = detail::facts_for(l, budget);
    for (const auto& t : facts->subalgebras()) {
        if (t.dim() != want) continue;
        if (!t.contains(anchor)) continue;
        if (sum(b, t).dim() != l.dim()) continue;
        if (!(intersect(b, t) == anchor)) continue;
        return t;
    }
    return std::nullopt;
}

std::optional<Subspace> find_complement_subalgebra(const LieAlgebra& l, const Subspace& b,
                                                   const EnumerationBudget& budget) {
    return find_complement_subalgebra(l, b, l.zero_space(), budget);
}

IntervalComplementedResult is_interval_complemented(const LieAlgebra& l,
                                                    const EnumerationBudget& budget) {
    auto facts = detail::facts_for(l, budget);
    const auto& subs = facts->subalgebras();
    int n = l.dim();
    for (const auto& s : subs) {
        bool found = false;
        // complementary dimension first: then <S,T> = L is forced by dimensions
        for (const auto& t : subs) {
            if (t.dim() != n - s.dim()) continue;
            if (sum(s, t).dim() == n) { found = true; break; }
        }
        if (!found) {
            for (const auto& t : subs) {
                if (t.dim() >= n - s.dim()) continue;
                if (intersect(s, t).dim() != 0) continue;
                if (subalgebra_closure(l, sum(s, t)).dim() == n) { found = true; break; }
            }
        }
        if (!found) return {false, s};
    }
    return {true, std::nullopt};
}

Subspace nilradical(const LieAlgebra& l, const EnumerationBudget& budget) {
    auto facts = detail::facts_for(l, budget);
    return facts->nilradical();
}

Subspace nilradical_any(const LieAlgebra& l, const EnumerationBudget& budget) {
    if (l.field().is_prime_field()) return nilradical(l, budget);
    return nilradical_char0(l);
}

// Facts ------------------------------------------------------------------------

namespace detail {

namespace {

std::string facts_key(const LieAlgebra& l, const EnumerationBudget& b) {
    std::ostringstream os;
    os << l.field().str() << ";" << l.dim() << ";";
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i + 1; j < l.dim(); ++j) {
            Vec br = l.bracket_basis(i, j);
            for (const auto& s : br) os << s.str() << ",";
            os << "|";
        }
    os << ";" << b.max_field_size << "," << b.max_dim << "," << b.max_count;
    return os.str();
}

std::map<std::string, std::shared_ptr<Facts>> g_facts;
std::mutex g_facts_mutex;

} // namespace

std::shared_ptr<Facts> facts_for(const LieAlgebra& l, const EnumerationBudget& budget) {
    std::string key = facts_key(l, budget);
    std::lock_guard<std::mutex> lock(g_facts_mutex);
    auto it = g_facts.find(key);
    if (it != g_facts.end()) return it->second;
    if (g_facts.size() > 4096) g_facts.clear(); // crude cap; entries are cheap to rebuild
    auto facts = std::make_shared<Facts>(l, budget);
    g_facts.emplace(std::move(key), facts);
    return facts;
}

const std::vector<Subspace>& Facts::subalgebras() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!subalgebras_) subalgebras_ = enumerate_subalgebras(algebra, budget, false);
    return *subalgebras_;
}

const std::vector<Subspace>& Facts::ideals() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!ideals_) ideals_ = enumerate_subalgebras(algebra, budget, true);
    return *ideals_;
}

const std::vector<Subspace>& Facts::maximals() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (maximals_) return *maximals_;
    }
    auto m = maximal_subalgebras(algebra, budget);
    std::lock_guard<std::mutex> lock(mu_);
    if (!maximals_) maximals_ = std::move(m);
    return *maximals_;
}

const std::vector<Subspace>& Facts::minimal_ideals() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (minimal_ideals_) return *minimal_ideals_;
    }
    auto m = lialg::minimal_ideals(algebra, budget);
    std::lock_guard<std::mutex> lock(mu_);
    if (!minimal_ideals_) minimal_ideals_ = std::move(m);
    return *minimal_ideals_;
}

const Subspace& Facts::frattini() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (frattini_) return *frattini_;
    }
    Subspace phi = algebra.full_space();
    for (const auto& m : maximals()) phi = intersect(phi, m);
    std::lock_guard<std::mutex> lock(mu_);
    if (!frattini_) frattini_ = std::move(phi);
    return *frattini_;
}

const Subspace& Facts::nilradical() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (nilradical_) return *nilradical_;
    }
    if (!solvable()) throw NonSolvable("nilradical requires a solvable algebra");
    std::optional<Subspace> best;
    std::vector<Subspace> nilpotent_ideals;
    for (const auto& s : ideals()) {
        if (!is_nilpotent_subalgebra(algebra, s)) continue;
        nilpotent_ideals.push_back(s);
        if (!best || s.dim() > best->dim()) best = s;
    }
    // the largest nilpotent ideal must contain every nilpotent ideal
    for (const auto& s : nilpotent_ideals)
        if (!best->contains(s))
            throw TheoremViolation("nilpotent ideals are not all contained in the largest one");
    std::lock_guard<std::mutex> lock(mu_);
    if (!nilradical_) nilradical_ = std::move(*best);
    return *nilradical_;
}

bool Facts::solvable() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!solvable_) solvable_ = derived_series(algebra).reaches_zero();
    return *solvable_;
}

} // namespace detail

} // namespace lialg
