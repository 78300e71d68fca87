#include "lialg/classification.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "facts.hpp"

namespace lialg {

std::string to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::pass: return "pass";
        case RecordStatus::fail: return "fail";
        case RecordStatus::skipped: return "skipped";
        case RecordStatus::budget: return "budget";
    }
    return "?";
}

std::string to_string(ComplementedRoute r) {
    switch (r) {
        case ComplementedRoute::splits_over_ideals: return "splits_over_ideals";
        case ComplementedRoute::prefrattini: return "prefrattini";
        case ComplementedRoute::phi_free_hereditary: return "phi_free_hereditary";
        case ComplementedRoute::definitional: return "definitional";
    }
    return "?";
}

ComplementedRoute route_from_string(const std::string& s) {
    if (s == "splits_over_ideals") return ComplementedRoute::splits_over_ideals;
    if (s == "prefrattini") return ComplementedRoute::prefrattini;
    if (s == "phi_free_hereditary") return ComplementedRoute::phi_free_hereditary;
    if (s == "definitional") return ComplementedRoute::definitional;
    throw BadParameters("unknown complementedness route '" + s + "'");
}

namespace {

void require_solvable(const LieAlgebra& l) {
    if (!derived_series(l).reaches_zero())
        throw NonSolvable("classification assumes a solvable algebra");
}

/// Frattini subalgebra of a subalgebra carrier, computed in ambient
/// coordinates from the subspaces contained in it.
Subspace frattini_within(const LieAlgebra& l, const Subspace& b, const EnumerationBudget& budget) {
    if (b.dim() == 0) return l.zero_space();
    std::vector<Subspace> subs;
    for (const auto& s : subspaces_within(b, budget))
        if (s.dim() < b.dim() && is_subalgebra(l, s)) subs.push_back(s);
    Subspace phi = b;
    for (const auto& s : subs) {
        bool maximal = true;
        for (const auto& t : subs)
            if (t.dim() > s.dim() && t.contains(s)) { maximal = false; break; }
        if (maximal) phi = intersect(phi, s);
    }
    return phi;
}

} // namespace

Verdict is_complemented(const LieAlgebra& l, const EnumerationBudget& budget,
                        ComplementedRoute route) {
    require_solvable(l);
    switch (route) {
        case ComplementedRoute::definitional: {
            auto r = is_interval_complemented(l, budget);
            return {r.value, r.witness ? "uncomplemented subalgebra " + l.render_subspace(*r.witness)
                                       : ""};
        }
        case ComplementedRoute::splits_over_ideals: {
            auto facts = detail::facts_for(l, budget);
            for (const auto& b : facts->ideals())
                if (!find_complement_subalgebra(l, b, budget))
                    return {false, "non-split ideal " + l.render_subspace(b)};
            return {true, ""};
        }
        case ComplementedRoute::prefrattini: {
            auto pf = prefrattini_subalgebras(l, budget);
            for (const auto& m : pf.members)
                if (m.dim() != 0)
                    return {false, "nonzero prefrattini subalgebra " + l.render_subspace(m)};
            return {true, ""};
        }
        case ComplementedRoute::phi_free_hereditary: {
            auto facts = detail::facts_for(l, budget);
            for (const auto& a : facts->ideals()) {
                InducedAlgebra q = induced_algebra(l, a, InducedMode::quotient);
                Subspace phi = frattini_subalgebra(q.algebra, budget);
                if (!phi.is_zero())
                    return {false, "quotient by " + l.render_subspace(a) + " has phi = " +
                                       q.algebra.render_subspace(phi)};
            }
            return {true, ""};
        }
    }
    throw BadParameters("unknown route");
}

Verdict is_elementary(const LieAlgebra& l, const EnumerationBudget& budget) {
    auto facts = detail::facts_for(l, budget);
    for (const auto& b : facts->subalgebras()) {
        Subspace phi = frattini_within(l, b, budget);
        if (!phi.is_zero())
            return {false, "subalgebra " + l.render_subspace(b) + " has phi = " +
                               l.render_subspace(phi)};
    }
    return {true, ""};
}

Verdict is_A_algebra(const LieAlgebra& l, const EnumerationBudget& budget) {
    auto facts = detail::facts_for(l, budget);
    for (const auto& s : facts->subalgebras())
        if (is_nilpotent_subalgebra(l, s) && !is_abelian_subspace(l, s))
            return {false, "nonabelian nilpotent subalgebra " + l.render_subspace(s)};
    return {true, ""};
}

MonolithResult is_monolithic(const LieAlgebra& l, const EnumerationBudget& budget) {
    require_solvable(l);
    auto mins = minimal_ideals(l, budget);
    if (mins.size() == 1) return {true, mins.front()};
    return {false, std::nullopt};
}

namespace {

/// Complete reducibility of L^(i)/L^(i+1) as an (L/L^(i+1))-module: every
/// invariant subspace has an invariant complement inside the module.
bool completely_reducible_layer(const LieAlgebra& l, const Subspace& li, const Subspace& li1,
                                const EnumerationBudget& budget, std::string* witness) {
    InducedAlgebra q = induced_algebra(l, li1, InducedMode::quotient);
    Subspace v = q.push_down(li);
    auto invariant = [&](const Subspace& w) {
        return bracket_span(q.algebra, q.algebra.full_space(), w).dim() == 0 ||
               w.contains(bracket_span(q.algebra, q.algebra.full_space(), w));
    };
    auto inside = subspaces_within(v, budget);
    for (const auto& w : inside) {
        if (!invariant(w)) continue;
        bool found = false;
        for (const auto& w2 : inside) {
            if (w2.dim() != v.dim() - w.dim()) continue;
            if (!invariant(w2)) continue;
            if (intersect(w, w2).dim() == 0) { found = true; break; }
        }
        if (!found) {
            if (witness)
                *witness = "invariant subspace " + q.algebra.render_subspace(w) +
                           " has no invariant complement in " + q.algebra.render_subspace(v);
            return false;
        }
    }
    return true;
}

} // namespace

DecompositionOutcome complemented_decomposition(const LieAlgebra& l,
                                                const EnumerationBudget& budget) {
    require_solvable(l);
    Verdict comp = is_complemented(l, budget);
    if (!comp.value) return {std::nullopt, comp.witness};

    ComplementedDecomposition d{{}, {}, l.zero_space(), true, true, true, true};
    SeriesChain ds = derived_series(l);
    d.derived_terms.assign(ds.terms.begin(), ds.terms.end() - (ds.terms.back().is_zero() &&
                                                               ds.terms.size() > 1
                                                           ? 1
                                                           : 0));
    // peel off the last nonzero derived term and a complement, repeatedly
    Matrix embed_chain = Matrix::identity(l.field(), l.dim());
    LieAlgebra cur = l;
    for (;;) {
        SeriesChain cds = derived_series(cur);
        auto up = [&](const Subspace& s) { return apply_map(embed_chain, s); };
        if (cds.terms.size() <= 2) { // abelian (or zero)
            if (cur.dim() > 0) d.parts.push_back(up(cur.full_space()));
            break;
        }
        Subspace a = cds.terms[cds.terms.size() - 2]; // last nonzero derived term
        auto comp_sub = find_complement_subalgebra(cur, a, budget);
        if (!comp_sub)
            throw TheoremViolation("complemented algebra does not split over a derived term");
        d.parts.push_back(up(a));
        InducedAlgebra ind = induced_algebra(cur, *comp_sub, InducedMode::subalgebra);
        embed_chain = embed_chain * ind.embed;
        cur = ind.algebra;
    }
    // C = A_{n-1} + ... + A_0
    d.complement_of_top = l.zero_space();
    for (std::size_t i = 1; i < d.parts.size(); ++i)
        d.complement_of_top = sum(d.complement_of_top, d.parts[i]);

    for (const auto& p : d.parts)
        if (!is_abelian_subspace(l, p)) d.parts_abelian = false;
    int n = static_cast<int>(d.parts.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        Subspace partial = l.zero_space();
        for (int j = 0; j <= n - i; ++j) partial = sum(partial, d.parts[static_cast<std::size_t>(j)]);
        if (!(partial == d.derived_terms[static_cast<std::size_t>(i)])) d.partial_sums_match = false;
    }
    for (int i = 1; i <= n; ++i) {
        Subspace li = d.derived_terms[static_cast<std::size_t>(i)];
        Subspace li1 = i + 1 <= n ? d.derived_terms[static_cast<std::size_t>(i + 1)] : l.zero_space();
        if (!completely_reducible_layer(l, li, li1, budget, nullptr))
            d.completely_reducible = false;
    }
    if (n >= 0) {
        Subspace l1 = n >= 1 ? d.derived_terms[1] : l.zero_space();
        d.completely_reducible_i0 = completely_reducible_layer(l, l.full_space(), l1, budget, nullptr);
    }
    return {std::move(d), ""};
}

std::vector<Record> decomposition_theorems_check(const LieAlgebra& l,
                                                 const ComplementedDecomposition& d,
                                                 const EnumerationBudget& budget) {
    std::vector<Record> out;
    auto facts = detail::facts_for(l, budget);
    int n = static_cast<int>(d.parts.size()) - 1;
    Subspace nilrad = facts->nilradical();

    { // (i) every ideal decomposes along the parts
        Record r{"t3.thm.i", RecordStatus::pass, ""};
        for (const auto& k : facts->ideals()) {
            int dims = 0;
            Subspace acc = l.zero_space();
            for (const auto& p : d.parts) {
                Subspace cap = intersect(k, p);
                dims += cap.dim();
                acc = sum(acc, cap);
            }
            if (dims != k.dim() || !(acc == k)) {
                r.status = RecordStatus::fail;
                r.witness = "ideal " + l.render_subspace(k) + " does not decompose";
                break;
            }
        }
        out.push_back(std::move(r));
    }
    { // (ii) nilradical decomposition with A_n inside
        Record r{"t3.thm.ii", RecordStatus::pass, ""};
        Subspace acc = d.parts.front();
        for (std::size_t i = 1; i < d.parts.size(); ++i)
            acc = sum(acc, intersect(nilrad, d.parts[i]));
        if (!nilrad.contains(d.parts.front()) || !(acc == nilrad)) {
            r.status = RecordStatus::fail;
            r.witness = "N = " + l.render_subspace(nilrad);
        }
        out.push_back(std::move(r));
    }
    { // (iii) Z(L^(i)) = N cap A_i
        Record r{"t3.thm.iii", RecordStatus::pass, ""};
        for (int i = 0; i <= n; ++i) {
            const Subspace& li = d.derived_terms[static_cast<std::size_t>(i)];
            Subspace z = intersect(centralizer(l, li), li);
            Subspace expect = intersect(nilrad, d.parts[static_cast<std::size_t>(n - i)]);
            if (!(z == expect)) {
                r.status = RecordStatus::fail;
                r.witness = "i=" + std::to_string(i) + ": Z = " + l.render_subspace(z) +
                            ", N cap A_i = " + l.render_subspace(expect);
                break;
            }
        }
        out.push_back(std::move(r));
    }
    { // (iv) every minimal ideal sits in some N cap A_i
        Record r{"t3.thm.iv", RecordStatus::pass, ""};
        for (const auto& a : facts->minimal_ideals()) {
            bool placed = false;
            for (const auto& p : d.parts)
                if (intersect(nilrad, p).contains(a)) { placed = true; break; }
            if (!placed) {
                r.status = RecordStatus::fail;
                r.witness = "minimal ideal " + l.render_subspace(a);
                break;
            }
        }
        out.push_back(std::move(r));
    }
    { // ideal-splitting identity D = (B cap D) + (C cap D)
        Record r{"t3.lemma.ideal", RecordStatus::pass, ""};
        const Subspace& b = d.parts.front();
        const Subspace& c = d.complement_of_top;
        for (const auto& dd : facts->ideals()) {
            Subspace bd = intersect(b, dd), cd = intersect(c, dd);
            if (!(sum(bd, cd) == dd) || bd.dim() + cd.dim() != dd.dim()) {
                r.status = RecordStatus::fail;
                r.witness = "ideal " + l.render_subspace(dd);
                break;
            }
        }
        out.push_back(std::move(r));
    }
    { // monolithic chain W = N = A_n = L^(n) = C_L(W), Z(L) = 0, [L,W] = W
        Record r{"t3.mono", RecordStatus::pass, ""};
        auto mono = is_monolithic(l, budget);
        if (!mono.monolithic) {
            r.status = RecordStatus::skipped;
            r.witness = "not monolithic";
        } else {
            const Subspace& w = *mono.monolith;
            bool ok = w == nilrad && w == d.parts.front() &&
                      w == d.derived_terms[static_cast<std::size_t>(n)] &&
                      w == centralizer(l, w) && center(l).is_zero() &&
                      bracket_span(l, l.full_space(), w) == w;
            if (!ok) {
                r.status = RecordStatus::fail;
                r.witness = "W = " + l.render_subspace(w);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

// verify_theorems ---------------------------------------------------------------

namespace {

using Runner = std::function<Record()>;

Record guarded(const std::string& id, const std::function<Record()>& body) {
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        return {id, RecordStatus::budget, e.what()};
    } catch (const InfiniteFieldEnumeration& e) {
        return {id, RecordStatus::budget, e.what()};
    }
}

} // namespace

VerificationReport verify_theorems(const LieAlgebra& l, const EnumerationBudget& budget,
                                   const std::vector<std::string>& select, std::uint64_t seed) {
    require_solvable(l);
    VerificationReport report;
    {
        std::ostringstream os;
        os << l.field().str() << " dim " << l.dim();
        report.algebra_id = os.str();
    }
    auto wanted = [&](const std::string& id) {
        if (select.empty()) return true;
        for (const auto& s : select)
            if (id == s || id.rfind(s + ".", 0) == 0) return true;
        return false;
    };
    auto add = [&](const std::string& id, const std::function<Record()>& body) {
        if (!wanted(id)) return;
        report.records.push_back(guarded(id, body));
    };

    StructureFlags flags = structure_flags(l);
    auto facts = detail::facts_for(l, budget);

    // shared computations, built lazily under the same budget guards
    std::optional<ChiefSeries> series;
    std::optional<PrefrattiniSet> pf;
    std::optional<Subspace> phi, pi_res;
    std::optional<Verdict> complemented;
    auto get_series = [&]() -> const ChiefSeries& {
        if (!series) series = chief_series(l, budget);
        return *series;
    };
    auto get_pf = [&]() -> const PrefrattiniSet& {
        if (!pf) pf = prefrattini_from_series(l, get_series());
        return *pf;
    };
    auto get_phi = [&]() -> const Subspace& {
        if (!phi) phi = frattini_subalgebra(l, budget);
        return *phi;
    };
    auto get_pi = [&]() -> const Subspace& {
        if (!pi_res) pi_res = prefrattini_residual(l, budget);
        return *pi_res;
    };
    auto get_complemented = [&]() -> const Verdict& {
        if (!complemented) complemented = is_complemented(l, budget);
        return *complemented;
    };

    add("t1.i", [&]() -> Record {
        for (const auto& b : get_pf().members) {
            auto profile = cover_avoid_profile(b, get_series());
            for (int i = 1; i <= get_series().length(); ++i) {
                FactorClass cls = get_series().factor_class[static_cast<std::size_t>(i - 1)];
                CoverAvoid expect =
                    cls == FactorClass::frattini ? CoverAvoid::covers : CoverAvoid::avoids;
                if (profile[static_cast<std::size_t>(i - 1)] != expect)
                    return {"t1.i", RecordStatus::fail,
                            "member " + l.render_subspace(b) + " at factor " + std::to_string(i)};
            }
        }
        return {"t1.i", RecordStatus::pass, ""};
    });

    add("t1.ii", [&]() -> Record {
        int want = 0;
        for (int i = 1; i <= get_series().length(); ++i)
            if (get_series().factor_class[static_cast<std::size_t>(i - 1)] == FactorClass::frattini)
                want += get_series().terms[static_cast<std::size_t>(i)].dim() -
                        get_series().terms[static_cast<std::size_t>(i - 1)].dim();
        for (const auto& b : get_pf().members)
            if (b.dim() != want)
                return {"t1.ii", RecordStatus::fail,
                        "member " + l.render_subspace(b) + " has dim " + std::to_string(b.dim()) +
                            ", expected " + std::to_string(want)};
        return {"t1.ii", RecordStatus::pass, ""};
    });

    add("t1.iii", [&]() -> Record {
        if (l.dim() > 4)
            return {"t1.iii", RecordStatus::skipped, "above the exhaustive-quotient dimension gate"};
        for (const auto& a : facts->ideals()) {
            InducedAlgebra q = induced_algebra(l, a, InducedMode::quotient);
            auto qpf = prefrattini_subalgebras(q.algebra, budget);
            for (const auto& s : get_pf().members) {
                Subspace img = q.push_down(s);
                if (std::find(qpf.members.begin(), qpf.members.end(), img) == qpf.members.end())
                    return {"t1.iii", RecordStatus::fail,
                            "image of " + l.render_subspace(s) + " modulo " + l.render_subspace(a)};
            }
        }
        return {"t1.iii", RecordStatus::pass, ""};
    });

    add("t1.iv", [&]() -> Record {
        Subspace acc = l.full_space();
        for (const auto& b : get_pf().members) acc = intersect(acc, b);
        if (!(acc == get_phi()))
            return {"t1.iv", RecordStatus::fail,
                    "intersection " + l.render_subspace(acc) + " vs phi " +
                        l.render_subspace(get_phi())};
        return {"t1.iv", RecordStatus::pass, ""};
    });

    add("t1.v", [&]() -> Record {
        if (!flags.completely_solvable)
            return {"t1.v", RecordStatus::skipped, "not completely solvable"};
        if (get_pf().members.size() != 1 || !(get_pf().members.front() == get_phi()))
            return {"t1.v", RecordStatus::fail, "Pi != {phi}"};
        return {"t1.v", RecordStatus::pass, ""};
    });

    add("t1.vi", [&]() -> Record {
        std::int64_t p = l.field().characteristic();
        if (p == 0) return {"t1.vi", RecordStatus::skipped, "characteristic zero"};
        Subspace linf = nilpotent_residual(l);
        if (!is_nilpotent_subalgebra(l, linf))
            return {"t1.vi", RecordStatus::skipped, "nilpotent residual is not nilpotent"};
        int cls = 0;
        {
            Subspace cur = linf;
            while (!cur.is_zero()) {
                cur = bracket_span(l, cur, linf);
                ++cls;
            }
        }
        if (cls >= p)
            return {"t1.vi", RecordStatus::skipped,
                    "nilpotency class " + std::to_string(cls) + " not below p"};
        const auto& members = get_pf().members;
        if (members.size() <= 1) return {"t1.vi", RecordStatus::pass, "single member"};
        // candidate automorphisms exp(ad x) for x ranging over L^infinity
        std::vector<Matrix> maps;
        {
            std::vector<Vec> xs;
            double count = 1;
            for (int i = 0; i < linf.dim(); ++i) count *= static_cast<double>(p);
            if (count <= 10000) {
                std::vector<std::int64_t> odo(static_cast<std::size_t>(linf.dim()), 0);
                for (;;) {
                    Vec x = zero_vec(l.field(), l.dim());
                    for (int i = 0; i < linf.dim(); ++i)
                        x = vec_add(x, vec_scale(Scalar::from_int(odo[static_cast<std::size_t>(i)],
                                                                  l.field()),
                                                 linf.basis().row(i)));
                    if (!vec_is_zero(x)) xs.push_back(std::move(x));
                    std::size_t d = 0;
                    while (d < odo.size() && ++odo[d] == p) odo[d++] = 0;
                    if (d == odo.size()) break;
                    if (odo.empty()) break;
                }
            } else {
                for (int i = 0; i < linf.dim(); ++i)
                    for (std::int64_t c = 1; c < p; ++c)
                        xs.push_back(vec_scale(Scalar::from_int(c, l.field()), linf.basis().row(i)));
            }
            for (const auto& x : xs) {
                try {
                    maps.push_back(exp_ad(l, x));
                } catch (const NotNilpotent&) {
                } catch (const CharacteristicObstruction&) {
                }
            }
        }
        auto image = [&](const Matrix& m, const Subspace& s) { return apply_map(m, s); };
        bool all_single = true;
        for (const auto& b1 : members)
            for (const auto& b2 : members) {
                if (b1 == b2) continue;
                bool single = false;
                for (const auto& m : maps)
                    if (image(m, b1) == b2) { single = true; break; }
                if (single) continue;
                all_single = false;
                // widen to compositions of length <= 3
                std::set<Subspace> reach{b1};
                for (int depth = 0; depth < 3; ++depth) {
                    std::set<Subspace> next = reach;
                    for (const auto& s : reach)
                        for (const auto& m : maps) next.insert(image(m, s));
                    reach = std::move(next);
                }
                if (!reach.count(b2))
                    return {"t1.vi", RecordStatus::fail,
                            "no exp(ad x) chain from " + l.render_subspace(b1) + " to " +
                                l.render_subspace(b2)};
            }
        return {"t1.vi", RecordStatus::pass,
                all_single ? "all pairs conjugate by a single map"
                           : "some pairs need compositions"};
    });

    add("t1.vii", [&]() -> Record {
        bool trivial = get_pf().members.size() == 1 && get_pf().members.front().is_zero();
        if (trivial != get_complemented().value)
            return {"t1.vii", RecordStatus::fail,
                    std::string("Pi(L) = {0} is ") + (trivial ? "true" : "false") +
                        " but complemented is " + (get_complemented().value ? "true" : "false")};
        return {"t1.vii", RecordStatus::pass, ""};
    });

    add("t1.series_independence", [&]() -> Record {
        auto all = all_chief_series(l, budget, 10);
        if (all.size() <= 1) return {"t1.series_independence", RecordStatus::pass, "single series"};
        auto base = prefrattini_from_series(l, all.front()).members;
        for (std::size_t i = 1; i < all.size(); ++i)
            if (!(prefrattini_from_series(l, all[i]).members == base))
                return {"t1.series_independence", RecordStatus::fail,
                        "series choice " + std::to_string(i) + " changes Pi(L)"};
        return {"t1.series_independence", RecordStatus::pass,
                std::to_string(all.size()) + " series compared"};
    });

    add("t2.equiv", [&]() -> Record {
        std::vector<std::pair<ComplementedRoute, std::optional<bool>>> verdicts;
        for (auto route : {ComplementedRoute::splits_over_ideals, ComplementedRoute::prefrattini,
                           ComplementedRoute::phi_free_hereditary, ComplementedRoute::definitional}) {
            try {
                verdicts.push_back({route, is_complemented(l, budget, route).value});
            } catch (const BudgetExceeded&) {
                verdicts.push_back({route, std::nullopt});
            }
        }
        for (const auto& [ra, va] : verdicts)
            for (const auto& [rb, vb] : verdicts)
                if (va && vb && *va != *vb)
                    return {"t2.equiv", RecordStatus::fail,
                            to_string(ra) + " says " + (*va ? "true" : "false") + ", " +
                                to_string(rb) + " says " + (*vb ? "true" : "false")};
        return {"t2.equiv", RecordStatus::pass, ""};
    });

    add("t2.compsolv", [&]() -> Record {
        if (!flags.completely_solvable)
            return {"t2.compsolv", RecordStatus::skipped, "not completely solvable"};
        bool c = get_complemented().value;
        bool phi_free = get_phi().is_zero();
        bool elem = is_elementary(l, budget).value;
        if (c != phi_free || c != elem)
            return {"t2.compsolv", RecordStatus::fail,
                    std::string("complemented=") + (c ? "1" : "0") + " phi_free=" +
                        (phi_free ? "1" : "0") + " elementary=" + (elem ? "1" : "0")};
        return {"t2.compsolv", RecordStatus::pass, ""};
    });

    add("t2.formation", [&]() -> Record {
        const auto& ideals = facts->ideals();
        std::vector<bool> comp(ideals.size());
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            InducedAlgebra q = induced_algebra(l, ideals[i], InducedMode::quotient);
            comp[i] = is_complemented(q.algebra, budget).value;
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < ideals.size(); ++i)
            for (std::size_t j = i + 1; j < ideals.size(); ++j)
                if (comp[i] && comp[j]) pairs.push_back({i, j});
        if (pairs.size() > 200) {
            std::mt19937_64 rng(seed ^ 0x666f726d);
            std::vector<std::pair<std::size_t, std::size_t>> sample;
            for (int k = 0; k < 200; ++k)
                sample.push_back(pairs[static_cast<std::size_t>(rng() % pairs.size())]);
            pairs = std::move(sample);
        }
        for (const auto& [i, j] : pairs) {
            Subspace meet = intersect(ideals[i], ideals[j]);
            InducedAlgebra q = induced_algebra(l, meet, InducedMode::quotient);
            if (!is_complemented(q.algebra, budget).value)
                return {"t2.formation", RecordStatus::fail,
                        "B = " + l.render_subspace(ideals[i]) + ", C = " +
                            l.render_subspace(ideals[j])};
        }
        return {"t2.formation", RecordStatus::pass, ""};
    });

    add("t2.phi_series", [&]() -> Record {
        SeriesChain ns = nilpotent_series(l, budget);
        bool all_phi_free = true;
        std::string bad;
        for (std::size_t i = 0; i < ns.terms.size(); ++i) {
            InducedAlgebra q = induced_algebra(l, ns.terms[i], InducedMode::quotient);
            if (!frattini_subalgebra(q.algebra, budget).is_zero()) {
                all_phi_free = false;
                bad = "phi(L/N_" + std::to_string(i) + ") != 0";
                break;
            }
        }
        if (all_phi_free != get_complemented().value)
            return {"t2.phi_series", RecordStatus::fail,
                    bad.empty() ? std::string("all phi-free but not complemented") : bad};
        return {"t2.phi_series", RecordStatus::pass, ""};
    });

    add("prop.i", [&]() -> Record {
        Subspace e = elementary_residual(l, budget);
        if (!get_pi().contains(get_phi()) || !e.contains(get_pi()))
            return {"prop.i", RecordStatus::fail,
                    "phi = " + l.render_subspace(get_phi()) + ", pi = " +
                        l.render_subspace(get_pi()) + ", E = " + l.render_subspace(e)};
        if (flags.completely_solvable && !(get_phi() == get_pi() && get_pi() == e))
            return {"prop.i", RecordStatus::fail, "completely solvable but phi, pi, E differ"};
        return {"prop.i", RecordStatus::pass, ""};
    });

    add("prop.ii", [&]() -> Record {
        if (l.dim() > 4)
            return {"prop.ii", RecordStatus::skipped, "above the exhaustive-quotient dimension gate"};
        for (const auto& a : facts->ideals()) {
            InducedAlgebra q = induced_algebra(l, a, InducedMode::quotient);
            Subspace lhs = prefrattini_residual(q.algebra, budget);
            Subspace rhs = q.push_down(get_pi());
            if (!(lhs == rhs))
                return {"prop.ii", RecordStatus::fail, "ideal " + l.render_subspace(a)};
        }
        return {"prop.ii", RecordStatus::pass, ""};
    });

    add("prop.iii", [&]() -> Record {
        bool nil = is_nilpotent_subalgebra(l, get_pi());
        bool equal = get_pi() == get_phi();
        if (nil != equal)
            return {"prop.iii", RecordStatus::fail,
                    std::string("pi nilpotent=") + (nil ? "1" : "0") + " pi==phi=" +
                        (equal ? "1" : "0")};
        return {"prop.iii", RecordStatus::pass, ""};
    });

    add("prop.iv", [&]() -> Record {
        Subspace pinf = l.zero_space();
        if (!get_pi().is_zero()) {
            InducedAlgebra sub = induced_algebra(l, get_pi(), InducedMode::subalgebra);
            pinf = apply_map(sub.embed, nilpotent_residual(sub.algebra));
        }
        for (const auto& b : get_pf().members)
            if (!(sum(b, pinf) == get_pi()))
                return {"prop.iv", RecordStatus::fail,
                        "B = " + l.render_subspace(b) + ", pi^inf = " + l.render_subspace(pinf)};
        return {"prop.iv", RecordStatus::pass, ""};
    });

    add("l3.int", [&]() -> Record {
        Subspace z2 = intersect(center(l), bracket_span(l, l.full_space(), l.full_space()));
        if (!get_phi().contains(z2))
            return {"l3.int", RecordStatus::fail, "Z(L) cap L^2 = " + l.render_subspace(z2)};
        return {"l3.int", RecordStatus::pass, ""};
    });

    add("t3.decomp", [&]() -> Record {
        if (!get_complemented().value) {
            auto out = complemented_decomposition(l, budget);
            if (out.decomposition)
                return {"t3.decomp", RecordStatus::fail,
                        "not complemented yet a decomposition was produced"};
            return {"t3.decomp", RecordStatus::pass, "failure witness: " + out.failure_witness};
        }
        auto out = complemented_decomposition(l, budget);
        if (!out.decomposition)
            return {"t3.decomp", RecordStatus::fail, out.failure_witness};
        const auto& d = *out.decomposition;
        if (!d.parts_abelian || !d.partial_sums_match || !d.completely_reducible)
            return {"t3.decomp", RecordStatus::fail,
                    std::string("abelian=") + (d.parts_abelian ? "1" : "0") + " sums=" +
                        (d.partial_sums_match ? "1" : "0") + " reducible=" +
                        (d.completely_reducible ? "1" : "0")};
        for (const auto& r : decomposition_theorems_check(l, d, budget))
            if (r.status == RecordStatus::fail)
                return {"t3.decomp", RecordStatus::fail, r.id + ": " + r.witness};
        return {"t3.decomp", RecordStatus::pass,
                d.completely_reducible_i0 ? "i=0 layer also completely reducible"
                                          : "i=0 layer not completely reducible (informational)"};
    });

    add("t3.cartan", [&]() -> Record {
        if (!get_complemented().value)
            return {"t3.cartan", RecordStatus::skipped, "not complemented"};
        SeriesChain ds = derived_series(l);
        for (std::size_t i = 0; i + 1 < ds.terms.size(); ++i) {
            if (ds.terms[i].is_zero()) break;
            Subspace li2 = i + 2 < ds.terms.size() ? ds.terms[i + 2] : l.zero_space();
            InducedAlgebra q = induced_algebra(l, li2, InducedMode::quotient);
            Subspace g_carrier = q.push_down(ds.terms[i]);
            InducedAlgebra g = induced_algebra(q.algebra, g_carrier, InducedMode::subalgebra);
            Subspace m = g.push_down(q.push_down(ds.terms[i + 1]));
            auto cartans = cartan_subalgebras(g.algebra, budget);
            std::vector<Subspace> complements;
            auto gfacts = detail::facts_for(g.algebra, budget);
            for (const auto& c : gfacts->subalgebras())
                if (c.dim() == g.algebra.dim() - m.dim() && sum(c, m).dim() == g.algebra.dim())
                    complements.push_back(c);
            if (!(cartans == complements))
                return {"t3.cartan", RecordStatus::fail, "layer i=" + std::to_string(i)};
        }
        return {"t3.cartan", RecordStatus::pass, ""};
    });

    return report;
}

} // namespace lialg
