#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lialg/workbench.hpp"

using namespace lialg;

namespace {

Vec iv(FieldDescriptor f, std::initializer_list<int> entries) {
    Vec v;
    for (int e : entries) v.push_back(Scalar::from_int(e, f));
    return v;
}

// B = L^2 of the dim-(p+2) example algebra, as an algebra of its own
LieAlgebra derived_of_ecomp(std::int64_t p) {
    LieAlgebra l = catalog("ecomp", {{"p", std::to_string(p)}});
    Subspace l2 = derived_series(l).terms[1];
    return induced_algebra(l, l2, InducedMode::subalgebra).algebra;
}

} // namespace

TEST_CASE("frattini subalgebra of known algebras") {
    EnumerationBudget b;
    auto f2 = FieldDescriptor::gf(2);

    LieAlgebra h3 = catalog("heisenberg", {{"field", "gf2"}});
    CHECK(frattini_subalgebra(h3, b) == canonical_basis({iv(f2, {0, 0, 1})}, 3, f2)); // span(z)

    CHECK(frattini_subalgebra(catalog("ecomp", {{"p", "2"}}), b).is_zero());
    CHECK(frattini_subalgebra(catalog("abelian", {{"n", "3"}, {"field", "gf2"}}), b).is_zero());
    CHECK(frattini_subalgebra(catalog("r2", {{"field", "gf3"}}), b).is_zero());

    // span(x) for the dim-3 algebra with [x,b]=x, [y,b]=y-x
    for (const char* field : {"gf2", "gf3"}) {
        LieAlgebra a3 = catalog("a3", {{"field", field}});
        CHECK(frattini_subalgebra(a3, b) ==
              canonical_basis({iv(a3.field(), {1, 0, 0})}, 3, a3.field()));
    }
}

TEST_CASE("frattini of the derived subalgebra of the example algebra") {
    // ad x acts on A = span(e0..e_{p-1}) as a p-cycle, which is unipotent in
    // characteristic p.  The proper subalgebras meeting x all cut A in the
    // coordinate-sum-zero hyperplane, so phi(B) is that hyperplane (dim p-1);
    // only for p = 2 does it collapse to span(e0+e1).
    EnumerationBudget b;
    for (std::int64_t p : {2, 3}) {
        LieAlgebra bb = derived_of_ecomp(p);
        REQUIRE(bb.dim() == p + 1); // e0..e_{p-1}, x
        std::vector<Vec> diffs;
        for (std::int64_t i = 0; i + 1 < p; ++i) {
            Vec v = zero_vec(bb.field(), bb.dim());
            v[static_cast<std::size_t>(i)] = Scalar::one(bb.field());
            v[static_cast<std::size_t>(i + 1)] = -Scalar::one(bb.field());
            diffs.push_back(std::move(v));
        }
        Subspace expected = canonical_basis(diffs, bb.dim(), bb.field());
        CHECK(expected.dim() == p - 1);
        Subspace phi = frattini_subalgebra(bb, b);
        CHECK(phi == expected);

        // independent oracle: intersect the maximal members of the full
        // subalgebra list
        auto subs = enumerate_subalgebras(bb, b);
        Subspace meet = bb.full_space();
        for (const auto& s : subs) {
            if (s.dim() == bb.dim()) continue;
            bool maximal = true;
            for (const auto& t : subs)
                if (t.dim() < bb.dim() && t.dim() > s.dim() && t.contains(s)) maximal = false;
            if (maximal) meet = intersect(meet, s);
        }
        CHECK(phi == meet);
    }
}

TEST_CASE("chief series ascends through minimal ideals") {
    EnumerationBudget b;
    LieAlgebra l = catalog("ecomp", {{"p", "2"}});
    ChiefSeries cs = chief_series(l, b);
    REQUIRE(cs.length() == 3);
    CHECK(cs.terms.front().is_zero());
    CHECK(cs.terms.back() == l.full_space());
    for (int i = 1; i <= cs.length(); ++i) {
        const Subspace& lo = cs.terms[static_cast<std::size_t>(i - 1)];
        const Subspace& hi = cs.terms[static_cast<std::size_t>(i)];
        CHECK(lo.dim() < hi.dim());
        CHECK(hi.contains(lo));
        CHECK(is_ideal(l, hi));
        // minimality: the factor contains no intermediate ideal of L
        auto facts_ideals = enumerate_subalgebras(l, b, true);
        for (const auto& k : facts_ideals)
            if (hi.contains(k) && k.contains(lo)) CHECK((k == lo || k == hi));
    }
    // all three factors are complemented here, so I = {1,2,3}
    CHECK(cs.index_set == std::vector<int>{1, 2, 3});

    LieAlgebra h3 = catalog("heisenberg", {{"field", "gf2"}});
    ChiefSeries hs = chief_series(h3, b);
    REQUIRE(hs.length() == 3);
    CHECK(hs.factor_class[0] == FactorClass::frattini); // the center sits in phi
    CHECK(hs.index_set == std::vector<int>{2, 3});
}

TEST_CASE("prefrattini subalgebras") {
    EnumerationBudget b;
    // complemented algebra: Pi = {0}
    auto pf2 = prefrattini_subalgebras(catalog("ecomp", {{"p", "2"}}), b);
    REQUIRE(pf2.members.size() == 1);
    CHECK(pf2.members.front().is_zero());

    // nilpotent algebra: Pi = {phi} = {span(z)}
    LieAlgebra h3 = catalog("heisenberg", {{"field", "gf2"}});
    auto pfh = prefrattini_subalgebras(h3, b);
    REQUIRE(pfh.members.size() == 1);
    CHECK(pfh.members.front() == frattini_subalgebra(h3, b));

    // B = L^2 of the example: Pi(B) = {phi(B)}
    LieAlgebra bb = derived_of_ecomp(2);
    auto pfb = prefrattini_subalgebras(bb, b);
    REQUIRE(pfb.members.size() == 1);
    CHECK(pfb.members.front() == frattini_subalgebra(bb, b));

    // abelian: the only maximal-candidate intersections give 0
    auto pfa = prefrattini_subalgebras(catalog("abelian", {{"n", "2"}, {"field", "gf3"}}), b);
    REQUIRE(pfa.members.size() == 1);
    CHECK(pfa.members.front().is_zero());
}

TEST_CASE("prefrattini members do not depend on the chief series") {
    EnumerationBudget b;
    for (const char* name : {"ecomp", "heisenberg", "a3", "triangular"}) {
        LieAlgebra l = catalog(name);
        auto all = all_chief_series(l, b, 10);
        REQUIRE(!all.empty());
        auto base = prefrattini_from_series(l, all.front()).members;
        for (const auto& cs : all) CHECK(prefrattini_from_series(l, cs).members == base);
    }
}

TEST_CASE("cover and avoid") {
    EnumerationBudget b;
    LieAlgebra h3 = catalog("heisenberg", {{"field", "gf2"}});
    ChiefSeries cs = chief_series(h3, b);
    Subspace pi = prefrattini_subalgebras(h3, b).members.front();
    auto profile = cover_avoid_profile(pi, cs);
    for (int i = 1; i <= cs.length(); ++i) {
        if (cs.factor_class[static_cast<std::size_t>(i - 1)] == FactorClass::frattini)
            CHECK(profile[static_cast<std::size_t>(i - 1)] == CoverAvoid::covers);
        else
            CHECK(profile[static_cast<std::size_t>(i - 1)] == CoverAvoid::avoids);
    }
    // a subalgebra that does neither
    auto f = h3.field();
    Subspace diag = canonical_basis({iv(f, {1, 0, 1})}, 3, f);
    auto p2 = cover_avoid_profile(diag, cs);
    CHECK(std::count(p2.begin(), p2.end(), CoverAvoid::neither) +
              std::count(p2.begin(), p2.end(), CoverAvoid::covers) +
              std::count(p2.begin(), p2.end(), CoverAvoid::avoids) ==
          cs.length());
}

TEST_CASE("residuals") {
    EnumerationBudget b;
    // complemented: pi = 0
    CHECK(prefrattini_residual(catalog("ecomp", {{"p", "2"}}), b).is_zero());
    // nilpotent non-complemented: pi is the ideal closure of phi
    LieAlgebra h3 = catalog("heisenberg", {{"field", "gf2"}});
    CHECK(prefrattini_residual(h3, b) == frattini_subalgebra(h3, b));
    // B = L^2 of the example: pi(B) = phi(B)
    LieAlgebra bb = derived_of_ecomp(2);
    CHECK(prefrattini_residual(bb, b) == frattini_subalgebra(bb, b));

    // elementary residual contains pi and has elementary quotient
    for (const char* name : {"ecomp", "heisenberg", "a3"}) {
        LieAlgebra l = catalog(name);
        Subspace e = elementary_residual(l, b);
        CHECK(e.contains(prefrattini_residual(l, b)));
        InducedAlgebra q = induced_algebra(l, e, InducedMode::quotient);
        CHECK(is_elementary(q.algebra, b).value);
    }
}

TEST_CASE("nilpotent series") {
    EnumerationBudget b;
    LieAlgebra l = catalog("ecomp", {{"p", "2"}});
    SeriesChain ns = nilpotent_series(l, b);
    CHECK(ns.terms.front().is_zero());
    CHECK(ns.terms.back() == l.full_space());
    for (std::size_t i = 1; i < ns.terms.size(); ++i) {
        CHECK(is_ideal(l, ns.terms[i]));
        CHECK(ns.terms[i].contains(ns.terms[i - 1]));
        CHECK(ns.terms[i].dim() > ns.terms[i - 1].dim());
    }
    // first step is the nilradical
    CHECK(ns.terms[1] == nilradical(l, b));
    // nilpotent algebra: single step
    LieAlgebra h3 = catalog("heisenberg", {{"field", "gf3"}});
    CHECK(nilpotent_series(h3, b).terms.size() == 2);
}

TEST_CASE("cartan subalgebras") {
    EnumerationBudget b;
    LieAlgebra r2 = catalog("r2", {{"field", "gf3"}});
    auto cart = cartan_subalgebras(r2, b);
    REQUIRE(cart.size() == 3); // span(b), span(x+b), span(2x+b) over gf3
    for (const auto& c : cart) {
        CHECK(is_nilpotent_subalgebra(r2, c));
        CHECK(normalizer(r2, c) == c);
    }
    // a nilpotent algebra is its own unique cartan subalgebra
    LieAlgebra h3 = catalog("heisenberg", {{"field", "gf2"}});
    auto hc = cartan_subalgebras(h3, b);
    REQUIRE(hc.size() == 1);
    CHECK(hc.front() == h3.full_space());
}
