#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catalog.hpp"
#include "isoclinism.hpp"

using namespace lzb;

namespace {

const Field Q = Field::rationals();

Pair load_pair(const std::string& name) {
    const CatalogEntry* e = catalog_find(name);
    REQUIRE(e != nullptr);
    AlgebraFile af = e->file();
    LeibnizAlgebra alg = af.to_algebra();
    REQUIRE(check_leibniz(alg).ok());
    auto ideal = af.ideal_subspace();
    return ideal ? make_pair(alg, *ideal) : make_full_pair(alg);
}

Vector vec(const Field& f, std::initializer_list<long long> entries) {
    Vector v(f, entries.size());
    size_t i = 0;
    for (long long e : entries) v[i++] = Scalar::of_int(f, e);
    return v;
}

Subspace span(const Field& f, size_t n,
              std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<Vector> vs;
    for (auto& r : rows) {
        Vector v(f, n);
        size_t i = 0;
        for (long long e : r) v[i++] = Scalar::of_int(f, e);
        vs.push_back(v);
    }
    return Subspace::from_vectors(f, n, vs);
}

}  // namespace

TEST_CASE("lie center of the catalog pairs") {
    CHECK(load_pair("class2d").z_lie == span(Q, 3, {{0, 1, 0}}));  // span{a2}
    CHECK(load_pair("class2e").z_lie == span(Q, 3, {{0, 1, 0}}));  // span{g2}
    CHECK(load_pair("class3a").z_lie == Subspace::zero(Q, 3));
    CHECK(load_pair("A1").z_lie == span(Q, 5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    CHECK(load_pair("A7").z_lie == span(Q, 5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    CHECK(load_pair("L26").z_lie == span(Q, 4, {{0, 0, 1, 0}}));  // span{e3}
    CHECK(load_pair("L40").z_lie == span(Q, 4, {{0, 1, 0, 0}}));  // span{a2}
    // abelian full pair: everything is central
    CHECK(load_pair("abelian3").z_lie == Subspace::full(Q, 3));
}

TEST_CASE("lie commutator of the catalog pairs") {
    CHECK(load_pair("class2d").k_lie.space == span(Q, 3, {{1, 0, 0}}));
    CHECK(load_pair("class2e").k_lie.space == span(Q, 3, {{1, 0, 0}}));
    CHECK(load_pair("class3a").k_lie.space == span(Q, 3, {{1, 0, 0}}));
    CHECK(load_pair("A1").k_lie.space ==
          span(Q, 5, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    CHECK(load_pair("A7").k_lie.space ==
          span(Q, 5, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    CHECK(load_pair("abelian3").k_lie.space == Subspace::zero(Q, 3));
    // the L26 / L40 pair commutators differ from the printed tables: the
    // generators [m,x]+[x,m] never produce the [e4,e4]-square because e4 is
    // outside the ideal; the catalog carries the disputed flag
    CHECK(load_pair("L26").k_lie.space == span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(load_pair("L40").k_lie.space == span(Q, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
    for (const char* name : {"L26", "L40"}) {
        const CatalogEntry* e = catalog_find(name);
        bool found = false;
        for (const auto& c : e->claims)
            if (c.key == "k_lie") {
                CHECK(c.disputed);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("center and commutator are ideals inside m") {
    for (const auto& e : catalog()) {
        Pair p = load_pair(e.name);
        CHECK(is_two_sided_ideal(p.q, p.z_lie));
        CHECK(is_two_sided_ideal(p.q, p.k_lie.space));
        CHECK(p.m.space.contains(p.z_lie));
        CHECK(p.m.space.contains(p.k_lie.space));
    }
}

TEST_CASE("is_stem") {
    CHECK(is_stem(load_pair("class3a")));
    CHECK(is_stem(load_pair("A1")));
    CHECK(is_stem(load_pair("A7")));
    CHECK(is_stem(load_pair("lambda2")));
    CHECK(is_stem(load_pair("L40")));
    CHECK_FALSE(is_stem(load_pair("abelian3")));  // Z = all, K = 0
    // stemness of the L26 pair is exactly the disputed claim
    CHECK_FALSE(is_stem(load_pair("L26")));
    const CatalogEntry* e = catalog_find("L26");
    bool found = false;
    for (const auto& c : e->claims)
        if (c.key == "stem") {
            CHECK(c.disputed);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("lemma 4: two-sided center equals lie center on stem algebras") {
    for (const char* name : {"A1", "A7", "lambda2"}) {
        Pair full = load_pair(name);
        REQUIRE(is_stem(full));
        CHECK(two_sided_center(full.q) == full.z_lie);
    }
}

TEST_CASE("lie center agrees with the pointwise definition over GF(3)") {
    // oracle: test every vector of GF(3)^3 against the defining condition
    const Field F3 = Field::gf(3);
    size_t tested = 0;
    for (uint64_t seed = 1; seed <= 300 && tested < 25; ++seed) {
        LeibnizAlgebra alg(F3, 3);
        uint64_t s = seed * 0x9e3779b97f4a7c15ULL;
        for (int t = 0; t < 2; ++t) {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            alg.c[s % 27] = Scalar::residue(F3, 1 + s % 2);
        }
        if (!check_leibniz(alg).ok()) continue;
        ++tested;
        Subspace z = lie_center(alg, Subspace::full(F3, 3));
        for (uint64_t code = 0; code < 27; ++code) {
            Vector v(F3, 3);
            uint64_t c = code;
            for (size_t j = 0; j < 3; ++j) {
                v[j] = Scalar::residue(F3, c % 3);
                c /= 3;
            }
            bool central = true;
            for (size_t j = 0; j < 3 && central; ++j) {
                Vector ej(F3, 3);
                ej[j] = Scalar::one(F3);
                central = (alg.bracket(v, ej) + alg.bracket(ej, v)).is_zero();
            }
            CHECK(z.contains(v) == central);
        }
    }
    CHECK(tested >= 15);
}

TEST_CASE("lie center on Lie algebras is the whole algebra") {
    // symmetrized brackets vanish identically on a Lie algebra, so the
    // relative center is everything (not the ordinary center)
    LeibnizAlgebra h(Q, 3);
    h.cc(0, 1, 2) = Scalar::one(Q);
    h.cc(1, 0, 2) = -Scalar::one(Q);
    REQUIRE(check_leibniz(h).ok());
    CHECK(make_full_pair(h).z_lie == Subspace::full(Q, 3));
}

TEST_CASE("stem reduction") {
    SUBCASE("already stem: s = 0, output = input") {
        Pair a1 = load_pair("A1");
        StemReduction sr = stem_reduce(a1);
        CHECK(sr.s.space == Subspace::zero(Q, 5));
        CHECK(sr.reduced.q.tensor_equal(a1.q));
        CHECK(verify_certificate(a1, sr.reduced, sr.cert).ok);
    }
    SUBCASE("class 2(d) reduces over Q to the 2-dim algebra [a1,a3] = a1") {
        Pair p = load_pair("class2d");
        StemReduction sr = stem_reduce(p);
        CHECK(sr.s.space == span(Q, 3, {{0, 1, 0}}));  // span{a2}
        REQUIRE(sr.reduced.q.dim == 2);
        CHECK(sr.reduced.q.bracket_basis(0, 1) == vec(Q, {1, 0}));
        CHECK(sr.reduced.q.bracket_basis(1, 0).is_zero());
        CHECK(is_stem(sr.reduced));
        CHECK(verify_certificate(p, sr.reduced, sr.cert).ok);
    }
    SUBCASE("random GF(3) pairs: stem output with brute-force minimal dimension") {
        // deterministic sparse sampling of 3-dimensional tensors over GF(3),
        // filtered by the Leibniz check
        const Field F3 = Field::gf(3);
        size_t tested = 0;
        for (uint64_t seed = 1; seed <= 600 && tested < 40; ++seed) {
            LeibnizAlgebra alg(F3, 3);
            uint64_t s = seed * 0x9e3779b97f4a7c15ULL;
            for (int t = 0; t < 2; ++t) {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                size_t pos = s % 27;
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                alg.c[pos] = Scalar::residue(F3, 1 + s % 2);
            }
            if (!check_leibniz(alg).ok()) continue;
            Pair p = make_full_pair(alg);
            ++tested;
            StemReduction sr = stem_reduce(p);
            CHECK(is_stem(sr.reduced));
            CHECK(subspace_intersect(sr.s.space, p.k_lie.space).dim() == 0);
            CHECK(verify_certificate(p, sr.reduced, sr.cert).ok);
            // oracle: maximal admissible ideal by enumeration over all
            // subspaces of m
            size_t best = 0;
            enumerate_subspaces(F3, 3, [&](const Subspace& sub) {
                if (p.m.space.contains(sub) && is_two_sided_ideal(p.q, sub) &&
                    subspace_intersect(sub, p.k_lie.space).dim() == 0)
                    best = std::max(best, sub.dim());
                return true;
            });
            CHECK(sr.reduced.q.dim == p.q.dim - best);
        }
        CHECK(tested >= 20);
    }
}

TEST_CASE("epsilon condition") {
    SUBCASE("dim-2 lambda algebra passes both modes with eps = 1") {
        Pair p = load_pair("lambda2");
        EpsilonReport basis =
            epsilon_condition(p.q, Subspace::full(Q, 2), EpsilonMode::BasisPairs);
        REQUIRE(basis.pass);
        REQUIRE(basis.entries.size() == 1);
        CHECK(basis.entries[0].i == 1);
        CHECK(basis.entries[0].j == 1);
        CHECK(basis.entries[0].eps.is_one());
        EpsilonReport all =
            epsilon_condition(p.q, Subspace::full(Q, 2), EpsilonMode::AllElements);
        CHECK(all.pass);
    }
    SUBCASE("L16 passes basis-pairwise with the printed eps values") {
        Pair p = load_pair("L16");
        EpsilonReport rep = epsilon_condition(p.q, Subspace::full(Q, 4), EpsilonMode::BasisPairs);
        REQUIRE(rep.pass);
        REQUIRE(rep.entries.size() == 3);
        CHECK(rep.entries[0].i == 0);  // eps_11 = 1
        CHECK(rep.entries[0].j == 0);
        CHECK(rep.entries[0].eps == Scalar::of_int(Q, 1));
        CHECK(rep.entries[1].i == 1);  // eps_24 = -1
        CHECK(rep.entries[1].j == 3);
        CHECK(rep.entries[1].eps == Scalar::of_int(Q, -1));
        CHECK(rep.entries[2].i == 3);  // eps_44 = 1
        CHECK(rep.entries[2].j == 3);
        CHECK(rep.entries[2].eps == Scalar::of_int(Q, 1));
    }
    SUBCASE("L16 fails the all-elements mode; the documented pair witnesses it") {
        Pair p = load_pair("L16");
        EpsilonReport rep =
            epsilon_condition(p.q, Subspace::full(Q, 4), EpsilonMode::AllElements);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(rep.witness.has_value());
        CHECK_FALSE(rep.witness->bxy.is_zero());
        // x = a1+a4, y = a1+a2 bracket to a3-a2 and a3+a2, not parallel
        Vector x = vec(Q, {1, 0, 0, 1});
        Vector y = vec(Q, {1, 1, 0, 0});
        CHECK(p.q.bracket(x, y) == vec(Q, {0, -1, 1, 0}));
        CHECK(p.q.bracket(y, x) == vec(Q, {0, 1, 1, 0}));
    }
    SUBCASE("A7 fails already on basis pairs") {
        Pair p = load_pair("A7");
        EpsilonReport rep = epsilon_condition(p.q, Subspace::full(Q, 5), EpsilonMode::BasisPairs);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(rep.witness.has_value());
        // [g1,g2] = g4 against [g2,g1] = g5
        CHECK(rep.witness->x == vec(Q, {1, 0, 0, 0, 0}));
        CHECK(rep.witness->y == vec(Q, {0, 1, 0, 0, 0}));
    }
    SUBCASE("recorded entries satisfy the defining equation exactly") {
        for (const char* name : {"lambda2", "L16", "class2d", "L40"}) {
            Pair p = load_pair(name);
            EpsilonReport rep = epsilon_condition(p.q, Subspace::full(Q, p.q.dim),
                                                  EpsilonMode::BasisPairs);
            if (!rep.pass) continue;
            for (const auto& e : rep.entries) {
                Vector u(Q, p.q.dim), v(Q, p.q.dim);
                u[e.i] = Scalar::one(Q);
                v[e.j] = Scalar::one(Q);
                Vector uv = p.q.bracket(u, v), vu = p.q.bracket(v, u);
                CHECK_FALSE(uv.is_zero());
                CHECK_FALSE(vu.is_zero());
                CHECK(uv == vu.scaled(e.eps));
            }
        }
    }
    SUBCASE("prime-field ratios") {
        // over GF(5): [e1,e2] = 2 e3, [e2,e1] = 3 e3 gives eps = 2 * 3^{-1} = 4
        const Field F5 = Field::gf(5);
        LeibnizAlgebra alg(F5, 3);
        alg.cc(0, 1, 2) = Scalar::residue(F5, 2);
        alg.cc(1, 0, 2) = Scalar::residue(F5, 3);
        REQUIRE(check_leibniz(alg).ok());
        EpsilonReport rep =
            epsilon_condition(alg, Subspace::full(F5, 3), EpsilonMode::BasisPairs);
        REQUIRE(rep.pass);
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0].eps == Scalar::residue(F5, 4));
    }
    SUBCASE("restriction to a declared ideal") {
        Pair p = load_pair("L26");
        // inside m = span{e1,e2,e3} all brackets vanish, so the condition
        // holds trivially in both modes
        CHECK(epsilon_condition(p.q, p.m.space, EpsilonMode::BasisPairs).pass);
        CHECK(epsilon_condition(p.q, p.m.space, EpsilonMode::AllElements).pass);
    }
}

TEST_CASE("commutator map") {
    Pair a1 = load_pair("A1");
    // quotient basis of A1/Z is (a1, a2, a3)
    CHECK(commutator_map(a1, vec(Q, {0, 1, 0}), vec(Q, {1, 0, 0})) ==
          vec(Q, {0, 0, 0, 1, 0}));                                        // C(a2bar, a1bar) = a4
    CHECK(commutator_map(a1, vec(Q, {1, 1, 0}), Vector(Q, 3)).is_zero());  // C(x, 0) = 0
    Pair c2e = load_pair("class2e");
    // quotient basis of 2(e)/Z is (g1, g3); g2bar = 0; C(g2bar, g3bar) = 0
    CHECK(commutator_map(c2e, Vector(Q, 2), vec(Q, {0, 1})).is_zero());
    // and directly: [g2,g3] + [g3,g2] = g2 - g2 = 0
    CHECK((c2e.q.bracket(vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1})) +
           c2e.q.bracket(vec(Q, {0, 0, 1}), vec(Q, {0, 1, 0})))
              .is_zero());
}
