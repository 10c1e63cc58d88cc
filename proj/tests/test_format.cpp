#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catalog.hpp"
#include "format.hpp"

using namespace lzb;

namespace {

const Field Q = Field::rationals();

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 1) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

AlgebraFile random_file(Rng& rng) {
    AlgebraFile af;
    switch (rng.next() % 4) {
        case 0: af.field = Field::rationals(); break;
        case 1: af.field = Field::gf(2); break;
        case 2: af.field = Field::gf(3); break;
        default: af.field = Field::gf(7); break;
    }
    af.dim = 1 + rng.next() % 5;
    af.tensor.assign(af.dim * af.dim * af.dim, Scalar::zero(af.field));
    if (rng.next() % 2) {
        for (size_t i = 0; i < af.dim; ++i)
            af.names.push_back("x" + std::to_string(i + 1));
    }
    size_t relations = rng.next() % (2 * af.dim + 1);
    for (size_t t = 0; t < relations; ++t) {
        size_t i = rng.next() % af.dim, j = rng.next() % af.dim, k = rng.next() % af.dim;
        Scalar c = af.field.is_rationals()
                       ? Scalar::rational(BigInt(rng.int_in(-7, 7)), BigInt(rng.int_in(1, 5)))
                       : Scalar::residue(af.field, rng.next() % af.field.p);
        af.tensor[(i * af.dim + j) * af.dim + k] = c;
    }
    if (rng.next() % 3 == 0) {
        af.has_ideal = true;
        size_t gens = 1 + rng.next() % 2;
        for (size_t g = 0; g < gens; ++g) {
            Vector v(af.field, af.dim);
            for (size_t i = 0; i < af.dim; ++i)
                v[i] = af.field.is_rationals()
                           ? Scalar::of_int(af.field, rng.int_in(-2, 2))
                           : Scalar::residue(af.field, rng.next() % af.field.p);
            af.ideal_gens.push_back(v);
        }
    }
    if (rng.next() % 4 == 0) af.meta.emplace_back("origin", "randomized");
    return af;
}

}  // namespace

TEST_CASE("parsing the grammar") {
    SUBCASE("the class 2(d) one-liner") {
        AlgebraFile af = parse_algebra_file("field Q\ndim 3\n[1,3] = 1*1\n");
        LeibnizAlgebra alg = af.to_algebra();
        CHECK(alg.dim == 3);
        CHECK(alg.cc(0, 2, 0).is_one());
        CHECK(check_leibniz(alg).kind == LeibnizKind::Right);
    }
    SUBCASE("empty relation list parses to the abelian algebra") {
        AlgebraFile af = parse_algebra_file("field GF 5\ndim 4\n");
        for (const Scalar& c : af.tensor) CHECK(c.is_zero());
    }
    SUBCASE("names, comments, rational coefficients, ideal") {
        AlgebraFile af = parse_algebra_file(
            "# a comment line\n"
            "field Q\n"
            "dim 3\n"
            "basis u v w\n"
            "[u,w] = 1/2*u + -2*v   # trailing comment\n"
            "ideal 1*u + 1*v; w\n"
            "meta origin unit-test\n");
        LeibnizAlgebra alg = af.to_algebra();
        CHECK(alg.cc(0, 2, 0) == Scalar::rational(BigInt(1), BigInt(2)));
        CHECK(alg.cc(0, 2, 1) == Scalar::of_int(Q, -2));
        REQUIRE(af.has_ideal);
        auto ideal = af.ideal_subspace();
        REQUIRE(ideal.has_value());
        CHECK(ideal->dim() == 2);
        REQUIRE(af.meta.size() == 1);
        CHECK(af.meta[0].first == "origin");
    }
    SUBCASE("line-numbered errors") {
        try {
            parse_algebra_file("field Q\ndim 2\n[1,5] = 1*1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
        CHECK_THROWS_AS((void)parse_algebra_file("field GF 6\ndim 2\n"), ParseError);
        CHECK_THROWS_AS((void)parse_algebra_file("dim 2\n[1,1] = 1*1\n"), ParseError);
    }
}

TEST_CASE("serialize round trips") {
    SUBCASE("the A7 entry survives a round trip") {
        AlgebraFile af = catalog_find("A7")->file();
        AlgebraFile again = parse_algebra_file(serialize_algebra_file(af));
        CHECK(af.semantic_equal(again));
        // and serialization is a fixed point from then on
        CHECK(serialize_algebra_file(af) == serialize_algebra_file(again));
    }
    SUBCASE("500 randomized files") {
        Rng rng(2024);
        for (int t = 0; t < 500; ++t) {
            AlgebraFile af = random_file(rng);
            std::string text = serialize_algebra_file(af);
            AlgebraFile parsed = parse_algebra_file(text);
            CHECK(af.semantic_equal(parsed));
            CHECK(serialize_algebra_file(parsed) == text);
        }
    }
}

TEST_CASE("catalog shape") {
    CHECK(catalog().size() == 10);
    const CatalogEntry* a1 = catalog_find("A1");
    REQUIRE(a1 != nullptr);
    LeibnizAlgebra alg = a1->file().to_algebra();
    size_t nonzero = 0;
    for (size_t i = 0; i < alg.dim; ++i)
        for (size_t j = 0; j < alg.dim; ++j)
            if (!alg.bracket_basis(i, j).is_zero()) ++nonzero;
    CHECK(alg.dim == 5);
    CHECK(nonzero == 3);  // [a1,a1]=a3, [a2,a1]=a4, [a1,a3]=a5
    CHECK(catalog_find("abelian3") != nullptr);
    CHECK(catalog_find("unknown") == nullptr);
}

TEST_CASE("certificate files") {
    std::string text =
        "# certificate\n"
        "alpha:\n"
        "1 0 0\n"
        "0 1 0\n"
        "0 0 1\n"
        "beta:\n"
        "1 0 0\n"
        "0 1 1\n"
        "0 0 1\n";
    CertificateFile cf = parse_certificate_file(text, Q);
    REQUIRE(cf.alpha_rows.size() == 3);
    REQUIRE(cf.beta_rows.size() == 3);
    Certificate cert = certificate_from_file(cf, Q, 3, 3, 3, 3, CertMode::Strict);
    CHECK(cert.alpha.mat == Matrix::identity(Q, 3));
    // rows are images: beta(e2) = e2 + e3
    CHECK(cert.beta.image_of_basis(1)[1].is_one());
    CHECK(cert.beta.image_of_basis(1)[2].is_one());
    CHECK_THROWS_AS((void)certificate_from_file(cf, Q, 4, 3, 3, 3, CertMode::Strict), Error);
    CHECK_THROWS_AS((void)parse_certificate_file("1 0\n", Q), ParseError);
}

TEST_CASE("factor set files") {
    std::string text =
        "field Q\n"
        "base dim 2\n"
        "quotient dim 1\n"
        "f [1,1] = 2*1 + 1*2\n"
        "L 1\n"
        "0 0\n"
        "1 0\n"
        "convention right\n";
    FactorSetData d = parse_factorset_file(text);
    CHECK(d.base.dim == 2);
    CHECK(d.quot.dim == 1);
    CHECK(d.f_at(0, 0)[0] == Scalar::of_int(Q, 2));
    CHECK(d.L[0].at(1, 0).is_one());
    CHECK(d.convention == LeibnizKind::Right);
    // serialize -> parse preserves the data
    FactorSetData d2 = parse_factorset_file(serialize_factorset_file(d));
    CHECK(d2.f_at(0, 0) == d.f_at(0, 0));
    CHECK(d2.L[0] == d.L[0]);
    CHECK(d2.R[0] == d.R[0]);
}

TEST_CASE("malformed inputs fail as parse errors, never crashes") {
    CHECK_THROWS_AS((void)parse_algebra_file("field Q\ndim 2\n[1,2] = *2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_algebra_file("field Q\ndim 2\n[1,2] = 1*\n"), ParseError);
    CHECK_THROWS_AS((void)parse_factorset_file("field Q\nbase dim\nquotient dim 1\n"),
                    ParseError);
    CHECK_THROWS_AS((void)parse_factorset_file("field Q\nbase dim x\nquotient dim 1\n"),
                    ParseError);
    CHECK_THROWS_AS(
        (void)parse_factorset_file("field Q\nbase dim 1\nquotient dim 1\nL x\n1\n"),
        ParseError);
}

TEST_CASE("eta files") {
    LinearMap eta = parse_eta_file("eta:\n1 0\n0 1\n", Q, 2, 2);
    CHECK(eta.mat == Matrix::identity(Q, 2));
    CHECK_THROWS_AS((void)parse_eta_file("1 0\n", Q, 1, 2), ParseError);
}
