#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ffcf;
using test::f3;
using test::f5;
using test::pv;

TEST_CASE("degree conventions") {
    const FieldCtx* F = f3();
    Poly z = Poly::zero(F);
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());  // deg(0) = -infinity
    CHECK(pv(F, {1, 0, 1}).deg() == 2);
    CHECK(pv(F, {0, 0, 0}).is_zero());
}

TEST_CASE("divmod examples") {
    const FieldCtx* F = f3();
    // (Y^3 + 1, Y) -> (Y^2, 1)
    auto [q1, r1] = poly_divmod(pv(F, {1, 0, 0, 1}), Poly::y(F));
    CHECK(q1 == pv(F, {0, 0, 1}));
    CHECK(r1 == pv(F, {1}));
    // (Y^2 + 1, Y + 1) over F_3 -> (Y + 2, 2)
    auto [q2, r2] = poly_divmod(pv(F, {1, 0, 1}), pv(F, {1, 1}));
    CHECK(q2 == pv(F, {2, 1}));
    CHECK(r2 == pv(F, {2}));
    // zero dividend
    auto [q3, r3] = poly_divmod(Poly::zero(F), Poly::y(F));
    CHECK(q3.is_zero());
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(poly_divmod(Poly::y(F), Poly::zero(F)), error);
}

TEST_CASE("divmod round-trips on seeded random pairs") {
    std::mt19937_64 rng(20260810);
    for (const FieldCtx* F : {f3(), f5()}) {
        for (int i = 0; i < 500; ++i) {
            Poly a = test::random_poly(rng, F, 9);
            Poly b = test::random_poly(rng, F, 5, true);
            auto [q, r] = poly_divmod(a, b);
            CHECK(q * b + r == a);
            if (!r.is_zero()) CHECK(r.deg() < b.deg());
        }
    }
}

TEST_CASE("gcd examples and properties") {
    const FieldCtx* F = f3();
    CHECK(poly_gcd(pv(F, {1, 2, 1}), pv(F, {1, 1})) == pv(F, {1, 1}));  // (Y+1)^2
    CHECK(poly_gcd(pv(F, {1, 0, 1}), pv(F, {2, 0, 1})) == Poly::one(F));
    // gcd with zero is the monic scalar multiple
    CHECK(poly_gcd(pv(F, {0, 2}), Poly::zero(F)) == Poly::y(F));
    CHECK_THROWS_AS(poly_gcd(Poly::zero(F), Poly::zero(F)), error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Poly a = test::random_poly(rng, F, 4, true);
        Poly b = test::random_poly(rng, F, 4, true);
        Poly c = test::random_poly(rng, F, 3, true);
        Poly g = poly_gcd(a * c, b * c);
        CHECK(g.is_monic());
        CHECK(poly_divmod(a * c, g).remainder.is_zero());
        CHECK(poly_divmod(b * c, g).remainder.is_zero());
        // any common divisor divides the gcd
        CHECK(poly_divmod(g, poly_gcd(c, g)).remainder.is_zero());
    }
}

namespace {

// oracle: exhaustive trial division by monic polynomials up to half degree
bool irreducible_by_trial_division(const Poly& P) {
    const FieldCtx* F = P.ctx();
    Poly m = P.monic();
    for (int d = 1; 2 * d <= m.deg(); ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F->q();
        for (uint64_t k = 0; k < count; ++k) {
            std::vector<uint64_t> vals;
            uint64_t t = k;
            for (int i = 0; i < d; ++i) {
                vals.push_back(t % F->q());
                t /= F->q();
            }
            vals.push_back(1);
            if (poly_divmod(m, Poly::from_values(F, vals)).remainder.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("irreducibility: examples and oracle agreement for deg <= 4") {
    const FieldCtx* F = f3();
    CHECK(poly_is_irreducible(Poly::y(F)));
    CHECK(poly_is_irreducible(pv(F, {1, 0, 1})));        // Y^2+1 rootless mod 3
    CHECK_FALSE(poly_is_irreducible(pv(F, {2, 0, 1})));  // Y^2+2 = (Y+1)(Y+2)
    CHECK_THROWS_AS(poly_is_irreducible(Poly::one(F)), error);
    CHECK_THROWS_AS(poly_is_irreducible(Poly::zero(F)), error);

    for (const FieldCtx* K : {f3(), f5()}) {
        for (int deg = 1; deg <= 4; ++deg) {
            for (const Poly& P : [&] {
                     std::vector<Poly> all;
                     uint64_t count = 1;
                     for (int i = 0; i < deg; ++i) count *= K->q();
                     for (uint64_t k = 0; k < count; ++k) {
                         std::vector<uint64_t> vals;
                         uint64_t t = k;
                         for (int i = 0; i < deg; ++i) {
                             vals.push_back(t % K->q());
                             t /= K->q();
                         }
                         vals.push_back(1);
                         all.push_back(Poly::from_values(K, vals));
                     }
                     return all;
                 }()) {
                CHECK(poly_is_irreducible(P) == irreducible_by_trial_division(P));
            }
        }
    }
}

TEST_CASE("squarefree split: examples") {
    const FieldCtx* F = f3();
    auto s1 = poly_squarefree_split(pv(F, {1, 0, 1}));
    CHECK(s1.s == pv(F, {1, 0, 1}));
    CHECK(s1.m == Poly::one(F));
    CHECK(s1.unit.is_one());

    auto s2 = poly_squarefree_split(pv(F, {0, 0, 1, 0, 1}));  // Y^4 + Y^2 = Y^2 (Y^2+1)
    CHECK(s2.s == pv(F, {1, 0, 1}));
    CHECK(s2.m == Poly::y(F));
    CHECK(s2.unit.is_one());

    auto s3 = poly_squarefree_split(pv(F, {1, 2, 1}));  // (Y+1)^2
    CHECK(s3.s == Poly::one(F));
    CHECK(s3.m == pv(F, {1, 1}));
    CHECK(s3.unit.is_one());

    CHECK_THROWS_AS(poly_squarefree_split(Poly::zero(F)), error);
}

TEST_CASE("squarefree split: reconstruction on seeded products") {
    std::mt19937_64 rng(42);
    for (const FieldCtx* F : {f3(), f5()}) {
        for (int i = 0; i < 300; ++i) {
            Poly D = test::random_poly(rng, F, 3, true) * test::random_poly(rng, F, 2, true);
            Poly sq = test::random_poly(rng, F, 2, true);
            D = D * sq * sq;
            auto sp = poly_squarefree_split(D);
            CHECK(sp.s.is_monic());
            CHECK(sp.m.is_monic());
            CHECK(sp.s * sp.m * sp.m * Poly::constant(sp.unit) == D);
            if (sp.s.deg() > 0) CHECK(poly_gcd(sp.s, sp.s.derivative()).deg() == 0);
        }
        // p-th powers exercise the wild branch: (Y+1)^p
        Poly base = pv(F, {1, 1});
        Poly D = Poly::one(F);
        for (uint32_t i = 0; i < F->p(); ++i) D = D * base;
        auto sp = poly_squarefree_split(D);
        CHECK(sp.s * sp.m * sp.m * Poly::constant(sp.unit) == D);
    }
}

TEST_CASE("karatsuba threshold agrees with schoolbook") {
    std::mt19937_64 rng(99);
    const FieldCtx* F = f3();
    Poly a = test::random_poly(rng, F, 200, true);
    Poly b = test::random_poly(rng, F, 150, true);
    // distributivity cross-check at sizes above the cutoff
    Poly c = test::random_poly(rng, F, 180, true);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("literals and printing") {
    const FieldCtx* F = f3();
    CHECK(parse_poly(F, "1,0,1") == pv(F, {1, 0, 1}));
    CHECK(parse_poly(F, "1,0,1").str() == "Y^2+1");
    CHECK(pv(F, {0, 2}).str() == "2*Y");
    CHECK(pv(F, {2, 1, 2}).str() == "2*Y^2+Y+2");
    CHECK(Poly::zero(F).str() == "0");
    CHECK_THROWS_AS(parse_poly(F, "3,0"), error);  // coefficient out of range
    CHECK_THROWS_AS(parse_poly(F, "x"), error);
    CHECK_THROWS_AS(parse_poly(F, ""), error);
}
