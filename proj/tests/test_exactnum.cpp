#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ellbound/factor.hpp"
#include "ellbound/hensel.hpp"
#include "ellbound/numberfield.hpp"

using namespace ellbound;

namespace {

FieldRef gaussian() {
    return NumberField::make(ZPoly(std::vector<Int>{Int(1), Int(0), Int(1)}));  // t^2+1
}

FieldRef sqrt2_field() {
    return NumberField::make(ZPoly(std::vector<Int>{Int(-2), Int(0), Int(1)}));  // t^2-2
}

AlgebraicNumber elem(const FieldRef& f, std::initializer_list<long> coords) {
    std::vector<Rat> c;
    for (long v : coords) c.emplace_back(v);
    return AlgebraicNumber(f, std::move(c));
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    return Rat(Int(num(rng)), Int(den(rng)));
}

AlgebraicNumber random_elem(const FieldRef& f, std::mt19937_64& rng) {
    std::vector<Rat> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(random_rat(rng));
    return AlgebraicNumber(f, std::move(c));
}

} // namespace

TEST_CASE("Int and Rat basics") {
    Int a("123456789012345678901234567890");
    CHECK(a.str() == "123456789012345678901234567890");
    CHECK((Int(2) + Int(3)) * Int(4) == Int(20));
    CHECK(Int::gcd(Int(48), Int(36)) == Int(12));
    CHECK(Int(144).is_perfect_square());
    CHECK_FALSE(Int(145).is_perfect_square());

    Rat r(Int(2), Int(6));
    CHECK(r.str() == "1/3");
    CHECK(Rat("4/6") == Rat(Int(2), Int(3)));
    CHECK((Rat(2) / Rat(3) + Rat(1) / Rat(6)) == Rat(Int(5), Int(6)));
    CHECK_THROWS_AS(Rat(1) / Rat(0), division_by_zero);

    Rat lo, hi;
    sqrt_bounds(Rat(2), 64, lo, hi);
    CHECK(lo * lo <= Rat(2));
    CHECK(hi * hi >= Rat(2));
    CHECK(hi - lo <= Rat(Int(1), Int::pow2(64)));
}

TEST_CASE("polynomial resultant and discriminant") {
    // disc(t^2+1) = -4
    ZPoly m(std::vector<Int>{Int(1), Int(0), Int(1)});
    CHECK(zp_discriminant(m) == Int(-4));
    // disc(t^2-2) = 8
    ZPoly m2(std::vector<Int>{Int(-2), Int(0), Int(1)});
    CHECK(zp_discriminant(m2) == Int(8));
    // disc(t^3 - t) = 4 (roots 0, 1, -1)
    ZPoly m3(std::vector<Int>{Int(0), Int(-1), Int(0), Int(0)});
    m3.c.push_back(Int(1));
    m3.trim();
    CHECK(zp_discriminant(ZPoly(std::vector<Int>{Int(0), Int(-1), Int(0), Int(1)})) == Int(4));
}

TEST_CASE("mod-p factorization") {
    // t^2+1 mod 5 = (t-2)(t+2)
    ModPoly f(5, {1, 0, 1});
    auto facs = mp_factor(f);
    REQUIRE(facs.size() == 2);
    CHECK(facs[0].f.deg() == 1);
    CHECK(facs[1].f.deg() == 1);
    // t^2+1 irreducible mod 3
    auto facs3 = mp_factor(ModPoly(3, {1, 0, 1}));
    REQUIRE(facs3.size() == 1);
    CHECK(facs3[0].f.deg() == 2);
    // t^2+1 = (t+1)^2 mod 2
    auto facs2 = mp_factor(ModPoly(2, {1, 0, 1}));
    REQUIRE(facs2.size() == 1);
    CHECK(facs2[0].f.deg() == 1);
    CHECK(facs2[0].mult == 2);
}

TEST_CASE("irreducibility over Q") {
    // x^4+1: reducible mod every prime, irreducible over Q
    CHECK(irreducible_over_Q(ZPoly(std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(1)}))
              .irreducible);
    // x^4+4 = (x^2-2x+2)(x^2+2x+2)
    auto rep = irreducible_over_Q(ZPoly(std::vector<Int>{Int(4), Int(0), Int(0), Int(0), Int(1)}));
    CHECK_FALSE(rep.irreducible);
    CHECK(rep.witness_factor.deg() == 2);
    // x^2 - 3x + 2 = (x-1)(x-2)
    auto rep2 = irreducible_over_Q(ZPoly(std::vector<Int>{Int(2), Int(-3), Int(1)}));
    CHECK_FALSE(rep2.irreducible);
    // x^3 - 2 irreducible
    CHECK(irreducible_over_Q(ZPoly(std::vector<Int>{Int(-2), Int(0), Int(0), Int(1)})).irreducible);
}

TEST_CASE("NumberField construction validates") {
    CHECK_THROWS_AS(NumberField::make(ZPoly(std::vector<Int>{Int(2), Int(-3), Int(1)})),
                    reducible_polynomial);
    auto f = gaussian();
    CHECK(f->degree() == 2);
    CHECK(f->poly_disc() == Int(4));
}

TEST_CASE("field arithmetic examples") {
    auto Qi = gaussian();
    auto i = AlgebraicNumber::generator(Qi);
    auto one = AlgebraicNumber(Qi, Rat(1));

    // (1+i)(1-i) = 2
    CHECK((one + i) * (one - i) == AlgebraicNumber(Qi, Rat(2)));
    // 1/(1+i) = (1-i)/2
    auto inv = inverse(one + i);
    CHECK(inv == elem(Qi, {1, -1}) * Rat(Int(1), Int(2)));
    CHECK(inv * (one + i) == one);
    // rationals: 2/3 + 1/6 = 5/6 through the degree-1 field
    auto Q = NumberField::rationals();
    auto x = AlgebraicNumber(Q, Rat(Int(2), Int(3)));
    auto y = AlgebraicNumber(Q, Rat(Int(1), Int(6)));
    CHECK((x + y).rational_value() == Rat(Int(5), Int(6)));
}

TEST_CASE("norm and minimal polynomial examples") {
    auto Qi = gaussian();
    auto one_plus_i = elem(Qi, {1, 1});
    auto [n, mp] = norm_and_minpoly(one_plus_i);
    CHECK(n == Rat(2));
    CHECK(mp == QPoly(std::vector<Rat>{Rat(2), Rat(-2), Rat(1)}));  // t^2-2t+2

    auto five = AlgebraicNumber(Qi, Rat(5));
    auto [n5, mp5] = norm_and_minpoly(five);
    CHECK(n5 == Rat(25));
    CHECK(mp5 == QPoly(std::vector<Rat>{Rat(-5), Rat(1)}));  // t-5

    auto s2 = AlgebraicNumber::generator(sqrt2_field());
    auto [ns, mps] = norm_and_minpoly(s2);
    CHECK(ns == Rat(-2));
    CHECK(mps == QPoly(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)}));
}

TEST_CASE("field arithmetic properties (random)") {
    std::mt19937_64 rng(20240811);
    auto Qi = gaussian();
    auto K = NumberField::make(ZPoly(std::vector<Int>{Int(-1), Int(-1), Int(0), Int(1)}));  // t^3-t-1
    for (FieldRef f : {Qi, K}) {
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_elem(f, rng);
            auto b = random_elem(f, rng);
            CHECK((a + b) - b == a);
            if (!b.is_zero()) CHECK((a * b) / b == a);
            // norm multiplicativity
            CHECK(field_norm(a * b) == field_norm(a) * field_norm(b));
        }
    }
}

TEST_CASE("minpoly annihilates the multiplication matrix") {
    std::mt19937_64 rng(7);
    auto K = NumberField::make(ZPoly(std::vector<Int>{Int(-1), Int(-1), Int(0), Int(1)}));
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_elem(K, rng);
        QPoly mp = minimal_polynomial(a);
        // evaluate mp at a inside the field: must be zero
        AlgebraicNumber acc(K, Rat(0));
        AlgebraicNumber pw(K, Rat(1));
        for (int i = 0; i <= mp.deg(); ++i) {
            acc = acc + pw * mp.c[i];
            pw = pw * a;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("factorize basics") {
    auto f = factorize(Int(600851475143L));
    Int prod(1);
    for (auto& [p, e] : f)
        for (int i = 0; i < e; ++i) prod *= p;
    CHECK(prod == Int(600851475143L));
    auto g = factorize(Int(-72));
    CHECK(g[Int(2)] == 3);
    CHECK(g[Int(3)] == 2);
    CHECK_THROWS_AS(factorize(Int(0)), zero_argument);
}
