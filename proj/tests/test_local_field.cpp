#include "doctest.h"

#include <random>
#include <vector>

#include "gsm/errors.hpp"
#include "gsm/local_field.hpp"

using namespace gsm;

namespace {

std::vector<BigInt> ipoly(std::initializer_list<long> cs) {
    return std::vector<BigInt>(cs.begin(), cs.end());
}

bool nu_at_least(const LocalField& K, const FieldElement& x, long k) {
    Valuation v = K.nu(x);
    return v.is_exact() ? v.value() >= k : v.bound() >= k;
}

} // namespace

TEST_CASE("trivial extension is the base field") {
    LocalField K = LocalField::construct(5, ipoly({-7, 1}), 40);
    CHECK(K.degree() == 1);
    CHECK(K.e() == 1);
    CHECK(K.f() == 1);
    CHECK(K.residue_field().order() == 5);
    CHECK(K.uniformizer_form().a == 0);
    CHECK(K.uniformizer_form().b == 1);

    // The defining root is 7 in Q_5.
    CHECK(K.gen().agrees_with(K.from_integer(7)));

    CHECK(K.nu(K.from_integer(75)) == Valuation::exact(2));
    CHECK(K.nu(K.uniformizer()) == Valuation::exact(1));
    CHECK(K.residue(K.from_integer(13)).index() == 3);
    CHECK(K.residue(K.from_integer(7)).index() == 2);
    CHECK_THROWS_AS(K.residue(K.from_rational(1, 5)), NotIntegral);

    for (long i = 0; i < 5; ++i) {
        ResidueElement c = K.residue_field().from_index(i);
        CHECK(K.residue(K.lift(c)).index() == i);
    }
}

TEST_CASE("unramified quadratic over Q_5") {
    LocalField K = LocalField::construct(5, ipoly({-2, 0, 1}), 40);
    CHECK(K.e() == 1);
    CHECK(K.f() == 2);
    CHECK(K.alpha_valuation() == 0);
    CHECK(K.uniformizer_form().a == 0);
    CHECK(K.uniformizer_form().b == 1);
    CHECK(K.residue_field().order() == 25);

    CHECK(K.nu(K.from_integer(5)) == Valuation::exact(1));
    CHECK(K.nu(K.gen()) == Valuation::exact(0));

    // The residue of the defining root squares to 2 in GF(25).
    ResidueElement r = K.residue(K.gen());
    CHECK(r.mul(r) == K.residue_field().from_coeffs({2, 0}));

    // The inertial generator satisfies the residue modulus y^2 + 2 deeply.
    FieldElement g = K.inertial_gen();
    FieldElement m = g.mul(g).add(K.from_integer(2));
    CHECK(nu_at_least(K, m, 30));

    for (long i = 0; i < 25; ++i) {
        ResidueElement c = K.residue_field().from_index(i);
        CHECK(K.residue(K.lift(c)).index() == i);
    }

    // Both valuation routes agree on a spread of elements.
    std::vector<FieldElement> samples = {
        K.from_integer(50),
        K.gen().add(K.one()),
        K.gen().mul_integer(5).add(K.from_integer(3)),
        K.gen().mul(K.gen()).sub(K.from_integer(7)),
        K.from_rational(3, 25),
    };
    for (const auto& x : samples) CHECK(K.nu(x) == K.nu_via_norm(x));
}

TEST_CASE("Eisenstein quadratic over Q_5") {
    LocalField K = LocalField::construct(5, ipoly({-5, 0, 1}), 40);
    CHECK(K.e() == 2);
    CHECK(K.f() == 1);
    CHECK(K.alpha_valuation() == 1);
    CHECK(K.uniformizer_form().a == 1);
    CHECK(K.uniformizer_form().b == 0);

    CHECK(K.nu(K.gen()) == Valuation::exact(1));
    CHECK(K.nu(K.from_integer(5)) == Valuation::exact(2));
    CHECK(K.residue(K.gen()).is_zero());
    CHECK(K.residue(K.from_integer(7)).index() == 2);

    // nu(a + b*alpha) = min(2 v_p(a), 2 v_p(b) + 1), distinct parities.
    FieldElement x = K.gen().mul_integer(25).add(K.from_integer(10));
    CHECK(K.nu(x) == Valuation::exact(2));
    CHECK(K.nu(x) == K.nu_via_norm(x));
}

TEST_CASE("mixed e=2 f=2 quartic over Q_3 with declared residue modulus") {
    LocalField::Config cfg;
    cfg.residue_modulus = {-1, -1, 1}; // y^2 - y - 1
    LocalField K = LocalField::construct(3, ipoly({18, 0, -3, 0, 1}), 40, cfg);
    CHECK(K.e() == 2);
    CHECK(K.f() == 2);
    CHECK(K.alpha_valuation() == 1);
    CHECK(K.uniformizer_form().a == 1);
    CHECK(K.uniformizer_form().b == 0);
    CHECK(K.residue_field().modulus() == std::vector<long>{2, 2, 1});

    CHECK(K.nu(K.from_integer(3)) == Valuation::exact(2));
    CHECK(K.nu(K.gen()) == Valuation::exact(1));

    // gamma satisfies the normalized modulus y^2 + 2y + 2 far past the
    // certification threshold; y^2 - y - 1 agrees with it mod 3 only.
    FieldElement g = K.inertial_gen();
    FieldElement m = g.mul(g).add(g.mul_integer(2)).add(K.from_integer(2));
    CHECK(nu_at_least(K, m, 30));
    FieldElement raw = g.mul(g).sub(g).sub(K.one());
    CHECK(K.nu(raw) == Valuation::exact(2));

    for (long i = 0; i < 9; ++i) {
        ResidueElement c = K.residue_field().from_index(i);
        CHECK(K.residue(K.lift(c)).index() == i);
    }

    std::vector<FieldElement> samples = {
        K.gen(),
        K.gen().add(K.one()),
        K.gen().mul(K.gen()).add(K.from_integer(3)),
        K.inertial_gen().mul_integer(3).add(K.gen()),
        K.from_integer(12),
    };
    for (const auto& x : samples) CHECK(K.nu(x) == K.nu_via_norm(x));

    // Randomized agreement between the two valuation routes.
    std::mt19937 rng(20240815u);
    std::uniform_int_distribution<long> coeff(-40, 40);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<PadicNumber> coords;
        for (int j = 0; j < 4; ++j)
            coords.push_back(PadicNumber::from_integer(coeff(rng), 3, 40));
        FieldElement x = K.from_coords(coords);
        if (x.is_zero()) continue;
        CHECK(K.nu(x) == K.nu_via_norm(x));
    }
}

TEST_CASE("totally ramified quintic over Q_5") {
    LocalField K = LocalField::construct(5, ipoly({5, 0, 15, 0, 0, 1}), 40);
    CHECK(K.e() == 5);
    CHECK(K.f() == 1);
    CHECK(K.uniformizer_form().a == 1);
    CHECK(K.uniformizer_form().b == 0);

    CHECK(K.nu(K.from_integer(5)) == Valuation::exact(5));
    CHECK(K.nu(K.gen()) == Valuation::exact(1));
    CHECK(K.nu(K.gen().mul(K.gen()).add(K.from_integer(5))) == Valuation::exact(2));
    CHECK(K.residue(K.gen()).is_zero());
    CHECK(K.residue(K.from_integer(7)).index() == 2);

    // Eisenstein valuation formula: nu(sum c_i alpha^i) = min(5 v_5(c_i) + i).
    FieldElement x = K.gen().pow_ui(3).mul_integer(25)
                         .add(K.gen().mul_integer(5))
                         .add(K.from_integer(125));
    CHECK(K.nu(x) == Valuation::exact(6)); // min(10+3, 5+1, 15) = 6
}

TEST_CASE("degree 12 field with e=6 f=2 over Q_3") {
    std::vector<BigInt> defining =
        ipoly({-9, 0, 0, 9, 9, 9, 12, -9, 9, -9, 12, -9, 1});
    LocalField K = LocalField::construct(3, defining, 40);
    CHECK(K.e() == 6);
    CHECK(K.f() == 2);
    CHECK(K.alpha_valuation() == 1);
    CHECK(K.nu(K.gen()) == Valuation::exact(1));
    CHECK(K.nu(K.from_integer(3)) == Valuation::exact(6));

    // alpha^6 / 3 is a unit whose residue satisfies the slope residual
    // y^2 + y + 2; its coordinate vector has a negative-valuation entry.
    FieldElement u = K.gen().pow_ui(6).shift_p(-1);
    CHECK(K.nu(u) == Valuation::exact(0));
    ResidueElement r = K.residue(u);
    ResidueElement probe =
        r.mul(r).add(r).add(K.residue_field().from_coeffs({2, 0}));
    CHECK(probe.is_zero());

    CHECK(K.nu(K.gen()) == K.nu_via_norm(K.gen()));
}

TEST_CASE("construction rejections") {
    // Two distinct Newton slopes witness reducibility: (x+1)(x+5).
    CHECK_THROWS_AS(LocalField::construct(5, ipoly({5, 6, 1}), 40), InvalidInput);
    // v(alpha) = 2 shares a factor with e = 2; strategy exhausted.
    CHECK_THROWS_AS(LocalField::construct(5, ipoly({25, 0, 1}), 40),
                    UniformizerNotFound);
    CHECK_THROWS_AS(LocalField::construct(5, ipoly({1, 2}), 40), InvalidInput);
    CHECK_THROWS_AS(LocalField::construct(6, ipoly({-7, 1}), 40), InvalidPrime);
    CHECK_THROWS_AS(LocalField::construct(5, ipoly({-2, 0, 1}), 0), InvalidInput);

    LocalField::Config lie;
    lie.e = 2;
    lie.f = 1;
    CHECK_THROWS_AS(LocalField::construct(5, ipoly({-2, 0, 1}), 40, lie),
                    UniformizerNotFound);

    LocalField::Config bad_f;
    bad_f.e = 1;
    bad_f.f = 2;
    CHECK_THROWS_AS(LocalField::construct(5, ipoly({-5, 0, 1}), 40, bad_f),
                    InvalidInput);
}

TEST_CASE("field element arithmetic basics") {
    LocalField K = LocalField::construct(5, ipoly({-2, 0, 1}), 40);
    FieldElement a = K.gen().add(K.from_integer(3));
    FieldElement b = K.gen().mul_integer(2).sub(K.one());

    CHECK(a.mul(b).agrees_with(b.mul(a)));
    CHECK(a.sub(a).is_zero());
    CHECK(a.mul(a.inv()).agrees_with(K.one()));
    CHECK(a.div(b).mul(b).agrees_with(a));
    CHECK(a.pow_ui(3).agrees_with(a.mul(a).mul(a)));
    CHECK(K.zero().is_zero());
    CHECK_THROWS_AS(K.zero().inv(), DivisionByZero);

    // alpha^2 = 2 exactly in this presentation.
    CHECK(K.gen().mul(K.gen()).agrees_with(K.from_integer(2)));

    // Different fields refuse mixed arithmetic.
    LocalField L = LocalField::construct(5, ipoly({-5, 0, 1}), 40);
    CHECK_THROWS_AS(K.one().add(L.one()), InvalidInput);
}
