#include "doctest.h"

#include <random>
#include <vector>

#include "gsm/errors.hpp"
#include "gsm/local_field.hpp"
#include "gsm/local_poly.hpp"

using namespace gsm;

namespace {

LocalField q5() {
    static LocalField K = LocalField::construct(5, {-7, 1}, 40);
    return K;
}

LocalField d5_field() {
    static LocalField K = LocalField::construct(5, {5, 0, 15, 0, 0, 1}, 40);
    return K;
}

BivariatePoly make_bivar(const LocalField& K,
                         const std::vector<std::vector<long>>& grid) {
    std::vector<std::vector<FieldElement>> rows(grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
        for (long c : grid[i]) rows[i].push_back(K.from_integer(c));
    return BivariatePoly(K, std::move(rows));
}

// Expects entry (i, j) to agree with the element whose power-basis
// coordinates are the given integers.
void check_coeff(const BivariatePoly& phi, long i, long j,
                 const std::vector<long>& alpha_coords) {
    std::vector<PadicNumber> cs;
    for (long c : alpha_coords)
        cs.push_back(PadicNumber::from_integer(c, phi.field().p(),
                                               phi.field().base_precision()));
    CHECK(phi.coeff(i, j).agrees_with(phi.field().from_coords(cs)));
}

} // namespace

TEST_CASE("univariate content and normalization") {
    LocalField K = q5();
    PolyOverK a = PolyOverK::from_integers(K, {25, 5}); // 5x + 25
    CHECK(a.degree() == 1);
    CHECK(a.content_valuation() == 1);
    PolyOverK an = a.normalized();
    CHECK(an.coeff(0).agrees_with(K.from_integer(5)));
    CHECK(an.coeff(1).agrees_with(K.one()));
    CHECK(an.content_valuation() == 0);

    PolyOverK b = PolyOverK::from_integers(K, {25, 0, 5}); // 5x^2 + 25
    CHECK(b.content_valuation() == 1);

    LocalField D = d5_field();
    FieldElement pi3 = D.uniformizer_pow(3);
    PolyOverK c(D, {pi3, pi3}); // pi^3 * (x + 1)
    CHECK(c.content_valuation() == 3);
    PolyOverK cn = c.normalized();
    CHECK(cn.coeff(0).agrees_with(D.one()));
    CHECK(cn.coeff(1).agrees_with(D.one()));

    CHECK_THROWS_AS(PolyOverK(K, {K.zero()}).content_valuation(),
                    PrecisionExhausted);
    CHECK_THROWS_AS(a.reduce_mod_pi(), NotNormalized);
}

TEST_CASE("reduction maps coefficients into the residue field") {
    LocalField D = d5_field();
    // x^2 + pi*x + 5 reduces to x^2: both tail coefficients have positive nu.
    PolyOverK a(D, {D.from_integer(5), D.uniformizer(), D.one()});
    ResiduePoly r = a.reduce_mod_pi();
    CHECK(degree(r) == 2);
    CHECK(r[0].is_zero());
    CHECK(r[1].is_zero());
    CHECK(r[2] == D.residue_field().one());

    // Degree drops when the leading residue vanishes.
    LocalField K = q5();
    PolyOverK b = PolyOverK::from_integers(K, {3, 1, 5});
    ResiduePoly rb = b.reduce_mod_pi();
    CHECK(degree(rb) == 1);
}

TEST_CASE("derivative and evaluation") {
    LocalField K = q5();
    PolyOverK a = PolyOverK::from_integers(K, {-6, 0, 1}); // x^2 - 6
    PolyOverK da = a.derivative();
    CHECK(da.degree() == 1);
    CHECK(da.coeff(1).agrees_with(K.from_integer(2)));
    CHECK(a.evaluate(K.one()).agrees_with(K.from_integer(-5)));
    CHECK(a.evaluate(K.zero()).agrees_with(K.from_integer(-6)));
}

TEST_CASE("univariate substitution expands binomially") {
    LocalField D = d5_field();
    PolyOverK sq(D, {D.zero(), D.zero(), D.one()}); // x^2
    FieldElement beta = D.from_integer(2);
    PolyOverK out = sq.substitute(beta, D.uniformizer());
    CHECK(out.coeff(0).agrees_with(D.from_integer(4)));
    CHECK(out.coeff(1).agrees_with(D.uniformizer().mul_integer(4)));
    CHECK(out.coeff(2).agrees_with(D.uniformizer_pow(2)));

    // shift 0 / scale 1 is the identity.
    PolyOverK idp = sq.substitute(D.zero(), D.one());
    CHECK(idp.coeff(2).agrees_with(D.one()));
    CHECK(idp.degree() == 2);
}

TEST_CASE("bivariate substitutions reproduce the worked quintic states") {
    LocalField K = d5_field();
    // phi0 = x^5 + (t-3)x^4 + (8-t)x^3 + (t^2-t-11)x^2 + 5x + t
    BivariatePoly phi0 = make_bivar(K, {{0, 1},
                                        {5},
                                        {-11, -1, 1},
                                        {8, -1},
                                        {-3, 1},
                                        {1}});
    CHECK(phi0.deg_x() == 5);
    CHECK(phi0.deg_t() == 2);
    CHECK(phi0.content_valuation() == 0);

    // t -> 3 + 5t
    BivariatePoly A = phi0.substitute_t(K.from_integer(3), K.from_integer(5));
    check_coeff(A, 0, 0, {3});
    check_coeff(A, 0, 1, {5});
    check_coeff(A, 1, 0, {5});
    check_coeff(A, 2, 0, {-5});
    check_coeff(A, 2, 1, {25});
    check_coeff(A, 2, 2, {25});
    check_coeff(A, 3, 0, {5});
    check_coeff(A, 3, 1, {-5});
    check_coeff(A, 4, 0, {0});
    check_coeff(A, 4, 1, {5});
    check_coeff(A, 5, 0, {1});
    CHECK(A.content_valuation() == 0);

    // x -> pi*x + 2
    BivariatePoly B = A.substitute_x(K.from_integer(2), K.uniformizer());
    check_coeff(B, 0, 0, {65});
    check_coeff(B, 0, 1, {145});
    check_coeff(B, 0, 2, {100});
    check_coeff(B, 1, 0, {0, 125});
    check_coeff(B, 1, 1, {0, 200});
    check_coeff(B, 1, 2, {0, 100});
    check_coeff(B, 5, 0, {-5, 0, -15});

    // t -> 0 + 5t, then the content-5 normalization divides by p once.
    BivariatePoly C = B.substitute_t(K.zero(), K.from_integer(5));
    check_coeff(C, 0, 0, {65});
    check_coeff(C, 0, 1, {725});
    check_coeff(C, 0, 2, {2500});
    CHECK(C.content_valuation() == 5);
    BivariatePoly D = C.normalized();
    check_coeff(D, 0, 0, {13});
    check_coeff(D, 0, 1, {145});
    check_coeff(D, 0, 2, {500});
    check_coeff(D, 1, 0, {0, 25});
    check_coeff(D, 5, 0, {-1, 0, -3});
    CHECK(D.content_valuation() == 0);
}

TEST_CASE("substitution composition and reduction compatibility") {
    LocalField K = d5_field();
    BivariatePoly phi = make_bivar(K, {{2, 3}, {1, 0, 4}, {7}, {1, 1}});
    FieldElement pi = K.uniformizer();
    BivariatePoly twice = phi.substitute_x(K.zero(), pi).substitute_x(K.zero(), pi);
    BivariatePoly once = phi.substitute_x(K.zero(), K.uniformizer_pow(2));
    for (long i = 0; i <= once.deg_x(); ++i)
        for (long j = 0; j <= once.deg_t(); ++j)
            CHECK(twice.coeff(i, j).agrees_with(once.coeff(i, j)));

    // Identity substitutions.
    BivariatePoly same = phi.substitute_t(K.zero(), K.one());
    for (long i = 0; i <= phi.deg_x(); ++i)
        for (long j = 0; j <= phi.deg_t(); ++j)
            CHECK(same.coeff(i, j).agrees_with(phi.coeff(i, j)));

    // evaluate_t at an integer matches substituting and collapsing.
    PolyOverK at2 = phi.evaluate_t(K.from_integer(2));
    CHECK(at2.coeff(0).agrees_with(K.from_integer(8)));  // 2 + 3*2
    CHECK(at2.coeff(1).agrees_with(K.from_integer(17))); // 1 + 4*4
}

TEST_CASE("bivariate reduction keeps both variables") {
    LocalField K = d5_field();
    BivariatePoly phi = make_bivar(K, {{3, 5}, {1, 2}, {5}, {1}});
    BivariateResidue red = phi.reduce_mod_pi();
    CHECK(red.deg_x() == 3);
    CHECK(red.deg_t() == 1);
    CHECK(red.coeff(0, 0) == K.residue_field().from_index(3));
    CHECK(red.coeff(0, 1).is_zero());
    CHECK(red.coeff(1, 1) == K.residue_field().from_index(2));
    CHECK_THROWS_AS(red.as_univariate_x(), InvalidInput);

    BivariatePoly flat = make_bivar(K, {{3}, {5}, {1}});
    ResiduePoly u = flat.reduce_mod_pi().as_univariate_x();
    CHECK(degree(u) == 2);
    CHECK(u[0] == K.residue_field().from_index(3));
    CHECK(u[1].is_zero());
}

TEST_CASE("reduction commutes with evaluation on random integral inputs") {
    LocalField K = LocalField::construct(3, {18, 0, -3, 0, 1}, 40);
    std::mt19937 rng(777u);
    std::uniform_int_distribution<long> coeff(-30, 30);
    std::uniform_int_distribution<long> pick(0, 8);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<FieldElement> cs;
        for (int i = 0; i < 4; ++i) cs.push_back(K.from_integer(coeff(rng)));
        cs.push_back(K.one()); // guarantee unit content
        PolyOverK phi(K, std::move(cs));
        if (phi.content_valuation() != 0) continue;
        FieldElement a = K.lift(K.residue_field().from_index(pick(rng)))
                             .add(K.uniformizer().mul_integer(coeff(rng)));
        ResidueElement lhs = eval(phi.reduce_mod_pi(), K.residue(a));
        ResidueElement rhs = K.residue(phi.evaluate(a));
        CHECK(lhs == rhs);
    }
}
