#include "doctest.h"

#include <vector>

#include "gsm/errors.hpp"
#include "gsm/gsm_search.hpp"
#include "gsm/local_field.hpp"
#include "gsm/local_poly.hpp"
#include "gsm/panayi.hpp"

using namespace gsm;

namespace {

// [x-degree][t-degree] -> power-basis coordinates, as integers.
using Grid = std::vector<std::vector<std::vector<long>>>;

void check_state(const BivariatePoly& phi, const Grid& want) {
    REQUIRE(phi.deg_x() == static_cast<long>(want.size()) - 1);
    const LocalField& K = phi.field();
    for (size_t i = 0; i < want.size(); ++i) {
        for (size_t j = 0; j < want[i].size(); ++j) {
            std::vector<PadicNumber> cs;
            for (long c : want[i][j])
                cs.push_back(
                    PadicNumber::from_integer(c, K.p(), K.base_precision()));
            CHECK(phi.coeff(static_cast<long>(i), static_cast<long>(j))
                      .agrees_with(K.from_coords(cs)));
        }
        // entries beyond the recorded t-length must vanish
        for (long j = static_cast<long>(want[i].size()); j <= phi.deg_t(); ++j)
            CHECK(phi.coeff(static_cast<long>(i), j).is_zero());
    }
}

const TraceStep& find_step(const std::vector<TraceStep>& trace,
                           const char* action, const std::vector<long>& digits,
                           int skip = 0) {
    for (const TraceStep& s : trace) {
        if (s.action == action && s.digit_indices == digits) {
            if (skip == 0) return s;
            --skip;
        }
    }
    throw std::runtime_error("trace step not found");
}

std::vector<BigInt> big(const std::vector<long>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

} // namespace

TEST_CASE("built-in families specialize to the known polynomials") {
    const GenericPolynomial& d5 = builtin_generic("D5");
    CHECK(d5.arity == 2);
    CHECK(d5.degree() == 5);
    CHECK(specialize_integer(d5, big({5, 3})) == big({3, 5, -5, 5, 0, 1}));
    CHECK(specialize_integer(d5, big({5, 13})) ==
          big({13, 5, 145, -5, 10, 1}));
    CHECK(specialize_integer(d5, big({5, 18})) ==
          big({18, 5, 295, -10, 15, 1}));

    const GenericPolynomial& c3 = builtin_generic("C3");
    CHECK(c3.arity == 1);
    CHECK(specialize_integer(c3, big({0})) == big({1, -3, 0, 1}));

    CHECK_THROWS_AS(builtin_generic("Q8"), InvalidInput);
    CHECK_THROWS_AS(specialize_integer(d5, big({5})), InvalidInput);
}

TEST_CASE("field specialization matches the integer one") {
    LocalField K = LocalField::construct(5, {5, 0, 15, 0, 0, 1}, 40);
    const GenericPolynomial& d5 = builtin_generic("D5");
    PolyOverK f =
        specialize(d5, K, {K.from_integer(5), K.from_integer(3)});
    PolyOverK g = PolyOverK::from_integers(K, big({3, 5, -5, 5, 0, 1}));
    REQUIRE(f.degree() == 5);
    for (long i = 0; i <= 5; ++i)
        CHECK(f.coeff(i).agrees_with(g.coeff(i)));

    // leading coefficient t*x + 1 dies at t = 0
    GenericPolynomial lin;
    lin.name = "lin";
    lin.arity = 1;
    lin.coeffs = {{{{0}, 1}}, {{{1}, 1}}};
    CHECK_THROWS_AS(specialize(lin, K, {K.zero()}), DegenerateSpecialization);
    CHECK_THROWS_AS(specialize_integer(lin, big({0})),
                    DegenerateSpecialization);
}

TEST_CASE("bivariate specialization keeps the free parameter") {
    LocalField K = LocalField::construct(5, {5, 0, 15, 0, 0, 1}, 40);
    BivariatePoly phi =
        specialize_bivariate(builtin_generic("D5"), K, big({5}));
    // x^5 + (t-3)x^4 + (8-t)x^3 + (t^2-t-11)x^2 + 5x + t
    check_state(phi, {
                         {{0}, {1}},
                         {{5}},
                         {{-11}, {-1}, {1}},
                         {{8}, {-1}},
                         {{-3}, {1}},
                         {{1}},
                     });
    CHECK_THROWS_AS(
        specialize_bivariate(builtin_generic("D5"), K, big({5, 3})),
        InvalidInput);
}

TEST_CASE("parameter reconstruction from digits") {
    CHECK(reconstruct_global({3, 0}, 5, true) == 3);
    CHECK(reconstruct_global({3, 2}, 5, true) == 13);
    CHECK(reconstruct_global({3, 3}, 5, true) == 18);
    CHECK(reconstruct_global({0}, 7, true) == 0);
    CHECK(reconstruct_global({}, 7, true) == 0);
    CHECK_THROWS_AS(reconstruct_global({1}, 5, false),
                    UnsupportedReconstruction);
}

TEST_CASE("digit search walks the worked quintic exactly") {
    SearchJob job;
    job.K = LocalField::construct(5, {5, 0, 15, 0, 0, 1}, 120);
    job.generic = builtin_generic("D5");
    job.fixed_params = big({5});
    job.digit_bound = 6;

    SearchResult res = search(job);

    // The family has roots for many parameter disks (reducible
    // specializations contribute rational roots), so the search reports a
    // list; the worked branch must be on it.
    REQUIRE(res.root_found >= 1);
    const SearchBranch* hit = nullptr;
    for (const SearchBranch& b : res.branches)
        if (b.status == "root-found" &&
            b.digit_indices == std::vector<long>{3, 0})
            hit = &b;
    REQUIRE(hit != nullptr);
    REQUIRE(hit->global_parameter.has_value());
    CHECK(*hit->global_parameter == 3);
    CHECK(hit->specialized == big({3, 5, -5, 5, 0, 1}));
    CHECK(hit->verified_roots >= 1);
    REQUIRE(hit->t_star.has_value());
    CHECK(hit->t_star->agrees_with(job.K.from_integer(3)));

    // The path that finds the root passes through seven displayed states:
    // the start, the t-substitutions, the x-lifts and the normalizations.
    REQUIRE(!res.trace.empty());
    CHECK(res.trace[0].action == "initial");
    check_state(res.trace[0].poly, {
                                       {{0}, {1}},
                                       {{5}},
                                       {{-11}, {-1}, {1}},
                                       {{8}, {-1}},
                                       {{-3}, {1}},
                                       {{1}},
                                   });

    const TraceStep& a = find_step(res.trace, "substitute-t", {3});
    check_state(a.poly, {
                            {{3}, {5}},
                            {{5}},
                            {{-5}, {25}, {25}},
                            {{5}, {-5}},
                            {{}, {5}},
                            {{1}},
                        });

    const TraceStep& b = find_step(res.trace, "substitute-x", {3});
    check_state(b.poly, {
                            {{65}, {145}, {100}},
                            {{0, 125}, {0, 200}, {0, 100}},
                            {{0, 0, 105}, {0, 0, 115}, {0, 0, 25}},
                            {{0, 0, 0, 45}, {0, 0, 0, 35}},
                            {{0, 0, 0, 0, 10}, {0, 0, 0, 0, 5}},
                            {{-5, 0, -15}},
                        });

    const TraceStep& c = find_step(res.trace, "substitute-t", {3, 0});
    check_state(c.poly, {
                            {{65}, {725}, {2500}},
                            {{0, 125}, {0, 1000}, {0, 2500}},
                            {{0, 0, 105}, {0, 0, 575}, {0, 0, 625}},
                            {{0, 0, 0, 45}, {0, 0, 0, 175}},
                            {{0, 0, 0, 0, 10}, {0, 0, 0, 0, 25}},
                            {{-5, 0, -15}},
                        });

    const TraceStep& d = find_step(res.trace, "normalize", {3, 0});
    check_state(d.poly, {
                            {{13}, {145}, {500}},
                            {{0, 25}, {0, 200}, {0, 500}},
                            {{0, 0, 21}, {0, 0, 115}, {0, 0, 125}},
                            {{0, 0, 0, 9}, {0, 0, 0, 35}},
                            {{0, 0, 0, 0, 2}, {0, 0, 0, 0, 5}},
                            {{-1, 0, -3}},
                        });

    // The published walk shows this state scaled by the carry's content
    // (constant row 5 times larger); the lift itself acts on the
    // normalized polynomial, so the trace holds one fifth of each entry.
    const TraceStep& e = find_step(res.trace, "substitute-x", {3, 0});
    check_state(
        e.poly,
        {
            {{-230, 75, -540, 243, 162},
             {145, 600, 1035, 945, 405},
             {500, 1500, 1125, 0, 0}},
            {{-1080, -405, -3215, -1089, 243},
             {-2700, 0, -7900, 690, 945},
             {0, 0, 500, 750, 0}},
            {{-405, -540, -1485, -1620, -789},
             {-1575, -1350, -4725, -4050, 115},
             {0, 0, 0, 0, 125}},
            {{1350, -45, 3930, -225, -360}, {0, -175, -300, -525, -900}},
            {{150, 225, 450, 665, -15}, {375, 0, 1125, -25, 0}},
            {{5, 0, 30, 0, 45}},
        });

    const TraceStep& f = find_step(res.trace, "normalize", {3, 0}, 1);
    check_state(
        f.poly,
        {
            {{18, -288, 46, -15, -30},
             {-855, -1395, -29, -120, -120},
             {-4500, 1125, -100, -300, 75}},
            {{126, 168, 216, 81, -5},
             {690, 345, 540, 0, -40},
             {750, -1500, 0, 0, -100}},
            {{0, 21, 81, 108, 54}, {0, 115, 315, 270, 0}, {0, 125, 0, 0, 0}},
            {{-90, 0, -270, 9, 24}, {0, 0, 0, 35, 60}},
            {{-10, -15, -30, -45, 0}, {-25, 0, -75, 0, 0}},
            {{0, 0, -1, 0, -3}},
        });
}

TEST_CASE("digit search recovers the other two quintic parameters") {
    SearchJob job;
    job.generic = builtin_generic("D5");
    job.fixed_params = big({5});
    job.keep_trace = false;

    auto find = [](const SearchResult& r, const std::vector<long>& digits) {
        const SearchBranch* hit = nullptr;
        for (const SearchBranch& b : r.branches)
            if (b.status == "root-found" && b.digit_indices == digits)
                hit = &b;
        return hit;
    };

    job.K = LocalField::construct(5, {5, 0, 10, 0, 0, 1}, 120);
    SearchResult r2 = search(job);
    const SearchBranch* b2 = find(r2, {3, 2});
    REQUIRE(b2 != nullptr);
    CHECK(*b2->global_parameter == 13);
    CHECK(b2->specialized == big({13, 5, 145, -5, 10, 1}));
    CHECK(b2->verified_roots >= 1);

    // Here the reduction stays nonlinear two digits longer, so the branch
    // settles at depth four with two zero digits appended.
    job.K = LocalField::construct(5, {5, 0, 0, 0, 5, 1}, 120);
    SearchResult r3 = search(job);
    const SearchBranch* b3 = find(r3, {3, 3, 0, 0});
    REQUIRE(b3 != nullptr);
    CHECK(*b3->global_parameter == 18);
    CHECK(b3->specialized == big({18, 5, 295, -10, 15, 1}));
    CHECK(b3->verified_roots >= 1);
}

TEST_CASE("search respects the digit bound and the frontier cap") {
    SearchJob job;
    job.K = LocalField::construct(5, {5, 0, 15, 0, 0, 1}, 120);
    job.generic = builtin_generic("D5");
    job.fixed_params = big({5});
    job.keep_trace = false;

    job.digit_bound = 0;
    SearchResult res = search(job);
    CHECK(res.root_found == 0);
    CHECK(res.bound_hit >= 1);
    for (const SearchBranch& b : res.branches) CHECK(b.status == "bound-hit");

    job.digit_bound = 6;
    job.frontier_cap = 3;
    CHECK_THROWS_AS(search(job), FrontierExplosion);
    try {
        search(job);
    } catch (const FrontierExplosion& ex) {
        CHECK(ex.partial().root_found == 0);
    }
}

TEST_CASE("search is deterministic") {
    SearchJob job;
    job.K = LocalField::construct(5, {5, 0, 15, 0, 0, 1}, 120);
    job.generic = builtin_generic("D5");
    job.fixed_params = big({5});

    SearchResult a = search(job);
    SearchResult b = search(job);
    REQUIRE(a.branches.size() == b.branches.size());
    for (size_t i = 0; i < a.branches.size(); ++i) {
        CHECK(a.branches[i].status == b.branches[i].status);
        CHECK(a.branches[i].digit_indices == b.branches[i].digit_indices);
    }
    REQUIRE(a.trace.size() == b.trace.size());
    for (size_t i = 0; i < a.trace.size(); ++i)
        CHECK(a.trace[i].action == b.trace[i].action);
}

TEST_CASE("local model check accepts the known pairs and rejects swaps") {
    std::vector<BigInt> k1 = big({5, 0, 15, 0, 0, 1});
    std::vector<BigInt> k2 = big({5, 0, 10, 0, 0, 1});
    std::vector<BigInt> k3 = big({5, 0, 0, 0, 5, 1});
    std::vector<BigInt> g1 = big({3, 5, -5, 5, 0, 1});
    std::vector<BigInt> g2 = big({13, 5, 145, -5, 10, 1});
    std::vector<BigInt> g3 = big({18, 5, 295, -10, 15, 1});

    CHECK(check_gsm_local(5, k1, g1, 120));
    CHECK(check_gsm_local(5, k2, g2, 120));
    CHECK(check_gsm_local(5, k3, g3, 120));
    CHECK_FALSE(check_gsm_local(5, k1, g2, 120));
    CHECK_FALSE(check_gsm_local(5, k2, g1, 120));

    // Unramified quadratics over Q_5 are unique up to isomorphism, so either
    // of these defines the other's field.
    CHECK(check_gsm_local(5, big({-2, 0, 1}), big({-3, 0, 1}), 60));

    LocalField K = LocalField::construct(5, {-2, 0, 1}, 60);
    CHECK_THROWS_AS(check_gsm_local(K, big({-3, 1})), InvalidInput);
    CHECK_THROWS_AS(check_gsm_local(K, big({-3, 0, 2})), InvalidInput);
}
