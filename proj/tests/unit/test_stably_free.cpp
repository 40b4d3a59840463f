#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crossprod/certificate.hpp"
#include "crossprod/parse.hpp"
#include "crossprod/properties.hpp"

using namespace crossprod;

namespace {

const AlgebraPresentation& weyl() {
    static AlgebraPresentation p = AlgebraPresentation::preset("weyl");
    return p;
}
const AlgebraPresentation& qx() {
    static AlgebraPresentation p = AlgebraPresentation::preset("poly:1");
    return p;
}

CrossedElement E(const std::string& s, const AlgebraPresentation& pres) {
    return parse_element(s, pres);
}

UnimodularRow weyl_row() {
    auto row = find_cofactors(E("x^2", weyl()), E("g1 + 1", weyl()), 3, weyl());
    REQUIRE(row.has_value());
    return *row;
}

}  // namespace

TEST_CASE("cofactor search on the corpus rows") {
    auto trivial = find_cofactors(CrossedElement::one(weyl()), E("x*g1", weyl()), 0, weyl());
    REQUIRE(trivial.has_value());
    CHECK(trivial->u().is_one());

    auto classic = find_cofactors(E("x^2", weyl()), E("1 + x*g1", weyl()), 2, weyl());
    REQUIRE(classic.has_value());
    CrossedElement check = ce_add(multiply(weyl(), classic->a(), classic->u()),
                                  multiply(weyl(), classic->b(), classic->v()));
    CHECK(check.is_one());

    // both entries in the maximal ideal (x): no cofactors at any bound
    CHECK_FALSE(find_cofactors(E("x1", qx()), E("x1^2", qx()), 6, qx()).has_value());
}

TEST_CASE("verified rows reject corrupt data") {
    CHECK_THROWS_AS(make_verified_row({E("x^2", weyl()), E("g1 + 1", weyl())},
                                      {CrossedElement::one(weyl()), CrossedElement::one(weyl())},
                                      weyl()),
                    std::invalid_argument);
}

TEST_CASE("intersection ideal generators live in both principal ideals") {
    UnimodularRow row = weyl_row();
    auto ideal = build_intersection_ideal(row, 4, weyl());
    REQUIRE(ideal.has_value());
    REQUIRE_FALSE(ideal->generators.empty());
    for (size_t i = 0; i < ideal->generators.size(); ++i) {
        const auto& gen = ideal->generators[i];
        // membership re-checked through the solver, independently of the
        // recorded syzygy witnesses
        int bound = *total_degree(gen);
        CHECK(right_combination_solve({row.entries[0]}, gen, bound, weyl()).solved());
        CHECK(right_combination_solve({row.entries[1]}, gen, bound, weyl()).solved());
    }
    // commutative control: single generator x(x+1) up to scalar
    auto qrow = find_cofactors(E("x1", qx()), E("x1 + 1", qx()), 1, qx());
    REQUIRE(qrow.has_value());
    auto qideal = build_intersection_ideal(*qrow, 1, qx());
    REQUIRE(qideal.has_value());
    REQUIRE(qideal->generators.size() == 1);
    auto gen = qideal->generators[0];
    bool matches = gen == E("x1^2 + x1", qx()) || gen == E("-x1^2 - x1", qx());
    CHECK(matches);
    // row (1, 1): K = B with generator 1 up to scalar
    auto one_row = make_verified_row({CrossedElement::one(qx()), CrossedElement::one(qx())},
                                     {CrossedElement::one(qx()), CrossedElement::zero(qx())},
                                     qx());
    auto full = build_intersection_ideal(one_row, 0, qx());
    REQUIRE(full.has_value());
    CHECK(*total_degree(full->generators[0]) == 0);
}

TEST_CASE("stable-freeness witness identities") {
    StableFreenessWitness w = certify_stably_free(weyl_row(), weyl());
    CHECK(w.idempotent.size() == 2);
    // trace of the complement idempotent is 2 - (u a + v b), not constant here
    CHECK_FALSE(w.rank.has_value());
    // trivial row (1, 0) with cofactors (1, 0): kernel isomorphic to B
    auto trivial = make_verified_row(
        {CrossedElement::one(weyl()), CrossedElement::zero(weyl())},
        {CrossedElement::one(weyl()), CrossedElement::zero(weyl())}, weyl());
    StableFreenessWitness tw = certify_stably_free(trivial, weyl());
    CHECK(tw.rank == 1);
}

TEST_CASE("noncyclicity: the paper-form row certifies, frozen regression values") {
    UnimodularRow row = weyl_row();
    auto ideal = build_intersection_ideal(row, 6, weyl());
    REQUIRE(ideal.has_value());
    auto outcome = certify_noncyclic(*ideal, 8, 6, weyl());
    REQUIRE(outcome.status == NonCyclicityOutcome::Status::Certified);
    // frozen from the first run; the slice at degree 5 has dimension 4 while a
    // principal ideal with d0 = 4 would give dim B_{<=1} = 3
    CHECK(outcome.cert->d0 == 4);
    CHECK(outcome.cert->d_witness == 5);
    CHECK(outcome.cert->dim_ideal_at_witness == 4);
    CHECK(outcome.cert->dim_full_at_witness == 3);
    CHECK(outcome.cert->method == "intersection");
}

TEST_CASE("noncyclicity: the completable row is reported inconclusive") {
    // (x^2, 1 + x g1) is unimodular but its intersection ideal is cyclic:
    // K = w A1 with w = (1 + x g1) x^2. The certifier must not certify it.
    auto row = find_cofactors(E("x^2", weyl()), E("1 + x*g1", weyl()), 2, weyl());
    REQUIRE(row.has_value());
    auto ideal = build_intersection_ideal(*row, 6, weyl());
    REQUIRE(ideal.has_value());
    auto outcome = certify_noncyclic(*ideal, 10, 8, weyl());
    CHECK(outcome.status == NonCyclicityOutcome::Status::Inconclusive);
    CHECK(outcome.d0 == 4);
    // principality witness: every syzygy generator is a right multiple of w
    CrossedElement w = multiply(weyl(), E("1 + x*g1", weyl()), E("x^2", weyl()));
    for (const auto& gen : ideal->generators) {
        CHECK(right_combination_solve({w}, gen, *total_degree(gen), weyl()).solved());
    }
}

TEST_CASE("noncyclicity: negative control in the commutative ring") {
    auto qrow = find_cofactors(E("x1", qx()), E("x1 + 1", qx()), 1, qx());
    REQUIRE(qrow.has_value());
    auto ideal = build_intersection_ideal(*qrow, 2, qx());
    REQUIRE(ideal.has_value());
    auto outcome = certify_noncyclic(*ideal, 12, 12, qx());
    CHECK(outcome.status == NonCyclicityOutcome::Status::Inconclusive);
    // K = B with generator 1: inconclusive with d0 = 0
    IdealSpec full;
    full.provenance = IdealSpec::Provenance::User;
    full.generators = {CrossedElement::one(qx())};
    auto f = certify_noncyclic(full, 6, 6, qx());
    CHECK(f.status == NonCyclicityOutcome::Status::Inconclusive);
    CHECK(f.d0 == 0);
}

TEST_CASE("noncyclicity: monotone in the cap") {
    UnimodularRow row = weyl_row();
    auto ideal = build_intersection_ideal(row, 6, weyl());
    REQUIRE(ideal.has_value());
    auto at6 = certify_noncyclic(*ideal, 6, 6, weyl());
    auto at9 = certify_noncyclic(*ideal, 9, 6, weyl());
    REQUIRE(at6.status == NonCyclicityOutcome::Status::Certified);
    REQUIRE(at9.status == NonCyclicityOutcome::Status::Certified);
    CHECK(at6.cert->d0 == at9.cert->d0);
    CHECK(at6.cert->d_witness == at9.cert->d_witness);
}

TEST_CASE("noncyclicity refuses quotient bases") {
    auto s3 = AlgebraPresentation::preset("sphere:3");
    IdealSpec ideal;
    ideal.provenance = IdealSpec::Provenance::User;
    ideal.generators = {parse_element("x1", s3)};
    auto outcome = certify_noncyclic(ideal, 4, 4, s3);
    CHECK(outcome.status == NonCyclicityOutcome::Status::Refused);
}

TEST_CASE("lifting re-embeds and re-verifies") {
    auto wea = AlgebraPresentation::preset("weyl-ext-abelian");
    auto sub = wea.restrict_to_first_generator();
    CHECK(sub.content_hash() == weyl().content_hash());
    auto row = find_cofactors(E("x^2", sub), E("g1 + 1", sub), 3, sub);
    REQUIRE(row.has_value());
    auto ideal = build_intersection_ideal(*row, 6, sub);
    REQUIRE(ideal.has_value());
    IdealSpec lifted = lift_ideal(*ideal, sub, wea);
    CHECK(lifted.provenance == IdealSpec::Provenance::LiftedFromA1);
    CHECK(lifted.generators.size() == ideal->generators.size());
    auto outcome = certify_noncyclic(lifted, 9, 6, wea);
    REQUIRE(outcome.status == NonCyclicityOutcome::Status::Certified);
    CHECK(outcome.cert->d0 == 4);
    CHECK(outcome.cert->d_witness == 5);

    // lift of the full ideal stays inconclusive
    IdealSpec full;
    full.provenance = IdealSpec::Provenance::User;
    full.generators = {CrossedElement::one(sub)};
    full.a = CrossedElement::one(sub);
    full.b = CrossedElement::one(sub);
    full.syzygies = {{CrossedElement::one(sub), ce_neg(CrossedElement::one(sub))}};
    IdealSpec lifted_full = lift_ideal(full, sub, wea);
    auto f = certify_noncyclic(lifted_full, 5, 5, wea);
    CHECK(f.status == NonCyclicityOutcome::Status::Inconclusive);

    // generators mentioning g2 are rejected
    IdealSpec bad;
    bad.generators = {parse_element("g2", wea)};
    CHECK_THROWS_AS(lift_ideal(bad, sub, wea), std::invalid_argument);
}

TEST_CASE("lifted slices agree with the subalgebra inside B") {
    // K B intersected with the subalgebra slice has the same dimensions as K
    // computed downstairs, degree by degree.
    auto wea = AlgebraPresentation::preset("weyl-ext-abelian");
    auto sub = wea.restrict_to_first_generator();
    auto a_sub = E("x^2", sub), b_sub = E("g1 + 1", sub);
    auto dims_sub = intersection_dims(a_sub, b_sub, 6, sub);
    auto a_b = E("x^2", wea), b_b = E("g1 + 1", wea);
    // slice the B-side intersection by zero g2-exponent via the A1 basis count:
    // every element of aB cap bB cap A1 is an A1-intersection element and vice
    // versa; compare dimensions through the difference of interection dims with
    // the pure-A1 computation.
    auto dims_b = intersection_dims(a_b, b_b, 6, wea);
    for (int d = 0; d <= 6; ++d) {
        CHECK(dims_sub[d] <= dims_b[d]);
    }
}

TEST_CASE("faithful-flatness consequence on bounded slices") {
    // strict inclusion of right ideals in A1 stays strict after inducing to B
    auto wea = AlgebraPresentation::preset("weyl-ext-abelian");
    auto sub = wea.restrict_to_first_generator();
    auto f = E("g1 + 1", sub);
    auto fg = multiply(sub, f, E("x", sub));
    IdealSpec small, big;
    small.generators = {lift_ideal(IdealSpec{IdealSpec::Provenance::User, {fg}, {}, {}, {}, -1, ""},
                                   sub, wea)
                            .generators[0]};
    big.generators = {lift_ideal(IdealSpec{IdealSpec::Provenance::User, {f}, {}, {}, {}, -1, ""},
                                 sub, wea)
                          .generators[0]};
    auto dims_small = filtered_dim(small.generators, 5, 7, wea);
    auto dims_big = filtered_dim(big.generators, 5, 7, wea);
    bool strict_somewhere = false;
    for (int d = 0; d <= 7; ++d) {
        CHECK(dims_small[d] <= dims_big[d]);
        if (dims_small[d] < dims_big[d]) strict_somewhere = true;
    }
    CHECK(strict_somewhere);
}

TEST_CASE("derivation stability checks") {
    BaseDomain b;
    b.var_names = {"x"};
    CommPoly x = CommPoly::variable(1, 0);
    DerivationSpec ddx{{CommPoly::constant(1, Rational(1))}};
    auto rep = derivation_stability({x}, ddx, 4, b);
    CHECK(rep.verdict == StabilityVerdict::Unstable);
    CHECK(poly_str(rep.witness_generator, b.var_names) == "x");
    CHECK(poly_str(rep.witness_image, b.var_names) == "1");

    DerivationSpec euler{{x}};
    CHECK(derivation_stability({x}, euler, 4, b).verdict == StabilityVerdict::Stable);

    BaseDomain b2;
    b2.var_names = {"x", "y"};
    CommPoly xx = CommPoly::variable(2, 0), yy = CommPoly::variable(2, 1);
    DerivationSpec swap{{yy, xx}};
    CHECK(derivation_stability({xx, yy}, swap, 4, b2).verdict == StabilityVerdict::Stable);
}

TEST_CASE("sphere instances and cokernel idempotents") {
    for (int n : {3, 4, 5}) {
        SphereInstance inst = sphere_column(n);
        StableFreenessWitness w = cokernel_presentation(inst);
        REQUIRE(w.rank.has_value());
        CHECK(*w.rank == n - 1);
        CHECK(element_str(w.trace, inst.pres) == std::to_string(n - 1));
    }
    CHECK_THROWS_AS(sphere_column(2), std::invalid_argument);
}

TEST_CASE("certificates round-trip through verify") {
    UnimodularRow row = weyl_row();
    std::string cert1 = certificate_unimodular_row(row, weyl());
    CHECK(verify_certificate(cert1).ok);

    auto ideal = build_intersection_ideal(row, 6, weyl());
    REQUIRE(ideal.has_value());
    std::string cert2 = certificate_intersection_ideal(*ideal, weyl());
    CHECK(verify_certificate(cert2).ok);

    auto outcome = certify_noncyclic(*ideal, 8, 6, weyl());
    REQUIRE(outcome.status == NonCyclicityOutcome::Status::Certified);
    std::string cert3 = certificate_noncyclicity(*ideal, *outcome.cert, weyl());
    CHECK(verify_certificate(cert3).ok);

    std::string cert4 =
        certificate_stable_freeness(cokernel_presentation(sphere_column(3)), sphere_column(3).pres);
    CHECK(verify_certificate(cert4).ok);

    // single-digit perturbations of numeric fields are rejected
    for (std::string* cert : {&cert1, &cert2, &cert3, &cert4}) {
        std::string tampered = *cert;
        size_t pos = tampered.find("2");
        REQUIRE(pos != std::string::npos);
        tampered[pos] = '3';
        CHECK_FALSE(verify_certificate(tampered).ok);
    }
}
