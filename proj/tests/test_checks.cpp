#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcert/checks.hpp"
#include "pcert/errors.hpp"

using namespace pcert;

TEST_CASE("oracle and identity checks") {
    CHECK(check_oracle_agreement(300).status() == "pass");
    CHECK(check_pp1(30, 30).status() == "pass");
    CheckOptions par;
    par.jobs = 2;
    CHECK(check_g_omega(30, par).status() == "pass");
    CHECK(check_closed_form_agreement(20, par).status() == "pass");
}

TEST_CASE("certificate and recurrence sweeps") {
    VerificationReport cert = check_certificate(6, 100);
    CHECK(cert.status() == "pass");
    CHECK(cert.total == 6 * 6 * 6 + 100);
    CHECK(check_recurrence3(20).status() == "pass");
    CHECK(certificate_mutation_detected(4));
}

TEST_CASE("product inequality") {
    CHECK(product_inequality_holds({make_rat(1, 2), make_rat(1, 3)},
                                   {make_rat(1, 4), BigRational(0)}));
    CHECK_THROWS_AS(product_inequality_holds({BigRational(2)}, {BigRational(0)}),
                    HypothesisError);
    CHECK_THROWS_AS(product_inequality_holds({BigRational(0)}, {BigRational(-1)}),
                    HypothesisError);
    CHECK_THROWS_AS(product_inequality_holds({BigRational(0)}, {}), HypothesisError);
    // negative x break the inequality (LHS 0, RHS 24 for x={1,-24}), so the
    // hypothesis is the proof's 0 <= x <= 1, not the looser "x <= 1"
    CHECK_THROWS_AS(product_inequality_holds({BigRational(-24)}, {BigRational(1)}),
                    HypothesisError);
    VerificationReport rep = check_product_inequality(2000);
    CHECK(rep.status() == "pass");
    CHECK(rep.total == 2001);
    // determinism: identical seed gives byte-identical outcome fields
    VerificationReport rep2 = check_product_inequality(2000);
    CHECK(rep.violations == rep2.violations);
    CHECK(rep.total == rep2.total);
}

TEST_CASE("pochhammer ratio bounds") {
    CHECK(check_pochhammer_ratio_bounds(2, 60).status() == "pass");
    CHECK(check_pochhammer_ratio_bounds(3, 60).status() == "pass");
    CHECK_THROWS_AS(check_pochhammer_ratio_bounds(4, 10), DomainError);
}

TEST_CASE("closed sums and tail bounds") {
    CHECK(check_closed_sums().status() == "pass");
    VerificationReport rep = check_tail_bound(60);
    CHECK(rep.status() == "pass");
}

TEST_CASE("tail lemma points from the worked examples") {
    // at (n,k)=(1,1) the sum is exactly 1/23, touching the upper constant
    CHECK(check_tail_lemma_point(TailLemma::errorlem1, 1, 1, 0) == Tri::True);
    CHECK(check_tail_lemma_point(TailLemma::errorlem3, 2, 3, 0) == Tri::True);
    CHECK(check_tail_lemma_point(TailLemma::bprz_beta, 1, 240, 2) == Tri::True);
    CHECK_THROWS_AS(check_tail_lemma_point(TailLemma::bprz_b, 1, 4, 2), HypothesisError);
}

TEST_CASE("tail lemma grid: printed vs corrected constants") {
    // the printed upper constant of the signed-binomial tail bound fails for
    // s in {2,3} at k in {1,2}: the first summand alone exceeds it there
    VerificationReport printed = check_tail_lemmas();
    CHECK(printed.status() == "fail");
    CHECK(printed.violations.size() == 16);  // 4 n-values x {(1,2),(1,3),(2,2),(2,3)}
    for (const auto& v : printed.violations) {
        CHECK(v.find("errorlem2") == 0);
        bool expected = v.find("k=1,s=2") != std::string::npos ||
                        v.find("k=1,s=3") != std::string::npos ||
                        v.find("k=2,s=2") != std::string::npos ||
                        v.find("k=2,s=3") != std::string::npos;
        CHECK(expected);
    }
    // the 2^(s-1)-scaled constant repairs it everywhere on the grid
    VerificationReport corrected = check_tail_lemmas({}, true);
    CHECK(corrected.status() == "pass");
    CHECK(corrected.total == printed.total);
}

TEST_CASE("errorsum points and small sweeps") {
    CHECK(check_errorsum_point(1, 1, 10) == Tri::True);
    CHECK(check_errorsum_point(3, 2, 50) == Tri::True);
    CHECK_THROWS_AS(check_errorsum_point(5, 1, 10), DomainError);
    CheckOptions par;
    par.jobs = 2;
    for (int j = 1; j <= 3; ++j) {
        CHECK(check_errorsum(j, 6, {10, 116}, par).status() == "pass");
    }
    // the printed fourth lower constant is certifiably not a lower bound
    CHECK(check_errorsum_point(4, 1, 116) == Tri::False);
    CHECK(check_errorsum(4, 6, {10, 116}, par).status() == "fail");
    // the repaired constant passes
    CHECK(check_errorsum_point(4, 1, 116, {}, true) == Tri::True);
    CHECK(check_errorsum(4, 6, {10, 116}, par, true).status() == "pass");
}

TEST_CASE("errorlem5") {
    CHECK(check_errorlem5_point(4, 1) == Tri::True);   // n0(4) = 1/4 admits n=1
    CHECK(check_errorlem5_point(30, 2) == Tri::True);  // n0(30) = 4/3 admits n=2
    CHECK_THROWS_AS(check_errorlem5_point(30, 1), HypothesisError);
    CHECK(check_errorlem5(20, 20).status() == "pass");
}

TEST_CASE("S-estimates at the spec'd points and small ranges") {
    CHECK(check_S_estimate_point(1, 1) == Tri::True);
    CHECK(check_S_estimate_point(3, 2) == Tri::True);
    CHECK_THROWS_AS(check_S_estimate_point(3, 1), DomainError);
    CheckOptions par;
    par.jobs = 2;
    CHECK(check_S_estimate(1, 1, 40, par).status() == "pass");
    CHECK(check_S_estimate(2, 1, 40, par).status() == "pass");
    CHECK(check_S_estimate(3, 2, 40, par).status() == "pass");
    CHECK(check_S_estimate(4, 1, 40, par).status() == "pass");
    for (int i = 1; i <= 4; ++i) CHECK(s_estimate_mutation_detected(i));
}

TEST_CASE("sandwich sweeps at reduced scale") {
    PartitionTable table = p_pentagonal_table(400);
    CheckOptions par;
    par.jobs = 2;
    VerificationReport mt = check_main_theorem(1, 4, 300, table, par);
    CHECK(mt.status() == "pass");
    CHECK(mt.total > 0);
    VerificationReport cor = check_corollary(116, 400, table, par);
    CHECK(cor.status() == "pass");
    CHECK(cor.total == 400 - 116 + 1 + 2);  // range plus the two reduction facts
}

TEST_CASE("log-concavity checks") {
    PartitionTable table = p_pentagonal_table(5001);
    CHECK(check_log_concave(5000, table).status() == "pass");
    CheckOptions par;
    par.jobs = 2;
    CHECK(check_log_concave_bounds(2000, 2010, par).status() == "pass");
}

TEST_CASE("asymptotic ratio") {
    PartitionTable table = p_pentagonal_table(10000);
    CHECK(check_asymptotic(table).status() == "pass");
}
