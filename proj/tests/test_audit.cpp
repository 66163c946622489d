#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeinlab/audit.hpp"
#include "test_helpers.hpp"

using namespace skeinlab;
using namespace skeinlab::testing;

TEST_CASE("expand_in_Tbar examples") {
    // x^2 = Tbar_2 + 2 Tbar_0
    auto c_sq = expand_in_Tbar(PolyX::x() * PolyX::x());
    REQUIRE(c_sq.size() == 3);
    CHECK(c_sq[0] == lint(2));
    CHECK(c_sq[1].is_zero());
    CHECK(c_sq[2] == LaurentPoly::one());

    // S_3 = Tbar_3 + Tbar_1
    auto c_s3 = expand_in_Tbar(cheb_S(3));
    REQUIRE(c_s3.size() == 4);
    CHECK(c_s3[0].is_zero());
    CHECK(c_s3[1] == LaurentPoly::one());
    CHECK(c_s3[2].is_zero());
    CHECK(c_s3[3] == LaurentPoly::one());

    // U_4 = (x^2-2)^2 = Tbar_4 + 2 Tbar_0
    auto c_u4 = expand_in_Tbar(seq_U(4));
    REQUIRE(c_u4.size() == 5);
    CHECK(c_u4[0] == lint(2));
    CHECK(c_u4[4] == LaurentPoly::one());
    CHECK(c_u4[1].is_zero());
    CHECK(c_u4[2].is_zero());
    CHECK(c_u4[3].is_zero());
}

TEST_CASE("audit with a = 0 and a unit coefficient vector") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<LaurentPoly> c(static_cast<std::size_t>(n) + 1);
        c.back() = LaurentPoly::one();
        AuditReport report = audit_R1_Rn(LaurentPoly::zero(), c);
        CHECK(report.d.is_zero());
        CHECK(report.rn_coefficient.is_zero());
        // rows are exactly the two twisted terms of beta * Tbar_n
        CHECK(report.term_coefficients == beta_mul_Tbar(n).support());
    }
}

TEST_CASE("audit is linear over nonneg vectors: S_3 case") {
    AuditReport report = audit_R1_Rn(LaurentPoly::zero(), expand_in_Tbar(cheb_S(3)));
    CHECK(report.d.is_zero());
    for (const auto& [sym, coeff] : report.term_coefficients) {
        (void)sym;
        CHECK(coeff.is_nonneg());
    }
    // rows for Tbar_1 and Tbar_3 stacked together
    CHECK(report.term_coefficients.size() == 4);
    CHECK(report.term_coefficients.at(Symbol::d(1)) == vp(1));
    CHECK(report.term_coefficients.at(Symbol::d(2)) == vp(3));
}

TEST_CASE("audit with constant sequence R_0 = 1 and a = 1") {
    AuditReport report = audit_R1_Rn(LaurentPoly::one(), {LaurentPoly::one()});
    CHECK(report.d == -LaurentPoly::one());
    CHECK(report.rn_coefficient == LaurentPoly::one());
    CHECK(report.term_coefficients.at(Symbol::beta(0)) == LaurentPoly::one());
}

TEST_CASE("d closed form pairs odd coefficients with half-odd powers") {
    // c = e_1 (R_n contains one Tbar_1): bracket is v + v^-1, not v^3 + v^-3
    AuditReport report = audit_R1_Rn(LaurentPoly::one(), {LaurentPoly::zero(), LaurentPoly::one()});
    CHECK(report.d == -(vp(1) + vp(-1)));
    CHECK(report.d == audit_d_closed_form(LaurentPoly::one(),
                                          {LaurentPoly::zero(), LaurentPoly::one()}));
}

TEST_CASE("random audits: d vanishes exactly when a does") {
    std::mt19937 rng(8888);
    std::uniform_int_distribution<int> len_dist(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<LaurentPoly> c(static_cast<std::size_t>(len_dist(rng)));
        bool any = false;
        for (auto& entry : c) {
            entry = random_nonneg_laurent(rng);
            any = any || !entry.is_zero();
        }
        AuditReport zero_case = audit_R1_Rn(LaurentPoly::zero(), c);
        CHECK(zero_case.d.is_zero());
        for (const auto& [sym, coeff] : zero_case.term_coefficients) {
            (void)sym;
            CHECK(coeff.is_nonneg());
        }
        if (any) {
            LaurentPoly a = random_nonneg_laurent(rng, true);
            AuditReport nonzero_case = audit_R1_Rn(a, c);
            CHECK(!nonzero_case.d.is_zero());
            CHECK(nonzero_case.d == audit_d_closed_form(a, c));
            CHECK(nonzero_case.rn_coefficient == a);
        }
    }
}

TEST_CASE("lower_bound_check on the named families") {
    CHECK(lower_bound_check(seq_S(), 16));
    CHECK(lower_bound_check(seq_xn(), 16));
    CHECK(lower_bound_check(seq_U_family(), 16));
    CHECK(lower_bound_check(seq_Tbar(), 16));

    NormalizedSequence shifted("shifted", [](int n) {
        return n == 1 ? PolyX::x() + PolyX::one() : PolyX::monomial(n, LaurentPoly::one());
    });
    CHECK(!lower_bound_check(shifted, 8));
}

TEST_CASE("audit rows of passing sequences are nonneg with d = 0") {
    for (const char* name : {"S", "xn", "U", "Tbar"}) {
        NormalizedSequence family = named_sequence(name);
        for (int n = 0; n <= 12; ++n) {
            AuditReport report = audit_R1_Rn(LaurentPoly::zero(),
                                             expand_in_Tbar(family.at(n)));
            CHECK(report.d.is_zero());
            for (const auto& [sym, coeff] : report.term_coefficients) {
                (void)sym;
                CHECK(coeff.is_nonneg());
            }
        }
    }
}
