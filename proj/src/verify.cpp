#include "skeinlab/verify.hpp"

#include <random>

#include "skeinlab/arc_products.hpp"
#include "skeinlab/audit.hpp"

namespace skeinlab {

namespace {

Json counterexample(const std::string& where, const PolyX& lhs, const PolyX& rhs, int n, int m) {
    return Json{{"where", where}, {"n", n},          {"m", m},
                {"lhs", to_json(lhs)},               {"rhs", to_json(rhs)}};
}

Json to_json_expansion(const TbarExpansion& expansion) {
    Json out = Json::array();
    for (const auto& [k, coeff] : expansion) out.push_back(Json::array({k, to_json(coeff)}));
    return out;
}

LaurentPoly qp(int k) { return LaurentPoly::q_pow(k); }

SkeinElement printed_z_tbar(int n) {
    SkeinElement e;
    switch (n) {
        case 0:
            e.add(Symbol::z(0), LaurentPoly::one());
            break;
        case 1:
            e.add(Symbol::c(1), qp(1));
            e.add(Symbol::c(0), qp(-1));
            break;
        case 2:
            e.add(Symbol::z(1), qp(2));
            e.add(Symbol::z(-1), qp(-2));
            e.add(Symbol::b(0, 0), LaurentPoly::q_plus_inv());
            break;
        case 3:
            e.add(Symbol::c(2), qp(3));
            e.add(Symbol::c(-1), qp(-3));
            e.add(Symbol::b(0, 1), LaurentPoly::q_plus_inv());
            break;
        case 4:
            e.add(Symbol::z(2), qp(4));
            e.add(Symbol::z(-2), qp(-4));
            e.add(Symbol::b(0, 0), LaurentPoly::q_plus_inv() * LaurentPoly::q_plus_inv(2));
            e.add(Symbol::b(1, 0), LaurentPoly::q_plus_inv());
            break;
        case 5:
            e.add(Symbol::c(3), qp(5));
            e.add(Symbol::c(-2), qp(-5));
            e.add(Symbol::b(0, 1), LaurentPoly::q_plus_inv(3));
            e.add(Symbol::b(1, 1), LaurentPoly::q_plus_inv());
            break;
        default:
            throw std::logic_error("printed_z_tbar: only n <= 5 is printed");
    }
    return e;
}

LaurentPoly random_nonneg_laurent(std::mt19937& rng, bool allow_zero) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 3);
    std::uniform_int_distribution<int> exp_dist(-6, 6);
    std::uniform_int_distribution<int> coeff_dist(allow_zero ? 0 : 1, 9);
    LaurentPoly out;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        out += LaurentPoly::monomial(exp_dist(rng), coeff_dist(rng));
    }
    return out;
}

}  // namespace

CheckResult check_identities(int max) {
    CheckResult result{"identities", true, Json::object()};
    long long checked = 0;
    for (IdentityTag tag : {IdentityTag::Eq1, IdentityTag::Eq2, IdentityTag::Eq3,
                            IdentityTag::Eq4, IdentityTag::Eq6, IdentityTag::Rmk23a,
                            IdentityTag::Rmk23b, IdentityTag::Rmk23c}) {
        int n_lo = (tag == IdentityTag::Eq6 || tag == IdentityTag::Rmk23a) ? 1 : 0;
        bool two_index = identity_uses_m(tag);
        for (int n = n_lo; n <= max; ++n) {
            for (int m = 0; m <= (two_index ? max : 0); ++m) {
                IdentitySides sides = identity_sides(tag, n, m);
                ++checked;
                if (!sides.holds()) {
                    result.pass = false;
                    result.detail["counterexample"] =
                        counterexample(identity_name(tag), sides.lhs, sides.rhs, n, m);
                    result.detail["checked"] = checked;
                    return result;
                }
            }
        }
    }
    result.detail["checked"] = checked;
    result.detail["max"] = max;
    return result;
}

CheckResult check_example_small_differences() {
    CheckResult result{"example_small_differences", true, Json::object()};
    auto mono = [](int d, long long c) { return PolyX::monomial(d, LaurentPoly::integer(c)); };
    PolyX expected2 = mono(2, 1) + mono(1, -1) + mono(0, -1);              // x^2 - x - 1
    PolyX expected3 = mono(3, 1) + mono(2, -1) + mono(1, -2) + mono(0, 1); // x^3 - x^2 - 2x + 1
    bool ok2 = cheb_S_diff(2) == expected2;
    bool ok3 = cheb_S_diff(3) == expected3;
    result.pass = ok2 && ok3;
    result.detail = Json{{"S2_minus_S1", ok2}, {"S3_minus_S2", ok3}};
    return result;
}

CheckResult check_dominance_chain(int max) {
    CheckResult result{"dominance_chain", true, Json::object()};
    NormalizedSequence tbar = seq_Tbar(), s = seq_S(), sms = seq_SmS(), xn = seq_xn();
    bool a = dominates(tbar, sms, max);
    bool b = dominates(s, tbar, max);
    bool c = dominates(xn, s, max);
    bool control = dominates(tbar, xn, 2);
    result.pass = a && b && c && !control;
    result.detail = Json{{"max", max},
                         {"Tbar_over_SmS", a},
                         {"S_over_Tbar", b},
                         {"xn_over_S", c},
                         {"negative_control_Tbar_over_xn_at_2", control}};
    return result;
}

CheckResult check_products(int max) {
    CheckResult result{"products_structure_constants", true, Json::object()};
    long long pairs = 0;
    for (int m = 0; m <= max && result.pass; ++m) {
        for (int n = 0; n <= max && result.pass; ++n) {
            TbarExpansion closed = product_in_tbar_closed(m, n);
            TbarExpansion oracle = product_in_tbar_oracle(m, n);
            ++pairs;
            if (closed != oracle) {
                result.pass = false;
                result.detail["counterexample"] = Json{{"m", m},
                                                       {"n", n},
                                                       {"closed", to_json_expansion(closed)},
                                                       {"oracle", to_json_expansion(oracle)}};
                break;
            }
            for (const auto& [index, coeff] : oracle) {
                bool small = coeff == LaurentPoly::one() ||
                             coeff == LaurentPoly::integer(2);
                if (!small) {
                    result.pass = false;
                    result.detail["counterexample"] =
                        Json{{"m", m}, {"n", n}, {"k", index}, {"coeff", to_json(coeff)}};
                    break;
                }
            }
        }
    }
    result.detail["pairs_checked"] = pairs;
    result.detail["max"] = max;
    return result;
}

CheckResult check_odd_odd(int max_pair) {
    CheckResult result{"odd_odd_display", true, Json::object()};
    long long pairs = 0;
    for (int n = 0; n <= max_pair && result.pass; ++n) {
        for (int m = 0; m <= max_pair; ++m) {
            ++pairs;
            if (!verify_odd_odd_display(n, m)) {
                result.pass = false;
                result.detail["counterexample"] = Json{{"n", n}, {"m", m}};
                break;
            }
        }
    }
    result.detail["pairs_checked"] = pairs;
    result.detail["max_pair"] = max_pair;
    return result;
}

CheckResult check_annulus(int max) {
    CheckResult result{"annulus_closed_vs_recurrence", true, Json::object()};
    auto mismatch = [&](const char* op, int n, const SkeinElement& closed,
                        const SkeinElement& recurrence) {
        result.pass = false;
        result.detail["counterexample"] = Json{{"op", op},
                                               {"n", n},
                                               {"closed", to_json(closed)},
                                               {"recurrence", to_json(recurrence)}};
    };
    for (int n = 1; n <= max; ++n) {
        SkeinElement tn_closed = beta_mul_Tn_p(n);
        SkeinElement tn_rec = beta_mul_Tn_p_recurrence(n);
        if (!(tn_closed == tn_rec)) {
            mismatch("Tn", n, tn_closed, tn_rec);
            return result;
        }
        if (tn_closed.support().size() != 2) {
            mismatch("Tn_two_terms", n, tn_closed, tn_rec);
            return result;
        }
        SkeinElement snsm_closed = beta_mul_SnSm_alpha(n);
        SkeinElement snsm_rec = beta_mul_SnSm_alpha_recurrence(n);
        if (!(snsm_closed == snsm_rec)) {
            mismatch("SnSm", n, snsm_closed, snsm_rec);
            return result;
        }
        SkeinElement tbar_closed = beta_mul_Tbar(n);
        SkeinElement tbar_rec = beta_mul_Tbar_recurrence(n);
        if (!(tbar_closed == tbar_rec)) {
            mismatch("Tbar", n, tbar_closed, tbar_rec);
            return result;
        }
    }
    result.detail["max"] = max;
    return result;
}

CheckResult check_disk(int max) {
    CheckResult result{"disk_closed_vs_rewrite", true, Json::object()};
    for (int n = 0; n <= max; ++n) {
        SkeinElement closed = z_mul_Tbar_closed(n);
        SkeinElement rewrite = z_mul_Tbar_rewrite(n);
        if (!(closed == rewrite)) {
            result.pass = false;
            result.detail["counterexample"] = Json{{"where", "closed_vs_rewrite"},
                                                   {"n", n},
                                                   {"closed", to_json(closed)},
                                                   {"rewrite", to_json(rewrite)}};
            return result;
        }
        if (n <= 5 && !(closed == printed_z_tbar(n))) {
            result.pass = false;
            result.detail["counterexample"] = Json{{"where", "printed_formula"},
                                                   {"n", n},
                                                   {"closed", to_json(closed)},
                                                   {"printed", to_json(printed_z_tbar(n))}};
            return result;
        }
        if (n % 2 == 0) {
            if (!is_symmetric(closed)) {
                result.pass = false;
                result.detail["counterexample"] = Json{{"where", "even_symmetry"}, {"n", n}};
                return result;
            }
        } else {
            if (!is_symmetric(symmetric_part(n))) {
                result.pass = false;
                result.detail["counterexample"] = Json{{"where", "odd_symmetric_part"}, {"n", n}};
                return result;
            }
            for (const auto& coeff : symmetric_part_basis_coeffs(n)) {
                if (!coeff.is_nonneg()) {
                    result.pass = false;
                    result.detail["counterexample"] =
                        Json{{"where", "odd_positivity"}, {"n", n}, {"coeff", to_json(coeff)}};
                    return result;
                }
            }
        }
    }
    result.detail["max"] = max;
    return result;
}

CheckResult check_rule_forcing() {
    CheckResult result{"rule_forcing", true, Json::object()};
    SkeinElement seed = disk_arc_seed();                      // printed z * Tbar_1
    SkeinElement required = printed_z_tbar(3) + seed;         // = seed * p under the rule

    // C(k) * p = A C(k+1) + B C(k-1) + E B(0,1): each unknown is pinned by one
    // coefficient of `required`; exact division in an integral domain makes the
    // solution unique if it exists.
    auto a_sol = LaurentPoly::exact_divide(required.coeff(Symbol::c(2)), seed.coeff(Symbol::c(1)));
    auto b_sol = LaurentPoly::exact_divide(required.coeff(Symbol::c(-1)), seed.coeff(Symbol::c(0)));
    auto e_sol = LaurentPoly::exact_divide(required.coeff(Symbol::b(0, 1)),
                                           seed.coeff(Symbol::c(1)) + seed.coeff(Symbol::c(0)));
    if (!a_sol || !b_sol || !e_sol) {
        result.pass = false;
        result.detail["error"] = "system not solvable by exact division";
        return result;
    }
    bool expected = *a_sol == LaurentPoly::q_pow(2) && *b_sol == LaurentPoly::q_pow(-2) &&
                    *e_sol == LaurentPoly::one();

    // replay the solved rule on the full n = 3 and n = 5 products
    auto parametric_mul = [&](const SkeinElement& e) {
        SkeinElement out;
        for (const auto& [s, c] : e.support()) {
            if (s.family == Symbol::Family::C) {
                out.add(Symbol::c(s.k + 1), c * *a_sol);
                out.add(Symbol::c(s.k - 1), c * *b_sol);
                out.add(Symbol::b(0, 1), c * *e_sol);
            } else if (s.family == Symbol::Family::B) {
                out.add(Symbol::b(s.m + 1, s.eps), c);
            } else {
                throw std::logic_error("rule_forcing: unexpected symbol");
            }
        }
        return out;
    };
    bool n3 = apply_p_polynomial(cheb_S_diff(1), seed, parametric_mul) == printed_z_tbar(3);
    bool n5 = apply_p_polynomial(cheb_S_diff(2), seed, parametric_mul) == printed_z_tbar(5);

    result.pass = expected && n3 && n5;
    result.detail = Json{{"A", to_json(*a_sol)},
                         {"B", to_json(*b_sol)},
                         {"E", to_json(*e_sol)},
                         {"matches_expected", expected},
                         {"reproduces_n3", n3},
                         {"reproduces_n5", n5}};
    return result;
}

CheckResult check_transparency() {
    CheckResult result{"transparency", true, Json::object()};
    Json orders = Json::array();
    for (int order = 1; order <= 12; ++order) {
        TransparencyReport report = transparency_report(order);
        orders.push_back(Json{{"N", order}, {"pass", report.transparent()}});
        if (!report.transparent()) {
            result.pass = false;
            result.detail["counterexample"] =
                Json{{"N", order},
                     {"z_commutator_reduced", to_json(report.z_commutator_reduced)},
                     {"beta_commutator_reduced", to_json(report.beta_commutator_reduced)}};
        }
    }
    TransparencyReport control = transparency_report(3, 13);
    if (control.transparent()) result.pass = false;
    result.detail["orders"] = std::move(orders);
    result.detail["negative_control_N3_mod13"] = control.transparent();
    result.detail["negative_control_residue"] = to_json(control.z_commutator_reduced);
    return result;
}

CheckResult check_audit(int max, int random_trials) {
    CheckResult result{"positivity_audit", true, Json::object()};
    for (const char* name : {"S", "xn", "U", "Tbar"}) {
        NormalizedSequence family = named_sequence(name);
        if (!lower_bound_check(family, max)) {
            result.pass = false;
            result.detail["counterexample"] = Json{{"where", "lower_bound"}, {"family", name}};
            return result;
        }
        for (int n = 0; n <= max; ++n) {
            AuditReport report = audit_R1_Rn(LaurentPoly::zero(), expand_in_Tbar(family.at(n)));
            bool rows_ok = report.d.is_zero();
            for (const auto& [sym, coeff] : report.term_coefficients) {
                (void)sym;
                rows_ok = rows_ok && coeff.is_nonneg();
            }
            if (!rows_ok) {
                result.pass = false;
                result.detail["counterexample"] =
                    Json{{"where", "audit_rows"}, {"family", name}, {"n", n}};
                return result;
            }
        }
    }
    NormalizedSequence shifted("shifted", [](int n) {
        return n == 1 ? PolyX::x() + PolyX::one() : PolyX::monomial(n, LaurentPoly::one());
    });
    if (lower_bound_check(shifted, 4)) {
        result.pass = false;
        result.detail["counterexample"] = Json{{"where", "lower_bound_negative_control"}};
        return result;
    }

    std::mt19937 rng(20240518);
    std::uniform_int_distribution<int> len_dist(1, 9);
    for (int trial = 0; trial < random_trials; ++trial) {
        std::vector<LaurentPoly> c(static_cast<std::size_t>(len_dist(rng)));
        bool any = false;
        for (auto& entry : c) {
            entry = random_nonneg_laurent(rng, true);
            any = any || !entry.is_zero();
        }
        AuditReport zero_a = audit_R1_Rn(LaurentPoly::zero(), c);
        bool rows_nonneg = true;
        for (const auto& [sym, coeff] : zero_a.term_coefficients) {
            (void)sym;
            rows_nonneg = rows_nonneg && coeff.is_nonneg();
        }
        if (!zero_a.d.is_zero() || !rows_nonneg) {
            result.pass = false;
            result.detail["counterexample"] = Json{{"where", "audit_a_zero"}, {"trial", trial}};
            return result;
        }
        if (any) {
            LaurentPoly a = random_nonneg_laurent(rng, false);
            AuditReport nonzero_a = audit_R1_Rn(a, c);
            if (nonzero_a.d.is_zero() ||
                !(nonzero_a.d == audit_d_closed_form(a, c))) {
                result.pass = false;
                result.detail["counterexample"] =
                    Json{{"where", "audit_a_nonzero"}, {"trial", trial}};
                return result;
            }
        }
    }
    result.detail["max"] = max;
    result.detail["random_trials"] = random_trials;
    return result;
}

std::vector<CheckResult> verify_all(int max) {
    std::vector<CheckResult> out;
    out.push_back(check_identities(max));
    out.push_back(check_example_small_differences());
    out.push_back(check_dominance_chain(max));
    out.push_back(check_products(max));
    out.push_back(check_odd_odd(max));
    out.push_back(check_annulus(max));
    out.push_back(check_disk(max));
    out.push_back(check_rule_forcing());
    out.push_back(check_transparency());
    out.push_back(check_audit(max, 100));
    return out;
}

}  // namespace skeinlab
