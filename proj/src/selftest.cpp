#include "gwcubic/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "gwcubic/cubic_oracle.hpp"
#include "gwcubic/enumerate.hpp"
#include "gwcubic/errors.hpp"

namespace gwcubic {

namespace {

std::string describe(int d, const ContactSeq& alpha, const ContactSeq& beta) {
    std::ostringstream os;
    os << "d=" << d << " alpha=(" << alpha.str() << ") beta=(" << beta.str() << ")";
    return os.str();
}

}  // namespace

bool SelfTestReport::all_pass() const {
    for (const auto& item : items) {
        if (!item.pass) return false;
    }
    return true;
}

SelfTestItem check_pivot_independence(InvariantEngine& engine, int max_d) {
    SelfTestItem item{"pivot-independence", true, 0, ""};
    for (int d = 1; d <= max_d && item.pass; ++d) {
        for (const auto& gamma : profiles_of_weight(3L * d)) {
            std::vector<int> pivots;
            for (auto [idx, mult] : gamma.entries()) {
                (void)mult;
                if (idx >= 2) pivots.push_back(idx);
            }
            if (pivots.size() < 2) continue;
            Rational first = engine.wdvv_expand_at_pivot(d, gamma, pivots.front());
            for (size_t i = 1; i < pivots.size(); ++i) {
                ++item.checked;
                Rational other = engine.wdvv_expand_at_pivot(d, gamma, pivots[i]);
                if (!(other == first)) {
                    item.pass = false;
                    item.detail = "d=" + std::to_string(d) + " gamma=(" + gamma.str() +
                                  ") pivots " + std::to_string(pivots.front()) + " vs " +
                                  std::to_string(pivots[i]) + ": " + first.str() + " != " +
                                  other.str();
                    break;
                }
            }
            if (!item.pass) break;
        }
    }
    return item;
}

SelfTestItem check_ch_identity(InvariantEngine& engine, int max_d) {
    SelfTestItem item{"caporaso-harris-identity", true, 0, ""};
    for (int d = 1; d <= max_d && item.pass; ++d) {
        for (const auto& gamma : profiles_of_weight(3L * d)) {
            for (const auto& [alpha, beta] : splits(gamma)) {
                if (beta.size() <= 1) continue;
                ++item.checked;
                if (!engine.ch_recursion_check(d, alpha, beta)) {
                    item.pass = false;
                    item.detail = describe(d, alpha, beta);
                    break;
                }
            }
            if (!item.pass) break;
        }
    }
    return item;
}

SelfTestItem check_split_consistency(InvariantEngine& engine, int max_d) {
    SelfTestItem item{"split-consistency", true, 0, ""};
    for (int d = 1; d <= max_d && item.pass; ++d) {
        for (const auto& gamma : profiles_of_weight(3L * d)) {
            bool have_ref = false;
            Rational reference;
            for (const auto& [alpha, beta] : splits(gamma)) {
                if (beta.size() == 0) continue;
                // I_d(alpha,beta) / (I^beta Ibeta (|beta|-1)!) = M-like ratio,
                // the same for every split of gamma
                Rational ratio =
                    engine.invariant(d, alpha, beta) /
                    Rational(beta.weighted_power() * Integer(beta.weight()) *
                             factorial(beta.size() - 1));
                if (!have_ref) {
                    reference = ratio;
                    have_ref = true;
                    continue;
                }
                ++item.checked;
                if (!(ratio == reference)) {
                    item.pass = false;
                    item.detail = describe(d, alpha, beta) + ": ratio " + ratio.str() +
                                  " != " + reference.str();
                    break;
                }
            }
            if (!item.pass) break;
        }
    }
    return item;
}

SelfTestItem check_integrality(InvariantEngine& engine, int max_d) {
    SelfTestItem item{"integrality-nonnegativity", true, 0, ""};
    for (int d = 1; d <= max_d && item.pass; ++d) {
        for (const auto& row : full_table(engine, d)) {
            if (!row.result.enumerative) continue;
            ++item.checked;
            const Rational& n = *row.result.n_value;
            if (!n.is_integer() || n.sign() < 0) {
                item.pass = false;
                item.detail = describe(d, row.alpha, row.beta) + ": N = " + n.str();
                break;
            }
        }
    }
    return item;
}

SelfTestItem check_general_wdvv(InvariantEngine& engine, int max_d) {
    SelfTestItem item{"general-profile-wdvv-cross-check", true, 0, ""};
    for (int d = 1; d <= std::min(max_d, 2) && item.pass; ++d) {
        for (int k = 1; k <= 3 * d - 1 && item.pass; ++k) {
            const long w = 3L * d - k - 1;
            for (const auto& gamma : profiles_of_weight(w)) {
                for (const auto& [alpha, beta] : splits(gamma)) {
                    ++item.checked;
                    Rational expanded = engine.wdvv_expand(d, alpha, beta, k);
                    Rational direct = engine.invariant(d, alpha, beta.plus_unit(k + 1));
                    if (!(expanded == direct)) {
                        item.pass = false;
                        item.detail = describe(d, alpha, beta) + " k=" + std::to_string(k) + ": " +
                                      expanded.str() + " != " + direct.str();
                        break;
                    }
                }
                if (!item.pass) break;
            }
        }
    }
    return item;
}

SelfTestItem check_oracle_agreement(InvariantEngine& engine, std::uint64_t seed) {
    SelfTestItem item{"geometric-oracle-agreement", true, 0, ""};
    const CubicForm cubic = CubicForm::default_cubic();
    struct Case {
        std::string name;
        long oracle;
        Rational engine_value;
    };
    const ContactSeq e1 = ContactSeq::unit(1);
    const ContactSeq e2 = ContactSeq::unit(2);
    const ContactSeq e3 = ContactSeq::unit(3);
    std::vector<Case> cases;
    cases.push_back({"generic tangents vs N_1(0,e1+e2)",
                     tangent_count_from_point(cubic, sample_point_off_curve(cubic, seed), seed),
                     *engine.enumerative_count(1, ContactSeq{}, e1 + e2).n_value});
    cases.push_back({"on-curve tangents vs N_1(e1,e2)",
                     tangent_count_from_point(cubic, default_on_curve_point(), seed),
                     *engine.enumerative_count(1, e1, e2).n_value});
    cases.push_back({"flexes vs I_1(0,e3)", flex_count(cubic, seed),
                     engine.invariant(1, ContactSeq{}, e3)});
    for (const auto& c : cases) {
        ++item.checked;
        if (!(Rational(c.oracle) == c.engine_value)) {
            item.pass = false;
            item.detail = c.name + ": oracle " + std::to_string(c.oracle) + " vs engine " +
                          c.engine_value.str();
            break;
        }
    }
    return item;
}

SelfTestReport run_selftests(InvariantEngine& engine, int max_d, std::uint64_t seed, int jobs) {
    if (max_d < 1) throw InvalidInput("selftest requires max degree >= 1");
    compute_all_canonical(engine, max_d, jobs);
    SelfTestReport report;
    report.items.push_back(check_pivot_independence(engine, max_d));
    report.items.push_back(check_ch_identity(engine, max_d));
    report.items.push_back(check_split_consistency(engine, max_d));
    report.items.push_back(check_integrality(engine, max_d));
    report.items.push_back(check_general_wdvv(engine, max_d));
    report.items.push_back(check_oracle_agreement(engine, seed));
    return report;
}

}  // namespace gwcubic
