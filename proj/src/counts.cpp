#include "vsc/counts.hpp"

namespace vsc {

std::vector<Rational> rational_counts(const SpaceSpec& space, const GradedSeries& two_point_cy,
                                      int max_degree) {
    if (!space.is_calabi_yau() || space.dim != 3)
        throw std::domain_error("rational_counts: space is not a Calabi-Yau threefold");
    if (two_point_cy.order() < max_degree)
        throw std::invalid_argument("rational_counts: series order too small");
    // d/dt applied to K/A t + sum W_d Q^d gives K/A + sum d W_d Q^d, and
    // the right side expands to K/A + sum_e Q^e sum_{d|e} n_d d^3.
    std::vector<Rational> n;
    for (int e = 1; e <= max_degree; ++e) {
        Rational lhs = Rational(e) * two_point_cy.grade(e).constant_term();
        for (int d = 1; d < e; ++d) {
            if (e % d != 0) continue;
            lhs -= n[d - 1] * Rational(d).pow(3);
        }
        n.push_back(lhs / Rational(e).pow(3));
    }
    return n;
}

std::vector<Rational> elliptic_counts(const SpaceSpec& space, const GradedSeries& f1a,
                                      const std::vector<Rational>& n, int max_degree) {
    if (!space.is_calabi_yau() || space.dim != 3)
        throw std::domain_error("elliptic_counts: space is not a Calabi-Yau threefold");
    if (f1a.order() < max_degree || static_cast<int>(n.size()) < max_degree)
        throw std::invalid_argument("elliptic_counts: inputs too short");
    if (f1a.lin1() != classical_genus1(space))
        throw std::logic_error(
            "elliptic_counts: F_1^A linear coefficient disagrees with the classical constant");

    // -m_d log prod_p (1 - Q^{pd}) contributes sum_{i | g} 1/i at Q^{dg};
    // -(1/12) n_d log(1 - Q^d) contributes n_d d/(12 e) at Q^e, d | e.
    auto harmonic_divisor_sum = [](int g) {
        Rational s(0);
        for (int i = 1; i <= g; ++i)
            if (g % i == 0) s += Rational(1, i);
        return s;
    };
    std::vector<Rational> m;
    for (int e = 1; e <= max_degree; ++e) {
        Rational rhs = f1a.grade(e).constant_term();
        for (int d = 1; d <= e; ++d) {
            if (e % d != 0) continue;
            rhs -= n[d - 1] * Rational(d) / (Rational(12) * Rational(e));
            if (d < e) rhs -= m[d - 1] * harmonic_divisor_sum(e / d);
        }
        m.push_back(rhs);  // coefficient of m_e is S(1) = 1
    }
    return m;
}

CurveCounts curve_counts(GenusZero& genus0, GenusOne& genus1, int max_degree) {
    CurveCounts counts;
    GradedSeries two_point = genus0.amodel_two_point_cy(max_degree);
    counts.n = rational_counts(genus0.space(), two_point, max_degree);
    GradedSeries f1a = genus1.f1a(max_degree);
    counts.m = elliptic_counts(genus0.space(), f1a, counts.n, max_degree);
    return counts;
}

std::vector<int> non_integral_degrees(const std::vector<Rational>& counts) {
    std::vector<int> bad;
    for (size_t i = 0; i < counts.size(); ++i)
        if (!counts[i].is_integer()) bad.push_back(static_cast<int>(i) + 1);
    return bad;
}

}  // namespace vsc
