#pragma once

#include <vector>

#include "vsc/genus0.hpp"
#include "vsc/genus1.hpp"

namespace vsc {

// Rational and elliptic curve counts for Calabi-Yau threefolds, solved
// degree by degree from the two-point function and F_1^A.
struct CurveCounts {
    std::vector<Rational> n;  // n[d-1] = n_d
    std::vector<Rational> m;  // m[d-1] = m_d
};

// d/dt <O_h O_h>(t) = K/A + sum_d n_d d^3 Q^d / (1 - Q^d), solved
// ascending in d from the Q-coefficients of the two-point function.
std::vector<Rational> rational_counts(const SpaceSpec& space, const GradedSeries& two_point_cy,
                                      int max_degree);

// F_1^A = -(K c_{N-3}/24A) t - sum_d m_d log prod_p (1 - Q^{pd})
//         - (1/12) sum_d n_d log(1 - Q^d); throws when the linear
// coefficient of F_1^A disagrees with the classical constant.
std::vector<Rational> elliptic_counts(const SpaceSpec& space, const GradedSeries& f1a,
                                      const std::vector<Rational>& n, int max_degree);

CurveCounts curve_counts(GenusZero& genus0, GenusOne& genus1, int max_degree);

// Integrality is evidence, not an assumption: returns the 1-based degrees
// of non-integral entries so callers can warn loudly.
std::vector<int> non_integral_degrees(const std::vector<Rational>& counts);

}  // namespace vsc
