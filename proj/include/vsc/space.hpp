#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsc/linear_form.hpp"
#include "vsc/poly.hpp"
#include "vsc/rational.hpp"

namespace vsc {

struct SpaceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Insertion multi-index: cohomology exponent -> multiplicity. Indices 0
// and 1 are legal inputs and handled by the reduction rules.
using Insertions = std::map<int, int>;

std::string insertions_str(const Insertions& ins);
Insertions parse_insertions(const std::string& s);

// Target geometry P(a_1..a_N | k_1..k_m): weights, degrees and the derived
// constants used everywhere downstream.
struct SpaceSpec {
    std::vector<long> weights;  // a_i, user order preserved
    std::vector<long> degrees;  // k_l
    int n_coords = 0;           // N
    int n_eqs = 0;              // m
    int dim = 0;                // N - m - 1
    long fano = 0;              // F = sum a - sum k
    Rational weight_product;    // A
    Rational degree_product;    // K

    bool is_calabi_yau() const { return fano == 0; }

    // Weights/degrees sorted ascending; the stable cache-key form.
    std::string canonical_str() const;
    std::string display_str() const;
};

// Checks a_1 = 1 (after ascending normalization), gcd of the remaining
// weights 1, every weight divides every degree, and N - m - 1 >= 1.
SpaceSpec validate_space(const std::vector<long>& weights, const std::vector<long>& degrees);

// Grammar: "a1,a2,...,aN|k1,...,km".
SpaceSpec parse_space(const std::string& text);

// Total Chern class coefficients of the complete intersection:
// prod(1 + a_j h) / prod(1 + k_l h) = sum c_j h^j, truncated at h^dim.
struct ChernData {
    std::vector<Rational> c;  // c[0..dim]
    const Rational& top() const { return c.back(); }              // c_{N-m-1}
    const Rational& second_top() const { return c[c.size() - 2]; }  // c_{N-m-2}
};

ChernData chern_coeffs(const SpaceSpec& space);

// e_k(x,y) = prod_{i=0}^{k} (i x + (k-i) y), homogeneous of degree k+1.
Poly build_e(int k, const VarSetPtr& vars, int x, int y);

// w_a(x,y) = (x^a - y^a)/(x - y); w_0 = 0, w_1 = 1.
Poly build_w(int a, const VarSetPtr& vars, int x, int y);

// q(x,y) = prod_i prod_{j=1}^{a_i-1} (j x + (a_i - j) y); 1 when all a_i = 1.
Poly build_q(const SpaceSpec& space, const VarSetPtr& vars, int x, int y);

// Same factors as linear forms, for denominators kept in factored form.
std::vector<LinearForm> q_factors(const SpaceSpec& space, const VarSetPtr& vars, int x, int y);

// Rejects insertion indices outside 0..dim or negative multiplicities.
void check_insertion_range(const SpaceSpec& space, const Insertions& ins);

// Dimension-balance selection rules. Insertions may include indices 0, 1.
bool selection_two_point(const SpaceSpec& space, int d, int a, int b, const Insertions& ins);
bool selection_genus1(const SpaceSpec& space, int d, const Insertions& ins);
// Bare genus-0 Gromov-Witten rule F d + (dim - 3) = sum n_j (j-1).
bool selection_genus0_gw(const SpaceSpec& space, int d, const Insertions& ins);

// Dispatch over the two-point (genus 0) and genus-1 forms.
bool selection_rule(const SpaceSpec& space, int genus, int d, int a, int b,
                    const Insertions& ins);

// K/A: the only nonvanishing d = 0 two-point constant (with the matching
// single insertion), and -K c_{N-m-2} / (24 A): the genus-1 d = 0 value.
Rational classical_two_point(const SpaceSpec& space);
Rational classical_genus1(const SpaceSpec& space);

// All {n_j >= 0 : j in [2, dim]} with sum n_j (j-1) = target, ordered
// deterministically (lexicographic in n_2, n_3, ...).
std::vector<Insertions> enumerate_insertions(const SpaceSpec& space, long target);

}  // namespace vsc
