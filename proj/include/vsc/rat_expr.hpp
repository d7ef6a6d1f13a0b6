#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vsc/linear_form.hpp"
#include "vsc/poly.hpp"

namespace vsc {

// Raised when a substitution makes a remaining denominator factor vanish
// identically. The residue prescriptions never produce this for valid
// inputs; it signals a pole set that must be merged first.
struct DegeneratePoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational expression: polynomial numerator over a multiset of canonical
// linear forms with multiplicities. Canonically-equal factors are merged;
// the zero expression has an empty denominator.
class RatExpr {
public:
    explicit RatExpr(Poly num) : num_(std::move(num)) {}

    static RatExpr zero(const VarSetPtr& vars) { return RatExpr(Poly(vars)); }
    static RatExpr constant(const VarSetPtr& vars, const Rational& c) {
        return RatExpr(Poly::constant(vars, c));
    }

    const Poly& num() const { return num_; }
    const VarSetPtr& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    struct Factor {
        LinearForm form;
        int mult;
    };
    const std::vector<Factor>& den() const { return den_; }

    // Multiplies by 1/form^mult; the form is canonicalized and its scale
    // absorbed into the numerator.
    void divide_by_form(LinearForm form, int mult = 1);

    void multiply_poly(const Poly& p);
    void multiply_rat(const Rational& c);
    RatExpr multiplied(const RatExpr& o) const;
    RatExpr plus(const RatExpr& o) const;

    RatExpr derivative(int var) const;

    // Cancels numerator/denominator common linear factors and drops spent
    // entries; keeps pole multiplicities at their true orders.
    void normalize();

    // Total multiplicity of denominator factors proportional to the form.
    int pole_multiplicity(const LinearForm& pole) const;

    int total_degree() const;  // numerator degree minus denominator degree

    // Res_{var = root(pole)} via the derivative formula
    //   1/(m-1)! d^{m-1}/dvar^{m-1} [(var-root)^m f] |_{var=root}.
    RatExpr residue(int var, const LinearForm& pole) const;

    // Same residue through a truncated Laurent expansion in var - root;
    // an independent code path kept as the verification oracle.
    RatExpr residue_laurent(int var, const LinearForm& pole) const;

    // Substitutes var -> its root under `pole`, scaling exactly.
    RatExpr evaluated_at_root(int var, const LinearForm& pole) const;

    Rational constant_value() const;

    std::string str() const;

private:
    Poly num_;
    std::vector<Factor> den_;

    void insert_factor_canonical(const LinearForm& form, int mult);
};

enum class ResidueMethod { kDerivative, kLaurent };

// One residue step: the variable to integrate out and the pole-carrier
// forms (in current coordinates) whose roots are the prescribed poles.
struct ResidueStep {
    int var;
    std::vector<LinearForm> poles;
};

// Runs the steps in order, at each one summing residues over the distinct
// prescribed pole locations, carrying the remaining prescriptions through
// every substitution branch. The input must be homogeneous of total degree
// -(number of steps) for a nonzero result.
Rational iterated_residue(const RatExpr& f, const std::vector<ResidueStep>& steps,
                          ResidueMethod method = ResidueMethod::kDerivative);

}  // namespace vsc
