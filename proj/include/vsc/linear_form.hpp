#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vsc/rational.hpp"
#include "vsc/vars.hpp"

namespace vsc {

class Poly;

// Homogeneous linear form c_0 v_0 + ... + c_{n-1} v_{n-1}. The canonical
// representative has coprime integer coefficients with positive leading
// (first nonzero) coefficient, so equal forms compare equal and merge in
// denominator multisets.
class LinearForm {
public:
    explicit LinearForm(VarSetPtr vars)
        : vars_(std::move(vars)), c_(vars_->size(), Rational(0)) {}

    static LinearForm unit(VarSetPtr vars, int v);

    const VarSetPtr& vars() const { return vars_; }
    const Rational& coeff(int v) const { return c_.at(v); }
    void set_coeff(int v, const Rational& c) { c_.at(v) = c; }

    bool is_zero() const;
    bool depends_on(int v) const { return !c_.at(v).is_zero(); }

    // Scales to the canonical representative in place and returns s such
    // that the original form equals s * canonical.
    Rational canonicalize();

    bool is_canonical() const;

    // Substitutes var -> replacement/den; the result is again linear (not
    // canonicalized, may be identically zero).
    LinearForm substituted(int var, const LinearForm& replacement, const Rational& den) const;

    Poly to_poly() const;

    bool operator==(const LinearForm& o) const { return c_ == o.c_; }
    bool operator<(const LinearForm& o) const;  // deterministic multiset order

    std::string str() const;

private:
    VarSetPtr vars_;
    std::vector<Rational> c_;
};

}  // namespace vsc
