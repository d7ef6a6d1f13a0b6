#pragma once

#include <string>
#include <vector>

#include "vsc/poly.hpp"

namespace vsc {

// Truncated series in one grading variable (q = e^{x^1} or Q = e^{t^1})
// whose grade-d coefficients are polynomials in the deformation variables
// x^2..x^{N-m-1} (t^2.. on the A side). The coefficients of x^0 and x^1
// are tracked separately: x^1 enters only through the grading variable and
// x^0 only through the t^0 mirror map, so both stay linear.
class GradedSeries {
public:
    GradedSeries(std::string grade_var, VarSetPtr def_vars, int order)
        : grade_var_(std::move(grade_var)),
          order_(order),
          lin0_(0),
          lin1_(0),
          g_(static_cast<size_t>(order) + 1, Poly(def_vars)),
          def_vars_(std::move(def_vars)) {}

    const std::string& grade_var() const { return grade_var_; }
    int order() const { return order_; }
    const VarSetPtr& def_vars() const { return def_vars_; }

    const Rational& lin0() const { return lin0_; }
    const Rational& lin1() const { return lin1_; }
    void set_lin0(const Rational& c) { lin0_ = c; }
    void set_lin1(const Rational& c) { lin1_ = c; }

    const Poly& grade(int d) const { return g_.at(d); }
    Poly& grade(int d) { return g_.at(d); }

    bool is_pure_graded() const { return lin0_.is_zero() && lin1_.is_zero(); }

    GradedSeries operator-() const;
    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }

    GradedSeries& operator*=(const Rational& c);

    // Product of pure graded series (no tracked linear parts), truncated at
    // the smaller order.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);

    GradedSeries pow(int e) const;

    // exp of a pure graded series with zero grade-0 part.
    GradedSeries exp() const;

    // log of a pure graded series whose grade-0 part is the constant 1.
    GradedSeries log() const;

    GradedSeries truncated(int new_order) const;

    bool operator==(const GradedSeries& o) const;

    std::string str() const;

private:
    std::string grade_var_;
    int order_;
    Rational lin0_, lin1_;
    std::vector<Poly> g_;
    VarSetPtr def_vars_;

    void check_compatible(const GradedSeries& o) const;
};

// Evaluates a polynomial in the deformation variables at series values
// (one pure graded series per variable of p's VarSet), truncated at order.
GradedSeries poly_at_series(const Poly& p, const std::vector<GradedSeries>& values,
                            const std::string& grade_var, int order, VarSetPtr out_def);

}  // namespace vsc
