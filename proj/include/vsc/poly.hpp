#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsc/rational.hpp"
#include "vsc/vars.hpp"

namespace vsc {

class LinearForm;

// Sparse multivariate polynomial with exact rational coefficients over a
// shared VarSet. Zero coefficients are never stored.
class Poly {
public:
    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Poly constant(VarSetPtr vars, const Rational& c);
    static Poly variable(VarSetPtr vars, int v, int power = 1);

    const VarSetPtr& vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Coefficient of an exponent multi-index (0 when absent).
    Rational coeff(const Mono& m) const;
    Rational constant_term() const { return coeff(Mono{}); }

    void add_term(const Mono& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

    Poly pow(int e) const;

    bool operator==(const Poly& o) const;

    int total_degree() const;       // -1 for the zero polynomial
    int degree_in(int var) const;   // -1 for the zero polynomial
    bool depends_on(int var) const;
    bool is_homogeneous() const;

    // Exact substitution var -> replacement/den (den nonzero). The cleared
    // variant multiplies through by den^deg_var so the result needs no
    // rational scale: returns (den^deg_var * P(var -> replacement/den),
    // den^deg_var).
    Poly substituted(int var, const LinearForm& replacement, const Rational& den) const;
    std::pair<Poly, Rational> substituted_cleared(int var, const LinearForm& replacement,
                                                  const Rational& den) const;

    Poly derivative(int var) const;

    // Exact division by a nonzero linear form; nullopt when not divisible.
    std::optional<Poly> divided_by(const LinearForm& lf) const;

    // Terms in graded-lex order; deterministic across runs.
    std::vector<std::pair<Mono, Rational>> sorted_terms() const;

    std::string str() const;

private:
    VarSetPtr vars_;
    std::unordered_map<Mono, Rational, MonoHash> terms_;
};

}  // namespace vsc
