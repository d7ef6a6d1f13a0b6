#include "vsc/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vsc/linear_form.hpp"

namespace vsc {

Poly Poly::constant(VarSetPtr vars, const Rational& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Mono{}, c);
    return p;
}

Poly Poly::variable(VarSetPtr vars, int v, int power) {
    Poly p(std::move(vars));
    if (v < 0 || v >= p.vars_->size()) throw std::out_of_range("Poly::variable: bad index");
    Mono m;
    m.e[v] = static_cast<uint16_t>(power);
    p.terms_.emplace(m, Rational(1));
    return p;
}

Rational Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!same_vars(vars_, o.vars_)) throw std::invalid_argument("Poly: mixed variable sets");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!same_vars(vars_, o.vars_)) throw std::invalid_argument("Poly: mixed variable sets");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!same_vars(a.vars_, b.vars_)) throw std::invalid_argument("Poly: mixed variable sets");
    Poly r(a.vars_);
    r.terms_.reserve(a.terms_.size() * std::min<size_t>(b.terms_.size(), 4));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            for (int i = 0; i < kMaxVars; ++i)
                m.e[i] = static_cast<uint16_t>(ma.e[i] + mb.e[i]);
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = Poly::constant(vars_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_vars(vars_, o.vars_) || terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
    return d;
}

bool Poly::depends_on(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.e[var] != 0) return true;
    return false;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d < 0) d = m.degree();
        else if (m.degree() != d) return false;
    }
    return true;
}

Poly Poly::substituted(int var, const LinearForm& replacement, const Rational& den) const {
    if (den.is_zero()) throw std::invalid_argument("Poly::substituted: zero denominator");
    int n = degree_in(var);
    if (n <= 0 && !depends_on(var)) return *this;

    // Bucket by the power of var, then Horner from the top power down.
    std::vector<Poly> buckets(static_cast<size_t>(n) + 1, Poly(vars_));
    for (const auto& [m, c] : terms_) {
        Mono stripped = m;
        int k = stripped.e[var];
        stripped.e[var] = 0;
        buckets[k].add_term(stripped, c);
    }
    Poly rep = replacement.to_poly();
    Rational inv_den = den.inverse();
    Poly acc = buckets[n];
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * rep;
        acc *= inv_den;
        acc += buckets[k];
    }
    return acc;
}

std::pair<Poly, Rational> Poly::substituted_cleared(int var, const LinearForm& replacement,
                                                    const Rational& den) const {
    int n = std::max(degree_in(var), 0);
    Rational cleared = den.pow(n);
    Poly exact = substituted(var, replacement, den);
    exact *= cleared;
    return {std::move(exact), std::move(cleared)};
}

Poly Poly::derivative(int var) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        int k = m.e[var];
        if (k == 0) continue;
        Mono d = m;
        d.e[var] = static_cast<uint16_t>(k - 1);
        r.add_term(d, c * Rational(k));
    }
    return r;
}

std::optional<Poly> Poly::divided_by(const LinearForm& lf) const {
    if (lf.is_zero()) throw std::invalid_argument("Poly::divided_by: zero form");
    if (is_zero()) return Poly(vars_);
    int pivot = -1;
    for (int v = 0; v < vars_->size(); ++v)
        if (lf.depends_on(v)) {
            pivot = v;
            break;
        }
    const Rational& cv = lf.coeff(pivot);

    int n = degree_in(pivot);
    if (n < 1) {
        // No pivot power anywhere: divisible only if zero (handled above).
        return std::nullopt;
    }
    std::vector<Poly> buckets(static_cast<size_t>(n) + 1, Poly(vars_));
    for (const auto& [m, c] : terms_) {
        Mono stripped = m;
        int k = stripped.e[pivot];
        stripped.e[pivot] = 0;
        buckets[k].add_term(stripped, c);
    }
    // Root of lf in the pivot variable: pivot = rep/cv with rep = -(lf - cv*pivot).
    LinearForm rep(vars_);
    for (int v = 0; v < vars_->size(); ++v)
        if (v != pivot) rep.set_coeff(v, -lf.coeff(v));
    Poly rep_poly = rep.to_poly();
    Rational inv_cv = cv.inverse();

    // Synthetic division by (pivot - rep/cv).
    Poly carry = buckets[n];
    Poly quotient(vars_);
    for (int k = n; k >= 1; --k) {
        // carry is the coefficient of pivot^{k-1} in the (pivot - root) quotient
        for (const auto& [m, c] : carry.sorted_terms()) {
            Mono q = m;
            q.e[pivot] = static_cast<uint16_t>(q.e[pivot] + k - 1);
            quotient.add_term(q, c);
        }
        if (k >= 2) {
            Poly next = carry * rep_poly;
            next *= inv_cv;
            next += buckets[k - 1];
            carry = std::move(next);
        } else {
            Poly rem = carry * rep_poly;
            rem *= inv_cv;
            rem += buckets[0];
            if (!rem.is_zero()) return std::nullopt;
        }
    }
    quotient *= inv_cv;
    return quotient;
}

std::vector<std::pair<Mono, Rational>> Poly::sorted_terms() const {
    std::vector<std::pair<Mono, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int v = 0; v < vars_->size(); ++v) {
            if (m.e[v] == 0) continue;
            os << "*" << vars_->name(v);
            if (m.e[v] > 1) os << "^" << m.e[v];
        }
    }
    return os.str();
}

}  // namespace vsc
