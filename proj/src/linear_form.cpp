#include "vsc/linear_form.hpp"

#include <sstream>

#include "vsc/poly.hpp"

namespace vsc {

LinearForm LinearForm::unit(VarSetPtr vars, int v) {
    LinearForm lf(std::move(vars));
    lf.set_coeff(v, Rational(1));
    return lf;
}

bool LinearForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Rational LinearForm::canonicalize() {
    Rational content(0);
    int lead = -1;
    for (int v = 0; v < static_cast<int>(c_.size()); ++v) {
        if (c_[v].is_zero()) continue;
        if (lead < 0) lead = v;
        content = Rational::gcd(content, c_[v]);
    }
    if (lead < 0) throw std::invalid_argument("LinearForm::canonicalize: zero form");
    Rational scale = c_[lead].sign() < 0 ? -content : content;
    for (auto& c : c_) c /= scale;
    return scale;
}

bool LinearForm::is_canonical() const {
    Rational content(0);
    int lead = -1;
    for (int v = 0; v < static_cast<int>(c_.size()); ++v) {
        if (c_[v].is_zero()) continue;
        if (lead < 0) lead = v;
        content = Rational::gcd(content, c_[v]);
    }
    return lead >= 0 && content == Rational(1) && c_[lead].sign() > 0;
}

LinearForm LinearForm::substituted(int var, const LinearForm& replacement,
                                   const Rational& den) const {
    LinearForm r(vars_);
    const Rational& cv = c_.at(var);
    for (int v = 0; v < static_cast<int>(c_.size()); ++v) {
        if (v == var) continue;
        Rational c = c_[v];
        if (!cv.is_zero()) c += cv * replacement.coeff(v) / den;
        r.c_[v] = c;
    }
    return r;
}

Poly LinearForm::to_poly() const {
    Poly p(vars_);
    for (int v = 0; v < static_cast<int>(c_.size()); ++v) {
        if (c_[v].is_zero()) continue;
        Mono m;
        m.e[v] = 1;
        p.add_term(m, c_[v]);
    }
    return p;
}

bool LinearForm::operator<(const LinearForm& o) const {
    for (size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return c_.size() < o.c_.size();
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < static_cast<int>(c_.size()); ++v) {
        if (c_[v].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (c_[v] != Rational(1)) os << c_[v].str() << "*";
        os << vars_->name(v);
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace vsc
