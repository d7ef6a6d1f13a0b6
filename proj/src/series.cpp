#include "vsc/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vsc {

void GradedSeries::check_compatible(const GradedSeries& o) const {
    if (grade_var_ != o.grade_var_ || !same_vars(def_vars_, o.def_vars_))
        throw std::invalid_argument("GradedSeries: incompatible series");
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries r = *this;
    r.lin0_ = -r.lin0_;
    r.lin1_ = -r.lin1_;
    for (auto& p : r.g_) p = -p;
    return r;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    check_compatible(o);
    int d = std::min(order_, o.order_);
    GradedSeries r(grade_var_, def_vars_, d);
    r.lin0_ = lin0_ + o.lin0_;
    r.lin1_ = lin1_ + o.lin1_;
    for (int k = 0; k <= d; ++k) r.g_[k] = g_[k] + o.g_[k];
    *this = std::move(r);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
    GradedSeries neg = -o;
    return *this += neg;
}

GradedSeries& GradedSeries::operator*=(const Rational& c) {
    lin0_ *= c;
    lin1_ *= c;
    for (auto& p : g_) p *= c;
    return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.check_compatible(b);
    if (!a.is_pure_graded() || !b.is_pure_graded())
        throw std::invalid_argument("GradedSeries: product of non-pure series");
    int d = std::min(a.order_, b.order_);
    GradedSeries r(a.grade_var_, a.def_vars_, d);
    for (int i = 0; i <= d; ++i) {
        if (a.g_[i].is_zero()) continue;
        for (int j = 0; i + j <= d; ++j) {
            if (b.g_[j].is_zero()) continue;
            r.g_[i + j] += a.g_[i] * b.g_[j];
        }
    }
    return r;
}

GradedSeries GradedSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("GradedSeries::pow: negative exponent");
    GradedSeries r(grade_var_, def_vars_, order_);
    r.g_[0] = Poly::constant(def_vars_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

GradedSeries GradedSeries::exp() const {
    if (!is_pure_graded() || !g_[0].is_zero())
        throw std::invalid_argument("GradedSeries::exp: needs zero constant part");
    GradedSeries r(grade_var_, def_vars_, order_);
    r.g_[0] = Poly::constant(def_vars_, Rational(1));
    GradedSeries term = r;
    for (int k = 1; k <= order_; ++k) {
        term = term * (*this);
        term *= Rational(1, k);
        r += term;
    }
    return r;
}

GradedSeries GradedSeries::log() const {
    if (!is_pure_graded() || !(g_[0] == Poly::constant(def_vars_, Rational(1))))
        throw std::invalid_argument("GradedSeries::log: leading term must be 1");
    GradedSeries u = *this;
    u.g_[0] = Poly(def_vars_);  // u = s - 1, lowest grade >= 1
    GradedSeries r(grade_var_, def_vars_, order_);
    GradedSeries term(grade_var_, def_vars_, order_);
    term.g_[0] = Poly::constant(def_vars_, Rational(1));
    for (int k = 1; k <= order_; ++k) {
        term = term * u;
        GradedSeries t = term;
        t *= Rational(k % 2 == 1 ? 1 : -1, k);
        r += t;
    }
    return r;
}

GradedSeries GradedSeries::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    GradedSeries r(grade_var_, def_vars_, new_order);
    r.lin0_ = lin0_;
    r.lin1_ = lin1_;
    for (int k = 0; k <= new_order; ++k) r.g_[k] = g_[k];
    return r;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
    if (grade_var_ != o.grade_var_ || order_ != o.order_) return false;
    if (lin0_ != o.lin0_ || lin1_ != o.lin1_) return false;
    for (int k = 0; k <= order_; ++k)
        if (!(g_[k] == o.g_[k])) return false;
    return true;
}

std::string GradedSeries::str() const {
    std::ostringstream os;
    bool any = false;
    auto linvar = [&](int idx) {
        return grade_var_ == "Q" ? "t^" + std::to_string(idx) : "x^" + std::to_string(idx);
    };
    if (!lin0_.is_zero()) {
        os << lin0_.str() << "*" << linvar(0);
        any = true;
    }
    if (!lin1_.is_zero()) {
        if (any) os << " + ";
        os << lin1_.str() << "*" << linvar(1);
        any = true;
    }
    for (int d = 0; d <= order_; ++d) {
        if (g_[d].is_zero()) continue;
        if (any) os << " + ";
        any = true;
        if (d == 0) {
            os << g_[d].str();
        } else {
            os << grade_var_;
            if (d > 1) os << "^" << d;
            os << "*(" << g_[d].str() << ")";
        }
    }
    if (!any) os << "0";
    return os.str();
}

GradedSeries poly_at_series(const Poly& p, const std::vector<GradedSeries>& values,
                            const std::string& grade_var, int order, VarSetPtr out_def) {
    const VarSetPtr& pv = p.vars();
    if (static_cast<int>(values.size()) != pv->size())
        throw std::invalid_argument("poly_at_series: wrong number of values");
    const VarSetPtr& def = out_def;
    for (const auto& v : values)
        if (!v.is_pure_graded())
            throw std::invalid_argument("poly_at_series: values must be pure graded");
    GradedSeries r(grade_var, def, order);

    // Power cache per variable, built lazily.
    std::vector<std::vector<GradedSeries>> pw(values.size());
    auto power = [&](int v, int e) -> const GradedSeries& {
        auto& cache = pw[v];
        if (cache.empty()) {
            GradedSeries one(grade_var, def, order);
            one.grade(0) = Poly::constant(def, Rational(1));
            cache.push_back(std::move(one));
        }
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[v]);
        return cache[e];
    };

    for (const auto& [m, c] : p.sorted_terms()) {
        GradedSeries term(grade_var, def, order);
        term.grade(0) = Poly::constant(def, c);
        for (int v = 0; v < pv->size(); ++v)
            if (m.e[v] > 0) term = term * power(v, m.e[v]);
        r += term;
    }
    return r;
}

}  // namespace vsc
