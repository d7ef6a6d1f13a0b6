#include "vsc/rat_expr.hpp"

#include <algorithm>
#include <sstream>

namespace vsc {

void RatExpr::insert_factor_canonical(const LinearForm& form, int mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(den_.begin(), den_.end(), form,
                               [](const Factor& f, const LinearForm& l) { return f.form < l; });
    if (it != den_.end() && it->form == form) {
        it->mult += mult;
        if (it->mult == 0) den_.erase(it);
    } else {
        den_.insert(it, Factor{form, mult});
    }
}

void RatExpr::divide_by_form(LinearForm form, int mult) {
    if (mult < 0) throw std::invalid_argument("RatExpr::divide_by_form: negative multiplicity");
    if (mult == 0) return;
    if (num_.is_zero()) return;  // zero expression keeps an empty denominator
    Rational scale = form.canonicalize();
    num_ *= scale.pow(-static_cast<long>(mult));
    insert_factor_canonical(form, mult);
}

void RatExpr::multiply_poly(const Poly& p) {
    num_ = num_ * p;
    if (num_.is_zero()) den_.clear();
}

void RatExpr::multiply_rat(const Rational& c) {
    num_ *= c;
    if (num_.is_zero()) den_.clear();
}

RatExpr RatExpr::multiplied(const RatExpr& o) const {
    RatExpr r(num_ * o.num_);
    if (r.num_.is_zero()) return r;
    r.den_ = den_;
    for (const auto& f : o.den_) r.insert_factor_canonical(f.form, f.mult);
    return r;
}

RatExpr RatExpr::plus(const RatExpr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Common denominator: per distinct form, the max multiplicity.
    RatExpr r{Poly(vars())};
    Poly left = num_, right = o.num_;
    std::vector<Factor> merged;
    size_t i = 0, j = 0;
    auto scale_side = [](Poly& p, const LinearForm& form, int mult) {
        Poly fp = form.to_poly();
        for (int k = 0; k < mult; ++k) p = p * fp;
    };
    while (i < den_.size() || j < o.den_.size()) {
        if (j >= o.den_.size() || (i < den_.size() && den_[i].form < o.den_[j].form)) {
            merged.push_back(den_[i]);
            scale_side(right, den_[i].form, den_[i].mult);
            ++i;
        } else if (i >= den_.size() || o.den_[j].form < den_[i].form) {
            merged.push_back(o.den_[j]);
            scale_side(left, o.den_[j].form, o.den_[j].mult);
            ++j;
        } else {
            int m = std::max(den_[i].mult, o.den_[j].mult);
            merged.push_back(Factor{den_[i].form, m});
            scale_side(left, den_[i].form, m - den_[i].mult);
            scale_side(right, o.den_[j].form, m - o.den_[j].mult);
            ++i;
            ++j;
        }
    }
    r.num_ = left + right;
    if (!r.num_.is_zero()) r.den_ = std::move(merged);
    r.normalize();
    return r;
}

RatExpr RatExpr::derivative(int var) const {
    // d/dvar [P / prod L_i^{m_i}]
    //   = [P' prod_dep L_i - P sum_dep m_i c_i prod_{dep, j != i} L_j]
    //     / (prod_dep L_i^{m_i+1} prod_indep L_i^{m_i}).
    std::vector<size_t> dep;
    for (size_t i = 0; i < den_.size(); ++i)
        if (den_[i].form.depends_on(var)) dep.push_back(i);

    Poly numerator = num_.derivative(var);
    if (!dep.empty()) {
        Poly prod_all = Poly::constant(vars(), Rational(1));
        for (size_t i : dep) prod_all = prod_all * den_[i].form.to_poly();
        numerator = numerator * prod_all;
        for (size_t i : dep) {
            Poly partial = Poly::constant(vars(), Rational(1));
            for (size_t j : dep)
                if (j != i) partial = partial * den_[j].form.to_poly();
            partial = partial * num_;
            partial *= Rational(-den_[i].mult) * den_[i].form.coeff(var);
            numerator += partial;
        }
    }
    RatExpr r(std::move(numerator));
    if (r.num_.is_zero()) return r;
    for (size_t i = 0; i < den_.size(); ++i) {
        bool d = den_[i].form.depends_on(var);
        r.insert_factor_canonical(den_[i].form, den_[i].mult + (d ? 1 : 0));
    }
    r.normalize();
    return r;
}

void RatExpr::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& f : den_) {
        while (f.mult > 0) {
            auto q = num_.divided_by(f.form);
            if (!q) break;
            num_ = std::move(*q);
            --f.mult;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(),
                              [](const Factor& f) { return f.mult == 0; }),
               den_.end());
}

int RatExpr::pole_multiplicity(const LinearForm& pole) const {
    LinearForm canon = pole;
    canon.canonicalize();
    for (const auto& f : den_)
        if (f.form == canon) return f.mult;
    return 0;
}

int RatExpr::total_degree() const {
    int d = num_.total_degree();
    if (d < 0) return 0;
    for (const auto& f : den_) d -= f.mult;
    return d;
}

RatExpr RatExpr::evaluated_at_root(int var, const LinearForm& pole) const {
    const Rational& cv = pole.coeff(var);
    if (cv.is_zero()) throw std::invalid_argument("RatExpr: pole independent of variable");
    LinearForm rep(vars());
    for (int v = 0; v < vars()->size(); ++v)
        if (v != var) rep.set_coeff(v, -pole.coeff(v));

    RatExpr r(num_.substituted(var, rep, cv));
    if (r.num_.is_zero()) return r;
    for (const auto& f : den_) {
        LinearForm lf = f.form.substituted(var, rep, cv);
        if (lf.is_zero())
            throw DegeneratePoleError("denominator factor vanished at " +
                                      vars()->name(var) + " substitution: " + f.form.str());
        r.divide_by_form(std::move(lf), f.mult);
    }
    r.normalize();
    return r;
}

RatExpr RatExpr::residue(int var, const LinearForm& pole) const {
    LinearForm canon = pole;
    canon.canonicalize();  // residue location is scale-invariant
    const Rational& cv = canon.coeff(var);
    if (cv.is_zero()) throw std::invalid_argument("RatExpr::residue: pole independent of variable");
    int m = pole_multiplicity(canon);
    if (m == 0) return RatExpr::zero(vars());

    RatExpr h(num_);
    for (const auto& f : den_)
        if (!(f.form == canon)) h.insert_factor_canonical(f.form, f.mult);
    for (int k = 1; k < m; ++k) h = h.derivative(var);
    RatExpr r = h.evaluated_at_root(var, canon);
    r.multiply_rat(factorial(m - 1).inverse() * cv.pow(-static_cast<long>(m)));
    return r;
}

RatExpr RatExpr::residue_laurent(int var, const LinearForm& pole) const {
    LinearForm canon = pole;
    canon.canonicalize();
    const Rational& cv = canon.coeff(var);
    if (cv.is_zero())
        throw std::invalid_argument("RatExpr::residue_laurent: pole independent of variable");
    int m = pole_multiplicity(canon);
    if (m == 0) return RatExpr::zero(vars());

    // Shift var -> root + eps and expand to order eps^{m-1}; the residue is
    // the eps^{m-1} coefficient of the regular part divided by cv^m. The
    // root is rep/cv.
    LinearForm rep(vars());
    for (int v = 0; v < vars()->size(); ++v)
        if (v != var) rep.set_coeff(v, -canon.coeff(v));

    const int order = m - 1;
    std::vector<RatExpr> series;  // series[j] multiplies eps^j
    series.reserve(order + 1);

    // Numerator: P(root + eps) by Horner in var over the eps-ring.
    {
        int n = std::max(num_.degree_in(var), 0);
        std::vector<Poly> buckets(static_cast<size_t>(n) + 1, Poly(vars()));
        for (const auto& [mono, c] : num_.sorted_terms()) {
            Mono stripped = mono;
            int k = stripped.e[var];
            stripped.e[var] = 0;
            buckets[k].add_term(stripped, c);
        }
        Poly rep_poly = rep.to_poly();
        Rational inv_cv = cv.inverse();
        std::vector<Poly> acc(static_cast<size_t>(order) + 1, Poly(vars()));
        acc[0] = buckets[n];
        for (int k = n - 1; k >= 0; --k) {
            // acc <- acc * (root + eps) + bucket_k, truncated at eps^order
            std::vector<Poly> next(static_cast<size_t>(order) + 1, Poly(vars()));
            for (int j = 0; j <= order; ++j) {
                if (acc[j].is_zero()) continue;
                Poly shifted = acc[j] * rep_poly;
                shifted *= inv_cv;
                next[j] += shifted;
                if (j + 1 <= order) next[j + 1] += acc[j];
            }
            next[0] += buckets[k];
            acc = std::move(next);
        }
        for (int j = 0; j <= order; ++j) series.push_back(RatExpr(acc[j]));
    }

    // Denominator factors other than the pole: geometric expansion of
    // (M + alpha eps)^{-mult} with M the factor at the root.
    for (const auto& f : den_) {
        if (f.form == canon) continue;
        LinearForm m_form = f.form.substituted(var, rep, cv);
        if (m_form.is_zero())
            throw DegeneratePoleError("denominator factor vanished at " +
                                      vars()->name(var) + " substitution: " + f.form.str());
        Rational alpha = f.form.coeff(var);
        std::vector<RatExpr> expansion;
        expansion.reserve(order + 1);
        for (int j = 0; j <= order; ++j) {
            RatExpr term = RatExpr::constant(
                vars(), binomial(-static_cast<long>(f.mult), j) * alpha.pow(j));
            if (!term.is_zero()) {
                LinearForm mf = m_form;
                term.divide_by_form(std::move(mf), f.mult + j);
            }
            expansion.push_back(std::move(term));
        }
        std::vector<RatExpr> next(static_cast<size_t>(order) + 1, RatExpr::zero(vars()));
        for (int a = 0; a <= order; ++a) {
            if (series[a].is_zero()) continue;
            for (int b = 0; a + b <= order; ++b) {
                if (expansion[b].is_zero()) continue;
                next[a + b] = next[a + b].plus(series[a].multiplied(expansion[b]));
            }
        }
        series = std::move(next);
    }

    RatExpr r = series[order];
    r.multiply_rat(cv.pow(-static_cast<long>(m)));
    r.normalize();
    return r;
}

Rational RatExpr::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!den_.empty() || num_.total_degree() > 0)
        throw std::logic_error("RatExpr::constant_value: expression is not constant: " + str());
    return num_.constant_term();
}

std::string RatExpr::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ")";
    for (const auto& f : den_) {
        os << " / (" << f.form.str() << ")";
        if (f.mult > 1) os << "^" << f.mult;
    }
    return os.str();
}

namespace {

Rational iterated_residue_impl(const RatExpr& f, const std::vector<ResidueStep>& steps,
                               size_t idx, ResidueMethod method) {
    if (f.is_zero()) return Rational(0);
    if (idx == steps.size()) return f.constant_value();
    const ResidueStep& step = steps[idx];

    // Distinct canonical pole locations among the prescribed carriers.
    std::vector<LinearForm> poles;
    for (const auto& carrier : step.poles) {
        if (carrier.is_zero() || !carrier.depends_on(step.var)) continue;
        LinearForm canon = carrier;
        canon.canonicalize();
        bool seen = false;
        for (const auto& p : poles)
            if (p == canon) {
                seen = true;
                break;
            }
        if (!seen) poles.push_back(std::move(canon));
    }

    Rational total(0);
    for (const auto& pole : poles) {
        RatExpr r = (method == ResidueMethod::kDerivative) ? f.residue(step.var, pole)
                                                           : f.residue_laurent(step.var, pole);
        if (r.is_zero()) continue;
        // Carry the later prescriptions through this branch's substitution.
        std::vector<ResidueStep> rest(steps.begin() + idx + 1, steps.end());
        const Rational& cv = pole.coeff(step.var);
        LinearForm rep(f.vars());
        for (int v = 0; v < f.vars()->size(); ++v)
            if (v != step.var) rep.set_coeff(v, -pole.coeff(v));
        for (auto& s : rest) {
            for (auto& carrier : s.poles)
                carrier = carrier.substituted(step.var, rep, cv);
        }
        total += iterated_residue_impl(r, rest, 0, method);
    }
    return total;
}

}  // namespace

Rational iterated_residue(const RatExpr& f, const std::vector<ResidueStep>& steps,
                          ResidueMethod method) {
    return iterated_residue_impl(f, steps, 0, method);
}

}  // namespace vsc
