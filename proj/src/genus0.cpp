#include "vsc/genus0.hpp"

#include <sstream>

#include "vsc/parallel.hpp"

namespace vsc {

namespace {

GradedSeries shifted_by_grade(const GradedSeries& s, int shift) {
    if (shift == 0) return s;
    if (!s.is_pure_graded())
        throw std::invalid_argument("shifted_by_grade: series must be pure graded");
    GradedSeries r(s.grade_var(), s.def_vars(), s.order());
    for (int d = 0; d + shift <= s.order(); ++d) r.grade(d + shift) = s.grade(d);
    return r;
}

Poly insertion_monomial(const VarSetPtr& def_vars, const Insertions& ins, Rational* weight) {
    *weight = Rational(1);
    Mono m;
    for (const auto& [j, n] : ins) {
        if (n == 0) continue;
        m.e[j - 2] = static_cast<uint16_t>(n);
        *weight *= factorial(n);
    }
    Poly out(def_vars);
    out.add_term(m, Rational(1));
    return out;
}

}  // namespace

VarSetPtr GenusZero::x_vars() const {
    std::vector<std::string> names;
    for (int p = 2; p <= space_.dim; ++p) names.push_back("x" + std::to_string(p));
    return make_vars(std::move(names));
}

VarSetPtr GenusZero::t_vars() const {
    std::vector<std::string> names;
    for (int p = 2; p <= space_.dim; ++p) names.push_back("t" + std::to_string(p));
    return make_vars(std::move(names));
}

RatExpr GenusZero::integrand(int a, int b, const Insertions& ins, int d,
                             std::vector<ResidueStep>* steps) const {
    if (d < 1) throw std::invalid_argument("GenusZero::integrand: d must be >= 1");
    std::vector<std::string> names;
    for (int i = 0; i <= d; ++i) names.push_back("z" + std::to_string(i));
    VarSetPtr vars = make_vars(std::move(names));
    const int n_coords = space_.n_coords;

    Poly num = Poly::variable(vars, 0, a) * Poly::variable(vars, d, b);
    for (int j = 1; j <= d; ++j)
        for (long k : space_.degrees) num = num * build_e(static_cast<int>(k), vars, j - 1, j);
    for (const auto& [l, nl] : ins) {
        if (nl == 0) continue;
        Poly sum(vars);
        for (int i = 1; i <= d; ++i) sum += build_w(l, vars, i - 1, i);
        num = num * sum.pow(nl);
    }

    RatExpr f(std::move(num));
    f.multiply_rat(space_.weight_product.pow(-(d + 1)));
    for (int i = 0; i <= d; ++i) f.divide_by_form(LinearForm::unit(vars, i), n_coords);
    for (int j = 1; j <= d; ++j)
        for (auto& qf : q_factors(space_, vars, j - 1, j)) f.divide_by_form(std::move(qf));
    for (int j = 1; j <= d - 1; ++j) {
        // prod_p (k_p z_j) = K z_j^m
        f.multiply_rat(space_.degree_product.inverse());
        f.divide_by_form(LinearForm::unit(vars, j), space_.n_eqs);
        LinearForm chain(vars);
        chain.set_coeff(j, Rational(2));
        chain.set_coeff(j - 1, Rational(-1));
        chain.set_coeff(j + 1, Rational(-1));
        f.divide_by_form(std::move(chain));
    }
    f.normalize();

    if (steps) {
        steps->clear();
        for (int i = 0; i <= d; ++i) {
            ResidueStep step{i, {LinearForm::unit(vars, i)}};
            if (i >= 1 && i <= d - 1) {
                LinearForm chain(vars);
                chain.set_coeff(i, Rational(2));
                chain.set_coeff(i - 1, Rational(-1));
                chain.set_coeff(i + 1, Rational(-1));
                step.poles.push_back(std::move(chain));
            }
            steps->push_back(std::move(step));
        }
    }
    return f;
}

std::string GenusZero::vsc_key(int a, int b, const Insertions& ins, int d) const {
    std::ostringstream os;
    os << "w0|" << space_.canonical_str() << "|" << a << ":" << b << "|d=" << d
       << "|ins=" << insertions_str(ins);
    return os.str();
}

Rational GenusZero::vsc_uncached(int a, int b, const Insertions& ins, int d,
                                 ResidueMethod method) const {
    std::vector<ResidueStep> steps;
    RatExpr f = integrand(a, b, ins, d, &steps);
    return iterated_residue(f, steps, method);
}

Rational GenusZero::vsc(int a, int b, const Insertions& ins, int d, ResidueMethod method) {
    if (a < 0 || a > space_.dim || b < 0 || b > space_.dim)
        throw std::invalid_argument("GenusZero::vsc: index out of range");
    if (d < 1) throw std::invalid_argument("GenusZero::vsc: d must be >= 1");
    check_insertion_range(space_, ins);
    auto zero_it = ins.find(0);
    if (zero_it != ins.end() && zero_it->second > 0) return Rational(0);
    if (!selection_two_point(space_, d, a, b, ins)) return Rational(0);

    if (method == ResidueMethod::kLaurent)  // oracle path stays cache-free
        return vsc_uncached(a, b, ins, d, method);

    std::string key = vsc_key(a, b, ins, d);
    if (cache_) {
        if (auto hit = cache_->get(key)) return *hit;
    }
    Rational v = vsc_uncached(a, b, ins, d, method);
    if (cache_) cache_->put(key, v);
    return v;
}

GradedSeries GenusZero::two_point_series(int a, int b, int order) {
    VarSetPtr xv = x_vars();
    GradedSeries s("q", xv, order);

    int classical = space_.dim - a - b;
    if (classical >= 0) {
        Rational ka = classical_two_point(space_);
        if (classical == 0) s.set_lin0(ka);
        else if (classical == 1) s.set_lin1(ka);
        else s.grade(0).add_term([&] { Mono m; m.e[classical - 2] = 1; return m; }(), ka);
    }

    struct Job {
        int d;
        Insertions ins;
        Rational value;
    };
    std::vector<Job> jobs;
    for (int d = 1; d <= order; ++d) {
        long target = space_.fano * d + space_.dim - 1 - a - b;
        for (auto& ins : enumerate_insertions(space_, target)) jobs.push_back({d, ins, Rational(0)});
    }
    parallel_for(static_cast<int>(jobs.size()), jobs_,
                 [&](int i) { jobs[i].value = vsc(a, b, jobs[i].ins, jobs[i].d); });
    for (auto& job : jobs) {
        if (job.value.is_zero()) continue;
        Rational weight;
        Poly mono = insertion_monomial(xv, job.ins, &weight);
        mono *= job.value / weight;
        s.grade(job.d) += mono;
    }
    return s;
}

MirrorMaps GenusZero::mirror_maps(int order) {
    auto memo = mirror_memo_.find(order);
    if (memo != mirror_memo_.end()) return memo->second;

    MirrorMaps maps;
    Rational a_over_k = space_.weight_product / space_.degree_product;
    for (int p = 0; p <= space_.dim; ++p) {
        GradedSeries t = two_point_series(space_.dim - p, 0, order);
        t *= a_over_k;
        maps.forward.push_back(std::move(t));
    }

    // Inverse by graded fixed point: x_(k+1)^p = t^p - Delta^p(x_(k)) with
    // q = Q e^{x^1 - t^1}; each pass gains at least one Q-order.
    VarSetPtr tv = t_vars();
    auto identity = [&](int p) {
        GradedSeries s("Q", tv, order);
        if (p == 0) s.set_lin0(Rational(1));
        else if (p == 1) s.set_lin1(Rational(1));
        else {
            Mono m;
            m.e[p - 2] = 1;
            s.grade(0).add_term(m, Rational(1));
        }
        return s;
    };
    std::vector<GradedSeries> x;
    for (int p = 0; p <= space_.dim; ++p) x.push_back(identity(p));

    for (int pass = 1; pass <= order; ++pass) {
        GradedSeries log_ratio = x[1];
        log_ratio.set_lin1(Rational(0));  // x^1(t) - t^1
        GradedSeries eq = log_ratio.exp();
        std::vector<GradedSeries> eq_pow;  // eq^e
        {
            GradedSeries one("Q", tv, order);
            one.grade(0) = Poly::constant(tv, Rational(1));
            eq_pow.push_back(std::move(one));
            for (int e = 1; e <= order; ++e) eq_pow.push_back(eq_pow.back() * eq);
        }
        std::vector<GradedSeries> xvals(x.begin() + 2, x.end());

        std::vector<GradedSeries> next;
        for (int p = 0; p <= space_.dim; ++p) {
            GradedSeries acc = identity(p);
            for (int e = 1; e <= order; ++e) {
                const Poly& psi = maps.forward[p].grade(e);
                if (psi.is_zero()) continue;
                GradedSeries term = poly_at_series(psi, xvals, "Q", order, tv);
                term = shifted_by_grade(term * eq_pow[e], e);
                acc -= term;
            }
            next.push_back(std::move(acc));
        }
        x = std::move(next);
    }
    maps.inverse = std::move(x);
    mirror_memo_.emplace(order, maps);
    return maps;
}

GradedSeries compose_with_inverse(const GradedSeries& series_x, const MirrorMaps& maps) {
    if (maps.inverse.empty()) throw std::invalid_argument("compose: empty mirror maps");
    int order = std::min(series_x.order(), maps.inverse[0].order());
    VarSetPtr tv = maps.inverse[0].def_vars();

    GradedSeries result("Q", tv, order);
    if (!series_x.lin0().is_zero()) {
        GradedSeries t0 = maps.inverse[0].truncated(order);
        t0 *= series_x.lin0();
        result += t0;
    }
    if (!series_x.lin1().is_zero()) {
        GradedSeries t1 = maps.inverse[1].truncated(order);
        t1 *= series_x.lin1();
        result += t1;
    }

    GradedSeries log_ratio = maps.inverse[1].truncated(order);
    log_ratio.set_lin1(Rational(0));
    GradedSeries eq = log_ratio.exp();
    std::vector<GradedSeries> eq_pow;
    {
        GradedSeries one("Q", tv, order);
        one.grade(0) = Poly::constant(tv, Rational(1));
        eq_pow.push_back(std::move(one));
        for (int e = 1; e <= order; ++e) eq_pow.push_back(eq_pow.back() * eq);
    }
    std::vector<GradedSeries> xvals;
    for (size_t p = 2; p < maps.inverse.size(); ++p)
        xvals.push_back(maps.inverse[p].truncated(order));

    for (int e = 0; e <= order; ++e) {
        const Poly& psi = series_x.grade(e);
        if (psi.is_zero()) continue;
        GradedSeries term = poly_at_series(psi, xvals, "Q", order, tv);
        if (e > 0) term = shifted_by_grade(term * eq_pow[e], e);
        result += term;
    }
    return result;
}

GradedSeries GenusZero::amodel_two_point(int a, int b, int order) {
    auto key = std::make_tuple(a, b, order);
    auto it = amodel_memo_.find(key);
    if (it != amodel_memo_.end()) return it->second;
    GradedSeries w = two_point_series(a, b, order);
    MirrorMaps maps = mirror_maps(order);
    GradedSeries composed = compose_with_inverse(w, maps);
    amodel_memo_.emplace(key, composed);
    return composed;
}

Rational GenusZero::gw_two_point(int a, int b, const Insertions& ins, int d) {
    if (d < 1) throw std::invalid_argument("GenusZero::gw_two_point: d must be >= 1");
    check_insertion_range(space_, ins);
    Insertions rest;
    Rational divisor_power(1);
    for (const auto& [j, n] : ins) {
        if (n == 0) continue;
        if (j == 0) return Rational(0);
        if (j == 1) divisor_power *= Rational(d).pow(n);
        else rest[j] = n;
    }
    GradedSeries series = amodel_two_point(a, b, d);
    Mono m;
    Rational weight(1);
    for (const auto& [j, n] : rest) {
        m.e[j - 2] = static_cast<uint16_t>(n);
        weight *= factorial(n);
    }
    return series.grade(d).coeff(m) * weight * divisor_power;
}

Rational GenusZero::gw(const Insertions& ins, int d) {
    if (d < 1) throw std::invalid_argument("GenusZero::gw: d must be >= 1");
    check_insertion_range(space_, ins);
    Insertions rest;
    Rational divisor_power(1);
    for (const auto& [j, n] : ins) {
        if (n == 0) continue;
        if (j == 0) return Rational(0);
        if (j == 1) divisor_power *= Rational(d).pow(n);
        else rest[j] = n;
    }
    // Borrow the two largest insertions as the two-point pair; pad with
    // divisor classes, each pad contributing a factor d to undo.
    int a = 1, b = 1;
    int pads = 2;
    for (int slot = 0; slot < 2; ++slot) {
        int chosen = -1;
        for (auto it = rest.rbegin(); it != rest.rend(); ++it)
            if (it->second > 0) {
                chosen = it->first;
                break;
            }
        if (chosen < 0) break;
        (slot == 0 ? a : b) = chosen;
        --rest[chosen];
        --pads;
    }
    Insertions remaining;
    for (const auto& [j, n] : rest)
        if (n > 0) remaining[j] = n;
    Rational v = gw_two_point(a, b, remaining, d);
    return v * divisor_power / Rational(d).pow(pads);
}

GradedSeries GenusZero::amodel_two_point_cy(int order) {
    if (!space_.is_calabi_yau() || space_.dim != 3)
        throw std::domain_error("amodel_two_point_cy: space is not a Calabi-Yau threefold");
    GradedSeries full = amodel_two_point(1, 1, order);
    GradedSeries r("Q", full.def_vars(), order);
    r.set_lin0(full.lin0());
    r.set_lin1(full.lin1());
    for (int d = 0; d <= order; ++d)
        r.grade(d) = Poly::constant(full.def_vars(), full.grade(d).constant_term());
    return r;
}

}  // namespace vsc
