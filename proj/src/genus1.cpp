#include "vsc/genus1.hpp"

#include <numeric>
#include <sstream>

#include "vsc/parallel.hpp"

namespace vsc {

namespace {

struct StarLayout {
    VarSetPtr vars;
    int w = -1;      // cluster variable, type (iii) only
    int center = 0;  // z_0
    std::vector<std::vector<int>> legs;
};

StarLayout star_layout(const Partition& sigma, bool with_cluster) {
    StarLayout layout;
    std::vector<std::string> names;
    if (with_cluster) names.push_back("w");
    names.push_back("z0");
    layout.center = with_cluster ? 1 : 0;
    layout.w = with_cluster ? 0 : -1;
    for (int i = 0; i < sigma.length(); ++i) {
        std::vector<int> leg;
        for (int j = 1; j <= sigma.parts[i]; ++j) {
            leg.push_back(static_cast<int>(names.size()));
            names.push_back("z" + std::to_string(i + 1) + "_" + std::to_string(j));
        }
        layout.legs.push_back(std::move(leg));
    }
    layout.vars = make_vars(std::move(names));
    return layout;
}

LinearForm chain_form(const VarSetPtr& vars, int cur, int prev, int next) {
    LinearForm lf(vars);
    lf.set_coeff(cur, lf.coeff(cur) + Rational(2));
    lf.set_coeff(prev, lf.coeff(prev) - Rational(1));
    lf.set_coeff(next, lf.coeff(next) - Rational(1));
    return lf;
}

// Leg edge factors shared by types (i) and (iii): numerator e-products,
// denominator q-factors, first-edge simple poles and chain factors.
void apply_leg_factors(RatExpr& f, const StarLayout& layout, const SpaceSpec& space) {
    const VarSetPtr& vars = layout.vars;
    Poly num = Poly::constant(vars, Rational(1));
    for (const auto& leg : layout.legs) {
        num = num * [&] {
            Poly p = Poly::constant(vars, Rational(1));
            for (long k : space.degrees)
                p = p * build_e(static_cast<int>(k), vars, layout.center, leg[0]);
            return p;
        }();
        for (size_t j = 0; j + 1 < leg.size(); ++j)
            for (long k : space.degrees)
                num = num * build_e(static_cast<int>(k), vars, leg[j], leg[j + 1]);
    }
    f.multiply_poly(num);

    for (const auto& leg : layout.legs) {
        for (auto& qf : q_factors(space, vars, layout.center, leg[0]))
            f.divide_by_form(std::move(qf));
        LinearForm first(vars);
        first.set_coeff(leg[0], Rational(1));
        first.set_coeff(layout.center, Rational(-1));
        f.divide_by_form(std::move(first));
        for (size_t j = 0; j + 1 < leg.size(); ++j) {
            for (auto& qf : q_factors(space, vars, leg[j], leg[j + 1]))
                f.divide_by_form(std::move(qf));
            int prev = j == 0 ? layout.center : leg[j - 1];
            f.divide_by_form(chain_form(vars, leg[j], prev, leg[j + 1]));
            f.multiply_rat(space.degree_product.inverse());
            f.divide_by_form(LinearForm::unit(vars, leg[j]), space.n_eqs);
        }
    }
    for (const auto& leg : layout.legs)
        for (int v : leg) f.divide_by_form(LinearForm::unit(vars, v), space.n_coords);
}

// (sum of w_a over the graph's edge pairs + extras)^{n_a} for every
// insertion; `edges` lists (tail, head) variable pairs, `diag` counts
// w_a(z,z) terms at the given variable.
Poly insertion_sums(const VarSetPtr& vars, const Insertions& ins,
                    const std::vector<std::pair<int, int>>& edges, int diag_var, int diag_count) {
    Poly out = Poly::constant(vars, Rational(1));
    for (const auto& [a, n] : ins) {
        if (n == 0) continue;
        Poly sum(vars);
        for (const auto& [x, y] : edges) sum += build_w(a, vars, x, y);
        if (diag_count > 0) {
            Poly diag = build_w(a, vars, diag_var, diag_var);
            diag *= Rational(diag_count);
            sum += diag;
        }
        out = out * sum.pow(n);
    }
    return out;
}

void append_leg_steps(std::vector<ResidueStep>* steps, const StarLayout& layout,
                      const std::vector<int>& leg_order) {
    std::vector<int> order(layout.legs.size());
    std::iota(order.begin(), order.end(), 0);
    if (!leg_order.empty()) {
        if (leg_order.size() != layout.legs.size())
            throw std::invalid_argument("leg_order: wrong length");
        order = leg_order;
    }
    for (int i : order) {
        const auto& leg = layout.legs.at(i);
        for (size_t j = 0; j + 1 < leg.size(); ++j) {
            int prev = j == 0 ? layout.center : leg[j - 1];
            steps->push_back(
                {leg[j], {LinearForm::unit(layout.vars, leg[j]),
                          chain_form(layout.vars, leg[j], prev, leg[j + 1])}});
        }
        steps->push_back({leg.back(), {LinearForm::unit(layout.vars, leg.back())}});
    }
}

}  // namespace

Rational GenusOne::point_factor(int d) const {
    Rational inv_sum(0);
    for (long a : space_.weights) inv_sum += Rational(1, a);
    for (long k : space_.degrees) inv_sum -= Rational(1, k);
    Rational r = Rational(space_.n_coords - space_.n_eqs, 2) / Rational(d) -
                 inv_sum / Rational(static_cast<long>(d) * d);
    return space_.weight_product * r;
}

RatExpr GenusOne::integrand(const GraphSpec& graph, const Insertions& ins,
                            std::vector<ResidueStep>* steps,
                            const std::vector<int>& leg_order) const {
    const int n_coords = space_.n_coords;
    const int m = space_.n_eqs;
    const int d = graph.d;
    ChernData chern = chern_coeffs(space_);

    switch (graph.kind) {
        case GraphSpec::Kind::kStar: {
            StarLayout layout = star_layout(graph.sigma, false);
            const VarSetPtr& vars = layout.vars;
            int l = graph.sigma.length();

            RatExpr f(Poly::variable(vars, layout.center, space_.dim));  // c_T(z_0)
            f.multiply_rat(chern.top() * sym(graph.sigma) / Rational(24) *
                           space_.weight_product.pow(-(d + 1)));
            std::vector<std::pair<int, int>> edges;
            for (const auto& leg : layout.legs) {
                edges.emplace_back(layout.center, leg[0]);
                for (size_t j = 0; j + 1 < leg.size(); ++j)
                    edges.emplace_back(leg[j], leg[j + 1]);
            }
            f.multiply_poly(insertion_sums(vars, ins, edges, -1, 0));

            f.divide_by_form(LinearForm::unit(vars, layout.center), n_coords);
            // prod_p (k_p z_0)^{l(sigma)-1}
            f.multiply_rat(space_.degree_product.pow(-(l - 1)));
            f.divide_by_form(LinearForm::unit(vars, layout.center), m * (l - 1));
            apply_leg_factors(f, layout, space_);
            f.normalize();

            if (steps) {
                steps->clear();
                steps->push_back({layout.center, {LinearForm::unit(vars, layout.center)}});
                append_leg_steps(steps, layout, leg_order);
            }
            return f;
        }

        case GraphSpec::Kind::kLoop: {
            std::vector<std::string> names;
            for (int i = 1; i <= d; ++i) names.push_back("z" + std::to_string(i));
            VarSetPtr vars = make_vars(std::move(names));
            auto prev = [&](int i) { return (i + d - 1) % d; };
            auto next = [&](int i) { return (i + 1) % d; };

            Poly num = Poly::constant(vars, Rational(1));
            for (int i = 0; i < d; ++i)
                for (long k : space_.degrees)
                    num = num * build_e(static_cast<int>(k), vars, i, next(i));
            RatExpr f(std::move(num));
            f.multiply_rat(Rational(1, 2L * d) * space_.weight_product.pow(-d));
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < d; ++i) edges.emplace_back(i, next(i));
            f.multiply_poly(insertion_sums(vars, ins, edges, -1, 0));

            for (int i = 0; i < d; ++i) {
                f.divide_by_form(LinearForm::unit(vars, i), n_coords);
                for (auto& qf : q_factors(space_, vars, i, next(i)))
                    f.divide_by_form(std::move(qf));
                f.divide_by_form(chain_form(vars, i, prev(i), next(i)));
                f.multiply_rat(space_.degree_product.inverse());
                f.divide_by_form(LinearForm::unit(vars, i), m);
            }
            f.normalize();

            if (steps) {
                steps->clear();
                for (int i = 0; i < d; ++i)
                    steps->push_back({i, {LinearForm::unit(vars, i),
                                          chain_form(vars, i, prev(i), next(i))}});
            }
            return f;
        }

        case GraphSpec::Kind::kClusterStar: {
            StarLayout layout = star_layout(graph.sigma, true);
            const VarSetPtr& vars = layout.vars;
            int l = graph.sigma.length();
            int f_deg = graph.f;
            int z0 = layout.center, w = layout.w;

            // (-(N-m)/N w^{-N} - (N+m)/N z_0^{-N}) over the common
            // denominator w^N z_0^N.
            Poly bracket(vars);
            bracket.add_term([&] { Mono mo; mo.e[z0] = static_cast<uint16_t>(n_coords); return mo; }(),
                             Rational(-(n_coords - m), n_coords));
            bracket.add_term([&] { Mono mo; mo.e[w] = static_cast<uint16_t>(n_coords); return mo; }(),
                             Rational(-(n_coords + m), n_coords));

            RatExpr f(std::move(bracket));
            f.multiply_rat(sym(graph.sigma) / Rational(24) * space_.weight_product.pow(-d));
            for (long k : space_.degrees) {
                f.multiply_poly(build_e(static_cast<int>(k), vars, w, z0));
                f.multiply_poly(build_e(static_cast<int>(k), vars, z0, z0).pow(f_deg - 1));
            }
            std::vector<std::pair<int, int>> edges;
            edges.emplace_back(w, z0);
            for (const auto& leg : layout.legs) {
                edges.emplace_back(z0, leg[0]);
                for (size_t j = 0; j + 1 < leg.size(); ++j)
                    edges.emplace_back(leg[j], leg[j + 1]);
            }
            f.multiply_poly(insertion_sums(vars, ins, edges, z0, f_deg - 1));

            f.divide_by_form(LinearForm::unit(vars, w), n_coords);
            f.divide_by_form(LinearForm::unit(vars, z0), n_coords + n_coords * (f_deg - 1));
            LinearForm double_pole(vars);
            double_pole.set_coeff(w, Rational(1));
            double_pole.set_coeff(z0, Rational(-1));
            f.divide_by_form(double_pole, 2);
            for (auto& qf : q_factors(space_, vars, w, z0)) f.divide_by_form(std::move(qf));
            for (auto& qf : q_factors(space_, vars, z0, z0))
                f.divide_by_form(std::move(qf), f_deg - 1);
            // prod_p (k_p z_0)^{l-1} * (k_p w) * (k_p z_0)^f
            f.multiply_rat(space_.degree_product.pow(-(l - 1) - 1 - f_deg));
            f.divide_by_form(LinearForm::unit(vars, z0), m * (l - 1) + m * f_deg);
            f.divide_by_form(LinearForm::unit(vars, w), m);
            apply_leg_factors(f, layout, space_);
            f.normalize();

            if (steps) {
                steps->clear();
                LinearForm wp(vars);
                wp.set_coeff(w, Rational(1));
                wp.set_coeff(z0, Rational(-1));
                steps->push_back({w, {std::move(wp)}});
                steps->push_back({z0, {LinearForm::unit(vars, z0)}});
                append_leg_steps(steps, layout, leg_order);
            }
            return f;
        }

        case GraphSpec::Kind::kPoint: {
            VarSetPtr vars = make_vars({"z0"});
            Poly num = Poly::constant(vars, Rational(1));
            for (long k : space_.degrees)
                num = num * build_e(static_cast<int>(k), vars, 0, 0).pow(d);
            RatExpr f(std::move(num));
            f.multiply_rat(point_factor(d) / Rational(24) * space_.weight_product.pow(-(d + 1)));
            for (const auto& [a, n] : ins) {
                if (n == 0) continue;
                Poly wd = build_w(a, vars, 0, 0);
                wd *= Rational(d);
                f.multiply_poly(wd.pow(n));
            }
            f.divide_by_form(LinearForm::unit(vars, 0), n_coords * d + 1);
            for (auto& qf : q_factors(space_, vars, 0, 0)) f.divide_by_form(std::move(qf), d);
            f.multiply_rat(space_.degree_product.pow(-d));
            f.divide_by_form(LinearForm::unit(vars, 0), m * d);
            f.normalize();

            if (steps) {
                steps->clear();
                steps->push_back({0, {LinearForm::unit(vars, 0)}});
            }
            return f;
        }
    }
    throw std::logic_error("GenusOne::integrand: unknown graph kind");
}

Rational GenusOne::res_graph(const GraphSpec& graph, const Insertions& ins,
                             ResidueMethod method, const std::vector<int>& leg_order) const {
    std::vector<ResidueStep> steps;
    RatExpr f = integrand(graph, ins, &steps, leg_order);
    return iterated_residue(f, steps, method);
}

std::string GenusOne::evsc_key(const Insertions& ins, int d) const {
    std::ostringstream os;
    os << "w1|" << space_.canonical_str() << "|d=" << d << "|ins=" << insertions_str(ins);
    return os.str();
}

Rational GenusOne::evsc(const Insertions& ins, int d, ResidueMethod method) {
    if (d < 1) throw std::invalid_argument("GenusOne::evsc: d must be >= 1");
    check_insertion_range(space_, ins);
    if (!selection_genus1(space_, d, ins)) return Rational(0);

    std::string key = evsc_key(ins, d);
    if (method == ResidueMethod::kDerivative && cache_) {
        if (auto hit = cache_->get(key)) return *hit;
    }

    std::vector<GraphSpec> graphs;
    for (auto& g : enumerate_graphs(d)) {
        // Cluster stars vanish identically for Calabi-Yau targets.
        if (space_.is_calabi_yau() && g.kind == GraphSpec::Kind::kClusterStar) continue;
        graphs.push_back(std::move(g));
    }
    std::vector<Rational> values(graphs.size(), Rational(0));
    parallel_for(static_cast<int>(graphs.size()), jobs_,
                 [&](int i) { values[i] = res_graph(graphs[i], ins, method); });
    Rational total(0);
    for (const auto& v : values) total += v;

    if (method == ResidueMethod::kDerivative && cache_) cache_->put(key, total);
    return total;
}

GradedSeries GenusOne::f1b(int order) {
    VarSetPtr xv = genus0_->x_vars();
    GradedSeries s("q", xv, order);
    s.set_lin1(classical_genus1(space_));

    struct Job {
        int d;
        Insertions ins;
        Rational value;
    };
    std::vector<Job> jobs;
    for (int d = 1; d <= order; ++d)
        for (auto& ins : enumerate_insertions(space_, space_.fano * d))
            jobs.push_back({d, ins, Rational(0)});
    parallel_for(static_cast<int>(jobs.size()), jobs_,
                 [&](int i) { jobs[i].value = evsc(jobs[i].ins, jobs[i].d); });
    for (auto& job : jobs) {
        if (job.value.is_zero()) continue;
        Mono m;
        Rational weight(1);
        for (const auto& [j, n] : job.ins) {
            m.e[j - 2] = static_cast<uint16_t>(n);
            weight *= factorial(n);
        }
        s.grade(job.d).add_term(m, job.value / weight);
    }
    return s;
}

GradedSeries GenusOne::f1a(int order) {
    auto it = f1a_memo_.find(order);
    if (it != f1a_memo_.end()) return it->second;
    GradedSeries s = compose_with_inverse(f1b(order), genus0_->mirror_maps(order));
    f1a_memo_.emplace(order, s);
    return s;
}

Rational GenusOne::gw(const Insertions& ins, int d) {
    if (d < 1) throw std::invalid_argument("GenusOne::gw: d must be >= 1");
    check_insertion_range(space_, ins);
    Insertions rest;
    Rational divisor_power(1);
    for (const auto& [j, n] : ins) {
        if (n == 0) continue;
        if (j == 0) return Rational(0);
        if (j == 1) divisor_power *= Rational(d).pow(n);
        else rest[j] = n;
    }
    GradedSeries series = f1a(d);
    Mono m;
    Rational weight(1);
    for (const auto& [j, n] : rest) {
        m.e[j - 2] = static_cast<uint16_t>(n);
        weight *= factorial(n);
    }
    return series.grade(d).coeff(m) * weight * divisor_power;
}

}  // namespace vsc
