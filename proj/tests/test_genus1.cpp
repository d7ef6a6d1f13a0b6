#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vsc/genus1.hpp"

using namespace vsc;

namespace {

struct Setup {
    VscCache cache;
    SpaceSpec space;
    GenusZero g0;
    GenusOne g1;
    explicit Setup(const char* s)
        : space(parse_space(s)), g0(space, &cache, 4), g1(space, &cache, &g0, 4) {}
};

}  // namespace

TEST_CASE("point-graph symmetric factor R(d)") {
    // quintic-like: N=5, m=1, k=5
    Setup quintic("1,1,1,1,1|5");
    CHECK(quintic.g1.point_factor(1) == Rational(-14, 5));
    Setup ci("1,1,1,1,1|2,2");
    CHECK(ci.g1.point_factor(1) == Rational(-5, 2));
    CHECK(ci.g1.point_factor(2) == Rational(-1, 4));  // 3/4 - 4/4
}

TEST_CASE("per-graph residues behind the d=1 elliptic constants") {
    // (2,2)_5 at d=1, n2=1: star gives 4/3, point gives -10/3, total -2.
    Setup s("1,1,1,1,1|2,2");
    Insertions ins{{2, 1}};
    GraphSpec star = GraphSpec::star(1, Partition{{1}});
    GraphSpec point = GraphSpec::point(1);
    CHECK(s.g1.res_graph(star, ins) == Rational(4, 3));
    CHECK(s.g1.res_graph(point, ins) == Rational(-10, 3));
    CHECK(s.g1.evsc(ins, 1) == Rational(-2));

    // P(1,1,1,2|4): star 5, point -28/3, total -13/3.
    Setup w("1,1,1,2|4");
    CHECK(w.g1.res_graph(star, ins) == Rational(5));
    CHECK(w.g1.res_graph(point, ins) == Rational(-28, 3));
    CHECK(w.g1.evsc(ins, 1) == Rational(-13, 3));
}

TEST_CASE("elliptic constants match the tables") {
    Setup t1("1,1,1,1,2|2");
    CHECK(t1.g1.evsc({{3, 2}}, 1) == Rational(-7, 12));
    CHECK(t1.g1.evsc({{2, 2}, {3, 1}}, 1) == Rational(-5, 6));
    CHECK(t1.g1.evsc({{2, 4}}, 1) == Rational(-7, 6));

    Setup t2("1,1,1,1,2|4");
    CHECK(t2.g1.evsc({{3, 1}}, 1) == Rational(-26));
    CHECK(t2.g1.evsc({{2, 2}}, 1) == Rational(-32));

    Setup t5("1,1,1,1,1|2,2");
    CHECK(t5.g1.evsc({{2, 2}}, 2) == Rational(-272, 3));

    Setup t8("1,1,1,1,1,2|2,2");
    CHECK(t8.g1.evsc({{2, 1}, {3, 1}}, 1) == Rational(-13, 6));
    CHECK(t8.g1.evsc({{2, 3}}, 1) == Rational(-3));
}

TEST_CASE("off-shell keys and reduction rules") {
    Setup s("1,1,1,1,1|2,2");
    CHECK(s.g1.evsc({{2, 3}}, 1).is_zero());  // selection fails
    for (int d = 1; d <= 2; ++d) {
        Insertions base{{2, d}};
        Rational value = s.g1.evsc(base, d);
        Insertions with_n1 = base;
        with_n1[1] = 2;
        CHECK(s.g1.evsc(with_n1, d) == value * Rational(d).pow(2));
        Insertions with_n0 = base;
        with_n0[0] = 1;
        with_n0[2] += 1;  // restore the balance spoiled by n0's weight -1
        CHECK(s.g1.evsc(with_n0, d).is_zero());
    }
}

TEST_CASE("type-(iii) residues vanish graph by graph on Calabi-Yau targets") {
    for (const char* str : {"1,1,1,1,2|6", "1,1,1,1,1,1|2,2,2"}) {
        Setup s(str);
        for (int d = 2; d <= 3; ++d) {
            for (const auto& g : enumerate_graphs(d)) {
                if (g.kind != GraphSpec::Kind::kClusterStar) continue;
                CHECK(s.g1.res_graph(g, {}).is_zero());
            }
        }
    }
}

TEST_CASE("leg processing order does not change star residues") {
    Setup s("1,1,1,2|4");
    Insertions ins{{2, 3}};  // F d = 3 at d = 3
    GraphSpec star = GraphSpec::star(3, Partition{{1, 2}});
    CHECK(s.g1.res_graph(star, ins, ResidueMethod::kDerivative, {0, 1}) ==
          s.g1.res_graph(star, ins, ResidueMethod::kDerivative, {1, 0}));
    GraphSpec star3 = GraphSpec::star(3, Partition{{1, 1, 1}});
    Rational base = s.g1.res_graph(star3, ins, ResidueMethod::kDerivative, {0, 1, 2});
    CHECK(s.g1.res_graph(star3, ins, ResidueMethod::kDerivative, {2, 0, 1}) == base);
    CHECK(s.g1.res_graph(star3, ins, ResidueMethod::kDerivative, {1, 2, 0}) == base);
}

TEST_CASE("laurent oracle agrees on every d <= 2 graph") {
    for (const char* str : {"1,1,1,1,1|2,2", "1,1,1,2|4"}) {
        Setup s(str);
        for (int d = 1; d <= 2; ++d) {
            long target = s.space.fano * d;
            for (const auto& ins : enumerate_insertions(s.space, target))
                for (const auto& g : enumerate_graphs(d))
                    CHECK(s.g1.res_graph(g, ins, ResidueMethod::kDerivative) ==
                          s.g1.res_graph(g, ins, ResidueMethod::kLaurent));
        }
    }
}

TEST_CASE("F_1^B series match the displayed expansions") {
    Setup sx("1,1,1,1,2|6");
    GradedSeries fb = sx.g1.f1b(2);
    CHECK(fb.lin1() == Rational(-7, 4));
    CHECK(fb.grade(1).constant_term() == Rational(-4194));
    CHECK(fb.grade(2).constant_term() == Rational(-14373450));

    Setup ci("1,1,1,1,1,1,1|2,2,3");
    GradedSeries fc = ci.g1.f1b(2);
    CHECK(fc.lin1() == Rational(-5, 2));
    CHECK(fc.grade(1).constant_term() == Rational(-210));
    CHECK(fc.grade(2).constant_term() == Rational(-27126));

    // K3: F_1^B vanishes identically (the classical constant has c_1 = F = 0)
    Setup k3("1,1,1,1,1,1|2,2,2");
    GradedSeries fk = k3.g1.f1b(3);
    CHECK(fk.lin1() == Rational(0));
    for (int d = 0; d <= 3; ++d) CHECK(fk.grade(d).is_zero());
}

TEST_CASE("F_1^A series and genus-1 invariants") {
    Setup sx("1,1,1,1,2|6");
    GradedSeries fa = sx.g1.f1a(2);
    CHECK(fa.lin1() == Rational(-7, 4));
    CHECK(fa.grade(1).constant_term() == Rational(657));
    CHECK(fa.grade(2).constant_term() == Rational(1021167, 2));

    Setup w("1,1,1,2|4");
    CHECK(w.g1.gw({{2, 1}}, 1).is_zero());
    CHECK(w.g1.gw({{2, 2}}, 2) == Rational(4));

    Setup t1("1,1,1,1,2|2");
    CHECK(t1.g1.gw({{3, 2}}, 1) == Rational(-1, 12));
    Setup t2("1,1,1,1,2|4");
    CHECK(t2.g1.gw({{3, 2}}, 2) == Rational(-8));
    Setup t8("1,1,1,1,1,2|2,2");
    CHECK(t8.g1.gw({{2, 1}, {3, 1}}, 1) == Rational(-1, 6));
}

TEST_CASE("the linear coefficient of F_1^A is the classical constant") {
    for (const char* str : {"1,1,1,1,1|2,2", "1,1,1,2|4", "1,1,1,1,2|6"}) {
        Setup s(str);
        CHECK(s.g1.f1a(1).lin1() == classical_genus1(s.space));
    }
}

TEST_CASE("P(1,1,1,1,2|2,2) generating functions to order 3") {
    Setup s("1,1,1,1,2|2,2");
    GradedSeries fb = s.g1.f1b(3);
    VarSetPtr xv = s.g0.x_vars(), tv = s.g0.t_vars();
    auto m = [](const VarSetPtr& v, const Rational& c, int e) {
        Poly p = Poly::variable(v, 0, e);
        p *= c;
        return p;
    };
    // F_1^B = -x^1/6 - q x2^2/2 - 131/36 q^2 x2^4 - 12329/270 q^3 x2^6
    CHECK(fb.lin1() == Rational(-1, 6));
    CHECK(fb.grade(1) == m(xv, Rational(-1, 2), 2));
    CHECK(fb.grade(2) == m(xv, Rational(-131, 36), 4));
    CHECK(fb.grade(3) == m(xv, Rational(-12329, 270), 6));
    // F_1^A = -t^1/6 with no corrections through order 3
    GradedSeries fa = s.g1.f1a(3);
    CHECK(fa.lin1() == Rational(-1, 6));
    for (int e = 1; e <= 3; ++e) CHECK(fa.grade(e).is_zero());
}

TEST_CASE("(2,2,2)_7 generating functions to order 2") {
    Setup s("1,1,1,1,1,1,1|2,2,2");
    GradedSeries fb = s.g1.f1b(2);
    VarSetPtr xv = s.g0.x_vars(), tv = s.g0.t_vars();
    // F_1^B = -x^1 - 80/3 q x2 + q^2 (-2176 x2^2 - 4912/3 x3)
    CHECK(fb.lin1() == Rational(-1));
    CHECK(fb.grade(1) == Poly::variable(xv, 0) * Rational(-80, 3));
    Poly q2 = Poly::variable(xv, 0, 2) * Rational(-2176);
    q2 += Poly::variable(xv, 1) * Rational(-4912, 3);
    CHECK(fb.grade(2) == q2);
    // F_1^A = -t^1 + 16/3 Q t2 + 0 Q^2
    GradedSeries fa = s.g1.f1a(2);
    CHECK(fa.lin1() == Rational(-1));
    CHECK(fa.grade(1) == Poly::variable(tv, 0) * Rational(16, 3));
    CHECK(fa.grade(2).is_zero());
}

TEST_CASE("sextic generating functions reproduce the printed order-4 coefficients") {
    Setup s("1,1,1,1,2|6");
    CHECK(s.g1.f1b(4).grade(4).constant_term() == Rational::parse("-547479376081866"));
    CHECK(s.g1.f1a(4).grade(4).constant_term() == Rational::parse("18625762314603/4"));
}

TEST_CASE("laurent oracle on point graphs through d = 3") {
    for (const char* str : {"1,1,1,1,1|2,2", "1,1,1,2,5|10"}) {
        Setup s(str);
        for (int d = 1; d <= 3; ++d) {
            auto keys = enumerate_insertions(s.space, s.space.fano * d);
            REQUIRE(!keys.empty());
            GraphSpec point = GraphSpec::point(d);
            CHECK(s.g1.res_graph(point, keys.front(), ResidueMethod::kDerivative) ==
                  s.g1.res_graph(point, keys.front(), ResidueMethod::kLaurent));
        }
    }
}
