#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "vsc/cache.hpp"
#include "vsc/rat_expr.hpp"
#include "vsc/series.hpp"
#include "vsc/space.hpp"

namespace vsc {

// Forward mirror maps t^p(x^*) in q and their inverses x^p(t^*) in Q,
// indexed by p = 0..dim.
struct MirrorMaps {
    std::vector<GradedSeries> forward;
    std::vector<GradedSeries> inverse;
};

// Composes a series in the x-variables/q grading with the inverse mirror
// maps, producing a series in the t-variables/Q grading.
GradedSeries compose_with_inverse(const GradedSeries& series_x, const MirrorMaps& maps);

// Genus-0 layer: multi-point virtual structure constants by iterated
// residues, the perturbed two-point functions, mirror maps, and the
// Gromov-Witten invariants on the mirror side.
class GenusZero {
public:
    GenusZero(SpaceSpec space, VscCache* cache, int jobs = 1)
        : space_(std::move(space)), cache_(cache), jobs_(jobs) {}

    const SpaceSpec& space() const { return space_; }

    // w(O_{h^a} O_{h^b} | prod (O_{h^p})^{n_p})_{0,d}. Insertions may
    // include indices 0 and 1.
    Rational vsc(int a, int b, const Insertions& ins, int d,
                 ResidueMethod method = ResidueMethod::kDerivative);

    // The integrand and residue prescription behind vsc, exposed for the
    // oracle cross-checks.
    RatExpr integrand(int a, int b, const Insertions& ins, int d,
                      std::vector<ResidueStep>* steps) const;

    // w(O_{h^a} O_{h^b})_0(x^*) truncated at q^D.
    GradedSeries two_point_series(int a, int b, int order);

    MirrorMaps mirror_maps(int order);

    // <O_{h^a} O_{h^b}>_0(t^*) = w(...)_0(x(t^*)).
    GradedSeries amodel_two_point(int a, int b, int order);

    // <O_{h^a} O_{h^b} prod (O_{h^q})^{n_q}>_{0,d}; undoes the 1/n_q!
    // weights.
    Rational gw_two_point(int a, int b, const Insertions& ins, int d);

    // Bare <prod (O_{h^p})^{n_p}>_{0,d} via insertion borrowing: the two
    // largest insertions become (a, b); missing slots are padded with the
    // divisor class O_h and divided out by d.
    Rational gw(const Insertions& ins, int d);

    // <O_h O_h>(t) for a Calabi-Yau threefold, deformation variables off.
    GradedSeries amodel_two_point_cy(int order);

    VarSetPtr x_vars() const;   // x^2..x^dim
    VarSetPtr t_vars() const;   // t^2..t^dim

private:
    SpaceSpec space_;
    VscCache* cache_;
    int jobs_;
    std::map<std::tuple<int, int, int>, GradedSeries> amodel_memo_;
    std::map<int, MirrorMaps> mirror_memo_;

    std::string vsc_key(int a, int b, const Insertions& ins, int d) const;
    Rational vsc_uncached(int a, int b, const Insertions& ins, int d,
                          ResidueMethod method) const;
};

}  // namespace vsc
