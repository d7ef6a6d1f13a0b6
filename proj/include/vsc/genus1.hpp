#pragma once

#include <map>
#include <string>
#include <vector>

#include "vsc/cache.hpp"
#include "vsc/genus0.hpp"
#include "vsc/graphs.hpp"
#include "vsc/rat_expr.hpp"
#include "vsc/series.hpp"
#include "vsc/space.hpp"

namespace vsc {

// Genus-1 layer: the elliptic virtual structure constants as graph sums of
// iterated residues, the generating function F_1^B, and its mirror
// composition F_1^A with genus-1 Gromov-Witten extraction.
class GenusOne {
public:
    GenusOne(SpaceSpec space, VscCache* cache, GenusZero* genus0, int jobs = 1)
        : space_(std::move(space)), cache_(cache), genus0_(genus0), jobs_(jobs) {}

    const SpaceSpec& space() const { return space_; }

    // Integrand f_Gamma with its residue prescription. `leg_order`
    // optionally permutes the order star legs are processed in (identity
    // when empty); the result must not depend on it.
    RatExpr integrand(const GraphSpec& graph, const Insertions& ins,
                      std::vector<ResidueStep>* steps,
                      const std::vector<int>& leg_order = {}) const;

    // Res(f_Gamma). Not cached; evsc caches the graph sums.
    Rational res_graph(const GraphSpec& graph, const Insertions& ins,
                       ResidueMethod method = ResidueMethod::kDerivative,
                       const std::vector<int>& leg_order = {}) const;

    // w(prod (O_{h^p})^{n_p})_{1,d}. Insertions may include indices 0, 1.
    // For Calabi-Yau spaces the type-(iii) cluster stars are skipped (they
    // vanish identically; the property suite asserts it graph by graph).
    Rational evsc(const Insertions& ins, int d,
                  ResidueMethod method = ResidueMethod::kDerivative);

    // R(d), the point-graph symmetric factor.
    Rational point_factor(int d) const;

    GradedSeries f1b(int order);
    GradedSeries f1a(int order);

    // <prod (O_{h^p})^{n_p}>_{1,d} from F_1^A; undoes the 1/n_q! weights.
    Rational gw(const Insertions& ins, int d);

private:
    SpaceSpec space_;
    VscCache* cache_;
    GenusZero* genus0_;
    int jobs_;
    std::map<int, GradedSeries> f1a_memo_;

    std::string evsc_key(const Insertions& ins, int d) const;
};

}  // namespace vsc
