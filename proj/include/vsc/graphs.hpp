#pragma once

#include <string>
#include <vector>

#include "vsc/rational.hpp"

namespace vsc {

// Partition of a positive integer, parts non-decreasing.
struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int sum() const;
    int multiplicity(int value) const;
    std::string str() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// All partitions of d, deterministic (lexicographic) order.
std::vector<Partition> partitions(int d);

// Sym(sigma) = (l(sigma) - 1)! / prod_i mul(sigma, i)!.
Rational sym(const Partition& sigma);

// The four graph types behind the elliptic virtual structure constants.
struct GraphSpec {
    enum class Kind { kStar, kLoop, kClusterStar, kPoint };

    Kind kind;
    int d = 0;          // total degree
    int f = 0;          // cluster degree, kClusterStar only
    Partition sigma;    // kStar: in P_d; kClusterStar: in P_{d-f}

    static GraphSpec star(int d, Partition sigma);
    static GraphSpec loop(int d);
    static GraphSpec cluster_star(int d, int f, Partition sigma);
    static GraphSpec point(int d);

    std::string str() const;
};

// One star per partition of d, the loop for d >= 2, one cluster star per
// (f, sigma in P_{d-f}) with 1 <= f <= d-1, and the point graph.
std::vector<GraphSpec> enumerate_graphs(int d);

}  // namespace vsc
