#include "vsc/graphs.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vsc {

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int value) const {
    int n = 0;
    for (int p : parts)
        if (p == value) ++n;
    return n;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Partition> partitions(int d) {
    if (d < 1) throw std::invalid_argument("partitions: d must be >= 1");
    std::vector<Partition> out;
    Partition current;
    // Non-decreasing parts, generated lexicographically.
    auto rec = [&](auto&& self, int left, int min_part) -> void {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (int p = min_part; p <= left; ++p) {
            current.parts.push_back(p);
            self(self, left - p, p);
            current.parts.pop_back();
        }
    };
    rec(rec, d, 1);
    return out;
}

Rational sym(const Partition& sigma) {
    if (sigma.parts.empty()) throw std::invalid_argument("sym: empty partition");
    Rational r = factorial(sigma.length() - 1);
    for (int v = 1; v <= sigma.parts.back(); ++v) {
        int mul = sigma.multiplicity(v);
        if (mul > 1) r /= factorial(mul);
    }
    return r;
}

GraphSpec GraphSpec::star(int d, Partition sigma) {
    if (sigma.sum() != d) throw std::invalid_argument("GraphSpec::star: partition sum != d");
    return GraphSpec{Kind::kStar, d, 0, std::move(sigma)};
}

GraphSpec GraphSpec::loop(int d) {
    if (d < 2) throw std::invalid_argument("GraphSpec::loop: d must be >= 2");
    return GraphSpec{Kind::kLoop, d, 0, {}};
}

GraphSpec GraphSpec::cluster_star(int d, int f, Partition sigma) {
    if (f < 1 || f > d - 1)
        throw std::invalid_argument("GraphSpec::cluster_star: need 1 <= f <= d-1");
    if (sigma.sum() != d - f)
        throw std::invalid_argument("GraphSpec::cluster_star: partition sum != d-f");
    return GraphSpec{Kind::kClusterStar, d, f, std::move(sigma)};
}

GraphSpec GraphSpec::point(int d) {
    if (d < 1) throw std::invalid_argument("GraphSpec::point: d must be >= 1");
    return GraphSpec{Kind::kPoint, d, 0, {}};
}

std::string GraphSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::kStar: os << "star" << sigma.str(); break;
        case Kind::kLoop: os << "loop(" << d << ")"; break;
        case Kind::kClusterStar: os << "cluster(f=" << f << "," << sigma.str() << ")"; break;
        case Kind::kPoint: os << "point(" << d << ")"; break;
    }
    return os.str();
}

std::vector<GraphSpec> enumerate_graphs(int d) {
    if (d < 1) throw std::invalid_argument("enumerate_graphs: d must be >= 1");
    std::vector<GraphSpec> out;
    for (auto& sigma : partitions(d)) out.push_back(GraphSpec::star(d, sigma));
    if (d >= 2) out.push_back(GraphSpec::loop(d));
    for (int f = 1; f <= d - 1; ++f)
        for (auto& sigma : partitions(d - f))
            out.push_back(GraphSpec::cluster_star(d, f, sigma));
    out.push_back(GraphSpec::point(d));
    return out;
}

}  // namespace vsc
