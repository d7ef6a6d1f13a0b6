#include "vsc/space.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vsc {

std::string insertions_str(const Insertions& ins) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, n] : ins) {
        if (n == 0) continue;
        if (!first) os << ",";
        first = false;
        os << j << ":" << n;
    }
    return os.str();
}

Insertions parse_insertions(const std::string& s) {
    Insertions ins;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad insertion entry '" + item + "'");
        int j = std::stoi(item.substr(0, colon));
        int n = std::stoi(item.substr(colon + 1));
        if (n < 0) throw std::invalid_argument("negative insertion multiplicity");
        if (n > 0) ins[j] += n;
    }
    return ins;
}

std::string SpaceSpec::canonical_str() const {
    std::vector<long> w = weights, k = degrees;
    std::sort(w.begin(), w.end());
    std::sort(k.begin(), k.end());
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "|";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    return os.str();
}

std::string SpaceSpec::display_str() const {
    std::ostringstream os;
    os << "P(";
    for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
    os << "|";
    for (size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    os << ")";
    return os.str();
}

SpaceSpec validate_space(const std::vector<long>& weights, const std::vector<long>& degrees) {
    if (weights.empty() || degrees.empty())
        throw SpaceError("space: weights and degrees must be non-empty");
    for (long a : weights)
        if (a <= 0) throw SpaceError("space: weights must be positive");
    for (long k : degrees)
        if (k <= 0) throw SpaceError("space: degrees must be positive");

    std::vector<long> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() != 1) throw SpaceError("space: a_1 must be 1");
    if (sorted.size() >= 2) {
        long g = 0;
        for (size_t i = 1; i < sorted.size(); ++i) g = std::gcd(g, sorted[i]);
        if (g != 1) throw SpaceError("space: gcd(a_2,...,a_N) must be 1");
    }
    for (long a : weights)
        for (long k : degrees)
            if (k % a != 0)
                throw SpaceError("space: weight " + std::to_string(a) +
                                 " does not divide degree " + std::to_string(k));

    SpaceSpec s;
    s.weights = weights;
    s.degrees = degrees;
    s.n_coords = static_cast<int>(weights.size());
    s.n_eqs = static_cast<int>(degrees.size());
    s.dim = s.n_coords - s.n_eqs - 1;
    if (s.dim < 1) throw SpaceError("space: N - m - 1 must be at least 1");
    long sum_a = std::accumulate(weights.begin(), weights.end(), 0L);
    long sum_k = std::accumulate(degrees.begin(), degrees.end(), 0L);
    s.fano = sum_a - sum_k;
    s.weight_product = Rational(1);
    for (long a : weights) s.weight_product *= Rational(a);
    s.degree_product = Rational(1);
    for (long k : degrees) s.degree_product *= Rational(k);
    return s;
}

SpaceSpec parse_space(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw SpaceError("space '" + text + "': expected \"a1,..,aN|k1,..,km\"");
    auto parse_list = [&](const std::string& part) {
        std::vector<long> out;
        std::istringstream is(part);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) throw SpaceError("space '" + text + "': empty entry");
            size_t pos = 0;
            long v = 0;
            try {
                v = std::stol(item, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != item.size())
                throw SpaceError("space '" + text + "': bad integer '" + item + "'");
            out.push_back(v);
        }
        return out;
    };
    return validate_space(parse_list(text.substr(0, bar)), parse_list(text.substr(bar + 1)));
}

ChernData chern_coeffs(const SpaceSpec& space) {
    int top = space.dim;
    std::vector<Rational> c(static_cast<size_t>(top) + 1, Rational(0));
    c[0] = Rational(1);
    // Multiply by each (1 + a h).
    for (long a : space.weights) {
        for (int j = top; j >= 1; --j) c[j] += c[j - 1] * Rational(a);
    }
    // Divide by each (1 + k h): u_j = c_j - k u_{j-1}.
    for (long k : space.degrees) {
        for (int j = 1; j <= top; ++j) c[j] -= c[j - 1] * Rational(k);
    }
    ChernData data{std::move(c)};
    if (data.c[0] != Rational(1)) throw std::logic_error("chern: c_0 != 1");
    if (top >= 1 && data.c[1] != Rational(space.fano))
        throw std::logic_error("chern: c_1 != F");
    return data;
}

Poly build_e(int k, const VarSetPtr& vars, int x, int y) {
    if (k < 1) throw std::invalid_argument("build_e: k must be >= 1");
    Poly p = Poly::constant(vars, Rational(1));
    for (int i = 0; i <= k; ++i) {
        LinearForm lf(vars);
        lf.set_coeff(x, lf.coeff(x) + Rational(i));
        lf.set_coeff(y, lf.coeff(y) + Rational(k - i));
        p = p * lf.to_poly();
    }
    return p;
}

Poly build_w(int a, const VarSetPtr& vars, int x, int y) {
    if (a < 0) throw std::invalid_argument("build_w: a must be >= 0");
    Poly p(vars);
    for (int i = 0; i < a; ++i) {
        Mono m;
        m.e[x] = static_cast<uint16_t>(m.e[x] + i);
        m.e[y] = static_cast<uint16_t>(m.e[y] + (a - 1 - i));
        p.add_term(m, Rational(1));
    }
    return p;
}

std::vector<LinearForm> q_factors(const SpaceSpec& space, const VarSetPtr& vars, int x, int y) {
    std::vector<LinearForm> out;
    for (long a : space.weights) {
        for (long j = 1; j <= a - 1; ++j) {
            LinearForm lf(vars);
            lf.set_coeff(x, lf.coeff(x) + Rational(j));
            lf.set_coeff(y, lf.coeff(y) + Rational(a - j));
            out.push_back(std::move(lf));
        }
    }
    return out;
}

Poly build_q(const SpaceSpec& space, const VarSetPtr& vars, int x, int y) {
    Poly p = Poly::constant(vars, Rational(1));
    for (const auto& lf : q_factors(space, vars, x, y)) p = p * lf.to_poly();
    return p;
}

namespace {
long insertion_weight(const Insertions& ins) {
    long s = 0;
    for (const auto& [j, n] : ins) s += static_cast<long>(n) * (j - 1);
    return s;
}
}  // namespace

void check_insertion_range(const SpaceSpec& space, const Insertions& ins) {
    for (const auto& [j, n] : ins) {
        if (n < 0) throw std::invalid_argument("insertions: negative multiplicity");
        if (j < 0 || j > space.dim)
            throw std::invalid_argument("insertions: index " + std::to_string(j) +
                                        " outside 0.." + std::to_string(space.dim));
    }
}

bool selection_two_point(const SpaceSpec& space, int d, int a, int b, const Insertions& ins) {
    return space.fano * d + space.dim - 1 == a + b + insertion_weight(ins);
}

bool selection_genus1(const SpaceSpec& space, int d, const Insertions& ins) {
    return space.fano * d == insertion_weight(ins);
}

bool selection_genus0_gw(const SpaceSpec& space, int d, const Insertions& ins) {
    return space.fano * d + space.dim - 3 == insertion_weight(ins);
}

bool selection_rule(const SpaceSpec& space, int genus, int d, int a, int b,
                    const Insertions& ins) {
    if (genus == 0) return selection_two_point(space, d, a, b, ins);
    if (genus == 1) return selection_genus1(space, d, ins);
    throw std::invalid_argument("selection_rule: genus must be 0 or 1");
}

Rational classical_two_point(const SpaceSpec& space) {
    return space.degree_product / space.weight_product;
}

Rational classical_genus1(const SpaceSpec& space) {
    ChernData chern = chern_coeffs(space);
    return -space.degree_product * chern.second_top() /
           (Rational(24) * space.weight_product);
}

std::vector<Insertions> enumerate_insertions(const SpaceSpec& space, long target) {
    std::vector<Insertions> out;
    if (target < 0) return out;
    Insertions current;
    // Lexicographic in n_2, then n_3, ...
    std::function<void(int, long)> rec = [&](int j, long left) {
        if (j > space.dim) {
            if (left == 0) out.push_back(current);
            return;
        }
        if (j == space.dim) {
            // Last index: multiplicity forced if divisible.
            if (left % (j - 1) == 0) {
                int n = static_cast<int>(left / (j - 1));
                if (n > 0) current[j] = n;
                out.push_back(current);
                current.erase(j);
            }
            return;
        }
        long step = j - 1;
        for (long n = 0; n * step <= left; ++n) {
            if (n > 0) current[j] = static_cast<int>(n);
            rec(j + 1, left - n * step);
            current.erase(j);
        }
    };
    if (space.dim < 2) {
        if (target == 0) out.push_back({});
        return out;
    }
    rec(2, target);
    return out;
}

}  // namespace vsc
