#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsc {

// Largest number of live variables in any expression context. Residue
// chains use d+1 vertex variables (plus w for cluster graphs), so this
// covers degrees well past the fixture range.
inline constexpr int kMaxVars = 12;

// Immutable, shared variable context. Polynomials and linear forms carry a
// pointer to the set they are written over; mixing contexts is an error.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.size() > kMaxVars)
            throw std::invalid_argument("VarSet: too many variables (max " +
                                        std::to_string(kMaxVars) + ")");
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }

    int index(const std::string& n) const {
        for (int i = 0; i < size(); ++i)
            if (names_[i] == n) return i;
        throw std::out_of_range("VarSet: unknown variable '" + n + "'");
    }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    if (a == b) return true;
    return a && b && a->names() == b->names();
}

// Exponent multi-index over a VarSet. Entries past the set's size stay 0.
struct Mono {
    std::array<uint16_t, kMaxVars> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool operator==(const Mono& o) const { return e == o.e; }

    // Graded lexicographic order; gives deterministic term streams.
    bool operator<(const Mono& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return e < o.e;
    }
};

struct MonoHash {
    size_t operator()(const Mono& m) const {
        size_t h = 0xcbf29ce484222325ULL;
        for (auto x : m.e) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

}  // namespace vsc
