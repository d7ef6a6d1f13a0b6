#include "vsc/rational.hpp"

#include <ostream>

namespace vsc {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? -static_cast<unsigned long>(e) : e;
    if (neg && is_zero()) throw std::domain_error("Rational::pow: 0 to negative power");
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), k);
    if (neg) {
        mpq_class inv;
        mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
        r = inv;
    }
    r.canonicalize();
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("Rational::to_long: not a small integer");
    return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

size_t Rational::Hash::operator()(const Rational& r) const {
    size_t h = mpz_get_ui(r.v_.get_num_mpz_t());
    size_t d = mpz_get_ui(r.v_.get_den_mpz_t());
    h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    if (r.sign() < 0) h = ~h;
    return h;
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpq_class r;
    mpz_gcd(r.get_num_mpz_t(), a.v_.get_num_mpz_t(), b.v_.get_num_mpz_t());
    mpz_lcm(r.get_den_mpz_t(), a.v_.get_den_mpz_t(), b.v_.get_den_mpz_t());
    r.canonicalize();
    return Rational(std::move(r));
}

Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational::parse(f.get_str());
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    // Generalized over integer n (n may be negative): n(n-1)...(n-k+1)/k!.
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= Rational(n - i);
    return r / factorial(k);
}

}  // namespace vsc
