#include "gentle/field.hpp"

#include "gentle/errors.hpp"

namespace gentle {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Inverse of a mod p, a not divisible by p.
Int mod_inverse(Int a, unsigned p) {
    Int t = 0, new_t = 1;
    Int r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw internal_error("element not invertible mod p");
    if (t < 0) t += p;
    return t;
}

}  // namespace

Field::Field(unsigned characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw domain_error("field characteristic must be 0 or a prime, got " +
                           std::to_string(p_));
}

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q" || text.empty()) return rationals();
    if (text.rfind("fp:", 0) == 0) {
        try {
            unsigned long p = std::stoul(text.substr(3));
            return prime(static_cast<unsigned>(p));
        } catch (const std::exception&) {
            throw domain_error("unrecognized field '" + text + "'");
        }
    }
    throw domain_error("unrecognized field '" + text + "' (expected q or fp:<prime>)");
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Field::normalize(const Scalar& x) const {
    if (p_ == 0) return x;
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    Int n = num % p_;
    if (n < 0) n += p_;
    Int d = den % p_;
    if (d < 0) d += p_;
    if (d == 0) throw internal_error("denominator divisible by field characteristic");
    if (d != 1) n = (n * mod_inverse(d, p_)) % p_;
    return Scalar(n);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar x = normalize(a);
    if (x == 0) throw internal_error("division by zero");
    if (p_ == 0) return 1 / x;
    return Scalar(mod_inverse(boost::multiprecision::numerator(x), p_));
}

}  // namespace gentle
