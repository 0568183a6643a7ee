#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gentle {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
/// All scalars are carried as exact rationals; over F_p they are kept in
/// canonical form with numerator in [0, p) and denominator 1.
class Field {
public:
    Field() = default;
    explicit Field(unsigned characteristic);

    static Field rationals() { return Field(); }
    static Field prime(unsigned p) { return Field(p); }

    /// Parses "q" or "fp:<prime>".
    static Field parse(const std::string& text);

    unsigned characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    std::string name() const;

    Scalar normalize(const Scalar& x) const;
    Scalar from_int(long long n) const { return normalize(Scalar(n)); }

    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return normalize(a) == 0; }
    bool equal(const Scalar& a, const Scalar& b) const { return is_zero(a - b); }

private:
    unsigned p_ = 0;
};

}  // namespace gentle
