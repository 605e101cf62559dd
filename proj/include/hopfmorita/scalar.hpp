#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hm {

using Rational = mpq_class;

// Malformed textual input (scalar strings, documents).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact Gaussian rational re + im*i. mpq_class keeps both parts canonical
// (reduced, positive denominator) so == is structural.
class Gauss {
public:
    Gauss() = default;
    Gauss(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gauss(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Gauss i() { return {Rational(0), Rational(1)}; }
    static Gauss frac(long num, long den) { return Gauss(Rational(num, den)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Gauss conj() const { return {re_, -im_}; }
    // |z|^2, always a non-negative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Gauss operator-() const { return {-re_, -im_}; }
    Gauss& operator+=(const Gauss& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gauss& operator-=(const Gauss& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gauss& operator*=(const Gauss& o);
    Gauss& operator/=(const Gauss& o);

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend bool operator==(const Gauss& a, const Gauss& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    // Forms: "0", "-3/2", "i", "-2/3i", "1/2+5i", "3-i".
    std::string str() const;
    static Gauss parse(std::string_view s);

private:
    Rational re_{0};
    Rational im_{0};
};

inline Gauss conj(const Gauss& z) { return z.conj(); }

// Positive in the ordered ring: real and non-negative.
inline bool scalar_is_positive(const Gauss& z) { return z.is_real() && sgn(z.re()) >= 0; }

std::ostream& operator<<(std::ostream& os, const Gauss& z);

Rational parse_rational(std::string_view s);

// Some c in Q(i) with |c|^2 = q, found by a bounded two-squares search;
// empty when q <= 0, when none exists, or when the search bound is hit.
std::optional<Gauss> norm_root(const Rational& q);

}  // namespace hm
