#include "hopfmorita/scalar.hpp"

#include <cctype>

namespace hm {

Gauss& Gauss::operator*=(const Gauss& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string Gauss::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    Rational a = abs(im_);
    if (a != 1) imag = a.get_str();
    imag += 'i';
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Gauss& z) { return os << z.str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw ParseError("malformed rational '" + std::string(s) + "'");
    Rational q;
    q.get_num() = mpz_class(std::string(num));
    q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

Gauss Gauss::parse(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty scalar");
    if (t.back() != 'i') return Gauss(parse_rational(t));

    std::string_view body(t);
    body.remove_suffix(1);
    // split at the last sign that is not the leading one
    size_t split = std::string_view::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);

    Rational im;
    if (imag_part.empty() || imag_part == "+")
        im = 1;
    else if (imag_part == "-")
        im = -1;
    else
        im = parse_rational(imag_part);
    Rational re = real_part.empty() ? Rational(0) : parse_rational(real_part);
    return {re, im};
}

}  // namespace hm

namespace hm {

std::optional<Gauss> norm_root(const Rational& q) {
    if (sgn(q) <= 0) return std::nullopt;
    // |(a + b i) / D|^2 = N / D  <=>  a^2 + b^2 = N D
    const mpz_class n = q.get_num(), d = q.get_den();
    const mpz_class target = n * d;
    const mpz_class limit = sqrt(target);
    if (limit > 2000000) return std::nullopt;
    for (mpz_class a = limit; a >= 0; --a) {
        const mpz_class rest = target - a * a;
        const mpz_class b = sqrt(rest);
        if (b * b == rest) return Gauss(Rational(a, d), Rational(b, d));
    }
    return std::nullopt;
}

}  // namespace hm
