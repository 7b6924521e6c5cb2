#include "xi/exact.hpp"

#include <cctype>
#include <sstream>

namespace xi {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw Error("invalid rational literal: " + s);
        if (s.front() == '+') s.erase(0, 1);
        return Rational(s);
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw Error("invalid rational literal: " + s);
    mpz_class d(den);
    if (d == 0) throw Error("zero denominator in rational literal: " + s);
    Rational q(mpz_class(num.front() == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    const Rational n = o.norm();
    if (sgn(n) == 0) throw Error("division by zero in Q(i)");
    if (sgn(o.im) == 0) {
        re /= o.re;
        im /= o.re;
        return *this;
    }
    *this *= conj(o);
    re /= n;
    im /= n;
    return *this;
}

std::string to_string(const Gaussian& z) {
    if (z.is_real()) return to_string(z.re);
    if (sgn(z.re) == 0) return to_string(z.im) + "i";
    std::string im = to_string(z.im);
    if (im.front() != '-') im = "+" + im;
    return to_string(z.re) + im + "i";
}

std::string to_string(const Signature& s) {
    std::ostringstream os;
    os << '(' << s.plus << ',' << s.zero << ',' << s.minus << ')';
    return os.str();
}

}  // namespace xi
