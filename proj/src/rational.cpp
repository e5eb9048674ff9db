#include "arrfrob/rational.hpp"

#include <cctype>
#include <ostream>

namespace arrfrob {

Rational::Rational(long num, long den) {
    if (den == 0) throw EvalError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    // Accept [+-]digits[/digits] with nonempty digit groups, nothing more.
    auto bad = [&] { return InputError("invalid rational literal: '" + std::string(s) + "'"); };
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) throw bad();
    if (i < s.size()) {
        if (s[i] != '/') throw bad();
        ++i;
        size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size()) throw bad();
    }
    mpq_class v(std::string(s), 10);
    if (v.get_den() == 0) throw EvalError("rational with zero denominator: '" + std::string(s) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw EvalError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw EvalError("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inv();
    long m = e > 0 ? e : -e;
    Rational acc(1);
    for (long i = 0; i < m; ++i) acc *= base;
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

}  // namespace arrfrob
