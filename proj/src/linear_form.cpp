#include "arrfrob/linear_form.hpp"

#include "arrfrob/errors.hpp"

namespace arrfrob {

Rational LinearForm::eval(const std::vector<Rational>& x) const {
    if (x.size() != coeffs_.size()) throw ShapeError("linear form evaluation: wrong point dimension");
    Rational v = constant_;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) v += coeffs_[i] * x[i];
    return v;
}

double LinearForm::evalf(const std::vector<double>& x) const {
    if (x.size() != coeffs_.size()) throw ShapeError("linear form evaluation: wrong point dimension");
    double v = constant_.to_double();
    for (size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i].to_double() * x[i];
    return v;
}

bool LinearForm::is_zero() const {
    if (!constant_.is_zero()) return false;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::pair<LinearForm, Rational> LinearForm::normalized() const {
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        LinearForm f(nvars());
        Rational inv = c.inv();
        for (int i = 0; i < nvars(); ++i) f.coeff(i) = coeffs_[i] * inv;
        f.constant() = constant_ * inv;
        return {std::move(f), c};
    }
    if (!constant_.is_zero()) {
        LinearForm f(nvars());
        f.constant() = Rational(1);
        return {std::move(f), constant_};
    }
    return {*this, Rational(1)};
}

bool LinearForm::operator<(const LinearForm& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    }
    return constant_ < o.constant_;
}

}  // namespace arrfrob
