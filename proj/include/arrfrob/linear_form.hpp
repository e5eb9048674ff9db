#pragma once

#include <utility>
#include <vector>

#include "arrfrob/rational.hpp"

namespace arrfrob {

/// Affine-linear form c_0 + sum_i coeff_i * x_i over a fixed variable count.
/// Evaluation is exact; the partial derivative in variable i is coeff_i.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(int nvars) : coeffs_(nvars) {}

    int nvars() const { return static_cast<int>(coeffs_.size()); }

    Rational& coeff(int i) { return coeffs_[i]; }
    const Rational& coeff(int i) const { return coeffs_[i]; }
    Rational& constant() { return constant_; }
    const Rational& constant() const { return constant_; }

    Rational eval(const std::vector<Rational>& x) const;
    double evalf(const std::vector<double>& x) const;

    bool is_zero() const;
    bool is_homogeneous() const { return constant_.is_zero(); }

    /// Scale so the leading nonzero coefficient (constant last) is 1.
    /// Returns (normalized form, lambda) with *this == lambda * normalized.
    std::pair<LinearForm, Rational> normalized() const;

    bool operator==(const LinearForm& o) const {
        return coeffs_ == o.coeffs_ && constant_ == o.constant_;
    }
    bool operator<(const LinearForm& o) const;

private:
    std::vector<Rational> coeffs_;
    Rational constant_;
};

}  // namespace arrfrob
