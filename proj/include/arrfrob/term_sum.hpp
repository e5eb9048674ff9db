#pragma once

#include <complex>
#include <vector>

#include "arrfrob/linear_form.hpp"
#include "arrfrob/rational.hpp"

namespace arrfrob {

/// One summand c * F^m, optionally carrying a log F factor.
struct Term {
    Rational coeff;
    LinearForm form;
    long exponent = 0;
    bool with_log = false;
};

/// Finite sum of terms c * F^m and c * F^m * log F for linear forms F.
/// Closed under differentiation:
///   d(c F^m)        = c m F^{m-1} dF
///   d(c F^m log F)  = c dF F^{m-1} (m log F + 1)
/// Terms are kept canonical: proportional forms of log-free terms are merged
/// with the scale folded into the coefficient; log-bearing terms merge only
/// when the forms coincide exactly (rescaling would shift the logarithm).
class TermSum {
public:
    TermSum() = default;

    void add(Rational coeff, LinearForm form, long exponent, bool with_log);

    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool has_log() const;

    TermSum derivative(int var) const;
    TermSum derivative(const std::vector<int>& multi_index) const;

    /// Apply the Euler operator sum_j x_j d/dx_j. Requires every form to be
    /// homogeneous (zero constant term), so that E(F^m) = m F^m.
    TermSum euler_applied() const;

    TermSum operator+(const TermSum& o) const;
    TermSum operator-(const TermSum& o) const;
    TermSum scaled(const Rational& s) const;

    /// Exact value; rejects log-bearing terms and poles.
    Rational eval_exact(const std::vector<Rational>& x) const;

    /// Floating-point value at a real point with the principal log branch.
    std::complex<double> eval_complex(const std::vector<double>& x) const;

    bool operator==(const TermSum& o) const { return terms_ == o.terms_; }

private:
    void canonicalize();

    std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
    return a.exponent == b.exponent && a.with_log == b.with_log && a.coeff == b.coeff &&
           a.form == b.form;
}

}  // namespace arrfrob
