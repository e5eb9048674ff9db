#include "arrfrob/term_sum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "arrfrob/errors.hpp"

namespace arrfrob {

namespace {

struct TermKey {
    LinearForm form;
    long exponent;
    bool with_log;

    bool operator<(const TermKey& o) const {
        if (exponent != o.exponent) return exponent < o.exponent;
        if (with_log != o.with_log) return with_log < o.with_log;
        return form < o.form;
    }
};

}  // namespace

void TermSum::add(Rational coeff, LinearForm form, long exponent, bool with_log) {
    if (coeff.is_zero()) return;
    if (form.is_zero()) {
        if (with_log) throw EvalError("term with log of the zero form");
        if (exponent < 0) throw EvalError("term with negative power of the zero form");
        if (exponent > 0) return;  // 0^m = 0
        // exponent 0: plain constant, keep the zero form as its carrier
    }
    terms_.push_back(Term{std::move(coeff), std::move(form), exponent, with_log});
    canonicalize();
}

void TermSum::canonicalize() {
    std::map<TermKey, Rational> acc;
    for (auto& t : terms_) {
        if (t.with_log) {
            acc[TermKey{t.form, t.exponent, true}] += t.coeff;
        } else {
            auto [norm, lambda] = t.form.normalized();
            acc[TermKey{std::move(norm), t.exponent, false}] += t.coeff * lambda.pow(t.exponent);
        }
    }
    terms_.clear();
    for (auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        terms_.push_back(Term{std::move(coeff), key.form, key.exponent, key.with_log});
    }
}

bool TermSum::has_log() const {
    for (const auto& t : terms_)
        if (t.with_log) return true;
    return false;
}

TermSum TermSum::derivative(int var) const {
    TermSum out;
    for (const auto& t : terms_) {
        const Rational& df = t.form.coeff(var);
        if (df.is_zero()) continue;
        if (!t.with_log) {
            if (t.exponent == 0) continue;
            out.terms_.push_back(
                Term{t.coeff * Rational(t.exponent) * df, t.form, t.exponent - 1, false});
        } else {
            if (t.exponent != 0)
                out.terms_.push_back(
                    Term{t.coeff * Rational(t.exponent) * df, t.form, t.exponent - 1, true});
            out.terms_.push_back(Term{t.coeff * df, t.form, t.exponent - 1, false});
        }
    }
    out.canonicalize();
    return out;
}

TermSum TermSum::derivative(const std::vector<int>& multi_index) const {
    TermSum cur = *this;
    for (int v : multi_index) cur = cur.derivative(v);
    return cur;
}

TermSum TermSum::euler_applied() const {
    TermSum out;
    for (const auto& t : terms_) {
        if (!t.form.is_homogeneous())
            throw EvalError("Euler operator on a non-homogeneous form");
        if (t.exponent != 0)
            out.terms_.push_back(Term{t.coeff * Rational(t.exponent), t.form, t.exponent, t.with_log});
        if (t.with_log) out.terms_.push_back(Term{t.coeff, t.form, t.exponent, false});
    }
    out.canonicalize();
    return out;
}

TermSum TermSum::operator+(const TermSum& o) const {
    TermSum out;
    out.terms_ = terms_;
    out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
    out.canonicalize();
    return out;
}

TermSum TermSum::operator-(const TermSum& o) const {
    return *this + o.scaled(Rational(-1));
}

TermSum TermSum::scaled(const Rational& s) const {
    TermSum out;
    if (s.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff *= s;
    return out;
}

Rational TermSum::eval_exact(const std::vector<Rational>& x) const {
    Rational v(0);
    for (const auto& t : terms_) {
        if (t.with_log) throw EvalError("exact evaluation of a log-bearing term");
        Rational f = t.form.eval(x);
        if (f.is_zero()) {
            if (t.exponent < 0) throw EvalError("pole: form vanishes with negative exponent");
            if (t.exponent == 0) v += t.coeff;
            continue;
        }
        v += t.coeff * f.pow(t.exponent);
    }
    return v;
}

std::complex<double> TermSum::eval_complex(const std::vector<double>& x) const {
    std::complex<double> v(0.0, 0.0);
    for (const auto& t : terms_) {
        double f = t.form.evalf(x);
        if (f == 0.0 && (t.exponent < 0 || t.with_log))
            throw EvalError("evaluation at a zero of a form under log or negative power");
        double p = std::pow(std::abs(f), static_cast<double>(t.exponent));
        if (f < 0.0 && (t.exponent % 2 != 0)) p = -p;
        std::complex<double> val(p, 0.0);
        if (t.with_log) val *= std::log(std::complex<double>(f, 0.0));
        v += t.coeff.to_double() * val;
    }
    return v;
}

}  // namespace arrfrob
