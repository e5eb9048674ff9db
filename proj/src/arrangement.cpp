#include "arrfrob/arrangement.hpp"

#include <string>

#include "arrfrob/errors.hpp"

namespace arrfrob {

Arrangement::Arrangement(int n, int k, Matrix b, std::vector<Rational> a)
    : n_(n), k_(k), b_(std::move(b)), a_(std::move(a)) {
    if (k_ < 1 || n_ <= k_)
        throw InputError("arrangement requires n > k >= 1, got n=" + std::to_string(n_) +
                         " k=" + std::to_string(k_));
    if (b_.rows() != n_ || b_.cols() != k_)
        throw InputError("coefficient matrix must be n x k");
    if (static_cast<int>(a_.size()) != n_) throw InputError("weight vector must have length n");
    for (int i = 0; i < n_; ++i)
        if (a_[i].is_zero())
            throw InputError("weight a_" + std::to_string(i + 1) + " must be nonzero");
    for (const auto& w : a_) a_total_ += w;
    if (a_total_.is_zero()) throw InputError("total weight |a| must be nonzero");

    for (const auto& subset : k_subsets(n_, k_)) {
        Matrix m(k_, k_);
        for (int r = 0; r < k_; ++r)
            for (int c = 0; c < k_; ++c) m.at(r, c) = b_.at(subset[r] - 1, c);
        Rational d = m.det();
        if (d.is_zero())
            throw InputError("vanishing minor for hyperplane subset " + tuple_str(subset));
        minors_.emplace(subset, std::move(d));
    }
}

bool Arrangement::unit_weights() const {
    for (const auto& w : a_)
        if (!w.is_one()) return false;
    return true;
}

Rational Arrangement::stored_minor(const IndexTuple& sorted,
                                   const std::map<IndexTuple, Rational>& overrides) const {
    if (!overrides.empty()) {
        auto it = overrides.find(sorted);
        if (it != overrides.end()) return it->second;
    }
    return minors_.at(sorted);
}

Rational Arrangement::minor(const IndexTuple& tuple) const {
    if (static_cast<int>(tuple.size()) != k_)
        throw InputError("minor expects a tuple of length k");
    for (int i : tuple)
        if (i < 1 || i > n_) throw InputError("minor index out of range: " + std::to_string(i));
    auto sorted = sort_signed(tuple);
    if (!sorted) return Rational(0);
    Rational d = minors_.at(sorted->first);
    return sorted->second > 0 ? d : -d;
}

LinearForm Arrangement::discriminant_form(const IndexTuple& T) const {
    if (static_cast<int>(T.size()) != k_ + 1)
        throw InputError("discriminant form expects a tuple of length k+1");
    for (size_t i = 0; i < T.size(); ++i)
        for (size_t j = i + 1; j < T.size(); ++j)
            if (T[i] == T[j]) throw InputError("discriminant form tuple has repeated index");
    LinearForm f(n_);
    int sign = 1;
    for (size_t l = 0; l < T.size(); ++l) {
        f.coeff(T[l] - 1) += Rational(sign) * minor(tuple_erase(T, l));
        sign = -sign;
    }
    return f;
}

bool Arrangement::on_discriminant(const std::vector<Rational>& z,
                                  std::vector<IndexTuple>* witness) const {
    if (static_cast<int>(z.size()) != n_)
        throw InputError("parameter point must have n coordinates");
    bool hit = false;
    for (const auto& T : k_subsets(n_, k_ + 1)) {
        if (discriminant_form(T).eval(z).is_zero()) {
            hit = true;
            if (!witness) return true;
            witness->push_back(T);
        }
    }
    return hit;
}

LinearForm Arrangement::hyperplane_form(int i, const std::vector<Rational>& z) const {
    if (i < 1 || i > n_) throw InputError("hyperplane index out of range");
    if (static_cast<int>(z.size()) != n_)
        throw InputError("parameter point must have n coordinates");
    LinearForm f(k_);
    for (int j = 0; j < k_; ++j) f.coeff(j) = b_.at(i - 1, j);
    f.constant() = z[i - 1];
    return f;
}

VerificationReport Arrangement::plucker_check(
    const std::map<IndexTuple, Rational>& overrides) const {
    VerificationReport report;
    auto signed_lookup = [&](const IndexTuple& tuple) -> Rational {
        auto sorted = sort_signed(tuple);
        if (!sorted) return Rational(0);
        Rational d = stored_minor(sorted->first, overrides);
        return sorted->second > 0 ? d : -d;
    };

    int failures = 0;
    std::string first_witness;
    for (const auto& J : k_subsets(n_, k_ + 1)) {
        for (const auto& I : k_subsets(n_, k_ - 1)) {
            Rational sum(0);
            int sign = 1;
            for (size_t m = 0; m < J.size(); ++m) {
                IndexTuple rest = tuple_erase(J, m);
                IndexTuple with_jm = I;
                with_jm.insert(with_jm.begin(), J[m]);
                sum += Rational(sign) * signed_lookup(rest) * signed_lookup(with_jm);
                sign = -sign;
            }
            if (!sum.is_zero()) {
                ++failures;
                if (first_witness.empty())
                    first_witness = "J=" + tuple_str(J) + " I'=" + tuple_str(I) +
                                    " residual=" + sum.str();
            }
        }
    }
    if (failures == 0) {
        report.pass("plucker.relations", "exact", "-");
    } else {
        report.fail("plucker.relations", "exact", "-", std::to_string(failures) + " violations",
                    first_witness);
    }
    return report;
}

std::vector<Rational> Arrangement::sample_z(std::mt19937_64& rng, int max_attempts) const {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Rational> z(n_);
        for (int i = 0; i < n_; ++i)
            z[i] = Rational(static_cast<long>(rng() % 41) - 20);
        if (!on_discriminant(z)) return z;
    }
    throw InputError("failed to sample an off-discriminant parameter point");
}

}  // namespace arrfrob
