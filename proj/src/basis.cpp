#include "arrfrob/basis.hpp"

#include <string>

#include "arrfrob/errors.hpp"

namespace arrfrob {

CanonicalBasis::CanonicalBasis(const Arrangement& arr, int j0) : arr_(&arr), j0_(j0 == 0 ? arr.n() : j0) {
    if (j0_ < 1 || j0_ > arr.n())
        throw InputError("excluded index j0 out of range: " + std::to_string(j0_));
    subsets_ = k_subsets_excluding(arr.n(), arr.k(), j0_);
    minors_.reserve(subsets_.size());
    for (size_t i = 0; i < subsets_.size(); ++i) {
        position_.emplace(subsets_[i], static_cast<int>(i));
        minors_.push_back(arr.minor(subsets_[i]));
    }
}

int CanonicalBasis::position(const IndexTuple& sorted) const {
    auto it = position_.find(sorted);
    return it == position_.end() ? -1 : it->second;
}

AlgebraElement CanonicalBasis::reduce(const IndexTuple& tuple) const {
    if (static_cast<int>(tuple.size()) != arr_->k())
        throw InputError("reduce expects a tuple of length k");
    for (int i : tuple)
        if (i < 1 || i > arr_->n())
            throw InputError("reduce index out of range: " + std::to_string(i));

    AlgebraElement elem{this, std::vector<Rational>(dimension())};
    auto sorted = sort_signed(tuple);
    if (!sorted) return elem;  // repeated index: the generator is zero
    const auto& [s, sign] = *sorted;

    int q = -1;
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == j0_) q = static_cast<int>(i);

    if (q < 0) {
        elem.coords[position(s)] += Rational(sign);
        return elem;
    }

    // w_s = (-1)^q w_(j0, I') and w_(j0, I') = -sum over m outside of w_(m, I').
    IndexTuple rest = tuple_erase(s, static_cast<size_t>(q));
    int lead = (q % 2 == 0) ? 1 : -1;
    for (int m = 1; m <= arr_->n(); ++m) {
        if (m == j0_ || tuple_contains(rest, m)) continue;
        auto [sm, pos_m] = tuple_insert_sorted(rest, m);
        int insert_sign = (pos_m % 2 == 0) ? 1 : -1;
        elem.coords[position(sm)] += Rational(-sign * lead * insert_sign);
    }
    return elem;
}

}  // namespace arrfrob
