#pragma once

#include <map>
#include <vector>

#include "arrfrob/arrangement.hpp"
#include "arrfrob/rational.hpp"
#include "arrfrob/subset.hpp"

namespace arrfrob {

class CanonicalBasis;

/// Element of V in coordinates over the canonical w-basis.
struct AlgebraElement {
    const CanonicalBasis* basis = nullptr;
    std::vector<Rational> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

/// Basis of V given by the generators w_I over all k-subsets I avoiding one
/// excluded index j0 (default n), listed lexicographically. The linear
/// relations among all generators (antisymmetry and the sum relations) are
/// independent of z, so coordinates over this basis trivialize the bundle.
class CanonicalBasis {
public:
    explicit CanonicalBasis(const Arrangement& arr, int j0 = 0);  // j0 = 0 means "use n"

    const Arrangement& arrangement() const { return *arr_; }
    int j0() const { return j0_; }
    int dimension() const { return static_cast<int>(subsets_.size()); }

    const IndexTuple& subset(int pos) const { return subsets_[pos]; }
    const std::vector<IndexTuple>& subsets() const { return subsets_; }

    /// Position of a sorted basis subset, or -1 if it contains j0.
    int position(const IndexTuple& sorted) const;

    /// Coordinates of w_tuple over the basis for an arbitrary ordered
    /// k-tuple: zero on repeats, sign from sorting, and the sum relation
    /// expansion when j0 occurs.
    AlgebraElement reduce(const IndexTuple& tuple) const;

    /// Minor of a basis subset by position (cached).
    const Rational& subset_minor(int pos) const { return minors_[pos]; }

private:
    const Arrangement* arr_;
    int j0_;
    std::vector<IndexTuple> subsets_;
    std::vector<Rational> minors_;
    std::map<IndexTuple, int> position_;
};

}  // namespace arrfrob
