#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "arrfrob/linear_form.hpp"
#include "arrfrob/matrix.hpp"
#include "arrfrob/rational.hpp"
#include "arrfrob/report.hpp"
#include "arrfrob/subset.hpp"

namespace arrfrob {

/// A family of n affine hyperplanes in C^k moving parallelly with the
/// parameters z: row i of the coefficient matrix b gives the normal of
/// hyperplane i, and z_i is its offset. Immutable after construction.
///
/// Construction requires n > k >= 1, every k x k row minor nonzero, every
/// weight a_j nonzero and a nonzero total weight |a|. Violations throw
/// InputError naming the offending subset or entry.
class Arrangement {
public:
    Arrangement(int n, int k, Matrix b, std::vector<Rational> a);

    int n() const { return n_; }
    int k() const { return k_; }
    const Matrix& b() const { return b_; }
    const Rational& weight(int i) const { return a_[i - 1]; }  // 1-based
    const std::vector<Rational>& weights() const { return a_; }
    const Rational& total_weight() const { return a_total_; }
    bool unit_weights() const;

    /// Signed minor d for an arbitrary ordered index tuple of length k.
    /// Zero on repeated indices; antisymmetric in the tuple order.
    Rational minor(const IndexTuple& tuple) const;

    /// Linear form in z cutting out the locus where the |T| = k+1
    /// hyperplanes indexed by the ordered tuple T meet. Antisymmetric in
    /// the tuple order; repeated indices are rejected.
    LinearForm discriminant_form(const IndexTuple& T) const;

    /// True iff some k+1 hyperplanes meet at z; collects every vanishing
    /// (k+1)-subset when a witness vector is supplied.
    bool on_discriminant(const std::vector<Rational>& z,
                         std::vector<IndexTuple>* witness = nullptr) const;

    /// The defining form of hyperplane i in the t variables at parameter z.
    LinearForm hyperplane_form(int i, const std::vector<Rational>& z) const;

    /// Verify the quadratic minor identities over all sorted (k+1)-subsets
    /// and (k-1)-subsets (antisymmetry covers every other index choice).
    /// `overrides` replaces stored minors by subset, as a self-test hook.
    VerificationReport plucker_check(
        const std::map<IndexTuple, Rational>& overrides = {}) const;

    /// Seeded off-discriminant parameter point with integer coordinates in
    /// [-20, 20]; throws after `max_attempts` rejections.
    std::vector<Rational> sample_z(std::mt19937_64& rng, int max_attempts = 1000) const;

private:
    Rational stored_minor(const IndexTuple& sorted,
                          const std::map<IndexTuple, Rational>& overrides) const;

    int n_, k_;
    Matrix b_;
    std::vector<Rational> a_;
    Rational a_total_;
    std::map<IndexTuple, Rational> minors_;  // sorted k-subsets
};

}  // namespace arrfrob
