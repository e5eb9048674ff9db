#pragma once

#include <vector>

#include "arrfrob/rational.hpp"

namespace arrfrob {

/// Dense matrix of exact rationals. Small sizes only; all algorithms are
/// exact (rational Gaussian elimination, Laplace for tiny determinants).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    Matrix scaled(const Rational& s) const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool is_zero() const;

    /// Largest |entry|; used as an exact residual magnitude.
    Rational max_abs() const;

    Rational det() const;
    std::vector<Rational> solve(const std::vector<Rational>& rhs) const;
    Matrix inverse() const;
    int rank() const;
    Matrix transposed() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace arrfrob
