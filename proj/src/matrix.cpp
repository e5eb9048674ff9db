#include "arrfrob/matrix.hpp"

#include <string>
#include <utility>

#include "arrfrob/errors.hpp"

namespace arrfrob {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const Rational& x = at(i, l);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(l, j);
        }
    return r;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
    if (static_cast<size_t>(cols_) != v.size()) throw ShapeError("matrix-vector product: shape mismatch");
    std::vector<Rational> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Rational Matrix::max_abs() const {
    Rational m(0);
    for (const auto& x : e_) {
        Rational a = x.abs();
        if (a > m) m = a;
    }
    return m;
}

Rational Matrix::det() const {
    if (rows_ != cols_) throw ShapeError("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return Rational(1);
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n == 3)
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    // Exact elimination with row pivoting on the first nonzero entry.
    Matrix a = *this;
    Rational d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(p, j));
            d = -d;
        }
        d *= a.at(c, c);
        Rational pivinv = a.at(c, c).inv();
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Rational f = a.at(r, c) * pivinv;
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return d;
}

std::vector<Rational> Matrix::solve(const std::vector<Rational>& rhs) const {
    if (rows_ != cols_) throw ShapeError("solve: non-square matrix");
    if (rhs.size() != static_cast<size_t>(rows_)) throw ShapeError("solve: rhs length mismatch");
    const int n = rows_;
    Matrix a = *this;
    std::vector<Rational> b = rhs;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) throw SingularMatrixError("solve: singular matrix (det = 0)");
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(p, j));
            std::swap(b[c], b[p]);
        }
        Rational pivinv = a.at(c, c).inv();
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Rational f = a.at(r, c) * pivinv;
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational s = b[r];
        for (int j = r + 1; j < n; ++j) s -= a.at(r, j) * x[j];
        x[r] = s / a.at(r, r);
    }
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
    const int n = rows_;
    Matrix a = *this;
    Matrix inv = Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) throw SingularMatrixError("inverse: singular matrix (det = 0)");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(p, j));
                std::swap(inv.at(c, j), inv.at(p, j));
            }
        Rational pivinv = a.at(c, c).inv();
        for (int j = 0; j < n; ++j) {
            a.at(c, j) *= pivinv;
            inv.at(c, j) *= pivinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            Rational f = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

int Matrix::rank() const {
    Matrix a = *this;
    int rank = 0;
    int row = 0;
    for (int c = 0; c < cols_ && row < rows_; ++c) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (!a.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(a.at(row, j), a.at(p, j));
        Rational pivinv = a.at(row, c).inv();
        for (int r = row + 1; r < rows_; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Rational f = a.at(r, c) * pivinv;
            for (int j = c; j < cols_; ++j) a.at(r, j) -= f * a.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

}  // namespace arrfrob
