#pragma once

#include <string>
#include <vector>

#include "vest/field.hpp"

namespace vest {

class Matrix;

// Dense exact vector over a single field.
class Vector {
  public:
    Vector(const FieldTag& tag, int dim); // zero vector
    explicit Vector(std::vector<Scalar> entries);

    const FieldTag& tag() const { return tag_; }
    int dim() const { return static_cast<int>(entries_.size()); }

    const Scalar& at(int i) const { return entries_.at(i); }
    void set(int i, Scalar value);

    bool is_zero() const;

    friend bool operator==(const Vector& a, const Vector& b);

  private:
    FieldTag tag_;
    std::vector<Scalar> entries_;
};

// Dense exact h x d matrix, row-major. Treat as immutable once built.
class Matrix {
  public:
    Matrix(const FieldTag& tag, int rows, int cols); // zero matrix
    static Matrix identity(const FieldTag& tag, int n);

    const FieldTag& tag() const { return tag_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Scalar value);

    bool is_zero() const;
    bool is_identity() const;

    // Canonical byte encoding: field tag, dims, then the entries in row-major
    // canonical scalar form. Equal matrices have equal keys and vice versa.
    std::string canonical_key() const;

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Vector operator*(const Matrix& m, const Vector& x);
    friend bool operator==(const Matrix& a, const Matrix& b);

  private:
    FieldTag tag_;
    int rows_;
    int cols_;
    std::vector<Scalar> entries_;
};

// Block-diagonal assembly of square blocks; off-block entries are zero.
// An empty list yields the 0x0 rational matrix.
Matrix block_diag(const std::vector<Matrix>& blocks);

// A d x d matrix whose rows beyond the first p are all zero, stored as the
// p x p block A and the p x (d-p) block B of its top rows.
class RowRestrictedMatrix {
  public:
    RowRestrictedMatrix(Matrix a, Matrix b); // p = a.rows(), d = p + b.cols()

    // Splits m; throws ShapeError if any row >= p of m is nonzero.
    static RowRestrictedMatrix from_matrix(const Matrix& m, int p);

    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    const FieldTag& tag() const { return a_.tag(); }
    int p() const { return a_.rows(); }
    int dim() const { return a_.rows() + b_.cols(); }

    // The full d x d matrix with top rows [A B] and d-p zero rows.
    Matrix embed() const;

    friend bool operator==(const RowRestrictedMatrix& x, const RowRestrictedMatrix& y);

  private:
    Matrix a_;
    Matrix b_;
};

// Product of two row-restricted matrices: (A1 A2) | (A1 B2).
RowRestrictedMatrix rr_mul(const RowRestrictedMatrix& t1, const RowRestrictedMatrix& t2);

} // namespace vest
