#include "vest/linalg.hpp"

#include <cstring>

namespace vest {

Vector::Vector(const FieldTag& tag, int dim) : tag_(tag) {
    if (dim < 0) throw ShapeError("negative vector dimension");
    entries_.assign(static_cast<std::size_t>(dim), Scalar::zero(tag));
}

Vector::Vector(std::vector<Scalar> entries)
    : tag_(entries.empty() ? FieldTag::rational() : entries.front().tag()),
      entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.tag() != tag_) throw MixedFieldError("vector entries from different fields");
    }
}

void Vector::set(int i, Scalar value) {
    if (value.tag() != tag_) throw MixedFieldError("vector entry from a different field");
    entries_.at(i) = std::move(value);
}

bool Vector::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool operator==(const Vector& a, const Vector& b) {
    return a.tag_ == b.tag_ && a.entries_ == b.entries_;
}

Matrix::Matrix(const FieldTag& tag, int rows, int cols) : tag_(tag), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(tag));
}

Matrix Matrix::identity(const FieldTag& tag, int n) {
    Matrix m(tag, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(tag));
    return m;
}

void Matrix::set(int i, int j, Scalar value) {
    if (value.tag() != tag_) throw MixedFieldError("matrix entry from a different field");
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ShapeError("matrix index out of range");
    entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(value);
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const Scalar& e = at(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

namespace {

void append_u64(std::string& out, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

} // namespace

std::string Matrix::canonical_key() const {
    std::string key;
    key.reserve(17 + entries_.size() * 9);
    if (tag_.is_rational()) {
        key.push_back('Q');
    } else {
        key.push_back('P');
        append_u64(key, tag_.modulus());
    }
    append_u64(key, static_cast<std::uint64_t>(rows_));
    append_u64(key, static_cast<std::uint64_t>(cols_));
    for (const auto& e : entries_) {
        if (tag_.is_prime()) {
            append_u64(key, e.residue_value());
        } else {
            key += e.str();
            key.push_back('\0');
        }
    }
    return key;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.tag_ != y.tag_) throw MixedFieldError("matrix product across fields");
    if (x.cols_ != y.rows_) {
        throw ShapeError("matrix product shape mismatch: " + std::to_string(x.cols_) + " vs " +
                         std::to_string(y.rows_));
    }
    Matrix out(x.tag_, x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i) {
        for (int j = 0; j < y.cols_; ++j) {
            Scalar acc = Scalar::zero(x.tag_);
            for (int l = 0; l < x.cols_; ++l) acc = acc + x.at(i, l) * y.at(l, j);
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Vector operator*(const Matrix& m, const Vector& x) {
    if (m.tag_ != x.tag()) throw MixedFieldError("matrix-vector product across fields");
    if (m.cols_ != x.dim()) throw ShapeError("matrix-vector shape mismatch");
    Vector out(m.tag_, m.rows_);
    for (int i = 0; i < m.rows_; ++i) {
        Scalar acc = Scalar::zero(m.tag_);
        for (int j = 0; j < m.cols_; ++j) acc = acc + m.at(i, j) * x.at(j);
        out.set(i, std::move(acc));
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.tag_ == b.tag_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix(FieldTag::rational(), 0, 0);
    const FieldTag tag = blocks.front().tag();
    int n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw ShapeError("block_diag needs square blocks");
        if (b.tag() != tag) throw MixedFieldError("block_diag blocks from different fields");
        n += b.rows();
    }
    Matrix out(tag, n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i) {
            for (int j = 0; j < b.cols(); ++j) out.set(off + i, off + j, b.at(i, j));
        }
        off += b.rows();
    }
    return out;
}

RowRestrictedMatrix::RowRestrictedMatrix(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != a_.cols()) throw ShapeError("A block must be square");
    if (b_.rows() != a_.rows()) throw ShapeError("A and B must have the same row count");
    if (a_.tag() != b_.tag()) throw MixedFieldError("A and B from different fields");
}

RowRestrictedMatrix RowRestrictedMatrix::from_matrix(const Matrix& m, int p) {
    if (m.rows() != m.cols()) throw ShapeError("row-restricted form needs a square matrix");
    const int d = m.rows();
    if (p < 0 || p > d) throw ShapeError("invalid row bound p");
    for (int i = p; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (!m.at(i, j).is_zero()) {
                throw ShapeError("matrix has a nonzero row outside the first " + std::to_string(p));
            }
        }
    }
    Matrix a(m.tag(), p, p);
    Matrix b(m.tag(), p, d - p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < d; ++j) {
            if (j < p) {
                a.set(i, j, m.at(i, j));
            } else {
                b.set(i, j - p, m.at(i, j));
            }
        }
    }
    return RowRestrictedMatrix(std::move(a), std::move(b));
}

Matrix RowRestrictedMatrix::embed() const {
    const int d = dim();
    Matrix out(tag(), d, d);
    for (int i = 0; i < p(); ++i) {
        for (int j = 0; j < p(); ++j) out.set(i, j, a_.at(i, j));
        for (int j = 0; j < b_.cols(); ++j) out.set(i, p() + j, b_.at(i, j));
    }
    return out;
}

bool operator==(const RowRestrictedMatrix& x, const RowRestrictedMatrix& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
}

RowRestrictedMatrix rr_mul(const RowRestrictedMatrix& t1, const RowRestrictedMatrix& t2) {
    if (t1.tag() != t2.tag()) throw MixedFieldError("row-restricted product across fields");
    if (t1.p() != t2.p() || t1.dim() != t2.dim()) {
        throw ShapeError("row-restricted product shape mismatch");
    }
    return RowRestrictedMatrix(t1.a() * t2.a(), t1.a() * t2.b());
}

} // namespace vest
