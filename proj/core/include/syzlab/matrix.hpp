#ifndef SYZLAB_MATRIX_HPP
#define SYZLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "syzlab/field.hpp"

namespace syzlab {

/// Dense matrix over an exact field, row-major.  Entries are kept normalized
/// for the owning field.  Degenerate shapes (0 rows and/or 0 columns) are
/// first-class values: the zero module and empty hom spaces depend on them.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rat& v) { a_[i * cols_ + j] = field_.normalize(v); }

    Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    void set_row(std::size_t i, const Vec& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Rat& c) const;
    Matrix transpose() const;

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;

    /// v * this, row-vector convention.
    Vec apply_row(const Vec& v) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form.  Over the rationals the elimination is
/// fraction-free on integral rows with per-row content reduction; pivots are
/// scaled to 1 only at the end.  The result is the canonical RREF either way.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0} (column convention), one vector per row, ordered by
/// ascending free column.  Row count = cols - rank.
Matrix nullspace(const Matrix& m);

/// Basis of {v : v m = 0} (row convention), i.e. nullspace of the transpose.
Matrix left_nullspace(const Matrix& m);

struct SolveResult {
    std::optional<Vec> particular; ///< empty when b is outside the column space
    Matrix homogeneous;            ///< nullspace basis rows
};

/// Solves m x = b (column convention).
SolveResult solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates of v in the span of RREF basis rows, or nullopt when v is
/// outside the span.  `basis` must be a canonical RREF with the given pivots.
std::optional<Vec> coordinates_in_rref_span(const Matrix& basis,
                                            const std::vector<std::size_t>& pivots, const Vec& v);

/// Quotient of k^n by the span of a family of rows.  The coset basis is the
/// family of non-pivot coordinates in ascending order (first-pivot-first
/// tie-breaking inherited from the RREF).
class QuotientSpace {
public:
    QuotientSpace(const Field& field, std::size_t full_dim, const std::vector<Vec>& span_rows);

    std::size_t full_dim() const { return full_dim_; }
    std::size_t dim() const { return coset_basis_.size(); }
    const std::vector<std::size_t>& coset_basis() const { return coset_basis_; }
    const Matrix& span_rref() const { return span_; }

    /// Image of a full-space vector in quotient coordinates.
    Vec project(const Vec& v) const;
    /// Canonical representative (a unit vector) of the k-th coset basis element.
    Vec lift(std::size_t k) const;

private:
    Field field_;
    std::size_t full_dim_;
    Matrix span_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> coset_basis_;
};

// Small vector helpers shared by the algebra layers.
bool vec_is_zero(const Vec& v);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scaled(const Field& f, const Vec& a, const Rat& c);
Vec unit_vec(std::size_t dim, std::size_t index);

} // namespace syzlab

#endif
