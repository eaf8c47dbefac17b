#include "syzlab/matrix.hpp"

#include <stdexcept>

namespace syzlab {

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = field.one();
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = field_.normalize(v[j]);
}

bool Matrix::is_zero() const {
    for (const Rat& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.sub(a_[k], o.a_[k]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = a_[i * cols_ + k];
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& y = o.a_[k * o.cols_ + j];
                if (sgn(y) == 0) continue;
                r.a_[i * o.cols_ + j] += x * y;
            }
        }
    }
    for (Rat& x : r.a_) x = field_.normalize(x);
    return r;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw DimensionMismatch("hstack row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.a_[i * r.cols_ + j] = a_[i * cols_ + j];
        for (std::size_t j = 0; j < o.cols_; ++j) r.a_[i * r.cols_ + cols_ + j] = o.a_[i * o.cols_ + j];
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw DimensionMismatch("vstack column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
    return r;
}

Vec Matrix::apply_row(const Vec& v) const {
    if (v.size() != rows_) throw DimensionMismatch("row-vector application shape mismatch");
    Vec r(cols_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& y = a_[i * cols_ + j];
            if (sgn(y) == 0) continue;
            r[j] += v[i] * y;
        }
    }
    for (Rat& x : r) x = field_.normalize(x);
    return r;
}

namespace {

// Scales every row to an integral primitive vector (rationals only).
void make_rows_primitive(std::vector<Vec>& a) {
    for (Vec& row : a) {
        mpz_class lcm = 1;
        for (const Rat& x : row)
            if (sgn(x) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        if (lcm != 1)
            for (Rat& x : row)
                if (sgn(x) != 0) { x *= lcm; x.canonicalize(); }
        mpz_class content = 0;
        for (const Rat& x : row)
            if (sgn(x) != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
        if (content > 1)
            for (Rat& x : row)
                if (sgn(x) != 0) { x /= content; x.canonicalize(); }
    }
}

void reduce_row_content(Vec& row) {
    mpz_class content = 0;
    for (const Rat& x : row)
        if (sgn(x) != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
    if (content > 1)
        for (Rat& x : row)
            if (sgn(x) != 0) { x /= content; x.canonicalize(); }
}

} // namespace

RrefResult rref(const Matrix& m) {
    const Field field = m.field();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<Vec> a(nr);
    for (std::size_t i = 0; i < nr; ++i) a[i] = m.row(i);

    const bool rational = field.is_rationals();
    if (rational) make_rows_primitive(a);

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t s = r;
        while (s < nr && sgn(a[s][c]) == 0) ++s;
        if (s == nr) continue;
        std::swap(a[s], a[r]);
        pivots.push_back(c);

        if (!rational) {
            // Scale the pivot row to 1, then clear the column everywhere else.
            Rat pinv = field.inv(a[r][c]);
            for (std::size_t k = c; k < nc; ++k)
                if (sgn(a[r][k]) != 0) a[r][k] = field.mul(a[r][k], pinv);
            for (std::size_t t = 0; t < nr; ++t) {
                if (t == r || sgn(a[t][c]) == 0) continue;
                Rat val = a[t][c];
                for (std::size_t k = c; k < nc; ++k)
                    if (sgn(a[r][k]) != 0) a[t][k] = field.sub(a[t][k], val * a[r][k]);
            }
        } else {
            // Fraction-free: row_t <- piv*row_t - val*row_r, then content reduction.
            const Rat piv = a[r][c];
            for (std::size_t t = 0; t < nr; ++t) {
                if (t == r || sgn(a[t][c]) == 0) continue;
                const Rat val = a[t][c];
                for (std::size_t k = 0; k < c; ++k)
                    if (sgn(a[t][k]) != 0) { a[t][k] *= piv; a[t][k].canonicalize(); }
                for (std::size_t k = c; k < nc; ++k) {
                    if (sgn(a[t][k]) == 0 && sgn(a[r][k]) == 0) continue;
                    a[t][k] = piv * a[t][k] - val * a[r][k];
                    a[t][k].canonicalize();
                }
                reduce_row_content(a[t]);
            }
        }
        ++r;
    }

    if (rational) {
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Rat piv = a[i][pivots[i]];
            if (piv != 1)
                for (std::size_t k = pivots[i]; k < nc; ++k)
                    if (sgn(a[i][k]) != 0) { a[i][k] /= piv; a[i][k].canonicalize(); }
        }
    }

    RrefResult out;
    out.rank = pivots.size();
    out.pivots = std::move(pivots);
    out.reduced = Matrix(field, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) out.reduced.set_row(i, a[i]);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    Matrix basis(m.field(), nc - r.rank, nc);
    std::size_t row = 0;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        basis.set(row, f, m.field().one());
        for (std::size_t i = 0; i < r.rank; ++i)
            basis.set(row, r.pivots[i], m.field().neg(r.reduced.at(i, f)));
        ++row;
    }
    return basis;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

SolveResult solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    Matrix col(m.field(), m.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) col.set(i, 0, b[i]);
    RrefResult r = rref(m.hstack(col));

    SolveResult out;
    out.homogeneous = nullspace(m);
    const std::size_t nc = m.cols();
    bool consistent = true;
    for (std::size_t c : r.pivots)
        if (c == nc) consistent = false;
    if (!consistent) return out;

    Vec x(nc, Rat(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced.at(i, nc);
    out.particular = std::move(x);
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    RrefResult r = rref(m.hstack(Matrix::identity(m.field(), n)));
    if (r.rank != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (r.pivots[i] != i) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.reduced.at(i, n + j));
    return inv;
}

std::optional<Vec> coordinates_in_rref_span(const Matrix& basis,
                                            const std::vector<std::size_t>& pivots, const Vec& v) {
    if (v.size() != basis.cols()) throw DimensionMismatch("coordinate expression length mismatch");
    const Field& field = basis.field();
    Vec coords(pivots.size(), Rat(0));
    Vec rem = v;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Rat c = rem[pivots[i]];
        coords[i] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < rem.size(); ++j) {
            const Rat& y = basis.at(i, j);
            if (sgn(y) == 0) continue;
            rem[j] = field.sub(rem[j], c * y);
        }
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return coords;
}

QuotientSpace::QuotientSpace(const Field& field, std::size_t full_dim,
                             const std::vector<Vec>& span_rows)
    : field_(field), full_dim_(full_dim) {
    RrefResult r = rref(Matrix::from_rows(field, span_rows, full_dim));
    pivots_ = r.pivots;
    span_ = Matrix(field, r.rank, full_dim);
    for (std::size_t i = 0; i < r.rank; ++i) span_.set_row(i, r.reduced.row(i));
    std::vector<bool> is_pivot(full_dim, false);
    for (std::size_t c : pivots_) is_pivot[c] = true;
    for (std::size_t c = 0; c < full_dim; ++c)
        if (!is_pivot[c]) coset_basis_.push_back(c);
}

Vec QuotientSpace::project(const Vec& v) const {
    if (v.size() != full_dim_) throw DimensionMismatch("projection length mismatch");
    Vec rem = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rat c = rem[pivots_[i]];
        if (sgn(c) == 0) continue;
        for (std::size_t j = pivots_[i]; j < full_dim_; ++j) {
            const Rat& y = span_.at(i, j);
            if (sgn(y) == 0) continue;
            rem[j] = field_.sub(rem[j], c * y);
        }
    }
    Vec out(coset_basis_.size(), Rat(0));
    for (std::size_t k = 0; k < coset_basis_.size(); ++k) out[k] = rem[coset_basis_[k]];
    return out;
}

Vec QuotientSpace::lift(std::size_t k) const { return unit_vec(full_dim_, coset_basis_[k]); }

bool vec_is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector addition length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector subtraction length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_scaled(const Field& f, const Vec& a, const Rat& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
    return r;
}

Vec unit_vec(std::size_t dim, std::size_t index) {
    Vec v(dim, Rat(0));
    v[index] = 1;
    return v;
}

} // namespace syzlab
