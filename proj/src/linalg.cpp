#include "apolar/linalg.hpp"

#include <utility>

namespace apolar {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix-vector dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

EchelonForm reduced_echelon(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
    SubspaceBasis s(ambient_dim);
    if (vectors.empty()) return s;
    auto e = reduced_echelon(RationalMatrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) s.vectors_.push_back(e.reduced.row(i));
    return s;
}

SubspaceBasis SubspaceBasis::from_independent(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
    auto s = span(ambient_dim, vectors);
    if (s.dim() != vectors.size()) throw InvalidInput("basis vectors are linearly dependent");
    return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
    return kernel(RationalMatrix(0, ambient_dim));
}

bool SubspaceBasis::contains(const RationalVector& v) const {
    if (v.size() != ambient_dim_) throw InvalidInput("vector length does not match ambient dimension");
    auto rows = vectors_;
    rows.push_back(v);
    return span(ambient_dim_, rows).dim() == dim();
}

RationalVector SubspaceBasis::combine(const RationalVector& weights) const {
    if (weights.size() != vectors_.size()) throw InvalidInput("weight count does not match subspace dimension");
    RationalVector out(ambient_dim_);
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (weights[i] == 0) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j) out[j] += weights[i] * vectors_[i][j];
    }
    return out;
}

SubspaceBasis kernel(const RationalMatrix& m) {
    auto e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return SubspaceBasis::span(m.cols(), basis);
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).pivots.size(); }

SubspaceBasis intersect_subspaces(std::span<const SubspaceBasis> spaces) {
    if (spaces.empty()) throw InvalidInput("intersect_subspaces: empty list");
    const std::size_t n = spaces.front().ambient_dim();
    // Stack the annihilators (orthogonal complements under the dot product).
    std::vector<RationalVector> constraints;
    for (const auto& s : spaces) {
        if (s.ambient_dim() != n) throw InvalidInput("intersect_subspaces: ambient dimension mismatch");
        auto ann = kernel(RationalMatrix::from_rows(s.vectors(), n));
        constraints.insert(constraints.end(), ann.vectors().begin(), ann.vectors().end());
    }
    return kernel(RationalMatrix::from_rows(constraints, n));
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (b.size() != a.rows()) throw InvalidInput("solve_linear: right-hand side length mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = reduced_echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    RationalVector x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

namespace bareiss {

IntegerEchelon eliminate(const RationalMatrix& m) {
    IntegerEchelon out;
    out.rows.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        auto& row = out.rows[i];
        row.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_num() * (l / m(i, j).get_den()));
    }
    auto& a = out.rows;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) { return eliminate(m).pivots.size(); }

std::vector<RationalVector> kernel_vectors(const RationalMatrix& m) {
    auto e = eliminate(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = e.pivots.size(); r-- > 0;) {
            const std::size_t c = e.pivots[r];
            Rational s = 0;
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                if (v[j] != 0) s += Rational(e.rows[r][j]) * v[j];
            v[c] = -s / Rational(e.rows[r][c]);
        }
        basis.push_back(primitive_normalize(v));
    }
    return basis;
}

}  // namespace bareiss

}  // namespace apolar
