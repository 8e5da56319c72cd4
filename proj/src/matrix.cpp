#include "qmf/matrix.hpp"

#include <stdexcept>

namespace qmf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(k, j);
                if (b == 0) continue;
                tmp = a * b;
                out.at(i, j) += tmp;
            }
        }
    return out;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
    std::vector<Rational> col(rows_);
    for (std::size_t i = 0; i < rows_; ++i) col[i] = at(i, j);
    return col;
}

void RationalMatrix::set_column(std::size_t j, const std::vector<Rational>& col) {
    if (col.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = col[i];
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RrefResult rref(const RationalMatrix& m) {
    RrefResult res{m, {}};
    RationalMatrix& a = res.matrix;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a.at(piv, col) == 0) ++piv;
        if (piv == nr) continue;
        if (piv != row)
            for (std::size_t j = col; j < nc; ++j) std::swap(a.at(row, j), a.at(piv, j));
        Rational inv = 1 / a.at(row, col);
        for (std::size_t j = col; j < nc; ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row) continue;
            const Rational f = a.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < nc; ++j) a.at(i, j) -= f * a.at(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    const std::size_t nc = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(nc);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.matrix.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

ColumnImage column_image_basis(const RationalMatrix& m) {
    RrefResult r = rref(m);
    ColumnImage img;
    img.indices = r.pivots;
    for (std::size_t p : r.pivots) img.columns.push_back(m.column(p));
    return img;
}

namespace {

void make_primitive(std::vector<Int>& v, std::size_t lead) {
    Int g = 0;
    for (const Int& x : v) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (Int& x : v) x /= g;
    if (v[lead] < 0)
        for (Int& x : v) x = -x;
}

}  // namespace

bool IntColumnScanner::offer(const std::vector<Int>& column) {
    if (column.size() != len_) throw std::invalid_argument("offer: length mismatch");
    std::vector<Int> v = column;
    Int g, t;
    for (const EchelonRow& e : echelon_) {
        const Int& vk = v[e.lead];
        if (vk == 0) continue;
        // v <- (e.v[lead] * v - vk * e.v) / gcd, a positive multiple of the
        // exact reduction, so independence and later leads are unaffected.
        mpz_gcd(g.get_mpz_t(), e.v[e.lead].get_mpz_t(), vk.get_mpz_t());
        Int ce = e.v[e.lead] / g;
        Int cv = vk / g;
        for (std::size_t i = 0; i < len_; ++i) {
            if (v[i] == 0 && e.v[i] == 0) continue;
            v[i] *= ce;
            t = cv * e.v[i];
            v[i] -= t;
        }
    }
    std::size_t lead = 0;
    while (lead < len_ && v[lead] == 0) ++lead;
    if (lead == len_) return false;
    make_primitive(v, lead);
    EchelonRow row{lead, std::move(v)};
    auto pos = echelon_.begin();
    while (pos != echelon_.end() && pos->lead < lead) ++pos;
    echelon_.insert(pos, std::move(row));
    return true;
}

std::vector<std::vector<Rational>> row_space_echelon(
    const std::vector<std::vector<Rational>>& vectors,
    const std::vector<std::size_t>& order) {
    if (vectors.empty()) return {};
    const std::size_t n = vectors.front().size();
    if (order.size() != n) throw std::invalid_argument("row_space_echelon: bad order");
    RationalMatrix m(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i][order[j]];
    RrefResult r = rref(m);
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[order[j]] = r.matrix.at(i, j);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace qmf
