#include "twistforge/rational.hpp"

#include <cctype>

#include "twistforge/errors.hpp"

namespace twistforge {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    size_t pos = 0;
    auto expect_integer = [&](size_t from, size_t to) {
        if (from >= to) throw input_error("malformed rational '" + text + "'");
        size_t i = from;
        if (text[i] == '-' || text[i] == '+') ++i;
        if (i >= to) throw input_error("malformed rational '" + text + "'");
        for (; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw input_error("malformed rational '" + text + "'");
    };
    pos = text.find('/');
    if (pos == std::string::npos) {
        expect_integer(0, text.size());
    } else {
        expect_integer(0, pos);
        expect_integer(pos + 1, text.size());
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw input_error("malformed rational '" + text + "'");
    if (sgn(q.get_den()) == 0) throw input_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Reduces `m` in place (row echelon, partial pivoting on first nonzero),
// applying the same row ops to `aug` (may be empty). Returns the rank.
int eliminate(RationalMatrix& m, std::vector<std::vector<Rational>>& aug) {
    int rank = 0;
    const int rows = m.rows(), cols = m.cols();
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(m.at(r, col))) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < cols; ++c) swap(m.at(pivot, c), m.at(rank, c));
            for (auto& v : aug) swap(v[pivot], v[rank]);
        }
        Rational inv_p = 1 / m.at(rank, col);
        for (int c = col; c < cols; ++c) m.at(rank, c) *= inv_p;
        for (auto& v : aug) v[rank] *= inv_p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || is_zero(m.at(r, col))) continue;
            Rational factor = m.at(r, col);
            for (int c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(rank, c);
            for (auto& v : aug) v[r] -= factor * v[rank];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<Rational> RationalMatrix::solve(const std::vector<Rational>& rhs) const {
    if (rows_ != cols_ || static_cast<int>(rhs.size()) != rows_)
        throw contract_error("solve: shape mismatch");
    RationalMatrix m = *this;
    std::vector<std::vector<Rational>> aug{rhs};
    int rank = eliminate(m, aug);
    if (rank < rows_)
        throw not_invertible("singular linear system", rows_ - rank);
    // eliminate() leaves a permuted identity-like echelon; since rank is full
    // and we normalized pivots with full clearing, m is the identity.
    return aug[0];
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw contract_error("inverse: non-square matrix");
    RationalMatrix m = *this;
    std::vector<std::vector<Rational>> aug;
    aug.reserve(rows_);
    for (int c = 0; c < cols_; ++c) {
        std::vector<Rational> col(rows_);
        col[c] = 1;
        aug.push_back(std::move(col));
    }
    int rank = eliminate(m, aug);
    if (rank < rows_) throw not_invertible("singular matrix", rows_ - rank);
    RationalMatrix inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug[c][r];
    return inv;
}

int RationalMatrix::rank() const {
    RationalMatrix m = *this;
    std::vector<std::vector<Rational>> aug;
    return eliminate(m, aug);
}

}  // namespace twistforge
