#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace twistforge {

// All coefficients in the library are exact rationals. No floating point.
using Rational = mpq_class;

// Parses "p", "-p", "p/q". Throws input_error on malformed text or q == 0.
Rational parse_rational(const std::string& text);

// Canonical form, "p" or "p/q" with q > 0.
std::string rational_str(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// mpq_class(p, q) does not canonicalize; GMP comparisons assume canonical
// operands. Every two-argument construction goes through here.
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Dense exact linear algebra, used for regular-representation inversion and
// for linear parts of series maps. Matrices are row-major.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    // Solves this * x = rhs by fraction-exact Gaussian elimination.
    // Throws not_invertible (with rank defect) if singular. Requires square.
    std::vector<Rational> solve(const std::vector<Rational>& rhs) const;

    // Throws not_invertible if singular.
    RationalMatrix inverse() const;

    int rank() const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace twistforge
