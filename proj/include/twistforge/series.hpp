#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "twistforge/rational.hpp"
#include "twistforge/ring.hpp"

namespace twistforge {

using Mono = std::vector<int>;  // exponent vector, one entry per variable

/// Commutative multivariate polynomial over exact rationals, truncated at
/// total degree `cap`. No stored term exceeds the cap; no explicit zeros.
class TruncatedPoly {
  public:
    TruncatedPoly(int nvars, int cap);
    static TruncatedPoly constant(int nvars, int cap, const Rational& c);
    static TruncatedPoly variable(int nvars, int cap, int i);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<Mono, Rational>& terms() const { return terms_; }

    /// Accumulates c at mono; terms beyond the cap are silently truncated.
    void add_term(const Mono& mono, const Rational& c);
    Rational coefficient(const Mono& mono) const;
    Rational constant_term() const;
    bool has_zero_constant_term() const { return is_zero(constant_term()); }
    bool is_zero_poly() const { return terms_.empty(); }

    TruncatedPoly& operator+=(const TruncatedPoly& o);
    TruncatedPoly& operator-=(const TruncatedPoly& o);
    TruncatedPoly& operator*=(const Rational& s);
    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
    friend TruncatedPoly operator*(const Rational& s, TruncatedPoly a) { return a *= s; }
    TruncatedPoly operator-() const;
    bool operator==(const TruncatedPoly& o) const;

    /// Sorted monomial list, e.g. "1 - 1/2 x0 + 1/12 x0^2".
    std::string str() const;

  private:
    int nvars_, cap_;
    std::map<Mono, Rational> terms_;
};

TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b);
inline TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) { return mul(a, b); }

/// Standard composition target(subs[0], ..., subs[nvars-1]) truncated at the
/// substitutions' cap. Every substitution entry must have zero constant term
/// (composition is otherwise ill-defined under truncation).
TruncatedPoly poly_compose(const TruncatedPoly& target, std::span<const TruncatedPoly> subs);

/// Compositional inverse of a map with invertible linear part, to the cap:
/// map o inverse = identity up to total degree D. Throws not_invertible on a
/// singular linear part.
std::vector<TruncatedPoly> series_inverse(std::span<const TruncatedPoly> map, int cap);

/// Matrix with TruncatedPoly entries (uniform nvars and cap).
class MatrixSeries {
  public:
    MatrixSeries(int rows, int cols, int nvars, int cap);
    static MatrixSeries identity(int n, int nvars, int cap);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    TruncatedPoly& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const TruncatedPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    MatrixSeries& operator+=(const MatrixSeries& o);
    MatrixSeries& operator-=(const MatrixSeries& o);
    friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
    friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
    bool operator==(const MatrixSeries& o) const;
    bool has_zero_constant_term() const;

    std::vector<TruncatedPoly> apply(std::span<const TruncatedPoly> v) const;

  private:
    int rows_, cols_, nvars_, cap_;
    std::vector<TruncatedPoly> e_;
};

MatrixSeries mul(const MatrixSeries& a, const MatrixSeries& b);
inline MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) { return mul(a, b); }

/// Analytic function given by its first cap+1 rational Taylor coefficients.
struct UnivariateSpec {
    enum class Kind {
        exp,                   // e^z
        expm1_over_arg,        // (e^z - 1)/z
        arg_over_expm1,        // z/(e^z - 1)
        log1p,                 // log(1 + z)
        expneg_m1_over_negarg, // (e^{-z} - 1)/(-z)
        custom,
    };
    Kind kind = Kind::custom;
    std::vector<Rational> coeffs;  // used when kind == custom

    static std::vector<Rational> taylor(Kind kind, int cap);
    std::vector<Rational> coefficients(int cap) const;
};

/// sum_k f_k M^k truncated at the cap. M must be square with zero constant
/// term in every entry.
MatrixSeries apply_univariate(const UnivariateSpec& f, const MatrixSeries& m);

/// A finite-dimensional associative ring L given by structure constants
/// B^sigma_{mu nu} (no unit required); the derived Lie bracket is
/// [a,b]^sigma = (B^sigma_{mu nu} - B^sigma_{nu mu}) a^mu b^nu.
struct LieRingSpec {
    std::string name;
    int dim = 0;
    // entries[(mu * dim + nu)] -> sorted sparse (sigma, coefficient)
    std::vector<RingSpec::SparseRow> table;

    LieRingSpec() = default;
    LieRingSpec(std::string name, int dim);
    void add_term(int mu, int nu, int sigma, const Rational& c);
    const RingSpec::SparseRow& product(int mu, int nu) const;
    bool is_commutative() const;  // B symmetric in the lower indices
};

ValidationReport validate_lie_ring(const LieRingSpec& spec);

std::vector<TruncatedPoly> lie_bracket(const LieRingSpec& L, std::span<const TruncatedPoly> a,
                                       std::span<const TruncatedPoly> b);

/// Coordinates of the Baker-Campbell-Hausdorff composition D(u, w) with
/// e^{D(a,b)} = e^a e^b, to total degree `cap` in the series variables.
/// Computed from log(e^a e^b) in the free associative algebra on two letters,
/// evaluated through the Dynkin-Specht-Wever right-nested bracketing.
std::vector<TruncatedPoly> bch(const LieRingSpec& L, std::span<const TruncatedPoly> u,
                               std::span<const TruncatedPoly> w, int cap);

}  // namespace twistforge
