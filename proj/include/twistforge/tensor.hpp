#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "twistforge/ring.hpp"

namespace twistforge {

/// An element of R^{(x)n} as a dense vector of d^n exact rationals.
///
/// Multi-index convention (fixed; serialized reports depend on it): indices
/// are row-major with slot 1 most significant, i.e. the flat index of
/// (i_1, ..., i_n) is i_1 d^{n-1} + i_2 d^{n-2} + ... + i_n. Degree 0 is a
/// single scalar.
class TensorElement {
  public:
    TensorElement(RingPtr ring, int degree);  // zero element

    static TensorElement scalar(RingPtr ring, const Rational& value);
    static TensorElement basis(RingPtr ring, std::span<const int> index);
    /// e^n = unit^{(x)n}; requires a declared unit. e^0 is the rational 1.
    static TensorElement idempotent(RingPtr ring, int n);

    int degree() const { return degree_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const RingSpec& ring() const { return *ring_; }
    size_t size() const { return coeffs_.size(); }  // d^degree

    const Rational& coeff(size_t flat) const { return coeffs_[flat]; }
    const Rational& coeff(std::span<const int> index) const;
    void set_coeff(size_t flat, const Rational& v) { coeffs_[flat] = v; }
    void set_coeff(std::span<const int> index, const Rational& v);
    void add_coeff(size_t flat, const Rational& v) { coeffs_[flat] += v; }

    bool is_zero() const;
    size_t nonzero_count() const;
    void for_each_nonzero(const std::function<void(size_t, const Rational&)>& fn) const;

    size_t encode(std::span<const int> index) const;
    std::vector<int> decode(size_t flat) const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Rational& s);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
    TensorElement operator-() const;
    bool operator==(const TensorElement& o) const;

  private:
    RingPtr ring_;
    int degree_;
    std::vector<Rational> coeffs_;
};

/// Componentwise tensor-power product; both factors must share ring and
/// degree (cross-degree products vanish in T(R) and are rejected here).
TensorElement mul(const TensorElement& a, const TensorElement& b);
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) { return mul(a, b); }

/// e^{(x)left} (x) z (x) e^{(x)right}. Requires a unit (unless left==right==0).
TensorElement embed(const TensorElement& z, int left, int right);

/// Tensor concatenation a (x) b (degree deg(a)+deg(b)).
TensorElement concat(const TensorElement& a, const TensorElement& b);

/// Slot permutation: the factor in slot s moves to slot perm[s] (0-based),
/// i.e. result(k_1..k_n) = z(k_{perm(1)}, ..., k_{perm(n)}). An algebra
/// automorphism of R^{(x)n}. perm must be a bijection of {0..n-1}.
TensorElement permute(const TensorElement& z, std::span<const int> perm);

/// Moves the first block (length first_len) past the second (length
/// second_len): slots (1..a+b) -> (b+1..b+a, 1..b) in 1-based terms.
TensorElement block_swap(const TensorElement& z, int first_len, int second_len);

/// Adjacent transposition of slots i-1 and i (1 <= i <= n-1, 1-based pairs).
TensorElement swap_adjacent(const TensorElement& z, int pair_index);

/// z of degree m+k placed with its first m slots at positions 1..m and its
/// last k slots at positions m+gap+1..m+gap+k, units in between.
TensorElement embed_two_blocks(const TensorElement& z, int m, int k, int gap);

/// Inverse in R^{(x)n}. Writes a = c e^n + u with c the unit-multi-index
/// coefficient; if u is nilpotent (detected by repeated squaring, bound
/// ceil(log2 d^n) steps) the terminating Neumann series is used, otherwise
/// the d^n x d^n left-regular system is solved (only for d^n below a small
/// bound; larger non-unipotent inversion is reported unsupported).
TensorElement invert(const TensorElement& a);

/// Neumann path alone; std::nullopt when the non-unit part is not nilpotent
/// or the unit coefficient vanishes.
std::optional<TensorElement> try_invert_neumann(const TensorElement& a);

/// Dense left-regular solve; throws not_invertible with the rank defect.
TensorElement invert_linear_solve(const TensorElement& a);

/// First differing coefficient, rendered as "at (i1,..,in): lhs != rhs";
/// empty when equal. For report details.
std::string first_coeff_diff(const TensorElement& a, const TensorElement& b);

}  // namespace twistforge
