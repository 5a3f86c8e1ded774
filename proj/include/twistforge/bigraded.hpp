#pragma once

#include <set>

#include "twistforge/graded.hpp"

namespace twistforge {

using Bidegree = std::pair<int, int>;
using BidegreeSet = std::set<Bidegree>;

BidegreeSet domain_triangle(int cutoff);                  // m + k <= N
BidegreeSet domain_rectangle(int left_cap, int right_cap);  // m <= L, k <= R
BidegreeSet domain_union(const BidegreeSet& a, const BidegreeSet& b);

/// An element of T(R) (x) T(R) held through its graded images: component
/// (m,k) lives in R^{(x)m} (x) R^{(x)k}, stored as a degree-(m+k) tensor with
/// the first m slots forming the left leg. Since the T(R) product is
/// degreewise, the product here is componentwise in R^{(x)(m+k)}.
class BigradedElement {
  public:
    BigradedElement(RingPtr ring, BidegreeSet domain);

    static BigradedElement identity(RingPtr ring, const BidegreeSet& domain);
    /// a (x) b: component (m,k) = a_m (x) b_k.
    static BigradedElement pair_of(const GradedElement& a, const GradedElement& b,
                                   const BidegreeSet& domain);

    const BidegreeSet& domain() const { return domain_; }
    const RingPtr& ring_ptr() const { return ring_; }
    TensorElement component(int m, int k) const;  // zero when absent
    void set_component(int m, int k, TensorElement t);

    BigradedElement& operator+=(const BigradedElement& o);
    BigradedElement& operator-=(const BigradedElement& o);
    BigradedElement& operator*=(const Rational& s);
    friend BigradedElement operator+(BigradedElement a, const BigradedElement& b) { return a += b; }
    friend BigradedElement operator-(BigradedElement a, const BigradedElement& b) { return a -= b; }
    friend BigradedElement operator*(const Rational& s, BigradedElement a) { return a *= s; }
    BigradedElement operator-() const;
    bool operator==(const BigradedElement& o) const;
    bool is_zero() const;

    /// Componentwise exp; each component must be nilpotent (the left legs of
    /// all elements in scope are spanned by strongly nilpotent letters).
    BigradedElement nilpotent_exp() const;

  private:
    RingPtr ring_;
    BidegreeSet domain_;
    std::map<Bidegree, TensorElement> comps_;
};

BigradedElement mul(const BigradedElement& a, const BigradedElement& b);
inline BigradedElement operator*(const BigradedElement& a, const BigradedElement& b) {
    return mul(a, b);
}

/// Delta(h) = h (x) 1 + 1 (x) h for a lifted element h.
BigradedElement primitive_coproduct(const GradedElement& h, const BidegreeSet& domain);

/// Leg exchange: component (m,k) of the result is block_swap of (k,m).
/// Requires a swap-symmetric domain.
BigradedElement tau_flip(const BigradedElement& w);

}  // namespace twistforge
