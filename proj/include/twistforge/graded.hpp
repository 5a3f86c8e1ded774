#pragma once

#include <map>

#include "twistforge/tensor.hpp"

namespace twistforge {

/// An element of the truncated tensor bialgebra T(R) = sum_{n<=N} R^{(x)n}.
/// Components of different degree never interact under the product
/// (R^{(x)n} R^{(x)m} = 0 for n != m), so multiplication is degreewise.
class GradedElement {
  public:
    GradedElement(RingPtr ring, int cutoff);

    /// Sum of the idempotents e^n, n = 0..N: the identity of T(R) truncated.
    static GradedElement identity(RingPtr ring, int cutoff);

    int cutoff() const { return cutoff_; }
    const RingPtr& ring_ptr() const { return ring_; }

    /// Projection pi^n; zero element when nothing is stored at degree n.
    TensorElement component(int n) const;
    void set_component(TensorElement t);
    bool has_component(int n) const { return comps_.count(n) > 0; }

    /// Degree-0 part; for n=0 the projection is the bialgebra counit.
    Rational counit() const;

    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    GradedElement& operator*=(const Rational& s);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }
    GradedElement operator-() const;
    bool operator==(const GradedElement& o) const;
    bool is_zero() const;

    const std::map<int, TensorElement>& components() const { return comps_; }

  private:
    RingPtr ring_;
    int cutoff_;
    std::map<int, TensorElement> comps_;  // absent degree = zero
};

/// Degreewise product in T(R).
GradedElement mul(const GradedElement& a, const GradedElement& b);
inline GradedElement operator*(const GradedElement& a, const GradedElement& b) { return mul(a, b); }

/// Lift of a primitive generator x (degree-1 image of the fundamental map):
/// degree-n component = sum_{pos=1..n} e^{(x)(pos-1)} (x) x (x) e^{(x)(n-pos)},
/// which is rho^{(x)n} o Delta^n for primitive x.
GradedElement lift_primitive(const TensorElement& x, int cutoff);

/// The deconcatenation coproduct component: the canonical identification
/// R^{(x)(i+j)} ~ R^{(x)i} (x) R^{(x)j} is the identity on coefficients, so
/// only a split marker is recorded.
struct SplitElement {
    TensorElement value;
    int left;
    int right;
};
SplitElement coproduct_component(const TensorElement& z, int i, int j);

/// An invertible R in R^{(x)2} defining the subalgebra S = { z : R z R^{-1} =
/// tau z } (invertibility is checked at construction).
class QTStructure {
  public:
    explicit QTStructure(TensorElement rmat);
    static QTStructure trivial(RingPtr ring);  // R = e^2

    const TensorElement& rmat() const { return rmat_; }
    const TensorElement& rmat_inv() const { return rmat_inv_; }
    const RingPtr& ring_ptr() const { return rmat_.ring_ptr(); }

  private:
    TensorElement rmat_, rmat_inv_;
};

/// True iff R_{i,i+1} z R_{i,i+1}^{-1} = tau_{i,i+1}(z) where R_{i,i+1} is
/// the embedding of qt.rmat() at adjacent slots (i, i+1), 1 <= i <= n-1.
/// Evaluated as R z = (tau z) R, avoiding the inverse.
bool membership_S(const TensorElement& z, const QTStructure& qt, int pair_index);

}  // namespace twistforge
