#include "twistforge/graded.hpp"

#include "twistforge/errors.hpp"

namespace twistforge {

GradedElement::GradedElement(RingPtr ring, int cutoff)
    : ring_(std::move(ring)), cutoff_(cutoff) {
    if (!ring_) throw contract_error("null ring");
    if (cutoff_ < 0) throw contract_error("negative cutoff");
}

GradedElement GradedElement::identity(RingPtr ring, int cutoff) {
    GradedElement g(ring, cutoff);
    for (int n = 0; n <= cutoff; ++n)
        g.set_component(TensorElement::idempotent(ring, n));
    return g;
}

TensorElement GradedElement::component(int n) const {
    if (n < 0 || n > cutoff_) throw contract_error("component degree out of range");
    auto it = comps_.find(n);
    if (it != comps_.end()) return it->second;
    return TensorElement(ring_, n);
}

void GradedElement::set_component(TensorElement t) {
    if (t.ring_ptr().get() != ring_.get()) throw contract_error("component over wrong ring");
    if (t.degree() > cutoff_) throw contract_error("component degree exceeds cutoff");
    if (t.is_zero())
        comps_.erase(t.degree());
    else
        comps_.insert_or_assign(t.degree(), std::move(t));
}

Rational GradedElement::counit() const {
    auto it = comps_.find(0);
    return it == comps_.end() ? Rational(0) : it->second.coeff(static_cast<size_t>(0));
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    if (ring_.get() != o.ring_.get() || cutoff_ != o.cutoff_)
        throw contract_error("graded element mismatch");
    for (const auto& [n, t] : o.comps_) set_component(component(n) + t);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
    if (ring_.get() != o.ring_.get() || cutoff_ != o.cutoff_)
        throw contract_error("graded element mismatch");
    for (const auto& [n, t] : o.comps_) set_component(component(n) - t);
    return *this;
}

GradedElement& GradedElement::operator*=(const Rational& s) {
    if (twistforge::is_zero(s)) {
        comps_.clear();
        return *this;
    }
    for (auto& [n, t] : comps_) t *= s;
    return *this;
}

GradedElement GradedElement::operator-() const {
    GradedElement g(ring_, cutoff_);
    for (const auto& [n, t] : comps_) g.set_component(-t);
    return g;
}

bool GradedElement::operator==(const GradedElement& o) const {
    if (ring_.get() != o.ring_.get() || cutoff_ != o.cutoff_) return false;
    return comps_ == o.comps_;
}

bool GradedElement::is_zero() const { return comps_.empty(); }

GradedElement mul(const GradedElement& a, const GradedElement& b) {
    if (a.ring_ptr().get() != b.ring_ptr().get() || a.cutoff() != b.cutoff())
        throw contract_error("graded element mismatch");
    GradedElement out(a.ring_ptr(), a.cutoff());
    for (const auto& [n, t] : a.components()) {
        if (!b.has_component(n)) continue;
        out.set_component(mul(t, b.component(n)));
    }
    return out;
}

GradedElement lift_primitive(const TensorElement& x, int cutoff) {
    if (x.degree() != 1) throw contract_error("lift_primitive expects a degree-1 element");
    GradedElement g(x.ring_ptr(), cutoff);
    for (int n = 1; n <= cutoff; ++n) {
        TensorElement comp(x.ring_ptr(), n);
        for (int pos = 1; pos <= n; ++pos) comp += embed(x, pos - 1, n - pos);
        g.set_component(std::move(comp));
    }
    return g;
}

SplitElement coproduct_component(const TensorElement& z, int i, int j) {
    if (i < 0 || j < 0 || i + j != z.degree())
        throw contract_error("coproduct_component: bad split (" + std::to_string(i) + "," +
                             std::to_string(j) + ") for degree " + std::to_string(z.degree()));
    return SplitElement{z, i, j};
}

QTStructure::QTStructure(TensorElement rmat)
    : rmat_(std::move(rmat)), rmat_inv_(invert(rmat_)) {
    if (rmat_.degree() != 2) throw contract_error("QTStructure expects a degree-2 element");
}

QTStructure QTStructure::trivial(RingPtr ring) {
    return QTStructure(TensorElement::idempotent(std::move(ring), 2));
}

bool membership_S(const TensorElement& z, const QTStructure& qt, int pair_index) {
    const int n = z.degree();
    if (pair_index < 1 || pair_index > n - 1)
        throw contract_error("membership_S: pair index out of range");
    TensorElement r_emb = embed(qt.rmat(), pair_index - 1, n - pair_index - 1);
    return mul(r_emb, z) == mul(swap_adjacent(z, pair_index), r_emb);
}

}  // namespace twistforge
