#include "twistforge/bigraded.hpp"

#include "twistforge/errors.hpp"

namespace twistforge {

BidegreeSet domain_triangle(int cutoff) {
    BidegreeSet s;
    for (int m = 0; m <= cutoff; ++m)
        for (int k = 0; m + k <= cutoff; ++k) s.insert({m, k});
    return s;
}

BidegreeSet domain_rectangle(int left_cap, int right_cap) {
    BidegreeSet s;
    for (int m = 0; m <= left_cap; ++m)
        for (int k = 0; k <= right_cap; ++k) s.insert({m, k});
    return s;
}

BidegreeSet domain_union(const BidegreeSet& a, const BidegreeSet& b) {
    BidegreeSet s = a;
    s.insert(b.begin(), b.end());
    return s;
}

BigradedElement::BigradedElement(RingPtr ring, BidegreeSet domain)
    : ring_(std::move(ring)), domain_(std::move(domain)) {
    if (!ring_) throw contract_error("null ring");
}

BigradedElement BigradedElement::identity(RingPtr ring, const BidegreeSet& domain) {
    BigradedElement e(ring, domain);
    for (const auto& [m, k] : domain)
        e.set_component(m, k, TensorElement::idempotent(ring, m + k));
    return e;
}

BigradedElement BigradedElement::pair_of(const GradedElement& a, const GradedElement& b,
                                         const BidegreeSet& domain) {
    if (a.ring_ptr().get() != b.ring_ptr().get())
        throw contract_error("pair_of: ring mismatch");
    BigradedElement out(a.ring_ptr(), domain);
    for (const auto& [m, k] : domain) {
        if (m > a.cutoff() || k > b.cutoff())
            throw contract_error("pair_of: domain exceeds graded cutoffs");
        if (!a.has_component(m) || !b.has_component(k)) continue;
        out.set_component(m, k, concat(a.component(m), b.component(k)));
    }
    return out;
}

TensorElement BigradedElement::component(int m, int k) const {
    if (!domain_.count({m, k})) throw contract_error("bidegree outside domain");
    auto it = comps_.find({m, k});
    if (it != comps_.end()) return it->second;
    return TensorElement(ring_, m + k);
}

void BigradedElement::set_component(int m, int k, TensorElement t) {
    if (!domain_.count({m, k})) throw contract_error("bidegree outside domain");
    if (t.degree() != m + k) throw contract_error("component degree mismatch");
    if (t.is_zero())
        comps_.erase({m, k});
    else
        comps_.insert_or_assign({m, k}, std::move(t));
}

namespace {
void check_match(const BigradedElement& a, const BigradedElement& b) {
    if (a.ring_ptr().get() != b.ring_ptr().get() || a.domain() != b.domain())
        throw contract_error("bigraded element mismatch (ring or domain)");
}
}  // namespace

BigradedElement& BigradedElement::operator+=(const BigradedElement& o) {
    check_match(*this, o);
    for (const auto& [mk, t] : o.comps_) set_component(mk.first, mk.second,
                                                       component(mk.first, mk.second) + t);
    return *this;
}

BigradedElement& BigradedElement::operator-=(const BigradedElement& o) {
    check_match(*this, o);
    for (const auto& [mk, t] : o.comps_) set_component(mk.first, mk.second,
                                                       component(mk.first, mk.second) - t);
    return *this;
}

BigradedElement& BigradedElement::operator*=(const Rational& s) {
    if (twistforge::is_zero(s)) {
        comps_.clear();
        return *this;
    }
    for (auto& [mk, t] : comps_) t *= s;
    return *this;
}

BigradedElement BigradedElement::operator-() const {
    BigradedElement out(ring_, domain_);
    for (const auto& [mk, t] : comps_) out.comps_.emplace(mk, -t);
    return out;
}

bool BigradedElement::operator==(const BigradedElement& o) const {
    return ring_.get() == o.ring_.get() && domain_ == o.domain_ && comps_ == o.comps_;
}

bool BigradedElement::is_zero() const { return comps_.empty(); }

BigradedElement mul(const BigradedElement& a, const BigradedElement& b) {
    check_match(a, b);
    BigradedElement out(a.ring_ptr(), a.domain());
    for (const auto& mk : a.domain()) {
        TensorElement ca = a.component(mk.first, mk.second);
        if (ca.is_zero()) continue;
        TensorElement cb = b.component(mk.first, mk.second);
        if (cb.is_zero()) continue;
        out.set_component(mk.first, mk.second, mul(ca, cb));
    }
    return out;
}

BigradedElement BigradedElement::nilpotent_exp() const {
    BigradedElement out = identity(ring_, domain_);
    for (const auto& [m, k] : domain_) {
        TensorElement x = component(m, k);
        if (x.is_zero()) continue;
        TensorElement acc = TensorElement::idempotent(ring_, m + k);
        TensorElement power = x;
        Rational inv_fact = 1;
        const size_t bound = power.size() + 1;
        size_t j = 1;
        while (!power.is_zero()) {
            if (j > bound)
                throw contract_error("nilpotent_exp: component is not nilpotent");
            inv_fact /= static_cast<int>(j);
            acc += inv_fact * power;
            power = mul(power, x);
            ++j;
        }
        out.set_component(m, k, std::move(acc));
    }
    return out;
}


BigradedElement primitive_coproduct(const GradedElement& h, const BidegreeSet& domain) {
    GradedElement one = GradedElement::identity(h.ring_ptr(), h.cutoff());
    return BigradedElement::pair_of(h, one, domain) + BigradedElement::pair_of(one, h, domain);
}

BigradedElement tau_flip(const BigradedElement& w) {
    BigradedElement out(w.ring_ptr(), w.domain());
    for (const auto& [m, k] : w.domain()) {
        if (!w.domain().count({k, m}))
            throw contract_error("tau_flip: domain is not swap-symmetric");
        TensorElement t = w.component(k, m);
        if (t.is_zero()) continue;
        out.set_component(m, k, block_swap(t, k, m));
    }
    return out;
}

}  // namespace twistforge
