#include "twistforge/twist.hpp"

#include "twistforge/errors.hpp"
#include "twistforge/parallel.hpp"

namespace twistforge {

namespace {

std::string bidegree_str(int m, int k) {
    return "(" + std::to_string(m) + "," + std::to_string(k) + ")";
}

std::string triple_str(int m, int n, int k) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

GradedTwist::GradedTwist(RingPtr ring, int cutoff)
    : ring_(std::move(ring)), cutoff_(cutoff) {
    if (!ring_) throw contract_error("null ring");
    if (cutoff_ < 0) throw contract_error("negative cutoff");
}

const TensorElement& GradedTwist::component(int m, int k) const {
    auto it = phi_.find({m, k});
    if (it == phi_.end())
        throw contract_error("twist has no component at " + bidegree_str(m, k));
    return it->second;
}

void GradedTwist::set_component(int m, int k, TensorElement t) {
    if (m < 0 || k < 0 || m + k > cutoff_)
        throw contract_error("twist bidegree out of range " + bidegree_str(m, k));
    if (t.degree() != m + k) throw contract_error("twist component degree mismatch");
    phi_.insert_or_assign({m, k}, std::move(t));
}

std::vector<std::pair<int, int>> GradedTwist::bidegrees() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(phi_.size());
    for (const auto& [mk, t] : phi_) out.push_back(mk);
    return out;
}

bool GradedTwist::operator==(const GradedTwist& o) const {
    return ring_.get() == o.ring_.get() && cutoff_ == o.cutoff_ && phi_ == o.phi_;
}

GradedTwist trivial_twist(RingPtr ring, int cutoff) {
    GradedTwist t(ring, cutoff);
    for (int m = 0; m <= cutoff; ++m)
        for (int k = 0; m + k <= cutoff; ++k)
            t.set_component(m, k, TensorElement::idempotent(ring, m + k));
    return t;
}

std::vector<TensorElement> fusion_seeds(const TensorElement& phi11, int cutoff) {
    if (phi11.degree() != 2) throw contract_error("fusion_seeds expects a degree-2 element");
    try {
        (void)invert(phi11);
    } catch (const not_invertible&) {
        throw input_error("fusion seed phi11 is not invertible");
    }
    std::vector<TensorElement> seeds;
    for (int k = 1; k <= cutoff - 1; ++k) {
        // Phi_1i embeds phi11 at slots (1, i) of R^{(x)(k+1)}
        TensorElement acc = embed(phi11, 0, k - 1);  // i = 2
        for (int i = 3; i <= k + 1; ++i) {
            TensorElement phi_1i =
                embed(embed_two_blocks(phi11, 1, 1, i - 2), 0, k + 1 - i);
            acc = mul(acc, phi_1i);
        }
        seeds.push_back(std::move(acc));
    }
    return seeds;
}

GradedTwist build_from_seeds(std::span<const TensorElement> seeds, int cutoff) {
    if (cutoff < 1) throw contract_error("cutoff must be >= 1");
    if (static_cast<int>(seeds.size()) != cutoff - 1)
        throw input_error("expected " + std::to_string(cutoff - 1) + " seeds (k = 1.." +
                          std::to_string(cutoff - 1) + ")");
    RingPtr ring;
    for (int k = 1; k <= cutoff - 1; ++k) {
        const TensorElement& s = seeds[static_cast<size_t>(k - 1)];
        if (s.degree() != k + 1)
            throw input_error("seed for k=" + std::to_string(k) + " must have degree " +
                              std::to_string(k + 1));
        if (!ring) ring = s.ring_ptr();
        if (s.ring_ptr().get() != ring.get()) throw input_error("seeds over different rings");
        try {
            (void)invert(s);
        } catch (const not_invertible&) {
            throw input_error("seed for k=" + std::to_string(k) + " is not invertible");
        }
    }
    if (!ring) ring = seeds.empty() ? RingPtr() : seeds[0].ring_ptr();
    if (!ring) throw input_error("cutoff 1 needs an explicit ring; provide at least one seed");
    if (!ring->has_unit()) throw unsupported_error("twisting requires a unital ring");

    GradedTwist t(ring, cutoff);
    for (int k = 0; k <= cutoff; ++k) {
        t.set_component(0, k, TensorElement::idempotent(ring, k));
        t.set_component(k, 0, TensorElement::idempotent(ring, k));
    }
    for (int k = 1; k <= cutoff - 1; ++k)
        t.set_component(1, k, seeds[static_cast<size_t>(k - 1)]);
    // Phi^{m+1,k} = Phi^{m,1+k} Phi^{1,k}_e inv(Phi^{m,1})_b; inverses are
    // taken on the core and embedded (embedding is a unital ring map).
    for (int m = 1; m + 1 <= cutoff - 1; ++m) {
        TensorElement inv_m1 = invert(t.component(m, 1));
        for (int k = 1; m + 1 + k <= cutoff; ++k) {
            TensorElement rhs = mul(t.component(m, 1 + k),
                                    embed(t.component(1, k), m, 0));
            t.set_component(m + 1, k, mul(rhs, embed(inv_m1, 0, k)));
        }
    }
    return t;
}

Report verify_te(const GradedTwist& t) {
    Report rep;
    rep.check = "te";
    rep.params["N"] = std::to_string(t.cutoff());
    rep.params["ring"] = t.ring_ptr()->name();
    struct Triple { int m, n, k; };
    std::vector<Triple> grid;
    for (int m = 0; m <= t.cutoff(); ++m)
        for (int n = 0; m + n <= t.cutoff(); ++n)
            for (int k = 0; m + n + k <= t.cutoff(); ++k) grid.push_back({m, n, k});
    std::vector<CheckItem> items(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        const auto [m, n, k] = grid[i];
        TensorElement lhs = mul(t.component(m + n, k), embed(t.component(m, n), 0, k));
        TensorElement rhs = mul(t.component(m, n + k), embed(t.component(n, k), m, 0));
        bool ok = lhs == rhs;
        items[i] = {triple_str(m, n, k), ok, ok ? "" : first_coeff_diff(lhs, rhs)};
    });
    rep.items = std::move(items);
    return rep;
}

bool check_split2(const TensorElement& phi11, const QTStructure& qt) {
    TensorElement r23 = embed(qt.rmat(), 1, 0);
    TensorElement p12 = embed(phi11, 0, 1);
    TensorElement p13 = embed_two_blocks(phi11, 1, 1, 1);
    return mul(r23, mul(p12, p13)) == mul(mul(p13, p12), r23);
}

bool check_split1(const TensorElement& phi11, const QTStructure& qt) {
    TensorElement rt = mul(mul(invert(block_swap(phi11, 1, 1)), qt.rmat()), phi11);
    TensorElement rt12 = embed(rt, 0, 1);
    TensorElement p13 = embed_two_blocks(phi11, 1, 1, 1);
    TensorElement p23 = embed(phi11, 1, 0);
    return mul(rt12, mul(p13, p23)) == mul(mul(p23, p13), rt12);
}

Report verify_membership(const GradedTwist& t, const QTStructure& qt) {
    Report rep;
    rep.check = "membership";
    rep.params["N"] = std::to_string(t.cutoff());
    rep.params["ring"] = t.ring_ptr()->name();
    for (const auto& [m, n] : t.bidegrees()) {
        if (m + n < 2) continue;
        const TensorElement& z = t.component(m, n);
        bool any = false;
        for (int i = 1; i <= m - 1; ++i) {
            any = true;
            bool ok = membership_S(z, qt, i);
            rep.add(bidegree_str(m, n) + " pair " + std::to_string(i), ok,
                    ok ? "" : "left-block pair fails");
        }
        for (int i = m + 1; i <= m + n - 1; ++i) {
            any = true;
            bool ok = membership_S(z, qt, i);
            rep.add(bidegree_str(m, n) + " pair " + std::to_string(i), ok,
                    ok ? "" : "right-block pair fails");
        }
        if (!any) rep.add(bidegree_str(m, n), true, "no interior pairs");
    }
    return rep;
}

GradedTwist rmatrix(const GradedTwist& t) {
    GradedTwist r(t.ring_ptr(), t.cutoff());
    for (const auto& [m, n] : t.bidegrees()) {
        TensorElement swapped = block_swap(t.component(n, m), n, m);
        r.set_component(m, n, mul(invert(swapped), t.component(m, n)));
    }
    return r;
}

bool ybe_check(const TensorElement& r) {
    if (r.degree() != 2) throw contract_error("ybe_check expects a degree-2 element");
    TensorElement r12 = embed(r, 0, 1);
    TensorElement r13 = embed_two_blocks(r, 1, 1, 1);
    TensorElement r23 = embed(r, 1, 0);
    return mul(r12, mul(r13, r23)) == mul(r23, mul(r13, r12));
}

}  // namespace twistforge
