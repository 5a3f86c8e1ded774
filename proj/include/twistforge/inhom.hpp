#pragma once

#include <optional>

#include "twistforge/bigraded.hpp"
#include "twistforge/report.hpp"
#include "twistforge/series.hpp"
#include "twistforge/twist.hpp"

namespace twistforge {

/// The derived quantized-algebra data for a Lie ring L of dimension v:
/// the ambient ring R = L |> L* + K E (dimension 2v+1, basis ordered
/// E, H_1..H_v, X^1..X^v), the seed cocycle and Rt, the regular-representation
/// matrix series, and all structure series at cap D. Generator lifts into the
/// degree-N truncation are filled by generator_lifts().
struct InhomModel {
    LieRingSpec L;
    RingPtr R;
    int D = 0;  // series cap
    int N = 0;  // truncation cutoff

    TensorElement phi11;   // E(x)E - X^nu (x) H_nu
    TensorElement rtilde;  // E(x)E + H_nu (x) X^nu - X^nu (x) H_nu

    MatrixSeries left_reg;   // L(Xt)^mu_nu = B^mu_{sigma nu} Xt^sigma
    MatrixSeries right_reg;  // R(Xt)^mu_nu = B^mu_{nu sigma} Xt^sigma
    MatrixSeries g_series;   // e^{L(Xt)}
    MatrixSeries f_series;   // value of [H_nu, Xt^mu] as a series matrix
    std::vector<TruncatedPoly> phi_cocycle;  // ((e^{-L}-1)/(-L)) Xt
    std::vector<TruncatedPoly> psi;          // compositional inverse of phi

    // Series used to expand lifted elements over two tensor legs must reach
    // the largest bidegree total 2(N-1); strong nilpotency kills everything
    // beyond it, so this cap makes the truncated identities exact.
    int lift_cap = 0;                         // max(D, 2N-2)
    std::vector<TruncatedPoly> psi_lift;      // psi recomputed at lift_cap

    // lifted generators and twists (after generator_lifts)
    std::vector<GradedElement> h_lift, x_lift, xt_lift;
    BidegreeSet twist_domain;
    std::optional<BigradedElement> twist_exp;      // Phi = exp(-Xt (x) H)
    std::optional<BigradedElement> twist_exp_inv;  // exp(+Xt (x) H)
    std::optional<GradedTwist> twist_rec;          // fusion + recursion from phi11

    InhomModel(LieRingSpec lie, int cap_d, int cutoff_n);
    bool lifts_ready() const { return twist_exp.has_value(); }

    int v() const { return L.dim; }
    // R basis indices
    int e_index() const { return 0; }
    int h_index(int mu) const { return 1 + mu; }           // mu = 0..v-1
    int x_index(int nu) const { return 1 + L.dim + nu; }   // nu = 0..v-1
};

/// Builds R (validated), phi11, rtilde and all series. Rejects a
/// non-associative B.
InhomModel build_model(const LieRingSpec& L, int cap_d, int cutoff_n);

/// The ambient ring R of a model, exposed for direct use.
RingPtr make_inhom_ring(const LieRingSpec& L);

/// Lifts H_mu and X^nu primitively, sets Xt^nu = psi^nu(X), assembles
/// Phi = exp(-Xt^nu (x) H_nu) over the model's bidegree domain, and builds
/// the fusion+recursion twist from phi11.
void generator_lifts(InhomModel& model);

/// Evaluates a polynomial on commuting lifted arguments in T(R).
GradedElement eval_poly(const TruncatedPoly& p, std::span<const GradedElement> args,
                        RingPtr ring, int cutoff);
BigradedElement eval_poly_big(const TruncatedPoly& p, std::span<const BigradedElement> args,
                              RingPtr ring, const BidegreeSet& domain);

/// Twisted coproduct of a lifted element: Phi^{-1} Delta(h) Phi, where
/// Delta(h) is the primitive coproduct of the lift.
BigradedElement twisted_coproduct_primitive(const InhomModel& model, const GradedElement& h);

/// Recursion-built twist equals the exponential-form twist at every stored
/// bidegree with m+k <= N, and the fusion twist passes membership with
/// trivial ambient R.
Report verify_theorem2(const InhomModel& model);

/// The displayed Hopf structure, machine-checked in the truncation:
/// commutator [H_mu, Xt^nu] = f^nu_mu, the coproducts of H and Xt, the
/// antipode and counit axioms, coassociativity, plus the pure-series claims
/// g(bch(u,w)) = g(u) g(w) and the boundary conditions on f.
Report verify_hopf_structure(const InhomModel& model);

/// phi(bch(w,u)) = phi(u) + e^{-L(u)} phi(w) in doubled variables
/// (u = left leg, w = right leg), and psi o phi = id, to degree D.
Report verify_group_cocycle(const InhomModel& model);

/// RM = exp(H (x) Xt) exp(-Xt (x) H) against block-swapped-inverse form,
/// the intertwining RM Delta~(h) RM^{-1} = tau Delta~(h) on the rectangle
/// (N-1, N-1), and gradewise triangularity RM_21 RM = 1.
Report verify_quasitriangularity(const InhomModel& model);

/// Theorem-3 pipeline for a user 1-cocycle phi_in: checks the cocycle law
/// (precondition; on failure reports and skips the build), builds
/// Phi = exp(-psi_in(X) (x) H), runs the twisting-equation grid and the
/// factorization identities (id (x) Delta)Phi = Phi_12 Phi_13 and
/// (Delta~ (x) id)Phi = Phi_13 Phi_23.
Report verify_theorem3(const LieRingSpec& L, std::span<const TruncatedPoly> phi_in, int cap_d,
                       int cutoff_n);

}  // namespace twistforge
