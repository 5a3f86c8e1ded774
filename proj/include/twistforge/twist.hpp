#pragma once

#include <map>
#include <span>

#include "twistforge/graded.hpp"
#include "twistforge/report.hpp"

namespace twistforge {

/// The graded family { Phi^{m,k} in R^{(x)(m+k)} : m + k <= N } of a twisting
/// cocycle. Normalization: Phi^{0,k} = Phi^{k,0} = e^k for all k <= N.
class GradedTwist {
  public:
    GradedTwist(RingPtr ring, int cutoff);

    int cutoff() const { return cutoff_; }
    const RingPtr& ring_ptr() const { return ring_; }

    const TensorElement& component(int m, int k) const;
    bool has(int m, int k) const { return phi_.count({m, k}) > 0; }
    void set_component(int m, int k, TensorElement t);

    /// All stored bidegrees, ordered.
    std::vector<std::pair<int, int>> bidegrees() const;

    bool operator==(const GradedTwist& o) const;

  private:
    RingPtr ring_;
    int cutoff_;
    std::map<std::pair<int, int>, TensorElement> phi_;
};

/// Phi^{m,k} = e^{m+k} for all m + k <= N.
GradedTwist trivial_twist(RingPtr ring, int cutoff);

/// Phi^{1,k} = Phi_12 Phi_13 ... Phi_1(k+1) in R^{(x)(k+1)}, k = 1..N-1.
/// Rejects a non-invertible phi11.
std::vector<TensorElement> fusion_seeds(const TensorElement& phi11, int cutoff);

/// Fills the whole family from seeds Phi^{1,k} (k = 1..N-1) by the recursion
///   Phi^{m+1,k} = Phi^{m,1+k} . (Phi^{1,k} from the end) . (Phi^{m,1} from
///   the beginning)^{-1},
/// with Phi^{0,k} = Phi^{k,0} = e^k. A non-invertible seed is rejected with
/// the offending k.
GradedTwist build_from_seeds(std::span<const TensorElement> seeds, int cutoff);

/// Checks, for every (m,n,k) with m+n+k <= N, the graded twisting equation
///   Phi^{m+n,k} . Phi^{m,n}_b = Phi^{m,n+k} . Phi^{n,k}_e
/// exactly. The grid is the proof-checker: every triple is evaluated.
Report verify_te(const GradedTwist& t);

/// R_23 Phi_12 Phi_13 = Phi_13 Phi_12 R_23 in R^{(x)3}.
bool check_split2(const TensorElement& phi11, const QTStructure& qt);

/// Rt_12 Phi_13 Phi_23 = Phi_23 Phi_13 Rt_12 with Rt = (tau phi11)^{-1} R phi11.
bool check_split1(const TensorElement& phi11, const QTStructure& qt);

/// For each stored (m,n): membership_S at every adjacent pair strictly inside
/// the first m slots and strictly inside the last n slots (no pair across the
/// m|n boundary).
Report verify_membership(const GradedTwist& t, const QTStructure& qt);

/// The universal R-matrix family RM^{m,n} = block_swap(Phi^{n,m})^{-1} .
/// Phi^{m,n}, where block_swap moves the first n slots past the last m
/// (slots (1..n+m) -> (m+1..m+n, 1..m)).
GradedTwist rmatrix(const GradedTwist& t);

/// R_12 R_13 R_23 = R_23 R_13 R_12 in R^{(x)3}.
bool ybe_check(const TensorElement& r);

}  // namespace twistforge
