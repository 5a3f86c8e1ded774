#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistforge/rational.hpp"

namespace twistforge {

/// A finite-dimensional associative ring given by structure constants over
/// exact rationals: x^rho x^sigma = sum_alpha c^{rho sigma}_alpha x^alpha.
/// Absent (rho, sigma, alpha) triples mean zero. `unit`, when set, is the
/// index of a basis element acting as a two-sided identity.
class RingSpec {
  public:
    using SparseRow = std::vector<std::pair<int, Rational>>;

    RingSpec(std::string name, int dim, std::optional<int> unit);

    // Accumulates c into c^{rho sigma}_alpha. Throws input_error on a bad
    // index or a zero coefficient; entries that cancel to zero are dropped.
    void add_product_term(int rho, int sigma, int alpha, const Rational& c);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    std::optional<int> unit() const { return unit_; }
    bool has_unit() const { return unit_.has_value(); }
    int unit_index() const;  // throws unsupported_error if no unit declared

    /// Sparse expansion of x^rho x^sigma, sorted by output index.
    const SparseRow& product(int rho, int sigma) const;

  private:
    std::string name_;
    int dim_;
    std::optional<int> unit_;
    std::vector<SparseRow> table_;  // (rho * dim + sigma) -> row
};

using RingPtr = std::shared_ptr<const RingSpec>;

struct ValidationReport {
    bool pass = true;
    // Violating basis triple (rho, sigma, tau) for an associativity failure,
    // or (rho, rho, rho) marking a unit-axiom failure at rho.
    std::optional<std::array<int, 3>> witness;
    std::string message;
};

/// Exhaustive associativity check, (x^r x^s) x^t = x^r (x^s x^t) for all basis
/// triples, plus the unit axioms when a unit is declared. O(d^4) sparse work.
ValidationReport validate_ring(const RingSpec& spec);

}  // namespace twistforge
