#include "twistforge/ring.hpp"

#include <algorithm>
#include <map>

#include "twistforge/errors.hpp"

namespace twistforge {

RingSpec::RingSpec(std::string name, int dim, std::optional<int> unit)
    : name_(std::move(name)), dim_(dim), unit_(unit),
      table_(static_cast<size_t>(dim > 0 ? dim : 0) * (dim > 0 ? dim : 0)) {
    if (dim_ < 1) throw input_error("ring dimension must be >= 1");
    if (unit_ && (*unit_ < 0 || *unit_ >= dim_))
        throw input_error("unit index out of range");
}

int RingSpec::unit_index() const {
    if (!unit_) throw unsupported_error("ring '" + name_ + "' has no declared unit");
    return *unit_;
}

void RingSpec::add_product_term(int rho, int sigma, int alpha, const Rational& c) {
    if (rho < 0 || rho >= dim_ || sigma < 0 || sigma >= dim_ || alpha < 0 || alpha >= dim_)
        throw input_error("product entry index out of range in ring '" + name_ + "'");
    if (is_zero(c))
        throw input_error("zero coefficient stored in product table of '" + name_ + "'");
    SparseRow& row = table_[static_cast<size_t>(rho) * dim_ + sigma];
    auto it = std::lower_bound(row.begin(), row.end(), alpha,
                               [](const auto& e, int a) { return e.first < a; });
    if (it != row.end() && it->first == alpha) {
        it->second += c;
        if (is_zero(it->second)) row.erase(it);
    } else {
        row.insert(it, {alpha, c});
    }
}

const RingSpec::SparseRow& RingSpec::product(int rho, int sigma) const {
    if (rho < 0 || rho >= dim_ || sigma < 0 || sigma >= dim_)
        throw contract_error("product: basis index out of range");
    return table_[static_cast<size_t>(rho) * dim_ + sigma];
}

namespace {

// x^a * (sparse combination v), accumulated into out.
void mul_left_basis(const RingSpec& ring, int a, const RingSpec::SparseRow& v,
                    std::map<int, Rational>& out) {
    for (const auto& [b, cb] : v)
        for (const auto& [g, cg] : ring.product(a, b)) {
            Rational& slot = out[g];
            slot += cb * cg;
            if (is_zero(slot)) out.erase(g);
        }
}

void mul_basis_right(const RingSpec& ring, const RingSpec::SparseRow& v, int b,
                     std::map<int, Rational>& out) {
    for (const auto& [a, ca] : v)
        for (const auto& [g, cg] : ring.product(a, b)) {
            Rational& slot = out[g];
            slot += ca * cg;
            if (is_zero(slot)) out.erase(g);
        }
}

}  // namespace

ValidationReport validate_ring(const RingSpec& spec) {
    const int d = spec.dim();
    if (spec.has_unit()) {
        const int u = spec.unit_index();
        for (int r = 0; r < d; ++r) {
            auto expect_is = [&](const RingSpec::SparseRow& row) {
                return row.size() == 1 && row[0].first == r && row[0].second == 1;
            };
            if (!expect_is(spec.product(u, r)) || !expect_is(spec.product(r, u))) {
                ValidationReport rep;
                rep.pass = false;
                rep.witness = {r, r, r};
                rep.message = "unit axiom fails at basis index " + std::to_string(r);
                return rep;
            }
        }
    }
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s)
            for (int t = 0; t < d; ++t) {
                std::map<int, Rational> lhs, rhs;
                mul_basis_right(spec, spec.product(r, s), t, lhs);
                mul_left_basis(spec, r, spec.product(s, t), rhs);
                if (lhs != rhs) {
                    ValidationReport rep;
                    rep.pass = false;
                    rep.witness = {r, s, t};
                    rep.message = "associativity fails at triple (" + std::to_string(r) +
                                  "," + std::to_string(s) + "," + std::to_string(t) + ")";
                    return rep;
                }
            }
    ValidationReport rep;
    rep.message = "ring '" + spec.name() + "' is associative" +
                  (spec.has_unit() ? " and unital" : "");
    return rep;
}

}  // namespace twistforge
