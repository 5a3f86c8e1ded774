#include "twistforge/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "twistforge/errors.hpp"

namespace twistforge {

namespace {

size_t pow_size(int d, int n) {
    size_t s = 1;
    for (int i = 0; i < n; ++i) {
        if (s > (static_cast<size_t>(1) << 48) / static_cast<size_t>(d))
            throw contract_error("tensor degree too large");
        s *= static_cast<size_t>(d);
    }
    return s;
}

void check_compatible(const TensorElement& a, const TensorElement& b) {
    if (a.ring_ptr().get() != b.ring_ptr().get())
        throw contract_error("tensor elements over different rings");
    if (a.degree() != b.degree())
        throw contract_error("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                             std::to_string(b.degree()));
}

}  // namespace

TensorElement::TensorElement(RingPtr ring, int degree)
    : ring_(std::move(ring)), degree_(degree) {
    if (!ring_) throw contract_error("null ring");
    if (degree_ < 0) throw contract_error("negative tensor degree");
    coeffs_.resize(pow_size(ring_->dim(), degree_));
}

TensorElement TensorElement::scalar(RingPtr ring, const Rational& value) {
    TensorElement t(std::move(ring), 0);
    t.coeffs_[0] = value;
    return t;
}

TensorElement TensorElement::basis(RingPtr ring, std::span<const int> index) {
    TensorElement t(std::move(ring), static_cast<int>(index.size()));
    t.coeffs_[t.encode(index)] = 1;
    return t;
}

TensorElement TensorElement::idempotent(RingPtr ring, int n) {
    if (n == 0) return scalar(std::move(ring), 1);
    const int u = ring->unit_index();
    std::vector<int> idx(static_cast<size_t>(n), u);
    return basis(std::move(ring), idx);
}

size_t TensorElement::encode(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != degree_)
        throw contract_error("multi-index length mismatch");
    const int d = ring_->dim();
    size_t flat = 0;
    for (int i : index) {
        if (i < 0 || i >= d) throw contract_error("multi-index entry out of range");
        flat = flat * d + static_cast<size_t>(i);
    }
    return flat;
}

std::vector<int> TensorElement::decode(size_t flat) const {
    const int d = ring_->dim();
    std::vector<int> idx(static_cast<size_t>(degree_));
    for (int s = degree_ - 1; s >= 0; --s) {
        idx[s] = static_cast<int>(flat % d);
        flat /= d;
    }
    return idx;
}

const Rational& TensorElement::coeff(std::span<const int> index) const {
    return coeffs_[encode(index)];
}

void TensorElement::set_coeff(std::span<const int> index, const Rational& v) {
    coeffs_[encode(index)] = v;
}

bool TensorElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!twistforge::is_zero(c)) return false;
    return true;
}

size_t TensorElement::nonzero_count() const {
    size_t n = 0;
    for (const auto& c : coeffs_)
        if (!twistforge::is_zero(c)) ++n;
    return n;
}

void TensorElement::for_each_nonzero(
    const std::function<void(size_t, const Rational&)>& fn) const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!twistforge::is_zero(coeffs_[i])) fn(i, coeffs_[i]);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    check_compatible(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    check_compatible(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

TensorElement TensorElement::operator-() const {
    TensorElement t = *this;
    for (auto& c : t.coeffs_) c = -c;
    return t;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (ring_.get() != o.ring_.get() || degree_ != o.degree_) return false;
    return coeffs_ == o.coeffs_;
}

TensorElement mul(const TensorElement& a, const TensorElement& b) {
    check_compatible(a, b);
    const int n = a.degree();
    const RingSpec& ring = a.ring();
    const int d = ring.dim();
    TensorElement out(a.ring_ptr(), n);
    if (n == 0) {
        out.set_coeff(static_cast<size_t>(0), a.coeff(static_cast<size_t>(0)) *
                                                  b.coeff(static_cast<size_t>(0)));
        return out;
    }
    std::vector<int> da, db;
    // Expand slot by slot; most pairs die early on a zero structure row.
    std::function<void(int, size_t, const Rational&)> expand =
        [&](int slot, size_t partial, const Rational& coeff) {
            if (slot == n) {
                out.add_coeff(partial, coeff);
                return;
            }
            for (const auto& [alpha, c] : ring.product(da[slot], db[slot]))
                expand(slot + 1, partial * d + static_cast<size_t>(alpha), coeff * c);
        };
    a.for_each_nonzero([&](size_t ia, const Rational& ca) {
        da = a.decode(ia);
        b.for_each_nonzero([&](size_t ib, const Rational& cb) {
            db = b.decode(ib);
            // cheap pre-check: every slot must have a nonempty product row
            for (int s = 0; s < n; ++s)
                if (ring.product(da[s], db[s]).empty()) return;
            expand(0, 0, ca * cb);
        });
    });
    return out;
}

TensorElement concat(const TensorElement& a, const TensorElement& b) {
    if (a.ring_ptr().get() != b.ring_ptr().get())
        throw contract_error("concat over different rings");
    TensorElement out(a.ring_ptr(), a.degree() + b.degree());
    const size_t bs = b.size();
    a.for_each_nonzero([&](size_t ia, const Rational& ca) {
        b.for_each_nonzero([&](size_t ib, const Rational& cb) {
            out.add_coeff(ia * bs + ib, ca * cb);
        });
    });
    return out;
}

TensorElement embed(const TensorElement& z, int left, int right) {
    if (left < 0 || right < 0) throw contract_error("negative embedding pad");
    if (left == 0 && right == 0) return z;
    TensorElement res = z;
    if (left > 0) res = concat(TensorElement::idempotent(z.ring_ptr(), left), res);
    if (right > 0) res = concat(res, TensorElement::idempotent(z.ring_ptr(), right));
    return res;
}

TensorElement permute(const TensorElement& z, std::span<const int> perm) {
    const int n = z.degree();
    if (static_cast<int>(perm.size()) != n) throw contract_error("permutation size mismatch");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
            throw contract_error("not a permutation");
        seen[static_cast<size_t>(p)] = true;
    }
    TensorElement out(z.ring_ptr(), n);
    std::vector<int> target(static_cast<size_t>(n));
    z.for_each_nonzero([&](size_t flat, const Rational& c) {
        std::vector<int> src = z.decode(flat);
        for (int s = 0; s < n; ++s) target[static_cast<size_t>(perm[s])] = src[static_cast<size_t>(s)];
        out.add_coeff(out.encode(target), c);
    });
    return out;
}

TensorElement block_swap(const TensorElement& z, int first_len, int second_len) {
    if (first_len + second_len != z.degree())
        throw contract_error("block_swap: block lengths must sum to the degree");
    std::vector<int> perm(static_cast<size_t>(z.degree()));
    for (int s = 0; s < first_len; ++s) perm[static_cast<size_t>(s)] = s + second_len;
    for (int s = 0; s < second_len; ++s) perm[static_cast<size_t>(first_len + s)] = s;
    return permute(z, perm);
}

TensorElement swap_adjacent(const TensorElement& z, int pair_index) {
    const int n = z.degree();
    if (pair_index < 1 || pair_index > n - 1)
        throw contract_error("swap_adjacent: pair index out of range");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<size_t>(pair_index - 1)], perm[static_cast<size_t>(pair_index)]);
    return permute(z, perm);
}

TensorElement embed_two_blocks(const TensorElement& z, int m, int k, int gap) {
    if (m + k != z.degree()) throw contract_error("embed_two_blocks: bad block lengths");
    if (gap < 0) throw contract_error("embed_two_blocks: negative gap");
    if (gap == 0) return z;
    TensorElement padded = embed(z, 0, gap);  // blocks at [0,m), [m,m+k), units after
    const int n = m + k + gap;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int s = 0; s < m; ++s) perm[static_cast<size_t>(s)] = s;
    for (int s = 0; s < k; ++s) perm[static_cast<size_t>(m + s)] = m + gap + s;
    for (int s = 0; s < gap; ++s) perm[static_cast<size_t>(m + k + s)] = m + s;
    return permute(padded, perm);
}

namespace {

constexpr size_t kDenseSolveLimit = 128;

int ceil_log2(size_t n) {
    int b = 0;
    size_t v = 1;
    while (v < n) { v <<= 1; ++b; }
    return b;
}

}  // namespace

std::optional<TensorElement> try_invert_neumann(const TensorElement& a) {
    const int n = a.degree();
    if (n == 0) return std::nullopt;  // scalars handled by invert()
    if (!a.ring().has_unit()) return std::nullopt;
    TensorElement e = TensorElement::idempotent(a.ring_ptr(), n);
    std::vector<int> unit_idx(static_cast<size_t>(n), a.ring().unit_index());
    const Rational c = a.coeff(unit_idx);
    if (twistforge::is_zero(c)) return std::nullopt;
    TensorElement u = a - c * e;
    if (!u.is_zero()) {
        // nilpotency probe by repeated squaring
        TensorElement w = u;
        int bound = ceil_log2(a.size()) + 1;
        bool nil = false;
        for (int j = 0; j < bound; ++j) {
            w = mul(w, w);
            if (w.is_zero()) { nil = true; break; }
        }
        if (!nil) return std::nullopt;
    }
    // (c e + u)^{-1} = sum_j (-1)^j u^j / c^{j+1}, terminating
    Rational cj = 1 / c;
    TensorElement res = cj * e;
    TensorElement pw = u;
    int sign = -1;
    while (!pw.is_zero()) {
        cj /= c;
        res += (sign * cj) * pw;
        pw = mul(pw, u);
        sign = -sign;
    }
    return res;
}

TensorElement invert_linear_solve(const TensorElement& a) {
    const int n = a.degree();
    const size_t dim = a.size();
    if (!a.ring().has_unit()) throw unsupported_error("inversion requires a unital ring");
    RationalMatrix m(static_cast<int>(dim), static_cast<int>(dim));
    // column j = coefficients of a * basis_j
    for (size_t j = 0; j < dim; ++j) {
        TensorElement bj(a.ring_ptr(), n);
        bj.set_coeff(j, Rational(1));
        TensorElement col = mul(a, bj);
        col.for_each_nonzero([&](size_t i, const Rational& c) {
            m.at(static_cast<int>(i), static_cast<int>(j)) = c;
        });
    }
    std::vector<Rational> rhs(dim);
    std::vector<int> unit_idx(static_cast<size_t>(n), a.ring().unit_index());
    rhs[a.encode(unit_idx)] = 1;
    std::vector<Rational> x;
    try {
        x = m.solve(rhs);
    } catch (const not_invertible& err) {
        throw not_invertible("element is not invertible", err.rank_defect);
    }
    TensorElement res(a.ring_ptr(), n);
    for (size_t i = 0; i < dim; ++i) res.set_coeff(i, x[i]);
    return res;
}

std::string first_coeff_diff(const TensorElement& a, const TensorElement& b) {
    if (a.ring_ptr().get() != b.ring_ptr().get() || a.degree() != b.degree())
        return "shape mismatch";
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a.coeff(i) == b.coeff(i))) {
            std::string idx;
            for (int v : a.decode(i)) idx += (idx.empty() ? "" : ",") + std::to_string(v);
            return "at (" + idx + "): " + rational_str(a.coeff(i)) + " != " +
                   rational_str(b.coeff(i));
        }
    return "";
}

TensorElement invert(const TensorElement& a) {
    if (a.degree() == 0) {
        const Rational& v = a.coeff(static_cast<size_t>(0));
        if (twistforge::is_zero(v)) throw not_invertible("zero scalar", 1);
        return TensorElement::scalar(a.ring_ptr(), 1 / v);
    }
    if (auto r = try_invert_neumann(a)) return *r;
    if (a.size() > kDenseSolveLimit)
        throw unsupported_error(
            "inversion of a non-unipotent element in dimension " + std::to_string(a.size()) +
            " is unsupported (dense-solve bound " + std::to_string(kDenseSolveLimit) + ")");
    return invert_linear_solve(a);
}

}  // namespace twistforge
