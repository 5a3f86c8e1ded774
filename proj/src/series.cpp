#include "twistforge/series.hpp"

#include <algorithm>
#include <numeric>

#include "twistforge/errors.hpp"

namespace twistforge {

namespace {

int total_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

void check_same_shape(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (a.nvars() != b.nvars() || a.cap() != b.cap())
        throw contract_error("polynomial shape mismatch (nvars/cap)");
}

}  // namespace

TruncatedPoly::TruncatedPoly(int nvars, int cap) : nvars_(nvars), cap_(cap) {
    if (nvars_ < 0 || cap_ < 0) throw contract_error("bad polynomial shape");
}

TruncatedPoly TruncatedPoly::constant(int nvars, int cap, const Rational& c) {
    TruncatedPoly p(nvars, cap);
    p.add_term(Mono(static_cast<size_t>(nvars), 0), c);
    return p;
}

TruncatedPoly TruncatedPoly::variable(int nvars, int cap, int i) {
    if (i < 0 || i >= nvars) throw contract_error("variable index out of range");
    TruncatedPoly p(nvars, cap);
    Mono m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(i)] = 1;
    p.add_term(m, 1);
    return p;
}

void TruncatedPoly::add_term(const Mono& mono, const Rational& c) {
    if (static_cast<int>(mono.size()) != nvars_) throw contract_error("monomial arity mismatch");
    if (is_zero(c)) return;
    for (int e : mono)
        if (e < 0) throw contract_error("negative exponent");
    if (total_degree(mono) > cap_) return;  // truncation
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

Rational TruncatedPoly::coefficient(const Mono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedPoly::constant_term() const {
    return coefficient(Mono(static_cast<size_t>(nvars_), 0));
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o) {
    check_same_shape(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& o) {
    check_same_shape(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(const Rational& s) {
    if (is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

TruncatedPoly TruncatedPoly::operator-() const {
    TruncatedPoly p(nvars_, cap_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

bool TruncatedPoly::operator==(const TruncatedPoly& o) const {
    return nvars_ == o.nvars_ && cap_ == o.cap_ && terms_ == o.terms_;
}

std::string TruncatedPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs = rational_str(c);
        if (out.empty()) {
            out += cs;
        } else if (!cs.empty() && cs[0] == '-') {
            out += " - " + cs.substr(1);
        } else {
            out += " + " + cs;
        }
        for (int i = 0; i < nvars_; ++i) {
            int e = m[static_cast<size_t>(i)];
            if (e == 0) continue;
            out += " x" + std::to_string(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b) {
    check_same_shape(a, b);
    TruncatedPoly out(a.nvars(), a.cap());
    Mono sum(static_cast<size_t>(a.nvars()));
    for (const auto& [ma, ca] : a.terms()) {
        const int da = total_degree(ma);
        for (const auto& [mb, cb] : b.terms()) {
            if (da + total_degree(mb) > a.cap()) continue;
            for (size_t i = 0; i < sum.size(); ++i) sum[i] = ma[i] + mb[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

TruncatedPoly poly_compose(const TruncatedPoly& target, std::span<const TruncatedPoly> subs) {
    if (static_cast<int>(subs.size()) != target.nvars())
        throw contract_error("poly_compose: one substitution per variable required");
    if (subs.empty())
        return target.nvars() == 0
                   ? target
                   : throw contract_error("poly_compose: empty substitution");
    const int nv = subs[0].nvars();
    const int cap = subs[0].cap();
    for (const auto& s : subs) {
        if (s.nvars() != nv || s.cap() != cap)
            throw contract_error("poly_compose: substitution shape mismatch");
        if (!s.has_zero_constant_term())
            throw contract_error("poly_compose: substitution has nonzero constant term");
    }
    // power cache: pows[i][e] = subs[i]^e
    std::vector<std::vector<TruncatedPoly>> pows(subs.size());
    for (size_t i = 0; i < subs.size(); ++i)
        pows[i].push_back(TruncatedPoly::constant(nv, cap, 1));
    auto power = [&](size_t i, int e) -> const TruncatedPoly& {
        while (static_cast<int>(pows[i].size()) <= e)
            pows[i].push_back(mul(pows[i].back(), subs[i]));
        return pows[i][static_cast<size_t>(e)];
    };
    TruncatedPoly out(nv, cap);
    for (const auto& [m, c] : target.terms()) {
        if (total_degree(m) > cap) continue;  // cannot contribute below the cap
        TruncatedPoly term = TruncatedPoly::constant(nv, cap, c);
        for (size_t i = 0; i < subs.size(); ++i)
            if (m[i] > 0) term = mul(term, power(i, m[i]));
        out += term;
    }
    return out;
}

std::vector<TruncatedPoly> series_inverse(std::span<const TruncatedPoly> map, int cap) {
    const int v = static_cast<int>(map.size());
    for (const auto& p : map) {
        if (p.nvars() != v) throw contract_error("series_inverse: map must be square");
        if (!p.has_zero_constant_term())
            throw contract_error("series_inverse: map must fix the origin");
    }
    if (v == 0) return {};
    RationalMatrix lin(v, v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            Mono m(static_cast<size_t>(v), 0);
            m[static_cast<size_t>(j)] = 1;
            lin.at(i, j) = map[static_cast<size_t>(i)].coefficient(m);
        }
    RationalMatrix lin_inv = lin.inverse();  // throws not_invertible if singular

    auto apply_lin_inv = [&](std::span<const TruncatedPoly> w) {
        std::vector<TruncatedPoly> out;
        out.reserve(static_cast<size_t>(v));
        for (int i = 0; i < v; ++i) {
            TruncatedPoly p(v, cap);
            for (int j = 0; j < v; ++j) p += lin_inv.at(i, j) * w[static_cast<size_t>(j)];
            out.push_back(std::move(p));
        }
        return out;
    };

    // nonlinear part N = map - lin; iterate G <- lin^{-1}(x - N(G)), one
    // degree of accuracy per pass
    std::vector<TruncatedPoly> nonlin;
    std::vector<TruncatedPoly> identity;
    for (int i = 0; i < v; ++i) {
        TruncatedPoly xi = TruncatedPoly::variable(v, cap, i);
        identity.push_back(xi);
        TruncatedPoly ni = map[static_cast<size_t>(i)];
        // rebuild at the requested cap
        TruncatedPoly at_cap(v, cap);
        for (const auto& [m, c] : ni.terms()) at_cap.add_term(m, c);
        for (int j = 0; j < v; ++j) {
            Mono m(static_cast<size_t>(v), 0);
            m[static_cast<size_t>(j)] = 1;
            at_cap.add_term(m, -lin.at(i, j));
        }
        nonlin.push_back(std::move(at_cap));
    }
    std::vector<TruncatedPoly> g = apply_lin_inv(identity);
    for (int pass = 1; pass < cap; ++pass) {
        std::vector<TruncatedPoly> rhs;
        rhs.reserve(static_cast<size_t>(v));
        for (int i = 0; i < v; ++i)
            rhs.push_back(identity[static_cast<size_t>(i)] -
                          poly_compose(nonlin[static_cast<size_t>(i)], g));
        g = apply_lin_inv(rhs);
    }
    return g;
}

MatrixSeries::MatrixSeries(int rows, int cols, int nvars, int cap)
    : rows_(rows), cols_(cols), nvars_(nvars), cap_(cap),
      e_(static_cast<size_t>(rows) * cols, TruncatedPoly(nvars, cap)) {}

MatrixSeries MatrixSeries::identity(int n, int nvars, int cap) {
    MatrixSeries m(n, n, nvars, cap);
    for (int i = 0; i < n; ++i) m.at(i, i) = TruncatedPoly::constant(nvars, cap, 1);
    return m;
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

bool MatrixSeries::operator==(const MatrixSeries& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool MatrixSeries::has_zero_constant_term() const {
    for (const auto& p : e_)
        if (!p.has_zero_constant_term()) return false;
    return true;
}

std::vector<TruncatedPoly> MatrixSeries::apply(std::span<const TruncatedPoly> v) const {
    if (static_cast<int>(v.size()) != cols_) throw contract_error("matrix apply: size mismatch");
    std::vector<TruncatedPoly> out;
    out.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        TruncatedPoly p(nvars_, cap_);
        for (int j = 0; j < cols_; ++j) p += mul(at(i, j), v[static_cast<size_t>(j)]);
        out.push_back(std::move(p));
    }
    return out;
}

MatrixSeries mul(const MatrixSeries& a, const MatrixSeries& b) {
    if (a.cols() != b.rows() || a.nvars() != b.nvars() || a.cap() != b.cap())
        throw contract_error("matrix product shape mismatch");
    MatrixSeries out(a.rows(), b.cols(), a.nvars(), a.cap());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero_poly()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero_poly()) continue;
                out.at(i, j) += mul(a.at(i, k), b.at(k, j));
            }
        }
    return out;
}

std::vector<Rational> UnivariateSpec::taylor(Kind kind, int cap) {
    std::vector<Rational> f(static_cast<size_t>(cap) + 1);
    Rational fact = 1;  // k!
    std::vector<Rational> inv_fact(static_cast<size_t>(cap) + 2);
    inv_fact[0] = 1;
    for (int k = 1; k <= cap + 1; ++k) {
        fact *= k;
        inv_fact[static_cast<size_t>(k)] = 1 / fact;
    }
    switch (kind) {
        case Kind::exp:
            for (int k = 0; k <= cap; ++k) f[static_cast<size_t>(k)] = inv_fact[static_cast<size_t>(k)];
            break;
        case Kind::expm1_over_arg:
            for (int k = 0; k <= cap; ++k)
                f[static_cast<size_t>(k)] = inv_fact[static_cast<size_t>(k + 1)];
            break;
        case Kind::arg_over_expm1:
            // reciprocal of (e^z-1)/z: sum_{j<=k} f_j / (k-j+1)! = [k==0]
            for (int k = 0; k <= cap; ++k) {
                Rational s = (k == 0) ? Rational(1) : Rational(0);
                for (int j = 0; j < k; ++j)
                    s -= f[static_cast<size_t>(j)] * inv_fact[static_cast<size_t>(k - j + 1)];
                f[static_cast<size_t>(k)] = s;
            }
            break;
        case Kind::log1p:
            for (int k = 1; k <= cap; ++k)
                f[static_cast<size_t>(k)] = Rational((k % 2) ? 1 : -1, k);
            break;
        case Kind::expneg_m1_over_negarg:
            for (int k = 0; k <= cap; ++k) {
                f[static_cast<size_t>(k)] = inv_fact[static_cast<size_t>(k + 1)];
                if (k % 2) f[static_cast<size_t>(k)] = -f[static_cast<size_t>(k)];
            }
            break;
        case Kind::custom:
            throw contract_error("taylor() not defined for custom spec");
    }
    return f;
}

std::vector<Rational> UnivariateSpec::coefficients(int cap) const {
    if (kind != Kind::custom) return taylor(kind, cap);
    std::vector<Rational> f(static_cast<size_t>(cap) + 1);
    for (size_t k = 0; k < f.size() && k < coeffs.size(); ++k) f[k] = coeffs[k];
    return f;
}

MatrixSeries apply_univariate(const UnivariateSpec& f, const MatrixSeries& m) {
    if (m.rows() != m.cols()) throw contract_error("apply_univariate: square matrix required");
    if (!m.has_zero_constant_term())
        throw contract_error("apply_univariate: matrix has a nonzero constant term");
    const int cap = m.cap();
    std::vector<Rational> fk = f.coefficients(cap);
    MatrixSeries out(m.rows(), m.cols(), m.nvars(), cap);
    MatrixSeries power = MatrixSeries::identity(m.rows(), m.nvars(), cap);
    for (int k = 0; k <= cap; ++k) {
        if (k > 0) power = mul(power, m);
        if (is_zero(fk[static_cast<size_t>(k)])) continue;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                out.at(i, j) += fk[static_cast<size_t>(k)] * power.at(i, j);
    }
    return out;
}

LieRingSpec::LieRingSpec(std::string name_, int dim_) : name(std::move(name_)), dim(dim_) {
    if (dim < 0) throw input_error("negative Lie ring dimension");
    table.resize(static_cast<size_t>(dim) * static_cast<size_t>(dim));
}

void LieRingSpec::add_term(int mu, int nu, int sigma, const Rational& c) {
    if (mu < 0 || mu >= dim || nu < 0 || nu >= dim || sigma < 0 || sigma >= dim)
        throw input_error("structure-constant index out of range in '" + name + "'");
    if (is_zero(c)) throw input_error("zero structure constant stored in '" + name + "'");
    auto& row = table[static_cast<size_t>(mu) * dim + nu];
    auto it = std::lower_bound(row.begin(), row.end(), sigma,
                               [](const auto& e, int s) { return e.first < s; });
    if (it != row.end() && it->first == sigma) {
        it->second += c;
        if (is_zero(it->second)) row.erase(it);
    } else {
        row.insert(it, {sigma, c});
    }
}

const RingSpec::SparseRow& LieRingSpec::product(int mu, int nu) const {
    if (mu < 0 || mu >= dim || nu < 0 || nu >= dim)
        throw contract_error("Lie ring index out of range");
    return table[static_cast<size_t>(mu) * dim + nu];
}

bool LieRingSpec::is_commutative() const {
    for (int mu = 0; mu < dim; ++mu)
        for (int nu = mu + 1; nu < dim; ++nu)
            if (product(mu, nu) != product(nu, mu)) return false;
    return true;
}

ValidationReport validate_lie_ring(const LieRingSpec& spec) {
    // reuse the ring validator through a unit-free RingSpec mirror
    if (spec.dim == 0) {
        ValidationReport rep;
        rep.message = "trivial ring";
        return rep;
    }
    RingSpec mirror(spec.name, spec.dim, std::nullopt);
    for (int mu = 0; mu < spec.dim; ++mu)
        for (int nu = 0; nu < spec.dim; ++nu)
            for (const auto& [sigma, c] : spec.product(mu, nu))
                mirror.add_product_term(mu, nu, sigma, c);
    return validate_ring(mirror);
}

std::vector<TruncatedPoly> lie_bracket(const LieRingSpec& L, std::span<const TruncatedPoly> a,
                                       std::span<const TruncatedPoly> b) {
    if (static_cast<int>(a.size()) != L.dim || static_cast<int>(b.size()) != L.dim)
        throw contract_error("lie_bracket: coordinate vector size mismatch");
    if (L.dim == 0) return {};
    const int nv = a[0].nvars();
    const int cap = a[0].cap();
    std::vector<TruncatedPoly> out(static_cast<size_t>(L.dim), TruncatedPoly(nv, cap));
    for (int mu = 0; mu < L.dim; ++mu)
        for (int nu = 0; nu < L.dim; ++nu)
            for (const auto& [sigma, c] : L.product(mu, nu)) {
                // c * (a^mu b^nu - a^nu b^mu)
                TruncatedPoly t = mul(a[static_cast<size_t>(mu)], b[static_cast<size_t>(nu)]);
                t -= mul(a[static_cast<size_t>(nu)], b[static_cast<size_t>(mu)]);
                out[static_cast<size_t>(sigma)] += c * t;
            }
    return out;
}

namespace {

// Free associative series on two letters 'a' = 0, 'b' = 1, words up to a
// length bound, exact rational coefficients.
using FreeWord = std::vector<int>;
using FreeSeries = std::map<FreeWord, Rational>;

FreeSeries free_mul(const FreeSeries& x, const FreeSeries& y, int bound) {
    FreeSeries out;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
            if (static_cast<int>(wx.size() + wy.size()) > bound) continue;
            FreeWord w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            Rational& slot = out[w];
            slot += cx * cy;
            if (is_zero(slot)) out.erase(w);
        }
    return out;
}

// log(e^a e^b) as a free series up to word length `bound`.
FreeSeries bch_log_table(int bound) {
    std::vector<Rational> inv_fact(static_cast<size_t>(bound) + 1);
    Rational fact = 1;
    inv_fact[0] = 1;
    for (int k = 1; k <= bound; ++k) {
        fact *= k;
        inv_fact[static_cast<size_t>(k)] = 1 / fact;
    }
    FreeSeries w;  // e^a e^b - 1
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; p + q <= bound; ++q) {
            if (p == 0 && q == 0) continue;
            FreeWord word(static_cast<size_t>(p), 0);
            word.insert(word.end(), static_cast<size_t>(q), 1);
            w[word] = inv_fact[static_cast<size_t>(p)] * inv_fact[static_cast<size_t>(q)];
        }
    FreeSeries log_series;  // sum (-1)^{k+1} w^k / k
    FreeSeries power = w;
    for (int k = 1; k <= bound; ++k) {
        Rational c = Rational((k % 2) ? 1 : -1, k);
        for (const auto& [word, coeff] : power) {
            Rational& slot = log_series[word];
            slot += c * coeff;
            if (is_zero(slot)) log_series.erase(word);
        }
        if (k < bound) power = free_mul(power, w, bound);
    }
    return log_series;
}

}  // namespace

std::vector<TruncatedPoly> bch(const LieRingSpec& L, std::span<const TruncatedPoly> u,
                               std::span<const TruncatedPoly> w, int cap) {
    if (static_cast<int>(u.size()) != L.dim || static_cast<int>(w.size()) != L.dim)
        throw contract_error("bch: coordinate vector size mismatch");
    if (L.dim == 0) return {};
    const int nv = u[0].nvars();
    for (const auto& p : u)
        if (!p.has_zero_constant_term()) throw contract_error("bch: arguments must vanish at 0");
    for (const auto& p : w)
        if (!p.has_zero_constant_term()) throw contract_error("bch: arguments must vanish at 0");

    FreeSeries table = bch_log_table(cap);
    std::vector<TruncatedPoly> res(static_cast<size_t>(L.dim), TruncatedPoly(nv, cap));
    auto arg = [&](int letter) { return letter == 0 ? u : w; };
    for (const auto& [word, coeff] : table) {
        const int n = static_cast<int>(word.size());
        // Dynkin-Specht-Wever: a degree-n Lie element equals 1/n times its
        // right-nested bracketing [l1,[l2,...,[l_{n-1},l_n]...]].
        std::vector<TruncatedPoly> cur(arg(word[static_cast<size_t>(n - 1)]).begin(),
                                       arg(word[static_cast<size_t>(n - 1)]).end());
        for (int i = n - 2; i >= 0; --i)
            cur = lie_bracket(L, arg(word[static_cast<size_t>(i)]), cur);
        Rational c = coeff / n;
        for (int s = 0; s < L.dim; ++s)
            res[static_cast<size_t>(s)] += c * cur[static_cast<size_t>(s)];
    }
    return res;
}

}  // namespace twistforge
