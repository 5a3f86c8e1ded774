#pragma once

#include <random>
#include <vector>

#include "twistforge/graded.hpp"
#include "twistforge/ring.hpp"
#include "twistforge/tensor.hpp"

namespace tfh {

using namespace twistforge;

// The 3-dim ring E, H, X with HH = H, XH = X, HX = XX = 0 and E the unit
// (the ambient ring of the one-dimensional model).
inline RingPtr jordanian_ring() {
    auto r = std::make_shared<RingSpec>("jordanian-ring", 3, 0);
    for (int j = 0; j < 3; ++j) {
        r->add_product_term(0, j, j, 1);
        if (j != 0) r->add_product_term(j, 0, j, 1);
    }
    r->add_product_term(1, 1, 1, 1);  // HH = H
    r->add_product_term(2, 1, 2, 1);  // XH = X
    return r;
}

inline TensorElement basis(const RingPtr& r, std::initializer_list<int> idx) {
    std::vector<int> v(idx);
    return TensorElement::basis(r, v);
}

// dense-ish random element with small rational coefficients
inline TensorElement random_element(const RingPtr& r, int degree, std::mt19937& rng,
                                    double density = 0.4) {
    TensorElement t(r, degree);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    for (size_t i = 0; i < t.size(); ++i) {
        if (pick(rng) > density) continue;
        int n = num(rng);
        if (n == 0) continue;
        t.set_coeff(i, make_rational(n, den(rng)));
    }
    return t;
}

}  // namespace tfh
