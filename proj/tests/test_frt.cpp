#include <doctest.h>

#include "test_helpers.hpp"
#include "twistforge/errors.hpp"
#include "twistforge/frt.hpp"

using namespace twistforge;

namespace {

LieRingSpec jordanian_lie() {
    LieRingSpec L("jordanian", 1);
    L.add_term(0, 0, 0, 1);
    return L;
}

LieRingSpec nc2_lie() {
    LieRingSpec L("nc2", 2);
    L.add_term(0, 0, 0, 1);
    L.add_term(0, 1, 1, 1);
    return L;
}

LieRingSpec null_plane_lie() {
    LieRingSpec L("null-plane", 3);
    L.add_term(0, 2, 0, 1);
    L.add_term(2, 0, 0, 1);
    L.add_term(1, 2, 1, 1);
    L.add_term(2, 1, 1, 1);
    L.add_term(2, 2, 2, 1);
    return L;
}

Mono mono1(int nvars, int i, int e = 1) {
    Mono m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(i)] = e;
    return m;
}

WordCombo combo(std::initializer_list<std::pair<Word, Rational>> terms) {
    WordCombo c;
    for (const auto& [w, q] : terms) c[w] = q;
    return c;
}

}  // namespace

TEST_CASE("dual generators carry the derived coproducts") {
    InhomModel m = build_model(jordanian_lie(), 4, 2);
    DualGenerators dg = DualGenerators::from_model(m);
    const int x1 = 1, h1 = 2;  // labels: e=0, x_1=1, h^1=2
    SUBCASE("Delta(e) = e (x) e and the counit") {
        CHECK(dg.coproduct[0] ==
              std::map<std::pair<int, int>, Rational>{{{0, 0}, 1}});
        CHECK(dg.counit[0] == 1);
        CHECK(dg.counit[x1] == 0);
        CHECK(dg.counit[h1] == 0);
    }
    SUBCASE("Delta(h) = h(x)e + e(x)h + B h(x)h") {
        std::map<std::pair<int, int>, Rational> expect{
            {{h1, 0}, 1}, {{0, h1}, 1}, {{h1, h1}, 1}};
        CHECK(dg.coproduct[h1] == expect);
    }
    SUBCASE("Delta(x) = x(x)e + e(x)x + B x(x)h") {
        std::map<std::pair<int, int>, Rational> expect{
            {{x1, 0}, 1}, {{0, x1}, 1}, {{x1, h1}, 1}};
        CHECK(dg.coproduct[x1] == expect);
    }
}

TEST_CASE("rtt extraction matches the closed-form relations") {
    for (const LieRingSpec& L : {jordanian_lie(), nc2_lie(), null_plane_lie()}) {
        InhomModel m = build_model(L, 3, 2);
        Report rep = compare_relations(extract_rtt(m), m);
        INFO("ring ", L.name);
        CHECK(rep.passed());
    }
}

TEST_CASE("nc2 relation [x_1, x_2] = -x_2 e appears in the extraction") {
    InhomModel m = build_model(nc2_lie(), 3, 2);
    RelationSet ext = extract_rtt(m);
    // x_1 x_2 - x_2 x_1 + x_2 e reduced to RREF must be in the span: check by
    // reducing the candidate against the extracted rows
    const int x1 = 1, x2 = 2;
    WordCombo cand = combo({{{x1, x2}, 1}, {{x2, x1}, -1}, {{x2, 0}, 1}});
    // subtract multiples of RREF rows with matching leading words
    for (const auto& row : ext.relations) {
        const auto& lead = *row.begin();
        auto it = cand.find(lead.first);
        if (it == cand.end()) continue;
        Rational f = it->second / lead.second;
        for (const auto& [w, c] : row) {
            cand[w] -= f * c;
            if (cand[w] == 0) cand.erase(w);
        }
    }
    CHECK(cand.empty());
}

TEST_CASE("null-plane x's commute (symmetric B kills the relXX right side)") {
    InhomModel m = build_model(null_plane_lie(), 3, 2);
    RelationSet closed = closed_form_relations(m);
    for (int mu = 1; mu <= 3; ++mu)
        for (int nu = mu + 1; nu <= 3; ++nu) {
            WordCombo cand = combo({{{mu, nu}, 1}, {{nu, mu}, -1}});
            for (const auto& row : closed.relations) {
                const auto& lead = *row.begin();
                auto it = cand.find(lead.first);
                if (it == cand.end()) continue;
                Rational f = it->second / lead.second;
                for (const auto& [w, c] : row) {
                    cand[w] -= f * c;
                    if (cand[w] == 0) cand.erase(w);
                }
            }
            CHECK(cand.empty());
        }
}

TEST_CASE("word rewriting to normal form") {
    InhomModel m = build_model(jordanian_lie(), 4, 2);
    const int x1 = 1, h1 = 2;
    SUBCASE("h x rewrites through [x,h] = h e + h h") {
        WordCombo in = combo({{{h1, x1}, 1}});
        WordCombo expect =
            combo({{{x1, h1}, 1}, {{0, h1}, -1}, {{h1, h1}, -1}});
        CHECK(word_normal_form(in, m) == expect);
    }
    SUBCASE("e letters move to the front") {
        WordCombo in = combo({{{x1, 0}, 1}});
        CHECK(word_normal_form(in, m) == combo({{{0, x1}, 1}}));
    }
    SUBCASE("rewriting agrees across reduction orders at length 3") {
        // reduce (a b) first vs (b c) first for every length-3 word; both
        // must agree with the direct normal form
        InhomModel m2 = build_model(nc2_lie(), 4, 2);
        const int gens = 5;
        for (int a = 0; a < gens; ++a)
            for (int b = 0; b < gens; ++b)
                for (int c = 0; c < gens; ++c) {
                    WordCombo whole = combo({{{a, b, c}, 1}});
                    WordCombo direct = word_normal_form(whole, m2);
                    // prefix-first
                    WordCombo prefix;
                    for (const auto& [w, q] : word_normal_form(combo({{{a, b}, 1}}), m2)) {
                        Word ext = w;
                        ext.push_back(c);
                        prefix[ext] += q;
                    }
                    WordCombo via_prefix = word_normal_form(prefix, m2);
                    // suffix-first
                    WordCombo suffix;
                    for (const auto& [w, q] : word_normal_form(combo({{{b, c}, 1}}), m2)) {
                        Word ext;
                        ext.push_back(a);
                        ext.insert(ext.end(), w.begin(), w.end());
                        suffix[ext] += q;
                    }
                    WordCombo via_suffix = word_normal_form(suffix, m2);
                    CHECK(via_prefix == direct);
                    CHECK(via_suffix == direct);
                }
    }
}

TEST_CASE("extracted relations generate a bialgebra ideal (length <= 2)") {
    for (const LieRingSpec& L : {jordanian_lie(), nc2_lie(), null_plane_lie()}) {
        InhomModel m = build_model(L, 3, 2);
        DualGenerators dg = DualGenerators::from_model(m);
        RelationSet ext = extract_rtt(m);
        INFO("ring ", L.name);
        for (const auto& rel : ext.relations) {
            // Delta(rel), reduced modulo the relations in each leg, must die
            std::map<std::pair<Word, Word>, Rational> delta;
            for (const auto& [w, c] : rel) {
                REQUIRE(w.size() == 2);
                for (const auto& [p1, c1] : dg.coproduct[static_cast<size_t>(w[0])])
                    for (const auto& [p2, c2] : dg.coproduct[static_cast<size_t>(w[1])]) {
                        Word left{p1.first, p2.first};
                        Word right{p1.second, p2.second};
                        delta[{left, right}] += c * c1 * c2;
                    }
            }
            // reduce both legs to normal form, then quotient both legs by the
            // relation set (RREF rows) and expect zero
            std::map<std::pair<Word, Word>, Rational> reduced;
            for (const auto& [legs, c] : delta) {
                WordCombo l = word_normal_form(combo({{legs.first, 1}}), m);
                WordCombo r = word_normal_form(combo({{legs.second, 1}}), m);
                for (const auto& [lw, lc] : l)
                    for (const auto& [rw, rc] : r) {
                        reduced[{lw, rw}] += c * lc * rc;
                        if (reduced[{lw, rw}] == 0) reduced.erase({lw, rw});
                    }
            }
            auto reduce_leg = [&](const Word& w) {
                WordCombo out = combo({{w, 1}});
                if (w.size() != 2) return out;
                for (const auto& row : ext.relations) {
                    const auto& lead = *row.begin();
                    auto it = out.find(lead.first);
                    if (it == out.end()) continue;
                    Rational f = it->second / lead.second;
                    for (const auto& [rw, rc] : row) {
                        out[rw] -= f * rc;
                        if (out[rw] == 0) out.erase(rw);
                    }
                }
                return out;
            };
            std::map<std::pair<Word, Word>, Rational> final_form;
            for (const auto& [legs, c] : reduced) {
                WordCombo l = reduce_leg(legs.first);
                WordCombo r = reduce_leg(legs.second);
                for (const auto& [lw, lc] : l)
                    for (const auto& [rw, rc] : r) {
                        final_form[{lw, rw}] += c * lc * rc;
                        if (final_form[{lw, rw}] == 0) final_form.erase({lw, rw});
                    }
            }
            CHECK(final_form.empty());
        }
    }
}

TEST_CASE("coaction beta") {
    SUBCASE("null-plane matches the displayed formula") {
        InhomModel m = build_model(null_plane_lie(), 3, 2);
        Coaction co = coaction_beta(m);
        const int v = 3;
        for (int s = 0; s < v; ++s) {
            std::map<std::pair<int, Mono>, Rational> expect;
            expect[{1 + s, Mono(static_cast<size_t>(v), 0)}] = 1;  // x_s (x) 1
            for (int nu = 0; nu < v; ++nu)
                for (int mu = 0; mu < v; ++mu)
                    for (const auto& [out, c] : m.L.product(mu, s))
                        if (out == nu) expect[{1 + nu, mono1(v, mu)}] += c;
            for (auto it = expect.begin(); it != expect.end();) {
                if (it->second == 0) it = expect.erase(it);
                else ++it;
            }
            CHECK(co.beta[static_cast<size_t>(s)] == expect);
        }
    }
    SUBCASE("counit law holds (inside the bicrossproduct report)") {
        InhomModel m = build_model(nc2_lie(), 3, 2);
        Report rep = verify_bicrossproduct(m);
        bool found = false;
        for (const auto& it : rep.items)
            if (it.grid == "(id x eps) o beta = id") {
                found = true;
                CHECK(it.pass);
            }
        CHECK(found);
    }
}

TEST_CASE("bicrossproduct structure on all bundled rings") {
    for (const LieRingSpec& L : {jordanian_lie(), nc2_lie(), null_plane_lie()}) {
        InhomModel m = build_model(L, 3, 2);
        INFO("ring ", L.name);
        CHECK(verify_bicrossproduct(m).passed());
    }
}

TEST_CASE("eta change of basis") {
    SUBCASE("jordanian eta = log(1 + h)") {
        InhomModel m = build_model(jordanian_lie(), 5, 2);
        std::vector<TruncatedPoly> eta = eta_change_of_basis(m, 5);
        TruncatedPoly expect(1, 5);
        expect.add_term(mono1(1, 0, 1), 1);
        expect.add_term(mono1(1, 0, 2), Rational(-1, 2));
        expect.add_term(mono1(1, 0, 3), Rational(1, 3));
        expect.add_term(mono1(1, 0, 4), Rational(-1, 4));
        expect.add_term(mono1(1, 0, 5), Rational(1, 5));
        CHECK(eta[0] == expect);
    }
    SUBCASE("abelian rings give the primitive-opposite comparison") {
        LieRingSpec ab("abelian2", 2);
        InhomModel m = build_model(ab, 4, 2);
        CHECK(verify_eta(m, 4).passed());
    }
    SUBCASE("the opposite-BCH comparison passes on all bundled rings") {
        for (const LieRingSpec& L : {jordanian_lie(), nc2_lie(), null_plane_lie()}) {
            InhomModel m = build_model(L, 4, 2);
            INFO("ring ", L.name);
            CHECK(verify_eta(m, 4).passed());
        }
    }
}
