#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "moebius/words.hpp"

using namespace moebius::words;

namespace {
Letter a1{Factor::A, 1}, a2{Factor::A, 2}, b1{Factor::B, 1}, b2{Factor::B, 2};
}

TEST_CASE("normal form reduction") {
    CHECK(normalForm({a1, a1}).empty());
    // Klein group: a1 a2 a1 = a2
    auto nf = normalForm({a1, a2, a1});
    REQUIRE(nf.size() == 1);
    CHECK(nf[0].factor == Factor::A);
    CHECK(nf[0].elt == 2);
    // alternating word stays put
    auto w = normalForm({a1, b1, a1, b1});
    CHECK(w.size() == 4);
    CHECK(toString(w) == "a1 b1 a1 b1");
}

TEST_CASE("phi values") {
    CHECK(phi(normalForm({a1, b1})) == 0);
    CHECK(phi(normalForm({a1})) == 1);
    CHECK(phi(normalForm({a1, a2})) == 3);  // c1 c2 != e
    CHECK(phi(normalForm({a2, b1})) == 3);
}

TEST_CASE("phi is a homomorphism (random pairs)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 8), fac(0, 1), elt(1, 3);
    auto randWord = [&]() {
        std::vector<Letter> w;
        int L = len(rng);
        for (int i = 0; i < L; ++i)
            w.push_back(Letter{static_cast<Factor>(fac(rng)), static_cast<uint8_t>(elt(rng))});
        return w;
    };
    for (int i = 0; i < 10000; ++i) {
        auto u = randWord(), v = randWord();
        auto uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(phi(normalForm(uv)) == (phi(normalForm(u)) ^ phi(normalForm(v))));
    }
}

TEST_CASE("normal form is confluent under random association orders") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> fac(0, 1), elt(1, 3);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> w;
        std::uniform_int_distribution<int> len(2, 12);
        int L = len(rng);
        for (int i = 0; i < L; ++i)
            w.push_back(Letter{static_cast<Factor>(fac(rng)), static_cast<uint8_t>(elt(rng))});
        NormalForm direct = normalForm(w);
        // random bracketing: fold pieces in shuffled order via concat
        std::vector<NormalForm> pieces;
        for (const Letter& l : w) pieces.push_back(normalForm({l}));
        std::uniform_int_distribution<size_t> pick(0, 1);
        while (pieces.size() > 1) {
            std::uniform_int_distribution<size_t> at(0, pieces.size() - 2);
            size_t i = at(rng);
            pieces[i] = concat(pieces[i], pieces[i + 1]);
            pieces.erase(pieces.begin() + i + 1);
        }
        CHECK((pieces[0] == direct));
    }
}

TEST_CASE("kernel slice small cases") {
    CHECK(kernelSlice(1).empty());

    auto k2 = kernelSlice(2);
    // brute force over the 18 length-2 alternating forms gives exactly 6
    std::set<NormalForm> expect = {
        normalForm({a1, b1}), normalForm({a2, b2}),
        normalForm({a1, a2, b1, b2}),  // (a1a2)(b1b2)
        normalForm({b1, a1}), normalForm({b2, a2}),
        normalForm({b1, b2, a1, a2}),
    };
    CHECK(k2 == expect);

    // monotone inclusion
    auto k3 = kernelSlice(3), k4 = kernelSlice(4);
    CHECK(std::includes(k3.begin(), k3.end(), k2.begin(), k2.end()));
    CHECK(std::includes(k4.begin(), k4.end(), k3.begin(), k3.end()));

    CHECK_THROWS_AS(kernelSlice(13), std::invalid_argument);
}

TEST_CASE("coset oracle: the four cosets of ker partition every slice") {
    // phi is onto C (|C| = 4); the slice of each phi-fiber at length L is a
    // coset slice.  Independent coset table: state = phi value, transitions
    // by syllable XOR.  Counts per fiber must sum to the full enumeration.
    for (int L = 1; L <= 6; ++L) {
        std::map<uint8_t, int> fiber;
        int total = 0;
        enumerateNormalForms(L, [&](const NormalForm& nf) {
            if (nf.empty()) return;
            ++total;
            fiber[phi(nf)]++;
        });
        CHECK(fiber[0] + fiber[1] + fiber[2] + fiber[3] == total);
        CHECK(fiber[0] == static_cast<int>(kernelSlice(L).size()));
        // symmetry of the construction: fibers over c1 and c2 match
        CHECK(fiber[1] == fiber[2]);
    }
}

TEST_CASE("subgroup slice basics") {
    auto gens = kernelGenerators();
    const auto& x = gens[0];
    const auto& z = gens[2];
    CHECK(toString(x) == "a1 b1");
    CHECK(toString(z) == "a1a2 b2 a1");
    CHECK(concat(x, inverseOf(x)).empty());

    auto sub2 = subgroupSlice(gens, 2);
    CHECK(sub2.count(x));
    auto ker2 = kernelSlice(2);
    CHECK(sub2 == ker2);
}

TEST_CASE("kernel lemma verification") {
    auto rep = verifyKernelLemma(4);
    CHECK(rep.sliceEqual);
    CHECK(rep.freenessDistinct);
    CHECK(rep.eulerRankThree);
    CHECK(rep.eulerRank == 3);
    CHECK(rep.pass());

    // L=1: both slices empty, vacuous pass
    auto rep1 = verifyKernelLemma(1);
    CHECK(rep1.sliceEqual);
    CHECK(rep1.sliceSize == 0);

    // injected fault: z -> a2 b1 is not in the kernel
    auto bad = kernelGenerators();
    bad[2] = normalForm({a2, b1});
    auto repBad = verifyKernelLemma(4, bad);
    CHECK_FALSE(repBad.pass());
    CHECK(repBad.witness.has_value());
}

TEST_CASE("larger slice agreement (L = 6)") {
    CHECK(kernelSlice(6) == subgroupSlice(kernelGenerators(), 6));
}
