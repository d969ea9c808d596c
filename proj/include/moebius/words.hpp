#pragma once

// Free product A * B of two Klein four-groups, the homomorphism
// phi : A * B -> C with phi(a_i) = phi(b_i) = c_i, and slices of its kernel.
// Klein-group elements are encoded 0..3 (0 = identity, 1 = g1, 2 = g2,
// 3 = g1 g2); multiplication is XOR.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace moebius::words {

enum class Factor : uint8_t { A = 0, B = 1 };

struct Syllable {
    Factor factor;
    uint8_t elt;  // 1..3, never 0 in a normal form
    bool operator==(const Syllable& o) const { return factor == o.factor && elt == o.elt; }
    auto operator<=>(const Syllable& o) const = default;
};

// Strictly alternating sequence of nontrivial syllables; the unique normal
// form of an element of A * B.  Empty = identity.
using NormalForm = std::vector<Syllable>;

// A letter is one of a1, a2, b1, b2.
struct Letter {
    Factor factor;
    uint8_t elt;  // 1 or 2 (or 3 for a1a2 as a single syllable when needed)
};

// letters may be any syllable-valued symbols; reduces to the normal form
NormalForm normalForm(const std::vector<Letter>& word);
NormalForm concat(const NormalForm& u, const NormalForm& v);
NormalForm inverseOf(const NormalForm& u);  // Klein factors are self-inverse

std::string toString(const NormalForm& nf);

// phi(word) in C, encoded 0..3
uint8_t phi(const NormalForm& nf);

// all nontrivial normal forms w with syllable length <= maxLen and phi(w) = e
// (the identity is omitted from slices; L=1 gives the empty set)
std::set<NormalForm> kernelSlice(int maxLen);

// all nontrivial elements of <gens> whose normal form has syllable length
// <= maxLen.
// BFS over right-multiplication by gens and inverses; frontier pruned at
// syllable length maxLen + pruneSlack (default 4 covers generators of
// syllable length <= 3, see repo docs).
std::set<NormalForm> subgroupSlice(const std::vector<NormalForm>& gens, int maxLen,
                                   int pruneSlack = 4);

// x = a1 b1, y = a2 b2, z = a1 a2 b2 a1
std::vector<NormalForm> kernelGenerators();

struct KernelLemmaReport {
    bool sliceEqual = false;
    bool freenessDistinct = false;
    bool eulerRankThree = false;
    int sliceSize = 0;
    int freeWordsChecked = 0;
    int eulerRank = 0;
    std::optional<NormalForm> witness;  // element of the symmetric difference
    bool pass() const { return sliceEqual && freenessDistinct && eulerRankThree; }
};

// clauses: (1) kernelSlice(L) == subgroupSlice({x,y,z}, L); (2) reduced
// words in x,y,z of length <= L/2 have pairwise distinct normal forms;
// (3) Euler-characteristic rank arithmetic gives 3.
KernelLemmaReport verifyKernelLemma(int maxLen,
                                    const std::vector<NormalForm>& gens = kernelGenerators());

// Exhaustive enumeration of all alternating normal forms of syllable length
// <= maxLen (both starting factors).  Used by kernelSlice and, with a coset
// table, as an independent oracle in tests.
void enumerateNormalForms(int maxLen,
                          const std::function<void(const NormalForm&)>& visit);

}  // namespace moebius::words
