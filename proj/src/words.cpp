#include "moebius/words.hpp"

#include <deque>
#include <stdexcept>

namespace moebius::words {

NormalForm normalForm(const std::vector<Letter>& word) {
    NormalForm nf;
    for (const Letter& l : word) {
        if (l.elt == 0) continue;
        if (!nf.empty() && nf.back().factor == l.factor) {
            nf.back().elt = static_cast<uint8_t>(nf.back().elt ^ l.elt);
            if (nf.back().elt == 0) nf.pop_back();
        } else {
            nf.push_back(Syllable{l.factor, l.elt});
        }
    }
    return nf;
}

NormalForm concat(const NormalForm& u, const NormalForm& v) {
    NormalForm nf = u;
    for (const Syllable& s : v) {
        if (!nf.empty() && nf.back().factor == s.factor) {
            nf.back().elt = static_cast<uint8_t>(nf.back().elt ^ s.elt);
            if (nf.back().elt == 0) nf.pop_back();
        } else {
            nf.push_back(s);
        }
    }
    return nf;
}

NormalForm inverseOf(const NormalForm& u) {
    // every syllable is an involution, so the inverse just reverses
    return NormalForm(u.rbegin(), u.rend());
}

std::string toString(const NormalForm& nf) {
    if (nf.empty()) return "e";
    std::string out;
    for (const Syllable& s : nf) {
        const char* base = (s.factor == Factor::A) ? "a" : "b";
        switch (s.elt) {
            case 1: out += base; out += "1"; break;
            case 2: out += base; out += "2"; break;
            case 3: out += base; out += "1"; out += base; out += "2"; break;
        }
        out += ' ';
    }
    out.pop_back();
    return out;
}

uint8_t phi(const NormalForm& nf) {
    // phi maps both factors' g1,g2 onto c1,c2, so each syllable's code lands
    // in C unchanged and the image is the XOR over syllables
    uint8_t c = 0;
    for (const Syllable& s : nf) c ^= s.elt;
    return c;
}

void enumerateNormalForms(int maxLen, const std::function<void(const NormalForm&)>& visit) {
    NormalForm cur;
    visit(cur);
    // depth-first over alternating syllables, both starting factors
    std::function<void(Factor)> rec = [&](Factor next) {
        for (uint8_t e = 1; e <= 3; ++e) {
            cur.push_back(Syllable{next, e});
            visit(cur);
            if (static_cast<int>(cur.size()) < maxLen)
                rec(next == Factor::A ? Factor::B : Factor::A);
            cur.pop_back();
        }
    };
    if (maxLen >= 1) {
        rec(Factor::A);
        rec(Factor::B);
    }
}

std::set<NormalForm> kernelSlice(int maxLen) {
    if (maxLen > 12) throw std::invalid_argument("kernel slice cap exceeded");
    std::set<NormalForm> out;
    enumerateNormalForms(maxLen, [&](const NormalForm& nf) {
        if (!nf.empty() && phi(nf) == 0) out.insert(nf);
    });
    return out;
}

std::set<NormalForm> subgroupSlice(const std::vector<NormalForm>& gens, int maxLen,
                                   int pruneSlack) {
    if (maxLen > 12) throw std::invalid_argument("subgroup slice cap exceeded");
    std::vector<NormalForm> steps;
    for (const NormalForm& g : gens) {
        steps.push_back(g);
        NormalForm gi = inverseOf(g);
        if (gi != g) steps.push_back(gi);
    }
    const int cap = maxLen + pruneSlack;
    std::set<NormalForm> seen;
    std::deque<NormalForm> frontier;
    seen.insert(NormalForm{});
    frontier.push_back(NormalForm{});
    while (!frontier.empty()) {
        NormalForm w = frontier.front();
        frontier.pop_front();
        for (const NormalForm& s : steps) {
            NormalForm v = concat(w, s);
            if (static_cast<int>(v.size()) > cap) continue;
            if (seen.insert(v).second) frontier.push_back(v);
        }
    }
    std::set<NormalForm> out;
    for (const NormalForm& w : seen)
        if (!w.empty() && static_cast<int>(w.size()) <= maxLen) out.insert(w);
    return out;
}

std::vector<NormalForm> kernelGenerators() {
    NormalForm x = {{Factor::A, 1}, {Factor::B, 1}};
    NormalForm y = {{Factor::A, 2}, {Factor::B, 2}};
    // z = a1 a2 b2 a1: syllables (a1a2)(b2)(a1)
    NormalForm z = {{Factor::A, 3}, {Factor::B, 2}, {Factor::A, 1}};
    return {x, y, z};
}

KernelLemmaReport verifyKernelLemma(int maxLen, const std::vector<NormalForm>& gens) {
    KernelLemmaReport rep;
    std::set<NormalForm> ker = kernelSlice(maxLen);
    std::set<NormalForm> sub = subgroupSlice(gens, maxLen);
    rep.sliceSize = static_cast<int>(ker.size());
    rep.sliceEqual = (ker == sub);
    if (!rep.sliceEqual) {
        for (const NormalForm& w : ker)
            if (!sub.count(w)) { rep.witness = w; break; }
        if (!rep.witness)
            for (const NormalForm& w : sub)
                if (!ker.count(w)) { rep.witness = w; break; }
    }

    // freeness evidence: all reduced words in gens^{+-1} of length <= maxLen/2
    // have pairwise distinct normal forms
    int wordLen = maxLen / 2;
    std::vector<NormalForm> steps;
    std::vector<int> stepInverse;  // index of the inverse step
    for (const NormalForm& g : gens) {
        steps.push_back(g);
        steps.push_back(inverseOf(g));
    }
    for (size_t i = 0; i < steps.size(); i += 2) {
        stepInverse.push_back(static_cast<int>(i + 1));
        stepInverse.push_back(static_cast<int>(i));
    }
    std::set<NormalForm> forms;
    int count = 0;
    bool distinct = true;
    std::function<void(NormalForm&, int, int)> rec = [&](NormalForm& cur, int last, int depth) {
        if (!distinct) return;
        ++count;
        if (!forms.insert(cur).second) { distinct = false; return; }
        if (depth == wordLen) return;
        for (size_t i = 0; i < steps.size(); ++i) {
            if (last >= 0 && static_cast<int>(i) == stepInverse[last]) continue;  // reduced
            NormalForm next = concat(cur, steps[i]);
            rec(next, static_cast<int>(i), depth + 1);
        }
    };
    NormalForm e;
    rec(e, -1, 0);
    rep.freeWordsChecked = count;
    rep.freenessDistinct = distinct;

    // Euler characteristic: chi(A*B) = 1/4 + 1/4 - 1 = -1/2, index 4,
    // chi(ker) = 4 * (-1/2) = -2 = 1 - rank  =>  rank 3
    double chiAB = 0.25 + 0.25 - 1.0;
    double chiKer = 4.0 * chiAB;
    rep.eulerRank = static_cast<int>(1.0 - chiKer + 0.5);
    rep.eulerRankThree = (rep.eulerRank == 3);
    return rep;
}

}  // namespace moebius::words
