#pragma once

// Test-only brute-force primitivity oracle: enumerate images of the basis
// (x, y) under compositions of elementary Nielsen automorphisms and collect
// every first coordinate as a primitive word. Independent of the Whitehead
// search in the library.

#include <deque>
#include <set>
#include <string>
#include <utility>

namespace nielsen_oracle {

inline char inv(char c) {
    switch (c) {
        case 'x': return 'X';
        case 'X': return 'x';
        case 'y': return 'Y';
        default: return 'y';
    }
}

inline std::string reduce(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!out.empty() && out.back() == inv(c)) out.pop_back();
        else out.push_back(c);
    }
    return out;
}

inline std::string cyc_reduce(std::string w) {
    w = reduce(w);
    while (w.size() >= 2 && w.front() == inv(w.back())) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

inline std::string min_rot(std::string s) {
    if (s.size() < 2) return s;
    std::string best = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        if (s < best) best = s;
    }
    return best;
}

inline std::string word_inverse(const std::string& s) {
    std::string out;
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(inv(*it));
    return out;
}

/// All canonical cyclic representatives of primitive words of cyclic
/// length <= max_len, from basis pairs with components of length <= cap.
inline std::set<std::string> primitive_words(std::size_t max_len, std::size_t cap = 8) {
    std::set<std::pair<std::string, std::string>> seen;
    std::deque<std::pair<std::string, std::string>> queue;
    std::set<std::string> primitives;

    auto visit = [&](std::string u, std::string v) {
        u = reduce(u);
        v = reduce(v);
        if (u.size() > cap || v.size() > cap) return;
        if (!seen.insert({u, v}).second) return;
        queue.push_back({u, v});
        std::string c = min_rot(cyc_reduce(u));
        if (!c.empty() && c.size() <= max_len) {
            primitives.insert(c);
            primitives.insert(min_rot(cyc_reduce(word_inverse(u))));
        }
    };

    visit("x", "y");
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        // elementary Nielsen moves on the basis pair
        visit(u + v, v);
        visit(u + word_inverse(v), v);
        visit(v + u, v);
        visit(word_inverse(v) + u, v);
        visit(u, v + u);
        visit(u, v + word_inverse(u));
        visit(u, u + v);
        visit(u, word_inverse(u) + v);
        visit(v, u);                  // swap
        visit(word_inverse(u), v);    // invert a basis element
        visit(u, word_inverse(v));
    }
    return primitives;
}

/// Every cyclically reduced nonempty word over {x,X,y,Y} of length <= n.
inline std::set<std::string> cyclically_reduced_words(std::size_t n) {
    std::set<std::string> out;
    const char alphabet[] = {'x', 'X', 'y', 'Y'};
    std::string w;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (!w.empty() && cyc_reduce(w) == w) out.insert(w);
        if (remaining == 0) return;
        for (char c : alphabet) {
            if (!w.empty() && w.back() == inv(c)) continue;
            w.push_back(c);
            self(self, remaining - 1);
            w.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace nielsen_oracle
