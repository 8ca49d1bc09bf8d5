#include "topo/freeword.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace topo {

namespace {

char invert(char c) {
    return std::isupper(static_cast<unsigned char>(c))
               ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
               : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

std::string free_reduce(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!out.empty() && out.back() == invert(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

std::string cyclic_reduce_str(std::string_view s) {
    std::string w = free_reduce(s);
    while (w.size() >= 2 && w.front() == invert(w.back())) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

std::string min_rotation(const std::string& s) {
    if (s.size() < 2) return s;
    std::string best = s;
    std::string rot = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

}  // namespace

FreeWord::FreeWord(std::string_view letters) {
    std::string clean;
    for (char c : letters) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c != 'x' && c != 'X' && c != 'y' && c != 'Y')
            throw std::invalid_argument(std::string("FreeWord: bad letter '") + c + "'");
        clean.push_back(c);
    }
    letters_ = cyclic_reduce_str(clean);
}

FreeWord FreeWord::inverse() const {
    std::string inv;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.push_back(invert(*it));
    FreeWord w;
    w.letters_ = inv;  // inverse of a cyclically reduced word is reduced
    return w;
}

std::string FreeWord::canonical() const { return min_rotation(letters_); }

FreeWord cyclically_reduce(std::string_view letters) { return FreeWord(letters); }

long long abelianization_test(const FreeWord& w) {
    long long ex = 0, ey = 0;
    for (char c : w.letters()) {
        if (c == 'x') ++ex;
        else if (c == 'X') --ex;
        else if (c == 'y') ++ey;
        else --ey;
    }
    if (ex < 0) ex = -ex;
    if (ey < 0) ey = -ey;
    return std::gcd(ex, ey);
}

namespace {

// A Nielsen transvection: replace every occurrence of `target` (and its
// inverse, mirrored) according to target -> image.
std::string apply_transvection(const std::string& w, char target, const std::string& image) {
    std::string inv_image;
    for (auto it = image.rbegin(); it != image.rend(); ++it) inv_image.push_back(invert(*it));
    const char anti = invert(target);
    std::string out;
    for (char c : w) {
        if (c == target) out += image;
        else if (c == anti) out += inv_image;
        else out.push_back(c);
    }
    return out;
}

struct Move {
    char target;
    std::string image;
};

// Whitehead type-II moves on cyclic words in rank 2 (the conjugating
// images a^-1 v a act trivially on cyclic words, leaving the eight
// Nielsen transvections).
const std::array<Move, 8> kMoves = {{
    {'y', "yx"}, {'y', "yX"}, {'y', "xy"}, {'y', "Xy"},
    {'x', "xy"}, {'x', "xY"}, {'x', "yx"}, {'x', "Yx"},
}};

}  // namespace

bool is_primitive(const FreeWord& w) {
    if (w.empty()) throw std::invalid_argument("is_primitive: empty word");
    if (w.length() == 1) return true;
    // Cheap necessary condition.
    if (abelianization_test(w) != 1) return false;

    std::unordered_set<std::string> seen;
    std::deque<std::string> queue;
    const std::string start = w.canonical();
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const Move& m : kMoves) {
            std::string next = min_rotation(cyclic_reduce_str(apply_transvection(cur, m.target, m.image)));
            if (next.size() == 1) return true;
            if (next.empty() || next.size() > cur.size()) continue;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return false;
}

}  // namespace topo
