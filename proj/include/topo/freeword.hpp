#pragma once

#include <string>
#include <string_view>

namespace topo {

/// Cyclic word in the rank-2 free group on x, y; capitals are inverses.
/// Stored cyclically reduced.
class FreeWord {
public:
    FreeWord() = default;

    /// Accepts letters x, X, y, Y; whitespace ignored; other characters
    /// rejected. The word is cyclically reduced on construction.
    explicit FreeWord(std::string_view letters);

    const std::string& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    FreeWord inverse() const;

    /// Lexicographically least rotation; canonical representative of the
    /// cyclic word.
    std::string canonical() const;

    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a.canonical() == b.canonical();
    }

private:
    std::string letters_;
};

/// Cyclic reduction of an arbitrary letter string (free reduction plus
/// stripping inverse wrap-around pairs); idempotent.
FreeWord cyclically_reduce(std::string_view letters);

/// gcd of |exponent sum of x| and |exponent sum of y| (gcd(0,0) = 0).
/// Value 1 is necessary, not sufficient, for primitivity.
long long abelianization_test(const FreeWord& w);

/// Whitehead decision: true iff w belongs to some free basis of F2.
/// Breadth-first search over length-nonincreasing Whitehead moves; a word
/// is primitive iff some chain reaches a single letter. Rejects the empty
/// word.
bool is_primitive(const FreeWord& w);

}  // namespace topo
