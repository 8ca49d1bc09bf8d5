#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topo::detail {

/// Tiny whitespace-insensitive cursor for the text notations.
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(std::string_view lit) {
        skip();
        if (s_.compare(pos_, lit.size(), lit) != 0)
            throw std::invalid_argument("parse error: expected '" + std::string(lit) +
                                        "' at offset " + std::to_string(pos_) + " in '" +
                                        std::string(s_) + "'");
        pos_ += lit.size();
    }

    long long integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits)
            throw std::invalid_argument("parse error: expected integer at offset " +
                                        std::to_string(start) + " in '" + std::string(s_) + "'");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    void end() {
        skip();
        if (pos_ != s_.size())
            throw std::invalid_argument("parse error: trailing input '" +
                                        std::string(s_.substr(pos_)) + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace topo::detail
