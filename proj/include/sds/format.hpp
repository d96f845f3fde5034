#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sds/difference.hpp"
#include "sds/zmod.hpp"

namespace sds {

// Parse failure carrying the 1-based column of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t column)
        : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

namespace detail {

class TextCursor {
public:
    explicit TextCursor(std::string_view text) : text_(text) {}

    std::size_t column() const { return pos_ + 1; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_spaces() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool try_consume(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c))
            throw ParseError(std::string("expected ") + what, column());
    }

    long long integer() {
        bool negative = try_consume('-');
        if (at_end() || text_[pos_] < '0' || text_[pos_] > '9')
            throw ParseError("expected integer", column());
        long long value = 0;
        while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000LL) throw ParseError("integer too large", column());
            ++pos_;
        }
        return negative ? -value : value;
    }

    std::string_view rest() const { return text_.substr(pos_); }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::vector<long long> parse_brace_set(TextCursor& cur) {
    cur.expect('{', "'{'");
    std::vector<long long> elems;
    cur.skip_spaces();
    if (!cur.try_consume('}')) {
        while (true) {
            cur.skip_spaces();
            elems.push_back(cur.integer());
            cur.skip_spaces();
            if (cur.try_consume('}')) break;
            cur.expect(',', "',' or '}'");
        }
    }
    return elems;
}

}  // namespace detail

// Block textual form: {a,b,c} with ascending decimal elements, no spaces.
inline std::string render_block(const Block& block) {
    std::string out = "{";
    bool first = true;
    for (int x : block.elements()) {
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    }
    out += '}';
    return out;
}

inline Block parse_block(std::string_view text, int v) {
    detail::TextCursor cur(text);
    cur.skip_spaces();
    Block b = make_block(v, detail::parse_brace_set(cur));
    cur.skip_spaces();
    if (!cur.at_end()) throw ParseError("trailing input after block", cur.column());
    return b;
}

// Family textual form: blocks separated by a single space.
inline std::string render_family(const Family& family) {
    std::string out;
    for (const Block& b : family.blocks()) {
        if (!out.empty()) out += ' ';
        out += render_block(b);
    }
    return out;
}

inline Family parse_family(std::string_view text, int v) {
    detail::TextCursor cur(text);
    std::vector<Block> blocks;
    cur.skip_spaces();
    while (!cur.at_end()) {
        blocks.push_back(make_block(v, detail::parse_brace_set(cur)));
        cur.skip_spaces();
    }
    if (blocks.empty()) throw ParseError("expected at least one block", cur.column());
    return Family(Modulus(v), std::move(blocks));
}

// Parameter set textual form: (v;r,s;lambda), or (v;k;lambda) for one block.
inline std::string render_params(const ParameterSet& params) {
    std::string out = "(" + std::to_string(params.v()) + ";";
    bool first = true;
    for (int k : params.sizes()) {
        if (!first) out += ',';
        out += std::to_string(k);
        first = false;
    }
    out += ";" + std::to_string(params.lambda()) + ")";
    return out;
}

inline ParameterSet parse_params(std::string_view text) {
    detail::TextCursor cur(text);
    cur.skip_spaces();
    cur.expect('(', "'('");
    const long long v = cur.integer();
    cur.expect(';', "';'");
    std::vector<int> sizes;
    while (true) {
        long long k = cur.integer();
        if (k < 0 || k > v) throw ParseError("block size out of range", cur.column());
        sizes.push_back(static_cast<int>(k));
        if (!cur.try_consume(',')) break;
    }
    cur.expect(';', "';'");
    const long long lambda = cur.integer();
    cur.expect(')', "')'");
    cur.skip_spaces();
    if (!cur.at_end()) throw ParseError("trailing input after parameters", cur.column());
    if (v < 2 || v > 1'000'000) throw ParseError("group order out of range", 2);
    if (lambda < 0) throw ParseError("negative index", 1);
    return ParameterSet(static_cast<int>(v), std::move(sizes), static_cast<int>(lambda));
}

}  // namespace sds
