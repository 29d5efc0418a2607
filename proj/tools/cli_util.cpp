#include "cli_util.hpp"

#include <cctype>
#include <vector>

namespace specht::cli {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos;
    }
    long long integer() {
        skip_space();
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos;
        if (pos == start)
            throw ParseError("expected a number", start);
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000)
                throw ParseError("number too large", start);
        }
        return v;
    }
};

}  // namespace

Partition parse_partition_literal(const std::string& text) {
    Cursor cur{text};
    cur.skip_space();
    char close = 0;
    if (!cur.done() && (cur.peek() == '[' || cur.peek() == '(')) {
        close = cur.peek() == '[' ? ']' : ')';
        ++cur.pos;
        cur.skip_space();
    }
    std::vector<int> parts;
    if (cur.done() || (close && cur.peek() == close)) {
        // empty literal
    } else {
        for (;;) {
            std::size_t term_start = cur.pos;
            long long value = cur.integer();
            long long repeat = 1;
            cur.skip_space();
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                std::size_t exp_start = cur.pos;
                repeat = cur.integer();
                if (repeat < 1)
                    throw ParseError("multiplicity must be at least 1", exp_start);
            }
            if (value < 1)
                throw ParseError("parts must be positive", term_start);
            if (!parts.empty() && value > parts.back())
                throw ParseError("parts must be weakly decreasing", term_start);
            for (long long i = 0; i < repeat; ++i)
                parts.push_back(static_cast<int>(value));
            cur.skip_space();
            if (cur.done() || (close && cur.peek() == close))
                break;
            if (cur.peek() != ',')
                throw ParseError("expected ','", cur.pos);
            ++cur.pos;
        }
    }
    if (close) {
        if (cur.done() || cur.peek() != close)
            throw ParseError(std::string("expected '") + close + "'", cur.pos);
        ++cur.pos;
    }
    cur.skip_space();
    if (!cur.done())
        throw ParseError("trailing characters", cur.pos);
    return Partition(std::move(parts));
}

ElementaryAbelian parse_subgroup_spec(const std::string& text, int p) {
    Cursor cur{text};
    std::vector<int> factors;
    for (;;) {
        cur.skip_space();
        if (cur.done())
            break;
        if (cur.peek() != 'V' && cur.peek() != 'v')
            throw ParseError("expected a factor like V1 or V2^3", cur.pos);
        ++cur.pos;
        std::size_t m_start = cur.pos;
        long long m = cur.integer();
        if (m < 1 || m > 6)
            throw ParseError("factor rank out of range", m_start);
        long long count = 1;
        cur.skip_space();
        if (!cur.done() && cur.peek() == '^') {
            ++cur.pos;
            std::size_t c_start = cur.pos;
            count = cur.integer();
            if (count < 1 || count > 64)
                throw ParseError("factor multiplicity out of range", c_start);
        }
        for (long long i = 0; i < count; ++i)
            factors.push_back(static_cast<int>(m));
        cur.skip_space();
        if (cur.done())
            break;
        if (cur.peek() != 'x' && cur.peek() != '*' && cur.peek() != 'X')
            throw ParseError("expected 'x' between factors", cur.pos);
        ++cur.pos;
    }
    if (factors.empty())
        throw ParseError("empty subgroup spec", 0);
    return ElementaryAbelian::product_of_factors(p, factors);
}

}  // namespace specht::cli
