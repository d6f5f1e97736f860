#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>

namespace gqs {

// Exact rational scalar used wherever integer arithmetic is not enough
// (simple-root expansions, D(2,1;a) structure constants).
using Rat = boost::rational<long long>;

inline std::string rat_str(const Rat& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "p" or "p/q". Returns nullopt on malformed input or q == 0.
inline std::optional<Rat> parse_rational(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    try {
        std::size_t pos = 0;
        long long p = std::stoll(s, &pos);
        if (pos == s.size())
            return Rat(p);
        if (s[pos] != '/')
            return std::nullopt;
        std::size_t pos2 = 0;
        long long q = std::stoll(s.substr(pos + 1), &pos2);
        if (pos + 1 + pos2 != s.size() || q == 0)
            return std::nullopt;
        return Rat(p, q);
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace gqs
