#ifndef GCOL_UTIL_HPP
#define GCOL_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcol {

// Vertex ids are ints. Sets of vertices are sorted, duplicate-free vectors;
// all iteration over them is in increasing id order so that every operation
// in the library is deterministic.
using VSet = std::vector<int>;

// A (partial) coloring: vertex id -> color in {1,2,3} (or larger k for the
// hardness module).
using Coloring = std::map<int, int>;

class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace vset {

inline bool contains(const VSet& s, int v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

inline VSet normalized(VSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline VSet unite(const VSet& a, const VSet& b)
{
    VSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VSet intersect(const VSet& a, const VSet& b)
{
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VSet minus(const VSet& a, const VSet& b)
{
    VSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool disjoint(const VSet& a, const VSet& b)
{
    return intersect(a, b).empty();
}

inline bool subset(const VSet& a, const VSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline void insert(VSet& s, int v)
{
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v)
        s.insert(it, v);
}

} // namespace vset

// Color lists are 3-bit masks; bit (c-1) set means color c is allowed.
namespace mask {

constexpr std::uint8_t ALL = 0b111;

constexpr std::uint8_t of(int color) { return std::uint8_t(1u << (color - 1)); }

inline int size(std::uint8_t m) { return __builtin_popcount(m); }

inline bool has(std::uint8_t m, int color) { return (m & of(color)) != 0; }

// The unique color of a singleton mask.
inline int only(std::uint8_t m)
{
    if (size(m) != 1)
        throw ContractError("mask::only on non-singleton list");
    return __builtin_ctz(m) + 1;
}

inline std::vector<int> colors(std::uint8_t m)
{
    std::vector<int> out;
    for (int c = 1; c <= 3; ++c)
        if (has(m, c))
            out.push_back(c);
    return out;
}

inline std::uint8_t from_colors(const std::vector<int>& cs)
{
    std::uint8_t m = 0;
    for (int c : cs) {
        if (c < 1 || c > 3)
            throw ContractError("color out of range 1..3");
        m |= of(c);
    }
    return m;
}

} // namespace mask

} // namespace gcol

#endif
