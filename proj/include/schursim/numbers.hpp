#pragma once

#include <cassert>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schursim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! with a thread-local memo table grown on demand. Arguments stay below
/// 2(n+1) for n-qubit work, so the table never gets large. Each thread owns
/// its table, which makes concurrent evaluation from workers race-free
/// without locks.
inline Integer factorial(int n) {
    assert(n >= 0);
    thread_local std::vector<Integer> table{Integer(1)};
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * static_cast<int>(table.size()));
    return table[static_cast<size_t>(n)];
}

} // namespace schursim
