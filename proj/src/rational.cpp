#include "sbal/rational.hpp"

#include <cstdio>

namespace sbal {
namespace {

std::string i128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    char buf[48];
    int i = 48;
    while (u > 0) {
        buf[--i] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s;
    if (neg) s.push_back('-');
    s.append(buf + i, buf + 48);
    return s;
}

} // namespace

std::string Rational::str() const {
    return i128_to_string(num_) + "/" + i128_to_string(den_);
}

std::string Rational::percent(int decimals) const {
    long double v = 100.0L * static_cast<long double>(num_) / static_cast<long double>(den_);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", decimals, v);
    return buf;
}

} // namespace sbal
