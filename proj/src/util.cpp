#include "omegastar/util.hpp"

namespace omegastar {

std::string u128_to_string(u128 x) {
    if (x == 0) return "0";
    char buf[48];
    int at = 48;
    while (x) {
        buf[--at] = static_cast<char>('0' + static_cast<unsigned>(x % 10));
        x /= 10;
    }
    return std::string(buf + at, buf + 48);
}

}  // namespace omegastar
