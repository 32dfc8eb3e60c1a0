#include "stpete/text.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace stpete {

namespace {
constexpr int kDigits = 6;
}

std::string sig6(double v) {
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << v;
        return os.str();
    }
    if (v == 0.0) return std::signbit(v) ? "-0" : "0";

    // Far more digits than a double carries, so digit 7 is exact.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.40e", std::fabs(v));
    std::string digits;
    const char* p = buf;
    for (; *p != 'e'; ++p)
        if (*p != '.') digits.push_back(*p);
    int exponent = std::atoi(p + 1);

    std::string kept = digits.substr(0, kDigits);
    if (digits[kDigits] >= '5') {
        int i = kDigits - 1;
        for (; i >= 0 && kept[i] == '9'; --i) kept[i] = '0';
        if (i >= 0) {
            ++kept[i];
        } else {
            kept.insert(kept.begin(), '1');
            kept.pop_back();
            ++exponent;
        }
    }
    while (kept.size() > 1 && kept.back() == '0') kept.pop_back();

    std::string out = v < 0 ? "-" : "";
    if (exponent < -4 || exponent >= kDigits) {
        out += kept[0];
        if (kept.size() > 1) out += "." + kept.substr(1);
        char exp_buf[16];
        std::snprintf(exp_buf, sizeof exp_buf, "e%c%02d", exponent < 0 ? '-' : '+', std::abs(exponent));
        out += exp_buf;
    } else if (exponent < 0) {
        out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + kept;
    } else {
        const auto int_len = static_cast<std::size_t>(exponent + 1);
        if (kept.size() <= int_len) {
            out += kept + std::string(int_len - kept.size(), '0');
        } else {
            out += kept.substr(0, int_len) + "." + kept.substr(int_len);
        }
    }
    return out;
}

}  // namespace stpete
