#ifndef PTBATH_FORMAT_HPP
#define PTBATH_FORMAT_HPP

#include <cstdio>
#include <string>

namespace ptbath {

/// Fixed significant-digit float formatting ("%.*g", C locale digits and
/// '.' separator); used for every CSV value so identical runs give
/// identical bytes.
inline std::string format_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

}  // namespace ptbath

#endif  // PTBATH_FORMAT_HPP
