#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace para {

/// Exact rational coefficient. cpp_rational keeps values in lowest terms
/// with a positive denominator, so canonicity is automatic.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Scalar half() { return Scalar(1, 2); }

/// Parses "a" or "a/b" (b > 0). Rejects anything else.
inline Scalar scalar_from_string(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    std::size_t slash = s.find('/');
    std::size_t num_end = (slash == std::string::npos) ? s.size() : slash;
    if (num_end == pos) bad();
    for (std::size_t i = pos; i < num_end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
    Integer num(s.substr(pos, num_end - pos));
    if (negative) num = -num;
    Integer den = 1;
    if (slash != std::string::npos) {
        if (slash + 1 == s.size()) bad();
        for (std::size_t i = slash + 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
        den = Integer(s.substr(slash + 1));
        if (den == 0) bad();
    }
    return Scalar(num, den);
}

/// Always "num/den", the wire form used in JSON files.
inline std::string fraction_string(const Scalar& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// "3", "-1/2": the human-readable form.
inline std::string pretty_string(const Scalar& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace para
