#ifndef DPB_RATIONAL_HPP
#define DPB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dpb {

using Rat = boost::multiprecision::cpp_rational;

// Serialized as "p" or "p/q" in lowest terms, q > 0 (boost keeps this canonical).
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rational(const std::string& s) {
    auto is_int = [](const std::string& t) {
        std::size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (t.size() == start)
            return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    auto bad = [&s]() {
        return std::invalid_argument("bad rational literal: '" + s + "'");
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s))
            throw bad();
        return Rat(boost::multiprecision::cpp_int(s));
    }
    std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
    if (!is_int(ps) || !is_int(qs))
        throw bad();
    boost::multiprecision::cpp_int p(ps), q(qs);
    if (q == 0)
        throw bad();
    return Rat(p, q);
}

} // namespace dpb

#endif
