#include "fracsq/rational.hpp"

namespace fracsq {

std::string rat_to_string(const Rat& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    return out;
}

Rat rat_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal '" + s + "'");
    }
}

}  // namespace fracsq
