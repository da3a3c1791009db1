#include "picard2/quadext.hpp"

#include <cmath>
#include <sstream>

namespace picard2 {

std::optional<Rat> parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

double QuadExt::approx() const {
    double a = rational_part().convert_to<double>();
    double b = radical_part().convert_to<double>();
    double d = radicand().convert_to<double>();
    return a + b * std::sqrt(d);
}

std::string QuadExt::str() const {
    if (is_rational()) return rat_str(a_);
    std::ostringstream os;
    bool have_a = (a_ != 0);
    if (have_a) os << rat_str(a_);
    Rat b = b_;
    if (have_a) {
        os << (b > 0 ? " + " : " - ");
        if (b < 0) b = -b;
    }
    if (b != 1) os << rat_str(b) << "*";
    os << "sqrt(" << d_.str() << ")";
    return os.str();
}

}  // namespace picard2
