#include "sparsehalf/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace sparsehalf {

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in rational: " + text);
        }
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

std::string format_rational(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace sparsehalf
