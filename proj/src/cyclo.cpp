#include "cyclo.hpp"

namespace joq {

Cyclo Cyclo::omega_pow(long long n) {
    switch (((n % 3) + 3) % 3) {
        case 0: return Cyclo(1);
        case 1: return omega();
        default: return Cyclo(Rational(-1), Rational(-1)); // w^2 = -1 - w
    }
}

std::string Cyclo::to_string() const {
    if (is_rational()) return one_.to_string();
    std::string om = om_.to_string();
    std::string s = one_.to_string();
    if (om[0] != '-') s += "+";
    return s + om + "*w";
}

} // namespace joq
