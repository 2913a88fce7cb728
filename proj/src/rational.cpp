#include "ccount/rational.hpp"

namespace ccount {

std::string to_decimal_string(const Rational& r, int places) {
    bool negative = sgn(r) < 0;
    Rational a = abs(r);

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);

    // round(|r| * 10^places), half away from zero
    BigInt num = a.get_num() * scale * 2 + a.get_den();
    BigInt scaled = num / (a.get_den() * 2);

    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;

    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string digits = frac.get_str();
        out += "." + std::string(places - digits.size(), '0') + digits;
    }
    return out;
}

} // namespace ccount
