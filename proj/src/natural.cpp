#include "gku/natural.hpp"

#include <cctype>
#include <stdexcept>

namespace gku {

Natural natural_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
    Natural n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    return n;
}

unsigned long to_ulong_checked(const Natural& n) {
    if (n < 0 || !n.fits_ulong_p())
        throw std::domain_error("value out of machine range: " + n.get_str());
    return n.get_ui();
}

}  // namespace gku
