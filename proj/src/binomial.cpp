#include "binetkit/binomial.hpp"

#include <stdexcept>
#include <string>

namespace binetkit {

Integer binomial(long i, long j)
{
    if (i < 0 || j < 0) {
        throw std::domain_error("binomial(" + std::to_string(i) + ", " + std::to_string(j)
                                + "): arguments must be non-negative");
    }
    if (i < j) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
    return out;
}

Integer central_binomial(long j)
{
    if (j < 0) {
        throw std::domain_error("central_binomial: index must be non-negative");
    }
    return binomial(2 * j, j);
}

}  // namespace binetkit
