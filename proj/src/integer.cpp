#include "kummerlab/integer.hpp"

namespace kummerlab {

Integer binomial(const Integer& n, long k)
{
    if (k < 0)
        return 0;
    Integer r = 1;
    /* C(n,j) = C(n,j-1) * (n-j+1) / j, exact at every step */
    for (long j = 1; j <= k; ++j) {
        r *= n - (j - 1);
        r /= j;
    }
    return r;
}

} // namespace kummerlab
