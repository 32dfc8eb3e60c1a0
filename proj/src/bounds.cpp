#include "stpete/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace stpete {

namespace {
void check_domain(const ProkhorovQuery& q) {
    if (!(q.epsilon > 0.0) || !(q.eta > 0.0 && q.eta <= 1.0))
        throw std::domain_error("parameters out of domain");
}
}  // namespace

double prokhorov_bound(const ProkhorovQuery& q) {
    check_domain(q);
    const double eps = q.epsilon;
    return (1.0 + eps) / (eps * eps) * std::log(1.0 / q.eta) + 1.0 / eps;
}

std::uint64_t prokhorov_n0(const ProkhorovQuery& q) {
    const double bound = prokhorov_bound(q);
    // 2^63 keeps floor(bound) + 1 representable.
    if (!std::isfinite(bound) || bound >= 9.2233720368547758e18) throw std::domain_error("parameters out of domain");
    return static_cast<std::uint64_t>(std::floor(bound)) + 1;
}

}  // namespace stpete
