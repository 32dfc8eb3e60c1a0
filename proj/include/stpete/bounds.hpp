#pragma once

#include <cstdint>

namespace stpete {

/// Accuracy epsilon and failure probability eta for a Bernoulli-frequency
/// law of large numbers guarantee.
struct ProkhorovQuery {
    double epsilon = 0.0;
    double eta = 0.0;
};

/// The real-valued sample-size bound (1 + eps) / eps^2 * ln(1 / eta) + 1 / eps.
double prokhorov_bound(const ProkhorovQuery& q);

/// Smallest integer strictly above prokhorov_bound(q). Throws
/// std::domain_error("parameters out of domain") unless eps > 0 and
/// 0 < eta <= 1, or when the result does not fit in 64 bits.
std::uint64_t prokhorov_n0(const ProkhorovQuery& q);

}  // namespace stpete
