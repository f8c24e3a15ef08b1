#pragma once

#include "planalg/gpa.hpp"

namespace planalg::oracle {

/// trace(x^k) as a direct state sum: for every start and middle vertex, every
/// cyclic sequence of k half paths contributes the product of the entries of x
/// in plain coordinates, weighted by mu(v_0) mu(v_n) / Z. The conversion from
/// balanced coordinates takes the exact square root of the product of the
/// squared conversion factors around the cycle.
Scalar power_trace(const GpaElement& x, int k);

}  // namespace planalg::oracle
