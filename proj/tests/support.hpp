#pragma once

#include "planalg/haagerup.hpp"

namespace planalg::testing {

inline const SpinContextPtr& haagerup() {
    static const SpinContextPtr ctx = SpinContext::create(haagerup_graph());
    return ctx;
}

inline const GeneratorCandidate& generator() {
    static const GeneratorCandidate c = find_generator(haagerup());
    return c;
}

inline Scalar sqrt13() { return exact_sqrt_or_adjoin(Scalar(13)); }

}  // namespace planalg::testing
