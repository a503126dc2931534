#pragma once

#include "exminor/series/series.hpp"

namespace exminor {

// sqrt(x^2 - 6x + 1) with constant term +1
inline TruncatedEGF outer_radical(int order) {
    TruncatedEGF q(order);
    q[0] = 1;
    if (order >= 1) q[1] = -6;
    if (order >= 2) q[2] = 1;
    return sqrt(q);
}

// Biconnected outerplanar networks that stay outerplanar after joining a new
// vertex to both poles: (1 + x - sqrt(x^2 - 6x + 1)) / (4x).
inline TruncatedEGF outer_network(int order) {
    auto x = TruncatedEGF::x(order + 1);
    auto num = x + Rational(1) - outer_radical(order + 1);
    return divide_by_x(num) / Rational(4);
}

// 4x D~ + sqrt(x^2 - 6x + 1) - (1 + x)
inline TruncatedEGF outer_network_residual(const TruncatedEGF& Dt) {
    int n = Dt.order();
    auto x = TruncatedEGF::x(n);
    return Rational(4) * x * Dt + outer_radical(n) - (x + Rational(1));
}

}  // namespace exminor
