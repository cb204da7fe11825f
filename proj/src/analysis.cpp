// Copyright the fastss authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "analysis.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace fastss {

namespace {

using boost::multiprecision::cpp_int;
using Float = boost::multiprecision::cpp_bin_float_50;

cpp_int binomial(std::uint32_t n, std::uint32_t k) {
    cpp_int result = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// C(ell, d)^2 / sigma^(ell - d) at 50 decimal digits.
Float collision_rate(const CollisionModel& model) {
    const cpp_int c = binomial(model.ell, model.d);
    const cpp_int numerator = c * c;
    const cpp_int denominator = boost::multiprecision::pow(cpp_int(model.sigma), model.ell - model.d);
    return Float(numerator) / Float(denominator);
}

}

void CollisionModel::validate() const {
    if (d > ell) {
        throw UsageError("collision model needs d <= word length");
    }
    if (sigma < 1) {
        throw UsageError("collision model needs an alphabet of at least one letter");
    }
}

double expected_candidates(const CollisionModel& model) {
    model.validate();
    return static_cast<double>(Float(model.n) * collision_rate(model));
}

double markov_bound(const CollisionModel& model, double c) {
    model.validate();
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw UsageError("Markov constant c must be a positive finite number");
    }
    return static_cast<double>(collision_rate(model) / Float(c));
}

}
