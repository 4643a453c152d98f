#include "yfock/useries.hpp"

namespace yfock {

USeries USeries::operator+(const USeries& o) const {
    if (order() != o.order()) throw domain_error("series order mismatch");
    USeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

USeries USeries::operator*(const USeries& o) const {
    if (order() != o.order()) throw domain_error("series order mismatch");
    USeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

std::string USeries::to_string() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
        if (k > 0) s += " + ";
        s += "(" + coeffs_[k].to_string() + ")";
        if (k == 1) s += "*u^-1";
        if (k > 1) s += "*u^-" + std::to_string(k);
    }
    return s;
}

USeries expand_linear_quotient(
    const std::vector<std::pair<RatFun, RatFun>>& factors, int order) {
    USeries acc = USeries::one(order);
    for (const auto& [a, b] : factors) {
        // (u - a)/(u - b) = (1 - a u^{-1}) * sum_k b^k u^{-k}
        USeries f(order);
        RatFun bk(1);
        for (int k = 0; k <= order; ++k) {
            f[k] = bk;
            if (k + 1 <= order) bk *= b;
        }
        for (int k = order; k >= 1; --k) f[k] -= a * f[k - 1];
        acc = acc * f;
    }
    return acc;
}

} // namespace yfock
