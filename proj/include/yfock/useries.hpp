#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yfock/ratfun.hpp"

namespace yfock {

// Truncated power series in u^{-1}: c[0] + c[1] u^{-1} + ... + c[O] u^{-O}.
class USeries {
  public:
    explicit USeries(int order) : coeffs_(order + 1) {}

    static USeries one(int order) {
        USeries s(order);
        s.coeffs_[0] = RatFun(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const RatFun& operator[](int k) const { return coeffs_.at(k); }
    RatFun& operator[](int k) { return coeffs_.at(k); }

    USeries operator+(const USeries& o) const;
    USeries operator*(const USeries& o) const;

    bool operator==(const USeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const USeries& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    std::vector<RatFun> coeffs_;
};

// Expands prod_k (u - a_k)/(u - b_k) as a series in u^{-1}, truncated at
// u^{-order}.  Each pair holds (a_k, b_k).
USeries expand_linear_quotient(
    const std::vector<std::pair<RatFun, RatFun>>& factors, int order);

} // namespace yfock
