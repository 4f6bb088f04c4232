#pragma once

#include "aplab/common.hpp"

namespace aplab {

// A reduced residue class l mod k. The pair (k=1, l=0) is the explicit
// "unconstrained" variant meaning no progression restriction at all; it is
// how the plain-integer and progression-restricted scans share one code path.
class ap_class {
public:
    ap_class(u64 modulus, u64 residue) : k_(modulus), l_(residue) {
        if (k_ < 1) throw validation_error("ap_class: modulus >= 1 required");
        if (k_ == 1) {
            if (l_ != 0)
                throw validation_error("ap_class: the unconstrained class is (k=1, l=0)");
        } else {
            if (l_ < 1 || l_ >= k_)
                throw validation_error("ap_class: residue must satisfy 1 <= l <= k-1");
            if (gcd_u64(k_, l_) != 1)
                throw validation_error("ap_class: gcd(k, l) = 1 required");
        }
    }

    static ap_class unconstrained() { return ap_class(1, 0); }

    u64 modulus() const { return k_; }
    u64 residue() const { return l_; }
    bool is_unconstrained() const { return k_ == 1; }

    bool contains(u64 v) const { return is_unconstrained() || v % k_ == l_; }

    bool operator==(const ap_class& o) const = default;

private:
    u64 k_;
    u64 l_;
};

} // namespace aplab
