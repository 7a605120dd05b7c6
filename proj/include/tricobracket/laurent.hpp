#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace tricob {

// Integer-coefficient Laurent polynomial in t, sparse, no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    void add(int exponent, long long coeff) {
        if (coeff == 0) return;
        auto it = coeffs_.find(exponent);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exponent, coeff);
        } else if ((it->second += coeff) == 0) {
            coeffs_.erase(it);
        }
    }

    // t^e - 1, scaled
    void addBinomial(int exponent, long long coeff) {
        add(exponent, coeff);
        add(0, -coeff);
    }

    bool isZero() const { return coeffs_.empty(); }
    long long evalAtOne() const {
        long long s = 0;
        for (auto& [e, c] : coeffs_) s += c;
        return s;
    }

    // t -> 1/t
    LaurentPoly mirrored() const {
        LaurentPoly p;
        for (auto& [e, c] : coeffs_) p.coeffs_.emplace(-e, c);
        return p;
    }

    const std::map<int, long long>& coefficients() const { return coeffs_; }

    // "t^-1 - 2 + t" with exponents ascending; "0" when empty
    std::string str() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<int, long long> coeffs_;
};

}  // namespace tricob
