#pragma once

#include <cstdint>
#include <string>

namespace pgq {

// GF(2^s) scalar arithmetic, 1 <= s <= 8. Elements are integers in [0, 2^s)
// read as polynomials over GF(2); multiplication reduces modulo a fixed
// irreducible polynomial per s, so all values are reproducible across runs.
class GaloisField {
public:
    explicit GaloisField(int s);  // throws std::invalid_argument outside [1,8]

    int s() const { return s_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t poly() const { return poly_; }  // reduction polynomial, leading bit included
    std::string poly_string() const;              // e.g. "x^3+x+1"

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws std::domain_error on 0
    std::uint32_t pow(std::uint32_t a, std::uint32_t e) const;

private:
    int s_;
    std::uint32_t q_;
    std::uint32_t poly_;
};

}  // namespace pgq
