#include "pgq/gf.hpp"

#include <stdexcept>

namespace pgq {

namespace {

// Fixed irreducible polynomials per extension degree (index = s).
constexpr std::uint32_t kPolys[9] = {
    0,
    0b10,         // x
    0b111,        // x^2+x+1
    0b1011,       // x^3+x+1
    0b10011,      // x^4+x+1
    0b100101,     // x^5+x^2+1
    0b1000011,    // x^6+x+1
    0b10000011,   // x^7+x+1
    0b100011101,  // x^8+x^4+x^3+x^2+1
};

}  // namespace

GaloisField::GaloisField(int s) {
    if (s < 1 || s > 8) throw std::invalid_argument("GaloisField: s must be in [1,8]");
    s_ = s;
    q_ = 1u << s;
    poly_ = kPolys[s];
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & q_) a ^= poly_;
    }
    return r;
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint32_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
    if (q_ == 2) return 1;
    return pow(a, q_ - 2);  // a^(q-2) = a^-1 in the multiplicative group
}

std::string GaloisField::poly_string() const {
    std::string out;
    for (int d = s_; d >= 0; --d) {
        if (!((poly_ >> d) & 1)) continue;
        if (!out.empty()) out += "+";
        if (d == 0)
            out += "1";
        else if (d == 1)
            out += "x";
        else
            out += "x^" + std::to_string(d);
    }
    return out;
}

}  // namespace pgq
