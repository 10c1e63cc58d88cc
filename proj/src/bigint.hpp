#ifndef LZB_BIGINT_HPP
#define LZB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lzb {

// Signed arbitrary-precision integer, little-endian base-2^32 limbs.
// Division is bit-serial shift-subtract: quadratic, but the operands this
// library produces stay well under a few thousand bits, where it is both
// simple and fast enough.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);  // decimal, optional '-'
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;

    // -1, 0, +1 as a <=> b
    static int compare(const BigInt& a, const BigInt& b);

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt operator-() const;

    // Truncated division: q = trunc(a/b), r = a - q*b (r has a's sign).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // >= 0
    BigInt abs() const;

    bool operator==(const BigInt& o) const { return compare(*this, o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(*this, o) != 0; }
    bool operator<(const BigInt& o) const { return compare(*this, o) < 0; }
    bool operator>(const BigInt& o) const { return compare(*this, o) > 0; }
    bool operator<=(const BigInt& o) const { return compare(*this, o) <= 0; }
    bool operator>=(const BigInt& o) const { return compare(*this, o) >= 0; }

    // Value as int64 if it fits; used only in fast paths and printing.
    bool fits_int64() const;
    long long to_int64() const;

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // no trailing zero limbs; empty iff sign_==0

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace lzb

#endif
