#ifndef LZB_SCALAR_HPP
#define LZB_SCALAR_HPP

#include <cstdint>
#include <string>

#include "bigint.hpp"
#include "errors.hpp"

namespace lzb {

bool is_prime_u64(uint64_t n);

// Runtime field tag: the rationals or a prime field GF(p).  A runtime tag
// (rather than a template parameter) lets one binary load either field from
// input files; mixing tags in one operation is always a hard error.
struct Field {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    uint64_t p = 0;

    static Field rationals() { return Field{Kind::Rationals, 0}; }
    static Field gf(uint64_t p);

    bool is_rationals() const { return kind == Kind::Rationals; }
    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string str() const;
};

// Exact field element.  Rationals are kept in lowest terms with positive
// denominator; prime-field values are residues in [0, p).
class Scalar {
public:
    Scalar() = default;  // zero over Q

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long long v);
    static Scalar rational(BigInt num, BigInt den);          // normalizes
    static Scalar rational_int(BigInt v);
    static Scalar residue(const Field& f, uint64_t v);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for deterministic tie-breaking and printing.
    static int compare(const Scalar& a, const Scalar& b);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    uint64_t res() const { return res_; }

    std::string str() const;  // "3", "-1/2", residues as "4"

private:
    Field field_ = Field::rationals();
    // num_/den_ carry meaning only over the rationals; every rational
    // constructor sets den_ >= 1.  Prime-field values use res_ alone, so the
    // common finite-field path never touches the heap.
    BigInt num_;
    BigInt den_;
    uint64_t res_ = 0;

    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }
    void normalize();
};

uint64_t mod_inverse(uint64_t a, uint64_t p);

}  // namespace lzb

#endif
