#include "scalar.hpp"

namespace lzb {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::gf(uint64_t p) {
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 31)) throw Error("prime modulus too large");
    return Field{Kind::Prime, p};
}

std::string Field::str() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p) + ")";
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    // extended Euclid on signed 64-bit; p < 2^31
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a % p);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("element not invertible mod p");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) s.den_ = BigInt(1);
    return s;
}

Scalar Scalar::one(const Field& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.num_ = BigInt(1);
        s.den_ = BigInt(1);
    } else {
        s.res_ = f.p > 1 ? 1 : 0;
    }
    return s;
}

Scalar Scalar::of_int(const Field& f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.num_ = BigInt(v);
        s.den_ = BigInt(1);
    } else {
        long long m = v % static_cast<long long>(f.p);
        if (m < 0) m += static_cast<long long>(f.p);
        s.res_ = static_cast<uint64_t>(m);
    }
    return s;
}

Scalar Scalar::rational(BigInt num, BigInt den) {
    if (den.is_zero()) throw Error("rational with zero denominator");
    Scalar s;
    s.field_ = Field::rationals();
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

Scalar Scalar::rational_int(BigInt v) {
    Scalar s;
    s.field_ = Field::rationals();
    s.num_ = std::move(v);
    s.den_ = BigInt(1);
    return s;
}

Scalar Scalar::residue(const Field& f, uint64_t v) {
    Scalar s;
    s.field_ = f;
    s.res_ = v % f.p;
    return s;
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? num_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? (num_.is_one() && den_.is_one()) : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        r.normalize();
    } else {
        r.res_ = (res_ + o.res_) % field_.p;
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_rationals()) {
        r.num_ = -r.num_;
    } else if (r.res_ != 0) {
        r.res_ = field_.p - r.res_;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals()) {
        r.num_ = num_ * o.num_;
        r.den_ = den_ * o.den_;
        r.normalize();
    } else {
        r.res_ = (res_ * o.res_) % field_.p;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Scalar r;
    r.field_ = field_;
    if (field_.is_rationals()) {
        r.num_ = den_;
        r.den_ = num_;
        r.normalize();
    } else {
        r.res_ = mod_inverse(res_, field_.p);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.is_rationals()) return num_ == o.num_ && den_ == o.den_;
    return res_ == o.res_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw FieldMismatch();
    if (a.field_.is_rationals())
        return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
    if (a.res_ != b.res_) return a.res_ < b.res_ ? -1 : 1;
    return 0;
}

std::string Scalar::str() const {
    if (!field_.is_rationals()) return std::to_string(res_);
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace lzb
