#ifndef PYRAMID_FIELD_HPP
#define PYRAMID_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pyramid {

// Exact rationals; the default coefficient field.
using Rational = mpq_class;

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Prime field of order P, offered as a faster alternative on the largest
// configurations.  P must be prime; 32003 is the default choice.
template <std::uint32_t P>
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long x) {
        long long r = x % static_cast<long long>(P);
        if (r < 0) r += P;
        v_ = static_cast<std::uint32_t>(r);
    }

    static constexpr std::uint32_t modulus() { return P; }
    std::uint32_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return Fp::raw((a.v_ + b.v_) % P); }
    friend Fp operator-(Fp a, Fp b) { return Fp::raw((a.v_ + P - b.v_) % P); }
    friend Fp operator-(Fp a) { return Fp::raw(a.v_ ? P - a.v_ : 0); }
    friend Fp operator*(Fp a, Fp b) {
        return Fp::raw(static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.v_) * b.v_ % P));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in GF(" + std::to_string(P) + ")");
        return pow(*this, P - 2);
    }

    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    static Fp raw(std::uint32_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
    static Fp pow(Fp b, std::uint32_t e) {
        Fp r(1);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    std::uint32_t v_;
};

using GF = Fp<32003>;

template <std::uint32_t P>
inline std::string to_string(const Fp<P>& x) { return std::to_string(x.value()); }

template <class K>
struct FieldName;
template <>
struct FieldName<Rational> {
    static constexpr const char* value = "rational";
};
template <std::uint32_t P>
struct FieldName<Fp<P>> {
    static constexpr const char* value = "gf";
};

}  // namespace pyramid

#endif  // PYRAMID_FIELD_HPP
