#pragma once

// Exact rational numbers on top of boost::multiprecision.
//
// Every quantity in this library that the theory treats as a real number
// is in fact rational and is kept exact: values are stored in lowest terms
// with a positive denominator, and all comparisons are exact. There is no
// floating point anywhere downstream of this header.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace complements {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                           boost::multiprecision::et_off>;

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(make(num, den)) {}
    Rat(int num, int den) : Rat(Int(num), Int(den)) {}

    const Int numerator() const { return boost::multiprecision::numerator(v_); }
    const Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // Gauss bracket: largest integer <= *this.
    Int floor() const {
        Int q = numerator() / denominator();
        if (numerator() < 0 && q * denominator() != numerator()) --q;
        return q;
    }
    Int ceil() const { return -(-*this).floor(); }

    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    static boost::multiprecision::cpp_rational make(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) return {-num, -den};
        return {num, den};
    }
    boost::multiprecision::cpp_rational v_;
};

inline Rat abs(const Rat& r) { return r < 0 ? -r : r; }
inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// n * r is an integer?
inline bool is_integral_multiple(const Rat& r, const Int& n) {
    return (r * Rat(n)).is_integer();
}

// Parses "p", "p/q" or a decimal string like "-0.49" (exactly p/10^k).
// Returns nullopt on malformed input.
inline std::optional<Rat> parse_rat(std::string_view s) {
    auto is_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    Rat out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!is_digits(p) || !is_digits(q)) return std::nullopt;
        Int den{std::string(q)};
        if (den == 0) return std::nullopt;
        out = Rat(Int(std::string(p)), den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!is_digits(ip) || !is_digits(fp)) return std::nullopt;
        Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(fp.size()));
        out = Rat(Int(std::string(ip)) * scale + Int(std::string(fp)), scale);
    } else {
        if (!is_digits(s)) return std::nullopt;
        out = Rat(Int(std::string(s)));
    }
    return neg ? -out : out;
}

// Parse or throw; for trusted internal literals.
inline Rat rat(std::string_view s) {
    auto r = parse_rat(s);
    if (!r) throw std::invalid_argument("bad rational literal: " + std::string(s));
    return *r;
}

}  // namespace complements
