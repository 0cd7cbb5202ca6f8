#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace nestlat {

/// Exact rational quaternion a + b*i + c*j + d*k.
struct Quaternion {
    mpq_class a, b, c, d;

    Quaternion() : a(0), b(0), c(0), d(0) {}
    Quaternion(mpq_class a_, mpq_class b_, mpq_class c_, mpq_class d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        d.canonicalize();
    }

    bool operator==(const Quaternion& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    Quaternion operator+(const Quaternion& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    Quaternion operator-() const { return {-a, -b, -c, -d}; }
    Quaternion operator-(const Quaternion& o) const { return *this + (-o); }

    Quaternion operator*(const Quaternion& o) const {
        return {a * o.a - b * o.b - c * o.c - d * o.d,
                a * o.b + b * o.a + c * o.d - d * o.c,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a};
    }

    Quaternion conjugate() const { return {a, -b, -c, -d}; }

    /// Reduced norm a^2 + b^2 + c^2 + d^2; zero only for the zero quaternion.
    mpq_class norm() const { return a * a + b * b + c * c + d * d; }

    Quaternion inverse() const {
        if (is_zero()) throw std::domain_error("quaternion inverse of zero");
        mpq_class n = norm();
        Quaternion cj = conjugate();
        return {cj.a / n, cj.b / n, cj.c / n, cj.d / n};
    }
};

/// Ring selector. The opposite ring shares element representations and
/// differs only in the order of multiplication, so it is a flag here:
/// opposite(opposite(R)) is R itself.
class Ring {
public:
    enum class Kind { rationals, prime_field, quaternions };

    static Ring rationals() { return Ring(Kind::rationals, 0, false); }
    static Ring quaternions() { return Ring(Kind::quaternions, 0, false); }
    static Ring prime_field(std::uint64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("GF(p): p must be prime");
        return Ring(Kind::prime_field, p, false);
    }
    static Ring opposite(const Ring& r) { return Ring(r.kind_, r.p_, !r.reversed_); }

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    bool reversed() const { return reversed_; }
    bool finite() const { return kind_ == Kind::prime_field; }
    bool commutative() const { return kind_ != Kind::quaternions; }

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && reversed_ == o.reversed_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string base;
        switch (kind_) {
            case Kind::rationals: base = "Q"; break;
            case Kind::prime_field: base = "GF(" + std::to_string(p_) + ")"; break;
            case Kind::quaternions: base = "H(Q)"; break;
        }
        return reversed_ ? "op(" + base + ")" : base;
    }

    /// Accepts "Q", "GF(p)", "H(Q)", and "op(<descriptor>)".
    static Ring parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s == "H(Q)") return quaternions();
        if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
            std::string body = s.substr(3, s.size() - 4);
            if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad ring descriptor: " + s);
            return prime_field(std::stoull(body));
        }
        if (s.rfind("op(", 0) == 0 && s.back() == ')')
            return opposite(parse(s.substr(3, s.size() - 4)));
        throw std::invalid_argument("bad ring descriptor: " + s);
    }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    Ring(Kind k, std::uint64_t p, bool rev) : kind_(k), p_(p), reversed_(rev) {}
    Kind kind_;
    std::uint64_t p_;
    bool reversed_;
};

/// An element of a division ring. Immutable value type; arithmetic checks
/// that both operands carry the same ring tag.
class Elem {
public:
    Elem() : ring_(Ring::rationals()), v_(mpq_class(0)) {}

    static Elem zero(const Ring& r) { return make(r, false); }
    static Elem one(const Ring& r) { return make(r, true); }

    static Elem rational(mpq_class q, const Ring& r = Ring::rationals()) {
        if (r.kind() != Ring::Kind::rationals)
            throw std::invalid_argument("rational value in non-rational ring");
        q.canonicalize();
        return Elem(r, std::move(q));
    }
    static Elem gf(std::uint64_t residue, const Ring& r) {
        if (r.kind() != Ring::Kind::prime_field)
            throw std::invalid_argument("residue value in non-GF ring");
        return Elem(r, residue % r.modulus());
    }
    static Elem quaternion(Quaternion q, const Ring& r = Ring::quaternions()) {
        if (r.kind() != Ring::Kind::quaternions)
            throw std::invalid_argument("quaternion value in non-quaternion ring");
        return Elem(r, std::move(q));
    }

    /// Integer literal in any ring instance.
    static Elem from_int(long n, const Ring& r) {
        switch (r.kind()) {
            case Ring::Kind::rationals: return Elem(r, mpq_class(n));
            case Ring::Kind::prime_field: {
                long m = n % static_cast<long>(r.modulus());
                if (m < 0) m += static_cast<long>(r.modulus());
                return Elem(r, static_cast<std::uint64_t>(m));
            }
            case Ring::Kind::quaternions:
                return Elem(r, Quaternion(mpq_class(n), 0, 0, 0));
        }
        throw std::logic_error("unreachable");
    }

    const Ring& ring() const { return ring_; }

    /// Same underlying value, re-tagged to the opposite ring.
    Elem retag_opposite() const { return Elem(Ring::opposite(ring_), v_); }

    bool is_zero() const {
        return std::visit(
            [](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, mpq_class>) return v == 0;
                else if constexpr (std::is_same_v<T, std::uint64_t>) return v == 0;
                else return v.is_zero();
            },
            v_);
    }
    bool is_one() const { return *this == one(ring_); }

    bool operator==(const Elem& o) const { return ring_ == o.ring_ && v_ == o.v_; }
    bool operator!=(const Elem& o) const { return !(*this == o); }

    Elem operator+(const Elem& o) const {
        check_ring(o);
        if (auto* q = std::get_if<mpq_class>(&v_))
            return Elem(ring_, mpq_class(*q + std::get<mpq_class>(o.v_)));
        if (auto* g = std::get_if<std::uint64_t>(&v_))
            return Elem(ring_, (*g + std::get<std::uint64_t>(o.v_)) % ring_.modulus());
        return Elem(ring_, std::get<Quaternion>(v_) + std::get<Quaternion>(o.v_));
    }

    Elem operator-() const {
        if (auto* q = std::get_if<mpq_class>(&v_)) return Elem(ring_, mpq_class(-*q));
        if (auto* g = std::get_if<std::uint64_t>(&v_))
            return Elem(ring_, (ring_.modulus() - *g) % ring_.modulus());
        return Elem(ring_, -std::get<Quaternion>(v_));
    }
    Elem operator-(const Elem& o) const { return *this + (-o); }

    Elem operator*(const Elem& o) const {
        check_ring(o);
        // The opposite ring multiplies in reverse order.
        const Elem& l = ring_.reversed() ? o : *this;
        const Elem& r = ring_.reversed() ? *this : o;
        if (auto* q = std::get_if<mpq_class>(&l.v_))
            return Elem(ring_, mpq_class(*q * std::get<mpq_class>(r.v_)));
        if (auto* g = std::get_if<std::uint64_t>(&l.v_))
            return Elem(ring_, mulmod(*g, std::get<std::uint64_t>(r.v_), ring_.modulus()));
        return Elem(ring_, std::get<Quaternion>(l.v_) * std::get<Quaternion>(r.v_));
    }

    Elem inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (auto* q = std::get_if<mpq_class>(&v_))
            return Elem(ring_, mpq_class(1 / *q));
        if (auto* g = std::get_if<std::uint64_t>(&v_))
            return Elem(ring_, gf_inv(*g, ring_.modulus()));
        // In the opposite ring the two-sided inverse is the same element.
        return Elem(ring_, std::get<Quaternion>(v_).inverse());
    }

    const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
    std::uint64_t as_residue() const { return std::get<std::uint64_t>(v_); }
    const Quaternion& as_quaternion() const { return std::get<Quaternion>(v_); }

    std::string str() const {
        std::ostringstream os;
        if (auto* q = std::get_if<mpq_class>(&v_)) {
            os << *q;
        } else if (auto* g = std::get_if<std::uint64_t>(&v_)) {
            os << *g;
        } else {
            const Quaternion& q = std::get<Quaternion>(v_);
            os << "[" << q.a << ", " << q.b << ", " << q.c << ", " << q.d << "]";
        }
        return os.str();
    }

private:
    using Value = std::variant<mpq_class, std::uint64_t, Quaternion>;

    Elem(Ring r, Value v) : ring_(r), v_(std::move(v)) {}

    static Elem make(const Ring& r, bool one) {
        switch (r.kind()) {
            case Ring::Kind::rationals: return Elem(r, mpq_class(one ? 1 : 0));
            case Ring::Kind::prime_field:
                return Elem(r, static_cast<std::uint64_t>(one ? 1 : 0));
            case Ring::Kind::quaternions:
                return Elem(r, Quaternion(mpq_class(one ? 1 : 0), 0, 0, 0));
        }
        throw std::logic_error("unreachable");
    }

    void check_ring(const Elem& o) const {
        if (ring_ != o.ring_)
            throw std::invalid_argument("ring mismatch: " + ring_.to_string() + " vs " +
                                        o.ring_.to_string());
    }

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }

    static std::uint64_t gf_inv(std::uint64_t a, std::uint64_t p) {
        // Extended Euclid on (a, p).
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(t);
    }

    Ring ring_;
    Value v_;
};

/// The i, j, k units of H(Q).
inline Elem quat_i(const Ring& r = Ring::quaternions()) {
    return Elem::quaternion(Quaternion(0, 1, 0, 0), r);
}
inline Elem quat_j(const Ring& r = Ring::quaternions()) {
    return Elem::quaternion(Quaternion(0, 0, 1, 0), r);
}
inline Elem quat_k(const Ring& r = Ring::quaternions()) {
    return Elem::quaternion(Quaternion(0, 0, 0, 1), r);
}

/// All p elements of a finite ring instance, each exactly once.
inline std::vector<Elem> enumerate_elements(const Ring& r) {
    if (!r.finite()) throw std::domain_error("enumerate_elements: infinite ring");
    std::vector<Elem> out;
    out.reserve(r.modulus());
    for (std::uint64_t x = 0; x < r.modulus(); ++x) out.push_back(Elem::gf(x, r));
    return out;
}

}  // namespace nestlat
