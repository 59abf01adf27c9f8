#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fukaya {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Coefficient field: the rationals or a prime field F_p.
// Elements are stored as Rat; for F_p the canonical representative is the
// integer residue in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field gf(unsigned p) {
    if (p < 2) throw Error("field: characteristic must be a prime >= 2");
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error("field: characteristic must be prime");
    Field f;
    f.p_ = p;
    return f;
  }
  static Field parse(const std::string& name) {
    if (name == "q" || name == "Q") return rationals();
    if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F'))
      return gf(static_cast<unsigned>(std::stoul(name.substr(1))));
    throw Error("field: unknown field '" + name + "'");
  }

  unsigned characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }
  bool operator==(const Field& o) const { return p_ == o.p_; }

  Rat reduce(const Rat& x) const {
    if (p_ == 0) return x;
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    Int p = p_;
    Int n = num % p;
    if (n < 0) n += p;
    Int d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw Error("field: division by zero in F_p reduction");
    return Rat((n * inv_mod(d)) % p);
  }

  Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
  Rat neg(const Rat& a) const { return reduce(-a); }
  Rat inv(const Rat& a) const {
    if (is_zero(a)) throw Error("field: inverse of zero");
    if (p_ == 0) return Rat(1) / a;
    Int n = boost::multiprecision::numerator(reduce(a));
    return Rat(inv_mod(n));
  }
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
  bool is_zero(const Rat& a) const { return reduce(a) == 0; }
  bool eq(const Rat& a, const Rat& b) const { return is_zero(a - b); }
  Rat from_int(long n) const { return reduce(Rat(n)); }

  // number of field elements, 0 meaning infinite
  unsigned order() const { return p_; }

 private:
  Int inv_mod(Int a) const {
    Int p = p_;
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw Error("field: inverse of zero mod p");
    // extended Euclid
    Int t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      Int q = r / newr;
      Int tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r > 1) throw Error("field: element not invertible");
    if (t < 0) t += p;
    return t;
  }

  unsigned p_ = 0;
};

}  // namespace fukaya
