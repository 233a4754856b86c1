#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), represented on the
// power basis zeta^0 .. zeta^{phi(N)-1} modulo the N-th cyclotomic
// polynomial. Conductors are normalized to N != 2 (mod 4) and grow
// lazily: binary operations embed both operands into the lcm conductor.

#include "hopfq/polynomial.hpp"
#include "hopfq/rational.hpp"

#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

namespace hopfq {

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(int v) : conductor_(1), coeffs_{Rational(v)} {}
  Cyclotomic(Rational v) : conductor_(1), coeffs_{std::move(v)} {}

  /// Phi_N, the N-th cyclotomic polynomial (cached; map nodes are stable,
  /// so the reference stays valid after the lock is released).
  static const Poly<Rational>& min_poly(const Int& N) {
    if (N < 1) throw error("cyclotomic polynomial needs N >= 1");
    static std::map<Int, Poly<Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return min_poly_locked(N, cache);
  }

  /// A primitive N-th root of unity.
  static Cyclotomic zeta(const Int& N) { return zeta_power(N, 1); }

  /// zeta_N^k in canonical form (minimal conductor for pure roots).
  static Cyclotomic zeta_power(const Int& N, const Int& k_in) {
    if (N < 1) throw error("zeta_power needs N >= 1");
    Int k = mod_floor(k_in, N);
    if (k == 0) return Cyclotomic(1);
    Int g = gcd_int(N, k);
    Int n = N / g, kk = k / g;
    if (n == 1) return Cyclotomic(1);
    if (n == 2) return Cyclotomic(-1);
    if (mod_floor(n, 4) == 2) {
      // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m, and kk is odd here
      Int m = n / 2;
      return -zeta_power(m, mod_floor(((m + 1) / 2) * kk, m));
    }
    Cyclotomic out;
    out.conductor_ = n;
    std::vector<Rational> mono(static_cast<std::size_t>(to_long(kk)) + 1, Rational(0));
    mono.back() = 1;
    out.coeffs_ = reduce(Poly<Rational>(std::move(mono)), n);
    out.normalize();
    return out;
  }

  const Int& conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const { return conductor_ == 1; }
  Rational as_rational() const {
    if (!is_rational()) throw error("cyclotomic value is not rational");
    return coeffs_[0];
  }
  bool is_one() const { return is_rational() && coeffs_[0] == 1; }

  /// True when all power-basis coefficients are integers, i.e. the element
  /// lies in Z[zeta]. Roots of unity always do.
  bool has_integer_coeffs() const {
    for (const auto& c : coeffs_)
      if (!is_integer(c)) return false;
    return true;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = unify(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    x.normalize();
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = unify(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    x.normalize();
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic x = a;
    for (auto& c : x.coeffs_) c = -c;
    return x;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational()) return b.scaled(a.coeffs_[0]);
    if (b.is_rational()) return a.scaled(b.coeffs_[0]);
    auto [x, y] = unify(a, b);
    if (auto fast = int_mul(x, y)) return *fast;
    Poly<Rational> p = Poly<Rational>(std::move(x.coeffs_)) * Poly<Rational>(std::move(y.coeffs_));
    Cyclotomic out;
    out.conductor_ = x.conductor_;
    out.coeffs_ = reduce(p, x.conductor_);
    out.normalize();
    return out;
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  Cyclotomic scaled(const Rational& r) const {
    Cyclotomic x = *this;
    for (auto& c : x.coeffs_) c *= r;
    x.normalize();
    return x;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw error("division by zero cyclotomic");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    // extended Euclid in Q[t] against Phi_N
    Poly<Rational> a{std::vector<Rational>(coeffs_)};
    Poly<Rational> b = min_poly(conductor_);
    Poly<Rational> r0 = a, r1 = b;
    Poly<Rational> s0 = Poly<Rational>::constant(Rational(1)), s1;
    while (!r1.is_zero()) {
      auto [q, r] = Poly<Rational>::divmod(r0, r1);
      Poly<Rational> s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 is a nonzero constant (Phi_N is irreducible over Q)
    if (!r0.is_constant() || r0.is_zero()) throw error("cyclotomic inverse failed");
    Cyclotomic out;
    out.conductor_ = conductor_;
    out.coeffs_ = reduce(s0.scaled(Rational(1) / r0.constant_value()), conductor_);
    out.normalize();
    return out;
  }

  Cyclotomic pow(Int e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this, acc(1);
    while (e > 0) {
      if (mod_floor(e, 2) == 1) acc = acc * base;
      base = base * base;
      e /= 2;
    }
    return acc;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = unify(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Embed into Q(zeta_N); the current conductor must divide N.
  Cyclotomic embedded_into(const Int& N) const {
    if (N == conductor_) return *this;
    if (mod_floor(N, conductor_) != 0) throw error("embedding target is not a multiple conductor");
    Int step = N / conductor_;
    std::size_t top = coeffs_.size() - 1;
    std::vector<Rational> v(static_cast<std::size_t>(to_long(Int(top) * step)) + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      v[static_cast<std::size_t>(to_long(Int(j) * step))] = coeffs_[j];
    Cyclotomic out;
    out.conductor_ = N;
    out.coeffs_ = reduce(Poly<Rational>(std::move(v)), N);
    return out;
  }

  /// Smallest n with x^n = 1, or nullopt when x is not a root of unity.
  /// Roots of unity in Q(zeta_N) are exactly the elements of mu_{lcm(2,N)}.
  std::optional<Int> root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    if (is_rational()) {
      if (coeffs_[0] == 1) return Int(1);
      if (coeffs_[0] == -1) return Int(2);
      return std::nullopt;
    }
    if (!has_integer_coeffs()) return std::nullopt;  // Z[zeta] is the ring of integers
    Int L = mod_floor(conductor_, 2) == 1 ? 2 * conductor_ : conductor_;
    auto factors = factorize(L);
    Cyclotomic one(1);
    Int order = 1;
    for (const auto& [p, a] : factors) {
      // component of the order at p: smallest b with (x^{L/p^a})^{p^b} = 1
      Int pa = pow_int(p, a);
      Cyclotomic t = pow(L / pa);
      unsigned b = 0;
      while (!(t == one)) {
        t = t.pow(p);
        ++b;
        if (Int(b) > Int(a)) return std::nullopt;  // x^L != 1
      }
      order *= pow_int(p, b);
    }
    return order;
  }

  /// Rewrites the value in the smallest cyclotomic subfield it lies in.
  /// Worth doing only for small conductors; used for canonical printing.
  Cyclotomic reduced() const {
    if (conductor_ == 1 || euler_phi(conductor_) > 64) return *this;
    Cyclotomic cur = *this;
    bool changed = true;
    while (changed && cur.conductor_ > 1) {
      changed = false;
      for (const auto& [p, e] : factorize(cur.conductor_)) {
        Int cand = cur.conductor_ / p;
        if (cand > 1 && mod_floor(cand, 4) == 2) cand /= 2;
        if (cand < 1) continue;
        if (auto down = cur.try_descend(cand)) {
          cur = *down;
          changed = true;
          break;
        }
      }
    }
    return cur;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const Rational& c = coeffs_[j];
      if (c == 0) continue;
      Rational abs = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (j == 0) {
        os << to_string(abs);
      } else {
        if (abs != 1) os << to_string(abs) << "*";
        os << "zeta(" << conductor_ << ")";
        if (j > 1) os << "^" << j;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  Int conductor_;                  // >= 1, never 2 mod 4
  std::vector<Rational> coeffs_;   // length phi(conductor_)

  void normalize() {
    if (conductor_ == 1) return;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return;
    Rational c0 = coeffs_[0];
    conductor_ = 1;
    coeffs_ = {std::move(c0)};
  }

  /// Small-integer multiplication fast path. Root-of-unity arithmetic stays
  /// in Z[zeta] with tiny coefficients, where cpp_rational convolution is
  /// needlessly slow; falls back to the exact path on any overflow risk.
  static std::optional<Cyclotomic> int_mul(const Cyclotomic& x, const Cyclotomic& y) {
    auto small_vec = [](const std::vector<Rational>& v) -> std::optional<std::vector<long long>> {
      const long long cap = 1LL << 40;
      std::vector<long long> out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (den(v[i]) != 1) return std::nullopt;
        Int n = num(v[i]);
        if (n > cap || n < -cap) return std::nullopt;
        out[i] = static_cast<long long>(to_long(n));
      }
      return out;
    };
    auto xv = small_vec(x.coeffs_);
    if (!xv) return std::nullopt;
    auto yv = small_vec(y.coeffs_);
    if (!yv) return std::nullopt;
    const std::vector<long long>* phi = int_min_poly(x.conductor_);
    if (!phi) return std::nullopt;
    std::size_t deg = x.coeffs_.size();
    std::vector<__int128> prod(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      if ((*xv)[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j)
        prod[i + j] += static_cast<__int128>((*xv)[i]) * (*yv)[j];
    }
    // reduce modulo the monic Phi_N, guarding against growth
    const __int128 guard = static_cast<__int128>(1) << 100;
    for (std::size_t top = prod.size(); top > deg; --top) {
      __int128 factor = prod[top - 1];
      if (factor == 0) continue;
      std::size_t shift = top - 1 - deg;
      for (std::size_t i = 0; i < deg; ++i) {
        prod[i + shift] -= factor * (*phi)[i];
        if (prod[i + shift] > guard || prod[i + shift] < -guard) return std::nullopt;
      }
      prod[top - 1] = 0;
    }
    Cyclotomic out;
    out.conductor_ = x.conductor_;
    out.coeffs_.reserve(deg);
    for (std::size_t i = 0; i < deg; ++i) {
      __int128 v = prod[i];
      bool neg = v < 0;
      if (neg) v = -v;
      Int big = 0;
      Int base = Int(1) << 62;
      Int lowpart = Int(static_cast<long long>(v & ((1ULL << 62) - 1)));
      Int highpart = Int(static_cast<long long>(v >> 62));
      big = highpart * base + lowpart;
      out.coeffs_.push_back(neg ? Rational(-big) : Rational(big));
    }
    out.normalize();
    return out;
  }

  /// Phi_N with int64 coefficients when they fit (they do at desk scale).
  static const std::vector<long long>* int_min_poly(const Int& N) {
    static std::map<Int, std::optional<std::vector<long long>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) {
      const Poly<Rational>& phi = min_poly(N);
      std::optional<std::vector<long long>> v{std::in_place};
      v->resize(static_cast<std::size_t>(phi.degree()));
      for (std::size_t i = 0; i < v->size(); ++i) {
        const Rational& c = phi.coeff(i);
        if (den(c) != 1 || num(c) > (1LL << 40) || num(c) < -(1LL << 40)) {
          v.reset();
          break;
        }
        (*v)[i] = static_cast<long long>(to_long(num(c)));
      }
      it = cache.emplace(N, std::move(v)).first;
    }
    return it->second ? &*it->second : nullptr;
  }

  static std::vector<Rational> reduce(const Poly<Rational>& p, const Int& N) {
    std::size_t deg = static_cast<std::size_t>(to_long(euler_phi(N)));
    Poly<Rational> r = p.degree() >= static_cast<long>(deg) ? p % min_poly(N) : p;
    std::vector<Rational> out(deg, Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.coeff(i);
    return out;
  }

  static std::pair<Cyclotomic, Cyclotomic> unify(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return {a, b};
    Int L = lcm_int(a.conductor_, b.conductor_);
    return {a.embedded_into(L), b.embedded_into(L)};
  }

  std::optional<Cyclotomic> try_descend(const Int& M) const {
    if (mod_floor(conductor_, M) != 0) return std::nullopt;
    // Solve sum_j x_j * embed(zeta_M^j) = this, exactly.
    std::size_t cols = static_cast<std::size_t>(to_long(euler_phi(M)));
    std::size_t rows = coeffs_.size();
    std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j) {
      Cyclotomic basis = zeta_power(M, Int(j)).embedded_into(conductor_);
      for (std::size_t i = 0; i < rows; ++i) mat[i][j] = basis.coeffs_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) mat[i][cols] = coeffs_[i];
    // Gaussian elimination
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
      std::size_t pr = SIZE_MAX;
      for (std::size_t i = row; i < rows; ++i)
        if (mat[i][col] != 0) {
          pr = i;
          break;
        }
      if (pr == SIZE_MAX) continue;
      std::swap(mat[row], mat[pr]);
      Rational inv = Rational(1) / mat[row][col];
      for (auto& x : mat[row]) x *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == row || mat[i][col] == 0) continue;
        Rational f = mat[i][col];
        for (std::size_t j2 = col; j2 <= cols; ++j2) mat[i][j2] -= f * mat[row][j2];
      }
      pivot_of_col[col] = row;
      ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
      if (mat[i][cols] != 0) return std::nullopt;  // inconsistent: not in the subfield
    Cyclotomic out;
    out.conductor_ = M;
    out.coeffs_.assign(cols, Rational(0));
    for (std::size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] != SIZE_MAX) out.coeffs_[col] = mat[pivot_of_col[col]][cols];
    out.normalize();
    return out;
  }

  static const Poly<Rational>& min_poly_locked(const Int& N,
                                               std::map<Int, Poly<Rational>>& cache) {
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    Poly<Rational> phi;
    if (N == 1) {
      phi = Poly<Rational>(std::vector<Rational>{Rational(-1), Rational(1)});
    } else {
      std::vector<Rational> v(static_cast<std::size_t>(to_long(N)) + 1, Rational(0));
      v[0] = -1;
      v.back() = 1;
      Poly<Rational> quot(std::move(v));  // t^N - 1
      for (const auto& d : divisors(N)) {
        if (d == N) continue;
        quot = quot / min_poly_locked(d, cache);
      }
      phi = std::move(quot);
    }
    return cache.emplace(N, std::move(phi)).first->second;
  }
};

}  // namespace hopfq
