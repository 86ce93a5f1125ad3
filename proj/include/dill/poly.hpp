#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace dill {

using Rational = mpq_class;
using Exponents = std::vector<unsigned>;

// A polynomial in a fixed number of variables with exact rational
// coefficients. Zero coefficients are never stored, so == is identity.
class Poly {
 public:
  explicit Poly(std::size_t arity = 0) : arity_(arity) {}
  static Poly constant(std::size_t arity, const Rational& c);
  static Poly var(std::size_t arity, std::size_t i);
  static Poly monomial(Exponents e, const Rational& c);

  std::size_t arity() const { return arity_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const Exponents& e, const Rational& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned k) const;
  Poly derivative(std::size_t i) const;
  // p(q_1, ..., q_n) where every q_i has the same arity
  Poly substitute(const std::vector<Poly>& qs) const;
  Rational eval(const std::vector<Rational>& x) const;

  std::string str(const std::vector<std::string>& names = {}) const;
  nlohmann::json to_json() const;
  static Poly from_json(std::size_t arity, const nlohmann::json& j);

  friend bool operator==(const Poly& a, const Poly& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

 private:
  std::size_t arity_;
  std::map<Exponents, Rational> terms_;
};

// A polynomial map R^dom -> R^cod.
struct PolyMap {
  std::size_t dom = 0;
  std::vector<Poly> coords;

  std::size_t cod() const { return coords.size(); }
  std::string str(const std::vector<std::string>& names = {}) const;
  nlohmann::json to_json() const;
  static PolyMap from_json(const nlohmann::json& j);
  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.dom == b.dom && a.coords == b.coords; }
};

namespace poly {

PolyMap id(std::size_t n);
PolyMap zero(std::size_t n, std::size_t m);
PolyMap compose(const PolyMap& f, const PolyMap& g);  // f ; g
PolyMap add(const PolyMap& f, const PolyMap& g);
PolyMap pair(const PolyMap& f, const PolyMap& g);     // ⟨f, g⟩ : n -> m + k
PolyMap proj(int i, std::size_t n, std::size_t m);    // n + m -> n or m
PolyMap plus(std::size_t n);                          // +_n : n + n -> n
PolyMap d_times(const PolyMap& f);                    // (x, v) -> J_f(x) v
std::vector<Rational> apply(const PolyMap& f, const std::vector<Rational>& x);
// ε-part of f(x + vε) computed over dual numbers
std::vector<Rational> dual_number_oracle(const PolyMap& f, const std::vector<Rational>& x,
                                         const std::vector<Rational>& v);
// degree <= max_degree, integer coefficients in [-c, c]
PolyMap random_map(std::mt19937_64& rng, std::size_t dom, std::size_t cod, unsigned max_degree, int c);
// every monic monomial map R^n -> R with total degree <= d
std::vector<PolyMap> monomials(std::size_t n, unsigned d);

}  // namespace poly

}  // namespace dill
