#include "dill/poly.hpp"

#include <numeric>

#include "dill/error.hpp"

namespace dill {

namespace {

void need_arity(std::size_t a, std::size_t b, const char* ctx) {
  if (a != b) {
    throw Error(ErrorKind::ArityMismatch, std::string(ctx) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

struct Dual {
  Rational a, b;
  Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
  Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }
};

// integers are plain JSON numbers unless they overflow a long
nlohmann::json int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

Poly Poly::var(std::size_t arity, std::size_t i) {
  Exponents e(arity, 0);
  e.at(i) = 1;
  return monomial(std::move(e), 1);
}

Poly Poly::monomial(Exponents e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  need_arity(e.size(), arity_, "term");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  need_arity(arity_, o.arity_, "poly +");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::operator*(const Poly& o) const {
  need_arity(arity_, o.arity_, "poly *");
  Poly r(arity_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(arity_);
      for (std::size_t i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(arity_);
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(arity_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::derivative(std::size_t i) const {
  Poly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e.at(i) == 0) continue;
    Exponents d = e;
    --d[i];
    r.add_term(d, c * e[i]);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& qs) const {
  need_arity(qs.size(), arity_, "substitute");
  std::size_t k = qs.empty() ? 0 : qs.front().arity();
  for (const auto& q : qs) need_arity(q.arity(), k, "substitute");
  std::vector<std::vector<Poly>> powers(arity_);
  Poly r(k);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(k, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(k, 1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * qs[i]);
      t = t * pw[e[i]];
    }
    r = r + t;
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  need_arity(x.size(), arity_, "eval");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      for (unsigned j = 0; j < e[i]; ++j) t *= x[i];
    }
    s += t;
  }
  return s;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  // highest degree first for readability
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      std::string v = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = abs(c);
    std::string coef = a.get_str();
    std::string body = mono.empty() ? coef : (a == 1 ? mono : coef + "*" + mono);
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + body;
    } else {
      s += (c < 0 ? " - " : " + ") + body;
    }
  }
  return s;
}

nlohmann::json Poly::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    arr.push_back({{"exponents", e}, {"num", int_json(c.get_num())}, {"den", int_json(c.get_den())}});
  }
  return arr;
}

Poly Poly::from_json(std::size_t arity, const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "polynomial must be a list of terms");
  Poly p(arity);
  auto big = [](const nlohmann::json& v) {
    return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(std::to_string(v.get<long long>()));
  };
  for (const auto& t : j) {
    auto e = t.at("exponents").get<Exponents>();
    need_arity(e.size(), arity, "exponents");
    mpz_class den = t.contains("den") ? big(t.at("den")) : mpz_class(1);
    if (den <= 0) throw Error(ErrorKind::Parse, "den must be positive");
    Rational c(big(t.at("num")), den);
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

std::string PolyMap::str(const std::vector<std::string>& names) const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ", " : "") + coords[i].str(names);
  return s + ")";
}

nlohmann::json PolyMap::to_json() const {
  auto cs = nlohmann::json::array();
  for (const auto& p : coords) cs.push_back(p.to_json());
  return {{"dom", dom}, {"coords", cs}};
}

PolyMap PolyMap::from_json(const nlohmann::json& j) {
  PolyMap f;
  f.dom = j.at("dom").get<std::size_t>();
  for (const auto& c : j.at("coords")) f.coords.push_back(Poly::from_json(f.dom, c));
  return f;
}

namespace poly {

PolyMap id(std::size_t n) {
  PolyMap f{n, {}};
  for (std::size_t i = 0; i < n; ++i) f.coords.push_back(Poly::var(n, i));
  return f;
}

PolyMap zero(std::size_t n, std::size_t m) { return {n, std::vector<Poly>(m, Poly(n))}; }

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  need_arity(f.cod(), g.dom, "compose");
  PolyMap r{f.dom, {}};
  for (const auto& p : g.coords) r.coords.push_back(p.substitute(f.coords));
  if (g.dom == 0) {
    // constants of a nullary map, lifted to f's arity
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
      Poly lifted(f.dom);
      for (const auto& [e, c] : g.coords[i].terms()) lifted.add_term(Exponents(f.dom, 0), c);
      r.coords[i] = lifted;
    }
  }
  return r;
}

PolyMap add(const PolyMap& f, const PolyMap& g) {
  need_arity(f.dom, g.dom, "add domain");
  need_arity(f.cod(), g.cod(), "add codomain");
  PolyMap r{f.dom, {}};
  for (std::size_t i = 0; i < f.cod(); ++i) r.coords.push_back(f.coords[i] + g.coords[i]);
  return r;
}

PolyMap pair(const PolyMap& f, const PolyMap& g) {
  need_arity(f.dom, g.dom, "pair");
  PolyMap r = f;
  r.coords.insert(r.coords.end(), g.coords.begin(), g.coords.end());
  return r;
}

PolyMap proj(int i, std::size_t n, std::size_t m) {
  PolyMap r{n + m, {}};
  std::size_t from = i == 1 ? 0 : n, len = i == 1 ? n : m;
  for (std::size_t k = 0; k < len; ++k) r.coords.push_back(Poly::var(n + m, from + k));
  return r;
}

PolyMap plus(std::size_t n) { return add(proj(1, n, n), proj(2, n, n)); }

PolyMap d_times(const PolyMap& f) {
  std::size_t n = f.dom;
  // x_i -> x_i and v_i -> x_{n+i}
  std::vector<Poly> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Poly::var(2 * n, i));
  PolyMap r{2 * n, {}};
  for (const auto& p : f.coords) {
    Poly s(2 * n);
    for (std::size_t i = 0; i < n; ++i) s = s + p.derivative(i).substitute(xs) * Poly::var(2 * n, n + i);
    if (n == 0) s = Poly(0);
    r.coords.push_back(s);
  }
  return r;
}

std::vector<Rational> apply(const PolyMap& f, const std::vector<Rational>& x) {
  std::vector<Rational> y;
  for (const auto& p : f.coords) y.push_back(p.eval(x));
  return y;
}

std::vector<Rational> dual_number_oracle(const PolyMap& f, const std::vector<Rational>& x,
                                         const std::vector<Rational>& v) {
  need_arity(x.size(), f.dom, "oracle point");
  need_arity(v.size(), f.dom, "oracle direction");
  std::vector<Rational> out;
  for (const auto& p : f.coords) {
    Dual s{0, 0};
    for (const auto& [e, c] : p.terms()) {
      Dual t{c, 0};
      for (std::size_t i = 0; i < f.dom; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) t = t * Dual{x[i], v[i]};
      }
      s = s + t;
    }
    out.push_back(s.b);
  }
  return out;
}

PolyMap random_map(std::mt19937_64& rng, std::size_t dom, std::size_t cod, unsigned max_degree, int c) {
  std::uniform_int_distribution<int> coef(-c, c);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> nterms(1, 4);
  std::uniform_int_distribution<std::size_t> var(0, dom ? dom - 1 : 0);
  PolyMap f{dom, {}};
  for (std::size_t j = 0; j < cod; ++j) {
    Poly p(dom);
    std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t) {
      Exponents e(dom, 0);
      unsigned d = deg(rng);
      for (unsigned s = 0; s < d && dom; ++s) ++e[var(rng)];
      p.add_term(e, coef(rng));
    }
    f.coords.push_back(p);
  }
  return f;
}

std::vector<PolyMap> monomials(std::size_t n, unsigned d) {
  std::vector<PolyMap> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      out.push_back({n, {Poly::monomial(e, 1)}});
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace poly

}  // namespace dill
