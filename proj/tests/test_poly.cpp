#include <doctest.h>

#include <random>

#include "dill/poly.hpp"
#include "dill/term.hpp"

using namespace dill;

namespace {

Poly x1() { return Poly::var(1, 0); }

PolyMap single(Poly p) { return {p.arity(), {p}}; }

// Embedding R^m -> R^n given, for each output, an input index or -1 for zero.
PolyMap select(std::size_t m, const std::vector<int>& from) {
  PolyMap e{m, {}};
  for (int i : from) e.coords.push_back(i < 0 ? Poly(m) : Poly::var(m, static_cast<std::size_t>(i)));
  return e;
}

// Coefficient of t in f(x + t v), from forward differences at t = 0..d:
// the coefficient equals sum_k (-1)^(k-1) Δ^k q(0) / k.
std::vector<Rational> difference_oracle(const PolyMap& f, const std::vector<Rational>& x,
                                        const std::vector<Rational>& v) {
  unsigned d = 0;
  for (const auto& c : f.coords) d = std::max(d, c.degree());
  std::vector<Rational> out;
  for (std::size_t j = 0; j < f.cod(); ++j) {
    std::vector<Rational> q;
    for (unsigned t = 0; t <= d; ++t) {
      std::vector<Rational> pt;
      for (std::size_t i = 0; i < x.size(); ++i) pt.push_back(x[i] + Rational(t) * v[i]);
      q.push_back(f.coords[j].eval(pt));
    }
    Rational coeff = 0;
    for (unsigned k = 1; k <= d; ++k) {
      std::vector<Rational> diff = q;
      for (unsigned r = 0; r < k; ++r) {
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
      }
      Rational term = diff[0] / Rational(k);
      coeff += (k % 2 == 1) ? term : Rational(-term);
    }
    coeff.canonicalize();
    out.push_back(coeff);
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly x = x1();
  Poly sq = x * x;
  CHECK(sq.degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(sq.eval({Rational(3)}) == 9);
  CHECK((x + Poly::constant(1, 1)).pow(2) == sq + x.scaled(2) + Poly::constant(1, 1));
  CHECK(sq.derivative(0) == x.scaled(2));
  CHECK(sq.substitute({x + Poly::constant(1, 1)}).eval({Rational(2)}) == 9);
}

TEST_CASE("composition, addition and zero maps") {
  Poly x = x1();
  PolyMap f = single(x * x);
  PolyMap g = single(x + Poly::constant(1, 1));
  CHECK(poly::compose(f, g) == single(x * x + Poly::constant(1, 1)));
  CHECK(poly::add(f, poly::zero(1, 1)) == f);
  PolyMap xy = single(Poly::var(2, 0) * Poly::var(2, 1));
  PolyMap diag = select(1, {0, 0});
  CHECK(poly::compose(diag, xy) == f);
  CHECK(poly::compose(poly::id(1), f) == f);
  CHECK(poly::compose(f, poly::id(1)) == f);
}

TEST_CASE("Jacobian derivatives") {
  PolyMap sq = single(x1() * x1());
  Poly x = Poly::var(2, 0), v = Poly::var(2, 1);
  CHECK(poly::d_times(sq) == single((x * v).scaled(2)));
  CHECK(poly::d_times(sq).str({"x", "v"}) == "(2*x*v)");

  PolyMap xy = single(Poly::var(2, 0) * Poly::var(2, 1));
  Poly a = Poly::var(4, 0), b = Poly::var(4, 1), v1 = Poly::var(4, 2), v2 = Poly::var(4, 3);
  CHECK(poly::d_times(xy) == single(b * v1 + a * v2));

  CHECK(poly::d_times(poly::id(2)) == poly::proj(2, 2, 2));
  CHECK(poly::d_times(single(Poly::constant(1, 7))) == single(Poly(2)));
  // a linear map differentiates to itself applied to the direction
  PolyMap lin{2, {Poly::var(2, 0).scaled(3) + Poly::var(2, 1).scaled(-2)}};
  CHECK(poly::d_times(lin) == poly::compose(poly::proj(2, 2, 2), lin));
}

TEST_CASE("chain rule instance") {
  PolyMap f = single(x1() * x1());
  PolyMap g = single(x1().pow(3));
  Poly x = Poly::var(2, 0), v = Poly::var(2, 1);
  CHECK(poly::d_times(poly::compose(f, g)) == single((x.pow(5) * v).scaled(6)));
  PolyMap rhs = poly::compose(poly::pair(poly::compose(poly::proj(1, 1, 1), f), poly::d_times(f)), poly::d_times(g));
  CHECK(rhs == poly::d_times(poly::compose(f, g)));
}

TEST_CASE("second derivative in the direction (0, k)") {
  PolyMap cube = single(x1().pow(3));
  // (g, h, k) -> ((g, h), (0, k)) then D[D[f]]
  PolyMap lhs = poly::compose(select(3, {0, 1, -1, 2}), poly::d_times(poly::d_times(cube)));
  PolyMap rhs = poly::compose(select(3, {0, 2}), poly::d_times(cube));
  CHECK(lhs == rhs);
  Poly g = Poly::var(3, 0), k = Poly::var(3, 2);
  CHECK(lhs == single((g * g * k).scaled(3)));
}

TEST_CASE("dual numbers agree with exact derivatives") {
  PolyMap sq = single(x1() * x1());
  CHECK(poly::dual_number_oracle(sq, {Rational(3)}, {Rational(1)}) == std::vector<Rational>{Rational(6)});
  CHECK(poly::apply(poly::d_times(sq), {Rational(3), Rational(1)}) == std::vector<Rational>{Rational(6)});

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 3;
    PolyMap f = poly::random_map(rng, n, 2, 4, 6);
    std::vector<Rational> x, v, xv;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(coord(rng), 1 + trial % 4);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(coord(rng));
    for (auto& q : x) q.canonicalize();
    xv = x;
    xv.insert(xv.end(), v.begin(), v.end());
    std::vector<Rational> want = difference_oracle(f, x, v);
    CHECK(poly::dual_number_oracle(f, x, v) == want);
    CHECK(poly::apply(poly::d_times(f), xv) == want);
  }
}

TEST_CASE("monomial corpus") {
  // monic monomials in n variables of degree <= d: C(n + d, d)
  CHECK(poly::monomials(1, 3).size() == 4);
  CHECK(poly::monomials(2, 3).size() == 10);
  CHECK(poly::monomials(3, 3).size() == 20);
}

TEST_CASE("polynomial maps round trip through JSON") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    PolyMap f = poly::random_map(rng, 2, 2, 3, 5);
    CHECK(PolyMap::from_json(f.to_json()) == f);
  }
  PolyMap half{1, {Poly::monomial({2}, Rational(1, 2))}};
  CHECK(PolyMap::from_json(half.to_json()) == half);
}

TEST_CASE("cartesian terms evaluate to polynomial maps") {
  Type r = Type::cart_atom("R");
  Type r2 = Type::cart_prod(r, r);
  PolyEnv env = {{"sq", single(x1() * x1())}, {"mul", single(Poly::var(2, 0) * Poly::var(2, 1))}};
  CHECK(poly_arity(r2) == 2);
  CHECK(poly_arity(Type::cart_unit()) == 0);
  Term sq = Term::generator("sq", r, r);
  Term mul = Term::generator("mul", r2, r);
  CHECK(eval_poly(Term::compose(Term::diag(r), mul), env) == env.at("sq"));
  CHECK(eval_poly(Term::dx(sq), env) == poly::d_times(env.at("sq")));
  CHECK(poly::apply(eval_poly(Term::dx(sq), env), {Rational(3), Rational(1)}) == std::vector<Rational>{Rational(6)});
  CHECK(eval_poly(Term::proj(2, r, r), env) == poly::proj(2, 1, 1));
}
