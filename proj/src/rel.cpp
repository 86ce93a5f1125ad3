#include "dill/rel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "dill/error.hpp"

namespace dill {

namespace {

constexpr std::size_t kU = RelMor::kUnknown;
constexpr std::size_t kN = RelMor::kMaxBound;

using Table = std::vector<std::size_t>;

template <class F>
Table tabulate(F f) {
  Table t(kN + 1);
  for (std::size_t b = 0; b <= kN; ++b) t[b] = f(b);
  return t;
}

Table constant(std::size_t v) { return Table(kN + 1, v); }
Table same() { return tabulate([](std::size_t b) { return b; }); }

std::size_t add(std::size_t a, std::size_t b) { return a == kU || b == kU ? kU : a + b; }
std::size_t dec(std::size_t b) { return b == kU ? kU : b - 1; }
std::size_t smax(std::size_t a, std::size_t b) { return a == kU || b == kU ? kU : std::max(a, b); }

// largest element of a type regardless of carriers, when bags are absent
std::optional<std::size_t> static_size(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Atom: return 1;
    case TypeKind::Unit:
    case TypeKind::Zero: return 0;
    case TypeKind::Tensor: {
      std::size_t s = 0;
      for (const auto& f : t.kids()) {
        auto m = static_size(f);
        if (!m) return std::nullopt;
        s += *m;
      }
      return s;
    }
    case TypeKind::Biproduct: {
      auto l = static_size(t.left());
      auto r = static_size(t.right());
      if (!l || !r) return std::nullopt;
      return std::max(*l, *r);
    }
    default: return std::nullopt;
  }
}

void need_eq(const Type& a, const Type& b, const std::string& ctx) {
  if (a != b) throw Error(ErrorKind::TypeMismatch, ctx + ": " + a.str() + " vs " + b.str());
}

const Type& need_bang(const Type& t, const std::string& ctx) {
  if (t.kind() != TypeKind::Bang) throw Error(ErrorKind::DomainNotBang, ctx + " needs a !-object, got " + t.str());
  return t.inner();
}

void keep_within(Image& img, std::size_t bound) {
  img.erase(std::remove_if(img.begin(), img.end(), [&](const Element& e) { return e.size() > bound; }), img.end());
}

Element bag_of(const std::vector<Element>& items) { return Element::bag(items); }

// max input sum over bags of outputs y_i with sum(1 + |y_i|) <= b, where an
// output of size s costs at most in(s) on the input side
Table knapsack(const std::function<std::size_t(std::size_t)>& in) {
  Table best(kN + 1, 0);
  for (std::size_t b = 1; b <= kN; ++b) {
    std::size_t v = best[b - 1];
    for (std::size_t s = 0; s + 1 <= b && v != kU; ++s) v = smax(v, add(in(s), best[b - 1 - s]));
    best[b] = v;
  }
  return best;
}

// Shares forward images across calls. Relations are immutable, so the cache
// only ever grows; errors are not cached.
RelMor memo(const RelMor& r) {
  if (r.shape() != RelMor::Shape::General) return r;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<Element, std::size_t>, Image> images;
  };
  auto cache = std::make_shared<Cache>();
  return RelMor(
      r.dom(), r.cod(),
      [r, cache](const Element& x, std::size_t b) {
        auto key = std::make_pair(x, b);
        {
          std::lock_guard<std::mutex> lock(cache->mu);
          if (auto it = cache->images.find(key); it != cache->images.end()) return it->second;
        }
        Image img = r.image(x, b);
        std::lock_guard<std::mutex> lock(cache->mu);
        cache->images.emplace(std::move(key), img);
        return img;
      },
      r.back_table(), r.label(), r.shape());
}

}  // namespace

RelMor::RelMor(Type dom, Type cod, Forward fwd, std::vector<std::size_t> back, std::string label, Shape shape)
    : p_(std::make_shared<const Impl>(
          Impl{std::move(dom), std::move(cod), std::move(fwd), std::move(back), std::move(label), shape})) {}

Image RelMor::image(const Element& x, std::size_t bound) const { return p_->fwd(x, bound); }

std::size_t RelMor::back(std::size_t bound) const {
  if (bound > kMaxBound) return kUnknown;
  return p_->back[bound];
}

namespace rel {

RelMor id(const Type& a) {
  return RelMor(
      a, a,
      [](const Element& x, std::size_t b) { return x.size() <= b ? Image{x} : Image{}; },
      same(), "id", RelMor::Shape::Identity);
}

RelMor compose(const RelMor& r, const RelMor& s) {
  need_eq(r.cod(), s.dom(), "compose");
  if (r.shape() == RelMor::Shape::Identity) return s;
  if (s.shape() == RelMor::Shape::Identity) return r;
  if (r.shape() == RelMor::Shape::Zero || s.shape() == RelMor::Shape::Zero) return zero(r.dom(), s.cod());
  Table t = tabulate([&](std::size_t b) { return r.back(s.back(b)); });
  return RelMor(
      r.dom(), s.cod(),
      [r, s = memo(s)](const Element& x, std::size_t b) {
        Image out;
        for (const auto& y : r.image(x, s.back(b))) {
          auto z = s.image(y, b);
          out.insert(out.end(), z.begin(), z.end());
        }
        normalize(out);
        return out;
      },
      std::move(t), r.label() + ";" + s.label());
}

RelMor compose(std::initializer_list<RelMor> chain) {
  auto it = chain.begin();
  RelMor acc = *it++;
  for (; it != chain.end(); ++it) acc = compose(acc, *it);
  return acc;
}

RelMor tensor(const RelMor& r, const RelMor& s) {
  Type dom = Type::tensor(r.dom(), s.dom());
  Type cod = Type::tensor(r.cod(), s.cod());
  if (r.shape() == RelMor::Shape::Identity && s.shape() == RelMor::Shape::Identity) return id(dom);
  if (r.shape() == RelMor::Shape::Zero || s.shape() == RelMor::Shape::Zero) return zero(dom, cod);
  Table t = tabulate([&](std::size_t b) {
    std::size_t v = 0;
    for (std::size_t o = 0; o <= b; ++o) v = smax(v, add(r.back(o), s.back(b - o)));
    return v;
  });
  std::size_t la = r.dom().arity(), ra = s.dom().arity();
  std::size_t lb = r.cod().arity(), rb = s.cod().arity();
  return RelMor(
      dom, cod,
      [r, s, la, ra, lb, rb](const Element& x, std::size_t b) {
        auto [x1, x2] = split_pair(x, la, ra);
        Image out;
        auto i1 = r.image(x1, b);
        if (i1.empty()) return out;
        std::size_t m1 = i1.front().size();
        for (const auto& y : i1) m1 = std::min(m1, y.size());
        auto i2 = s.image(x2, b == kU ? kU : b - m1);
        for (const auto& y1 : i1) {
          for (const auto& y2 : i2) {
            if (b != kU && y1.size() + y2.size() > b) continue;
            out.push_back(join_pair(y1, lb, y2, rb));
          }
        }
        normalize(out);
        return out;
      },
      std::move(t), "(" + r.label() + "⊗" + s.label() + ")");
}

RelMor tensor(std::initializer_list<RelMor> parts) {
  auto it = parts.begin();
  RelMor acc = *it++;
  for (; it != parts.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

RelMor sum(const RelMor& r, const RelMor& s) {
  need_eq(r.dom(), s.dom(), "sum domain");
  need_eq(r.cod(), s.cod(), "sum codomain");
  if (r.shape() == RelMor::Shape::Zero) return s;
  if (s.shape() == RelMor::Shape::Zero) return r;
  Table t = tabulate([&](std::size_t b) { return smax(r.back(b), s.back(b)); });
  return RelMor(
      r.dom(), r.cod(),
      [r, s](const Element& x, std::size_t b) {
        Image out = r.image(x, b);
        auto z = s.image(x, b);
        out.insert(out.end(), z.begin(), z.end());
        normalize(out);
        return out;
      },
      std::move(t), "(" + r.label() + "+" + s.label() + ")");
}

RelMor zero(const Type& dom, const Type& cod) {
  return RelMor(dom, cod, [](const Element&, std::size_t) { return Image{}; }, constant(0), "0",
                RelMor::Shape::Zero);
}

RelMor sym(const Type& a, const Type& b) {
  std::size_t la = a.arity(), lb = b.arity();
  return RelMor(
      Type::tensor(a, b), Type::tensor(b, a),
      [la, lb](const Element& x, std::size_t bound) {
        if (x.size() > bound) return Image{};
        auto [x1, x2] = split_pair(x, la, lb);
        return Image{join_pair(x2, lb, x1, la)};
      },
      same(), "σ");
}

RelMor inj(int i, const Type& a, const Type& b) {
  return RelMor(
      i == 1 ? a : b, Type::biproduct(a, b),
      [i](const Element& x, std::size_t bound) {
        return x.size() <= bound ? Image{Element::tag(i, x)} : Image{};
      },
      same(), "ι" + std::to_string(i));
}

RelMor proj(int i, const Type& a, const Type& b) {
  return RelMor(
      Type::biproduct(a, b), i == 1 ? a : b,
      [i](const Element& x, std::size_t bound) {
        if (x.side() != i || x.size() > bound) return Image{};
        return Image{x.inner()};
      },
      same(), "π" + std::to_string(i));
}

RelMor pairing(const RelMor& r, const RelMor& s) {
  need_eq(r.dom(), s.dom(), "pairing");
  return sum(compose(r, inj(1, r.cod(), s.cod())), compose(s, inj(2, r.cod(), s.cod())));
}

RelMor copairing(const RelMor& r, const RelMor& s) {
  need_eq(r.cod(), s.cod(), "copairing");
  return sum(compose(proj(1, r.dom(), s.dom()), r), compose(proj(2, r.dom(), s.dom()), s));
}

RelMor biprod(const RelMor& r, const RelMor& s) {
  return copairing(compose(r, inj(1, r.cod(), s.cod())), compose(s, inj(2, r.cod(), s.cod())));
}

RelMor dist(const Type& a, const Type& b, const Type& c) {
  std::size_t la = a.arity(), lb = b.arity(), lc = c.arity();
  return RelMor(
      Type::tensor(a, Type::biproduct(b, c)),
      Type::biproduct(Type::tensor(a, b), Type::tensor(a, c)),
      [la, lb, lc](const Element& x, std::size_t bound) {
        if (x.size() > bound) return Image{};
        auto [x1, x2] = split_pair(x, la, 1);
        int side = x2.side();
        return Image{Element::tag(side, join_pair(x1, la, x2.inner(), side == 1 ? lb : lc))};
      },
      same(), "dist");
}

RelMor dereliction(const Type& a) {
  return RelMor(
      Type::bang(a), a,
      [](const Element& m, std::size_t b) {
        if (m.items().size() != 1 || m.items()[0].size() > b) return Image{};
        return Image{m.items()[0]};
      },
      tabulate([](std::size_t b) { return b + 1; }), "𝐝");
}

RelMor weakening(const Type& a) {
  return RelMor(
      Type::bang(a), Type::unit(),
      [](const Element& m, std::size_t) { return m.items().empty() ? Image{Element::star()} : Image{}; },
      constant(0), "𝐰");
}

RelMor coweakening(const Type& a) {
  return RelMor(
      Type::unit(), Type::bang(a),
      [](const Element&, std::size_t) { return Image{Element::bag({})}; }, constant(0), "𝐰̄");
}

RelMor contraction(const Type& a) {
  Type ba = Type::bang(a);
  return RelMor(
      ba, Type::tensor(ba, ba),
      [](const Element& m, std::size_t b) {
        if (m.size() > b) return Image{};
        Image out;
        for (const auto& [l, r] : bag_splittings(m)) out.push_back(Element::tuple({l, r}));
        normalize(out);
        return out;
      },
      same(), "𝐜");
}

RelMor deriving(const Type& a) {
  Type ba = Type::bang(a);
  std::size_t la = a.arity();
  return RelMor(
      Type::tensor(ba, a), ba,
      [la](const Element& x, std::size_t b) {
        auto [m, v] = split_pair(x, 1, la);
        Element out = bag_union(m, Element::bag({v}));
        return out.size() <= b ? Image{out} : Image{};
      },
      same(), "∂");
}

RelMor seely(const Type& a, const Type& b) {
  return RelMor(
      Type::bang(Type::biproduct(a, b)), Type::tensor(Type::bang(a), Type::bang(b)),
      [](const Element& m, std::size_t bound) {
        if (m.size() > bound) return Image{};
        std::vector<Element> l, r;
        for (const auto& v : m.items()) (v.side() == 1 ? l : r).push_back(v.inner());
        return Image{Element::tuple({Element::bag(std::move(l)), Element::bag(std::move(r))})};
      },
      same(), "s");
}

RelMor seely_inv(const Type& a, const Type& b) {
  return RelMor(
      Type::tensor(Type::bang(a), Type::bang(b)), Type::bang(Type::biproduct(a, b)),
      [](const Element& x, std::size_t bound) {
        if (x.size() > bound) return Image{};
        std::vector<Element> items;
        for (const auto& v : x.items()[0].items()) items.push_back(Element::tag(1, v));
        for (const auto& v : x.items()[1].items()) items.push_back(Element::tag(2, v));
        return Image{Element::bag(std::move(items))};
      },
      same(), "s⁻¹");
}

namespace {

RelMor promote_labelled(const RelMor& r, std::string label) {
  need_bang(r.dom(), "promotion");
  Table t = knapsack([r](std::size_t s) { return r.back(s); });
  return RelMor(
      r.dom(), Type::bang(r.cod()),
      [r = memo(r)](const Element& m, std::size_t b) {
        std::set<Element> results;
        std::map<Element, Image> cache;
        std::size_t inner = b == 0 ? 0 : dec(b);
        auto f = [&](const Element& part) -> const Image& {
          auto it = cache.find(part);
          if (it == cache.end()) it = cache.emplace(part, b == 0 ? Image{} : r.image(part, inner)).first;
          return it->second;
        };
        const Image& empties = f(Element::bag({}));
        if (b == kU && !empties.empty()) {
          throw Error(ErrorKind::BudgetExhausted, "promotion at an unbounded size has an infinite image");
        }
        std::vector<Element> chosen;
        std::function<void(std::size_t, std::size_t)> extras = [&](std::size_t from, std::size_t budget) {
          results.insert(bag_of(chosen));
          for (std::size_t i = from; i < empties.size(); ++i) {
            std::size_t cost = 1 + empties[i].size();
            if (cost > budget) continue;
            chosen.push_back(empties[i]);
            extras(i, budget - cost);
            chosen.pop_back();
          }
        };
        std::function<void(std::vector<Element>, std::size_t)> parts = [&](std::vector<Element> rem,
                                                                            std::size_t budget) {
          if (rem.empty()) {
            extras(0, budget);
            return;
          }
          Element head = rem.front();
          std::vector<Element> rest(rem.begin() + 1, rem.end());
          for (const auto& [with, without] : bag_splittings(Element::bag(rest))) {
            std::vector<Element> items = with.items();
            items.push_back(head);
            for (const auto& y : f(Element::bag(items))) {
              std::size_t cost = 1 + y.size();
              if (cost > budget) continue;
              chosen.push_back(y);
              parts(without.items(), budget - cost);
              chosen.pop_back();
            }
          }
        };
        parts(m.items(), b);
        return Image(results.begin(), results.end());
      },
      std::move(t), std::move(label));
}

}  // namespace

RelMor promote(const RelMor& r) { return promote_labelled(r, "prom(" + r.label() + ")"); }

RelMor comult(const Type& a) { return promote_labelled(id(Type::bang(a)), "𝐩"); }

RelMor bang_map(const RelMor& r) {
  if (r.shape() == RelMor::Shape::Identity) return id(Type::bang(r.dom()));
  Table t = knapsack([r](std::size_t s) { return add(1, r.back(s)); });
  return RelMor(
      Type::bang(r.dom()), Type::bang(r.cod()),
      [r](const Element& m, std::size_t b) {
        Image out;
        if (b != kU && m.items().size() > b) return out;
        std::vector<Image> per;
        for (const auto& v : m.items()) {
          per.push_back(b == kU ? r.image(v, kU) : r.image(v, b - 1));
          if (per.back().empty()) return out;
        }
        std::vector<Element> chosen;
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t budget) {
          if (i == per.size()) {
            out.push_back(bag_of(chosen));
            return;
          }
          for (const auto& y : per[i]) {
            std::size_t cost = 1 + y.size();
            if (cost > budget) continue;
            chosen.push_back(y);
            go(i + 1, budget - cost);
            chosen.pop_back();
          }
        };
        go(0, b);
        normalize(out);
        return out;
      },
      std::move(t), "!" + r.label());
}

RelMor bang_in_context(const RelMor& u, const Type& ctx, const Type& a) {
  // the context bag is shared out among the copies of A
  need_bang(ctx, "bang in context");
  need_eq(u.dom(), Type::tensor(ctx, a), "bang in context");
  std::size_t la = a.arity();
  Table t = knapsack([u](std::size_t s) { return add(1, u.back(s)); });
  return RelMor(
      Type::tensor(ctx, Type::bang(a)), Type::bang(u.cod()),
      [u, la](const Element& x, std::size_t b) {
        auto [gamma, as] = split_pair(x, 1, 1);
        std::vector<Element> items = as.items();
        std::set<Element> results;
        std::vector<Element> chosen;
        std::function<void(std::size_t, const Element&, std::size_t)> go = [&](std::size_t i, const Element& rest,
                                                                              std::size_t budget) {
          if (i == items.size()) {
            if (rest.items().empty()) results.insert(bag_of(chosen));
            return;
          }
          for (const auto& [part, left] : bag_splittings(rest)) {
            if (budget == 0) return;
            for (const auto& y : u.image(join_pair(part, 1, items[i], la), budget == kU ? kU : budget - 1)) {
              std::size_t cost = 1 + y.size();
              if (budget != kU && cost > budget) continue;
              chosen.push_back(y);
              go(i + 1, left, budget == kU ? kU : budget - cost);
              chosen.pop_back();
            }
          }
        };
        go(0, gamma, b);
        return Image(results.begin(), results.end());
      },
      std::move(t), "!ctx(" + u.label() + ")");
}

RelMor mutant_deriving(const Type& a) {
  Type ba = Type::bang(a);
  std::size_t la = a.arity();
  auto ma = static_size(a);
  return RelMor(
      Type::tensor(ba, a), ba,
      [la](const Element& x, std::size_t b) {
        auto [m, v] = split_pair(x, 1, la);
        return m.size() <= b ? Image{m} : Image{};
      },
      tabulate([ma](std::size_t b) { return ma ? b + *ma : kU; }), "∂✗");
}

RelMor mutant_dereliction(const Type& a) {
  // restricted to bags of at most two items so the relation stays bounded
  auto ma = static_size(a);
  return RelMor(
      Type::bang(a), a,
      [](const Element& m, std::size_t b) {
        Image out;
        if (m.items().empty() || m.items().size() > 2) return out;
        for (const auto& v : m.items()) {
          if (v.size() <= b) out.push_back(v);
        }
        normalize(out);
        return out;
      },
      tabulate([ma](std::size_t b) { return ma ? b + 2 + *ma : kU; }), "𝐝✗");
}

RelMor mutant_contraction(const Type& a) {
  Type ba = Type::bang(a);
  return RelMor(
      ba, Type::tensor(ba, ba),
      [](const Element& m, std::size_t b) {
        if (m.size() > b) return Image{};
        Element e = Element::bag({});
        Image out{Element::tuple({m, e}), Element::tuple({e, m})};
        normalize(out);
        return out;
      },
      same(), "𝐜✗");
}

RelMor copy(const Type& a) {
  std::size_t la = a.arity();
  return RelMor(
      a, Type::tensor(a, a),
      [la](const Element& x, std::size_t b) {
        Element y = join_pair(x, la, x, la);
        return y.size() <= b ? Image{y} : Image{};
      },
      same(), "Δ");
}

RelMor discard(const Type& a) {
  auto ma = static_size(a);
  if (!ma) throw Error(ErrorKind::UnsupportedConstructor, "discard needs a bounded object, got " + a.str());
  return RelMor(
      a, Type::unit(), [](const Element&, std::size_t) { return Image{Element::star()}; }, constant(*ma), "!");
}

RelMor table(const Type& dom, const Type& cod, std::vector<std::pair<Element, Element>> rows, std::string label) {
  auto m = std::make_shared<std::map<Element, Image>>();
  std::size_t top = 0;
  for (auto& [x, y] : rows) {
    top = std::max(top, x.size());
    (*m)[x].push_back(y);
  }
  for (auto& [x, img] : *m) normalize(img);
  return RelMor(
      dom, cod,
      [m](const Element& x, std::size_t b) {
        auto it = m->find(x);
        if (it == m->end()) return Image{};
        Image out = it->second;
        keep_within(out, b);
        return out;
      },
      constant(top), std::move(label));
}

std::vector<std::pair<Element, Element>> graph(const RelMor& r, const std::vector<Element>& inputs, std::size_t m) {
  std::vector<std::pair<Element, Element>> out;
  for (const auto& x : inputs) {
    for (const auto& y : r.image(x, m)) out.emplace_back(x, y);
  }
  return out;
}

RelMor converse(const RelMor& r, const std::vector<Element>& inputs, std::size_t m) {
  auto g = graph(r, inputs, m);
  for (auto& [x, y] : g) std::swap(x, y);
  return table(r.cod(), r.dom(), std::move(g), r.label() + "°");
}

}  // namespace rel

}  // namespace dill
