#include "dill/element.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "dill/error.hpp"

namespace dill {

Element Element::atom(std::string name) {
  Element e;
  e.kind_ = Kind::Atom;
  e.name_ = std::move(name);
  e.size_ = 1;
  return e;
}

Element Element::tuple(std::vector<Element> items) {
  Element e;
  e.kind_ = Kind::Tuple;
  for (const auto& i : items) e.size_ += i.size_;
  e.items_ = std::move(items);
  return e;
}

Element Element::tag(int side, Element inner) {
  Element e;
  e.kind_ = Kind::Tag;
  e.side_ = static_cast<std::int8_t>(side);
  e.size_ = inner.size_;
  e.items_.push_back(std::move(inner));
  return e;
}

Element Element::bag(std::vector<Element> items) {
  Element e;
  e.kind_ = Kind::Bag;
  std::sort(items.begin(), items.end());
  e.size_ = items.size();
  for (const auto& i : items) e.size_ += i.size_;
  e.items_ = std::move(items);
  return e;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case Element::Kind::Star: return std::strong_ordering::equal;
    case Element::Kind::Atom: return a.name_ <=> b.name_;
    case Element::Kind::Tag:
      if (auto c = a.side_ <=> b.side_; c != 0) return c;
      break;
    default: break;
  }
  const auto& x = a.items_;
  const auto& y = b.items_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::string Element::str() const {
  switch (kind_) {
    case Kind::Star: return "*";
    case Kind::Atom: return name_;
    case Kind::Tag: return "in" + std::to_string(side_) + " " + inner().str();
    case Kind::Tuple:
    case Kind::Bag: {
      std::string s = kind_ == Kind::Tuple ? "(" : "[";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) s += ",";
        s += items_[i].str();
      }
      return s + (kind_ == Kind::Tuple ? ")" : "]");
    }
  }
  return "?";
}

nlohmann::json Element::to_json() const {
  switch (kind_) {
    case Kind::Star: return nullptr;
    case Kind::Atom: return name_;
    case Kind::Tag: return {{side_ == 1 ? "in1" : "in2", inner().to_json()}};
    case Kind::Tuple: {
      auto arr = nlohmann::json::array();
      for (const auto& i : items_) arr.push_back(i.to_json());
      return arr;
    }
    case Kind::Bag: {
      auto arr = nlohmann::json::array();
      for (const auto& i : items_) arr.push_back(i.to_json());
      return {{"bag", arr}};
    }
  }
  return nullptr;
}

Element Element::from_json(const nlohmann::json& j) {
  if (j.is_null()) return star();
  if (j.is_string()) return atom(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Element> fs;
    for (const auto& x : j) fs.push_back(from_json(x));
    return from_factors(std::move(fs));
  }
  if (j.is_object() && j.size() == 1) {
    auto first = j.begin();
    const std::string key = first.key();
    const nlohmann::json& body = first.value();
    if (key == "in1" || key == "in2") return tag(key == "in1" ? 1 : 2, from_json(body));
    if (key == "bag" && body.is_array()) {
      std::vector<Element> items;
      for (const auto& x : body) items.push_back(from_json(x));
      return bag(std::move(items));
    }
  }
  throw Error(ErrorKind::Parse, "cannot read element " + j.dump());
}

void normalize(Image& img) {
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
}

std::vector<Element> factors_of(const Element& e, std::size_t arity) {
  if (arity == 0) return {};
  if (arity == 1) return {e};
  if (e.kind() != Element::Kind::Tuple || e.items().size() != arity) {
    throw Error(ErrorKind::TypeMismatch, "element " + e.str() + " is not a " + std::to_string(arity) + "-tuple");
  }
  return e.items();
}

Element from_factors(std::vector<Element> fs) {
  std::vector<Element> flat;
  for (auto& f : fs) {
    if (f.kind() == Element::Kind::Star) continue;
    if (f.kind() == Element::Kind::Tuple) {
      flat.insert(flat.end(), f.items().begin(), f.items().end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return Element::star();
  if (flat.size() == 1) return flat.front();
  return Element::tuple(std::move(flat));
}

std::pair<Element, Element> split_pair(const Element& e, std::size_t la, std::size_t ra) {
  auto fs = factors_of(e, la + ra);
  std::vector<Element> l(fs.begin(), fs.begin() + static_cast<long>(la));
  std::vector<Element> r(fs.begin() + static_cast<long>(la), fs.end());
  return {from_factors(std::move(l)), from_factors(std::move(r))};
}

Element join_pair(const Element& a, std::size_t la, const Element& b, std::size_t ra) {
  auto fs = factors_of(a, la);
  auto gs = factors_of(b, ra);
  fs.insert(fs.end(), gs.begin(), gs.end());
  if (fs.empty()) return Element::star();
  if (fs.size() == 1) return fs.front();
  return Element::tuple(std::move(fs));
}

Element bag_union(const Element& a, const Element& b) {
  std::vector<Element> items = a.items();
  items.insert(items.end(), b.items().begin(), b.items().end());
  return Element::bag(std::move(items));
}

std::vector<std::pair<Element, Element>> bag_splittings(const Element& m) {
  // group equal items, then choose a count per group
  std::vector<std::pair<Element, std::size_t>> groups;
  for (const auto& x : m.items()) {
    if (!groups.empty() && groups.back().first == x) {
      ++groups.back().second;
    } else {
      groups.push_back({x, 1});
    }
  }
  std::vector<std::pair<Element, Element>> out;
  std::vector<std::size_t> pick(groups.size(), 0);
  while (true) {
    std::vector<Element> l, r;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t i = 0; i < groups[g].second; ++i) {
        (i < pick[g] ? l : r).push_back(groups[g].first);
      }
    }
    out.emplace_back(Element::bag(std::move(l)), Element::bag(std::move(r)));
    std::size_t g = 0;
    while (g < groups.size() && pick[g] == groups[g].second) pick[g++] = 0;
    if (g == groups.size()) break;
    ++pick[g];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Enumerator {
  const AtomTable& atoms;
  std::size_t cap;
  std::size_t produced = 0;

  void bump(std::size_t k) {
    produced += k;
    if (produced > cap) {
      throw Error(ErrorKind::BudgetExhausted, "enumeration exceeded " + std::to_string(cap) + " elements");
    }
  }

  // every element of t with size <= n (unordered)
  std::vector<Element> all(const Type& t, std::size_t n) {
    std::vector<Element> out;
    switch (t.kind()) {
      case TypeKind::Atom: {
        auto it = atoms.find(t.name());
        if (it == atoms.end()) throw Error(ErrorKind::UnknownAtom, "atom '" + t.name() + "' has no carrier");
        if (n >= 1) {
          for (const auto& v : it->second) out.push_back(Element::atom(v));
        }
        break;
      }
      case TypeKind::Unit: out.push_back(Element::star()); break;
      case TypeKind::Zero: break;
      case TypeKind::Tensor: {
        std::vector<std::vector<Element>> per;
        for (const auto& f : t.kids()) per.push_back(all(f, n));
        std::vector<Element> cur;
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
          if (i == per.size()) {
            out.push_back(Element::tuple(cur));
            return;
          }
          for (const auto& e : per[i]) {
            if (used + e.size() > n) continue;
            cur.push_back(e);
            go(i + 1, used + e.size());
            cur.pop_back();
          }
        };
        go(0, 0);
        break;
      }
      case TypeKind::Biproduct:
        for (const auto& e : all(t.left(), n)) out.push_back(Element::tag(1, e));
        for (const auto& e : all(t.right(), n)) out.push_back(Element::tag(2, e));
        break;
      case TypeKind::Bang: {
        std::vector<Element> base = n >= 1 ? all(t.inner(), n - 1) : std::vector<Element>{};
        std::sort(base.begin(), base.end());
        std::vector<Element> cur;
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t from, std::size_t used) {
          out.push_back(Element::bag(cur));
          for (std::size_t i = from; i < base.size(); ++i) {
            std::size_t cost = 1 + base[i].size();
            if (used + cost > n) continue;
            cur.push_back(base[i]);
            go(i, used + cost);
            cur.pop_back();
          }
        };
        go(0, 0);
        break;
      }
      default:
        throw Error(ErrorKind::TypeMismatch, "cannot enumerate non-linear object " + t.str());
    }
    bump(out.size());
    return out;
  }
};

}  // namespace

bool element_of(const Element& e, const Type& t, const AtomTable& atoms) {
  switch (t.kind()) {
    case TypeKind::Atom: {
      auto it = atoms.find(t.name());
      if (it == atoms.end()) throw Error(ErrorKind::UnknownAtom, "atom '" + t.name() + "' has no carrier");
      return e.kind() == Element::Kind::Atom && std::find(it->second.begin(), it->second.end(), e.name()) != it->second.end();
    }
    case TypeKind::Unit: return e.kind() == Element::Kind::Star;
    case TypeKind::Tensor: {
      auto fs = t.factors();
      if (e.kind() != Element::Kind::Tuple || e.items().size() != fs.size()) return false;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!element_of(e.items()[i], fs[i], atoms)) return false;
      }
      return true;
    }
    case TypeKind::Biproduct:
      return e.kind() == Element::Kind::Tag && element_of(e.inner(), e.side() == 1 ? t.left() : t.right(), atoms);
    case TypeKind::Bang:
    case TypeKind::Free:
      if (e.kind() != Element::Kind::Bag) return false;
      for (const auto& x : e.items()) {
        if (!element_of(x, t.inner(), atoms)) return false;
      }
      return true;
    default: return false;
  }
}

std::vector<Element> enumerate_elements(const Type& t, std::size_t n, const AtomTable& atoms,
                                        std::size_t max_elements) {
  Enumerator en{atoms, max_elements};
  auto out = en.all(t, n);
  std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > max_elements) {
    throw Error(ErrorKind::BudgetExhausted, "enumeration exceeded " + std::to_string(max_elements) + " elements");
  }
  return out;
}

namespace {

bool inhabited(const Type& t, const AtomTable& atoms) {
  switch (t.kind()) {
    case TypeKind::Atom: {
      auto it = atoms.find(t.name());
      return it != atoms.end() && !it->second.empty();
    }
    case TypeKind::Zero: return false;
    case TypeKind::Tensor:
      for (const auto& f : t.kids()) {
        if (!inhabited(f, atoms)) return false;
      }
      return true;
    case TypeKind::Biproduct: return inhabited(t.left(), atoms) || inhabited(t.right(), atoms);
    default: return true;
  }
}

// largest element size of t, or nullopt when unbounded
std::optional<std::size_t> max_size(const Type& t, const AtomTable& atoms) {
  switch (t.kind()) {
    case TypeKind::Atom: {
      auto it = atoms.find(t.name());
      if (it == atoms.end()) throw Error(ErrorKind::UnknownAtom, "atom '" + t.name() + "' has no carrier");
      return std::size_t{1};
    }
    case TypeKind::Unit:
    case TypeKind::Zero:
      return std::size_t{0};
    case TypeKind::Tensor: {
      std::size_t s = 0;
      for (const auto& f : t.kids()) {
        auto m = max_size(f, atoms);
        if (!m) return std::nullopt;
        s += *m;
      }
      return s;
    }
    case TypeKind::Biproduct: {
      auto l = max_size(t.left(), atoms);
      auto r = max_size(t.right(), atoms);
      if (!l || !r) return std::nullopt;
      return std::max(*l, *r);
    }
    case TypeKind::Bang: {
      // only the bag over an empty carrier is bounded
      if (!inhabited(t.inner(), atoms)) return std::size_t{0};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

bool finite_within(const Type& t, std::size_t n, const AtomTable& atoms) {
  auto m = max_size(t, atoms);
  return m && *m <= n;
}

}  // namespace dill
