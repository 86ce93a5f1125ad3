#include <random>

#include "dill/error.hpp"
#include "dill/random_tables.hpp"
#include "dill/verify.hpp"
#include "suite.hpp"

namespace dill {

namespace {

void lnl_suite(Suite& s, const Catalog& cat) {
  auto m = s.m;
  for (const auto& x : cat.bases) {
    std::string inst = "X=" + x.str();
    s.add("lnl.triangle-F", inst, [=, &s] {
      return from_comparison(s.eq(rel::compose(m->F(m->eta(x)), m->counit(m->F(x))), rel::id(m->F(x))));
    });
    s.add("lnl.contraction", inst,
          [=, &s] { return from_comparison(s.eq(m->contraction_derived(x), m->contraction(x))); });
    s.add("lnl.weakening", inst, [=, &s] { return from_comparison(s.eq(m->weakening_derived(x), m->weakening(x))); });
    s.add("lnl.cont-dagger", inst, [=, &s] {
      CMor lhs = m->c_compose(m->eta(x), m->U(m->contraction(x)));
      CMor rhs = m->c_chain({m->diag(x), m->c_prod(m->eta(x), m->eta(x)), m->n(m->F(x), m->F(x))});
      return from_comparison(s.ceq(lhs, rhs));
    });
    s.add("lnl.comonoid-counit", inst, [=, &s] {
      RelMor lhs = rel::compose(m->contraction(x), rel::tensor(m->weakening(x), rel::id(m->F(x))));
      return from_comparison(s.eq(lhs, rel::id(m->F(x))));
    });
    s.add("lnl.comonoid-comm", inst, [=, &s] {
      RelMor lhs = rel::compose(m->contraction(x), rel::sym(m->F(x), m->F(x)));
      return from_comparison(s.eq(lhs, m->contraction(x)));
    });
    s.add("lnl.comonoid-assoc", inst, [=, &s] {
      Type fx = m->F(x);
      RelMor lhs = rel::compose(m->contraction(x), rel::tensor(m->contraction(x), rel::id(fx)));
      RelMor rhs = rel::compose(m->contraction(x), rel::tensor(rel::id(fx), m->contraction(x)));
      return from_comparison(s.eq(lhs, rhs));
    });
    for (const auto& y : cat.bases) {
      std::string inst2 = inst + ",Y=" + y.str();
      s.add("lnl.m-iso", inst2, [=, &s] {
        Type fxy = m->F(m->prod(x, y));
        Comparison c = s.eq(rel::compose(m->m_inv(x, y), m->m(x, y)), rel::id(fxy));
        return from_comparison(
            both(c, s.eq(rel::compose(m->m(x, y), m->m_inv(x, y)), rel::id(Type::tensor(m->F(x), m->F(y))))));
      });
      s.add("lnl.colax", inst2, [=, &s] { return from_comparison(s.eq(m->colax_p(x, y), m->m_inv(x, y))); });
      s.add("lnl.F-pi", inst2, [=, &s] {
        // m_{X,J};F(π_J;f) = 𝐰_X⊗F(f) with f = id
        RelMor lhs = rel::compose(m->m(x, y), m->F(m->proj2(x, y)));
        RelMor rhs = rel::tensor(m->weakening(x), m->F(m->c_id(y)));
        return from_comparison(s.eq(lhs, rhs));
      });
    }
  }
  s.add("lnl.m-unit-iso", "I", [=, &s] {
    Comparison c = s.eq(rel::compose(m->m_unit(), m->m_unit_inv()), rel::id(Type::unit()));
    return from_comparison(both(c, s.eq(rel::compose(m->m_unit_inv(), m->m_unit()), rel::id(m->F(m->terminal())))));
  });
  s.add("lnl.colax-unit", "I", [=, &s] { return from_comparison(s.eq(m->colax_p_unit(), m->m_unit_inv())); });
  s.add("lnl.lax-colax-unit", "I",
        [=, &s] { return from_comparison(s.ceq(m->lax_from_colax_unit(), m->n_unit())); });
  for (const auto& a : cat.objects) {
    std::string inst = "A=" + a.str();
    Type ua = m->U(a);
    s.add("lnl.triangle-U", inst, [=, &s] {
      return from_comparison(s.ceq(m->c_compose(m->eta(ua), m->U(m->counit(a))), m->c_id(ua)));
    });
    s.add("lnl.comult", inst, [=, &s] { return from_comparison(s.eq(m->comult_derived(a), m->comult(a))); });
    s.add("lnl.bang", inst, [=, &s] {
      RelMor u = rel::id(a);
      return from_comparison(s.eq(m->bang_derived(u), m->bang(u)));
    });
    s.add("lnl.comonad-counit-l", inst, [=, &s] {
      return from_comparison(s.eq(rel::compose(m->comult(a), m->counit(m->bang_obj(a))), rel::id(m->bang_obj(a))));
    });
    s.add("lnl.comonad-counit-r", inst, [=, &s] {
      return from_comparison(s.eq(rel::compose(m->comult(a), m->bang(m->counit(a))), rel::id(m->bang_obj(a))));
    });
    s.add("lnl.comonad-assoc", inst, [=, &s] {
      RelMor lhs = rel::compose(m->comult(a), m->comult(m->bang_obj(a)));
      RelMor rhs = rel::compose(m->comult(a), m->bang(m->comult(a)));
      return from_comparison(s.eq(lhs, rhs));
    });
    for (const auto& b : cat.atoms) {
      std::string inst2 = inst + ",B=" + b.str();
      s.add("lnl.lax-colax", inst2, [=, &s] { return from_comparison(s.ceq(m->lax_from_colax(a, b), m->n(a, b))); });
      s.add("lnl.bang-lax", inst2,
            [=, &s] { return from_comparison(s.eq(m->bang_lax_derived(a, b), m->bang_lax(a, b))); });
    }
  }
  for (const auto& nc : cat.cmaps) {
    const CMor f = nc.value;
    if (f.dom.kind() != TypeKind::Atom) continue;
    for (const auto& y : cat.atoms) {
      std::string inst = "f=" + nc.name + ",Y=" + y.str();
      s.add("lnl.m-natural", inst, [=, &s] {
        // F(f×id);m⁻¹ = m⁻¹;F(f)⊗F(id)
        RelMor lhs = rel::compose(m->F(m->c_prod(f, m->c_id(y))), m->m_inv(f.cod, y));
        RelMor rhs = rel::compose(m->m_inv(f.dom, y), rel::tensor(m->F(f), m->F(m->c_id(y))));
        return from_comparison(s.eq(lhs, rhs));
      });
    }
    s.add("lnl.F-functor", "f=" + nc.name, [=, &s] {
      Comparison c = s.eq(m->F(m->c_compose(m->c_id(f.dom), f)), m->F(f));
      return from_comparison(both(c, s.eq(m->F(m->c_id(f.dom)), rel::id(m->F(f.dom)))));
    });
  }
}

void fibration_suite(Suite& s, const Catalog& cat) {
  auto m = s.m;
  auto fib = s.fib;
  auto rng = std::make_shared<std::mt19937_64>(s.budget.seed + 17);
  TableGen gen(*m, *rng);

  // reindexing: split laws, functoriality, strict monoidality
  for (const auto& w1 : cat.cmaps) {
    if (w1.value.dom.kind() != TypeKind::Atom || w1.value.cod.kind() != TypeKind::Atom) continue;
    const Type x = w1.value.cod;
    for (const auto& a : cat.atoms) {
      VMor v = gen.vertical(x, a, a);
      VMor v2 = gen.vertical(x, a, a);
      CMor w = w1.value;
      std::string inst = "w=" + w1.name + ",A=" + a.str();
      s.add("fib.split-id", inst, [=, &s] { return from_comparison(s.veq(fib->reindex(m->c_id(x), v), v)); });
      s.add("fib.reindex-compose", inst, [=, &s] {
        VMor lhs = fib->reindex(w, fib->v_compose(v, v2));
        VMor rhs = fib->v_compose(fib->reindex(w, v), fib->reindex(w, v2));
        return from_comparison(s.veq(lhs, rhs));
      });
      s.add("fib.reindex-id", inst,
            [=, &s] { return from_comparison(s.veq(fib->reindex(w, fib->v_id(x, a)), fib->v_id(w.dom, a))); });
      s.add("fib.reindex-tensor", inst, [=, &s] {
        VMor lhs = fib->reindex(w, fib->fibre_tensor(v, v2));
        VMor rhs = fib->fibre_tensor(fib->reindex(w, v), fib->reindex(w, v2));
        return from_comparison(s.veq(lhs, rhs));
      });
      s.add("fib.reindex-sym", inst, [=, &s] {
        return from_comparison(s.veq(fib->reindex(w, fib->fibre_sym(x, a, a)), fib->fibre_sym(w.dom, a, a)));
      });
      s.add("fib.ls-unit", inst, [=, &s] {
        LSMor g = fib->as_ls(v);
        Comparison c = s.lseq(fib->ls_compose(fib->ls_id(g.dom), g), g);
        return from_comparison(both(c, s.lseq(fib->ls_compose(g, fib->ls_id(g.cod)), g)));
      });
    }
  }
  // split composition of genuinely composable pairs and LS associativity
  for (const auto& g1 : cat.cmaps) {
    for (const auto& g2 : cat.cmaps) {
      const CMor f1 = g1.value, f2 = g2.value;
      if (f1.cod != f2.dom || f1.dom.kind() != TypeKind::Atom || f2.cod.kind() != TypeKind::Atom) continue;
      if (g1.name.rfind("t0", 0) != 0 && g1.name.rfind("id", 0) != 0) continue;
      const Type a = cat.atoms.front();
      VMor v = gen.vertical(f2.cod, a, a);
      CMor u2 = gen.cmap(m->prod(f1.cod, a), a);
      std::string inst = "f=" + g1.name + ",g=" + g2.name;
      s.add("fib.split-comp", inst, [=, &s] {
        VMor lhs = fib->reindex(m->c_compose(f1, f2), v);
        VMor rhs = fib->reindex(f1, fib->reindex(f2, v));
        return from_comparison(s.veq(lhs, rhs));
      });
      s.add("fib.lift-functor", inst, [=, &s] {
        LSMor lhs = fib->lift(m->c_compose(f1, f2), a);
        LSMor rhs = fib->ls_compose(fib->lift(f1, a), fib->lift(f2, a));
        return from_comparison(s.lseq(lhs, rhs));
      });
      s.add("fib.s-compose", inst, [=, &s] {
        SMor a1 = fib->s_lift(f1, a);
        SMor a2{{f1.cod, a}, {f2.cod, a}, f2, u2};
        return from_comparison(s.seq(fib->s_compose(a1, a2), fib->s_compose_direct(a1, a2)));
      });
    }
  }
  for (const auto& ng : cat.lsmaps) {
    const LSMor g = ng.value;
    // the F(η) form explores !!X up to large sizes, so this cross-check runs at N <= 3
    Budget small = s.budget;
    small.n = std::min<std::size_t>(small.n, 3);
    s.add("fib.bang-S", ng.name + ",N=" + std::to_string(small.n), [=] {
      return from_comparison(lsmor_equal(*m, fib->bang_S(g), fib->bang_S_derived(g), small));
    });
  }
  for (std::size_t i = 0; i < cat.lsmaps.size(); ++i) {
    for (std::size_t j = 0; j < cat.lsmaps.size(); ++j) {
      const LSMor g = cat.lsmaps[i].value, h = cat.lsmaps[j].value;
      if (!(g.cod == h.dom)) continue;
      std::string inst = cat.lsmaps[i].name + ";" + cat.lsmaps[j].name;
      LSMor k = fib->ls_id(h.cod);
      for (const auto& nk : cat.lsmaps) {
        if (nk.value.dom == h.cod && &nk != &cat.lsmaps[j]) {
          k = nk.value;
          inst += ";" + nk.name;
          break;
        }
      }
      s.add("fib.ls-assoc", inst, [=, &s] {
        LSMor lhs = fib->ls_compose(fib->ls_compose(g, h), k);
        LSMor rhs = fib->ls_compose(g, fib->ls_compose(h, k));
        return from_comparison(s.lseq(lhs, rhs));
      });
      s.add("fib.U-functor", inst, [=, &s] {
        SMor lhs = fib->U_S(fib->ls_compose(g, h));
        SMor rhs = fib->s_compose(fib->U_S(g), fib->U_S(h));
        return from_comparison(s.seq(lhs, rhs));
      });
      s.add("fib.bang-functor", inst, [=, &s] {
        LSMor lhs = fib->bang_S(fib->ls_compose(g, h));
        LSMor rhs = fib->ls_compose(fib->bang_S(g), fib->bang_S(h));
        return from_comparison(s.lseq(lhs, rhs));
      });
    }
  }

  // cartesian lifts: the factorisation exists and is unique among candidates
  for (const auto& hn : cat.cmaps) {
    for (const auto& fn : cat.cmaps) {
      const CMor h = hn.value, f = fn.value;
      if (h.cod != f.dom || h.dom.kind() != TypeKind::Atom || f.cod.kind() != TypeKind::Atom) continue;
      if (hn.name.rfind("t0", 0) != 0 || fn.name.rfind("t", 0) != 0) continue;
      for (const auto& c : cat.atoms) {
        const Type b = cat.atoms.back();
        RelMor t0 = gen.linear(Type::tensor(m->F(h.dom), c), b, s.budget.n);
        std::string inst = "h=" + hn.name + ",f=" + fn.name + ",C=" + c.str() + ",B=" + b.str();
        s.add("fib.lift-unique", inst, [=, &s] {
          LSMor fbar = fib->lift(f, b);
          LSMor g{{h.dom, c}, {f.cod, b}, m->c_compose(h, f), t0};
          auto ins = enumerate_elements(Type::tensor(m->F(h.dom), c), s.budget.n, m->atoms());
          auto outs = enumerate_elements(b, 1, m->atoms());
          std::vector<std::pair<Element, Element>> pairs;
          for (const auto& x : ins) {
            for (const auto& y : outs) pairs.emplace_back(x, y);
          }
          if (pairs.size() > 14) {
            CheckResult r;
            r.verdict = Verdict::Skipped;
            r.reason = "candidate space 2^" + std::to_string(pairs.size()) + " too large";
            return r;
          }
          std::size_t matches = 0;
          Comparison last;
          bool exact = true;
          for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
            std::vector<std::pair<Element, Element>> rows;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
              if (mask >> k & 1) rows.push_back(pairs[k]);
            }
            LSMor cand{g.dom, fbar.dom, h, rel::table(Type::tensor(m->F(h.dom), c), b, rows, "cand")};
            Comparison cmp = s.lseq(fib->ls_compose(cand, fbar), g);
            if (cmp.outcome != Outcome::Distinct) {
              ++matches;
              exact = exact && cmp.outcome == Outcome::Equal;
              last = cmp;
            }
          }
          CheckResult r;
          if (matches == 1) {
            r.verdict = exact ? Verdict::Pass : Verdict::PassUpToBudget;
          } else {
            r.verdict = Verdict::Fail;
            r.witness = {{"factorisations", matches}, {"candidates", std::size_t{1} << pairs.size()}};
          }
          return r;
        });
      }
    }
  }

  // the fibred adjunction F^S ⊣ U^S and the comonad !^S
  for (const auto& x : cat.bases) {
    for (const auto& a : cat.atoms) {
      std::string inst = "X=" + x.str() + ",A=" + a.str();
      s.add("fib.adj-triangle-F", inst, [=, &s] {
        SObj o{x, a};
        LSMor lhs = fib->ls_compose(fib->F_S(fib->eta_S(o)), fib->as_ls(fib->counit_S(x, m->F(a))));
        return from_comparison(s.lseq(lhs, fib->ls_id(fib->F_S(o))));
      });
      s.add("fib.adj-triangle-U", inst, [=, &s] {
        SObj o{x, m->U(a)};
        SMor lhs = fib->s_compose(fib->eta_S(o), fib->U_S(fib->as_ls(fib->counit_S(x, a))));
        return from_comparison(s.seq(lhs, fib->s_id(o)));
      });
      s.add("fib.comult", inst, [=, &s] {
        // 𝐩^S = F^S(η^S_{U^S}) on (X, A)
        LSMor derived = fib->F_S(fib->eta_S({x, m->U(a)}));
        return from_comparison(s.lseq(derived, fib->as_ls(fib->comult_S(x, a))));
      });
      s.add("fib.weakening-contraction", inst, [=, &s] {
        VMor c = fib->contraction_S(x, m->U(a));
        VMor lhs = fib->v_compose(c, fib->fibre_tensor(fib->weakening_S(x, m->U(a)), fib->v_id(x, m->bang_obj(a))));
        return from_comparison(s.veq(lhs, fib->v_id(x, m->bang_obj(a))));
      });
      for (const auto& b : cat.atoms) {
        std::string inst2 = inst + ",B=" + b.str();
        VMor u = gen.vertical(x, a, b);
        VMor v = gen.vertical(x, a, b);
        s.add("fib.with", inst2, [=, &s] {
          VMor p = fib->fibre_pair(u, v);
          Comparison c = s.veq(fib->v_compose(p, fib->fibre_proj(1, x, b, b)), u);
          c = both(c, s.veq(fib->v_compose(p, fib->fibre_proj(2, x, b, b)), v));
          VMor w = fib->fibre_with(u, v);
          VMor viaPair = fib->fibre_pair(fib->v_compose(fib->fibre_proj(1, x, a, a), u),
                                         fib->v_compose(fib->fibre_proj(2, x, a, a), v));
          return from_comparison(both(c, s.veq(w, viaPair)));
        });
        VMor kb = gen.vertical(x, b, b);
        s.add("fib.left-additive", inst2, [=, &s] {
          VMor lhs = fib->v_compose(fib->fibre_sum(u, v), kb);
          VMor rhs = fib->fibre_sum(fib->v_compose(u, kb), fib->v_compose(v, kb));
          Comparison c = s.veq(lhs, rhs);
          VMor z = fib->v_compose(fib->fibre_zero(x, a, b), kb);
          return from_comparison(both(c, s.veq(z, fib->fibre_zero(x, a, b))));
        });
        // Σ ⊣ π1* over (X, J) with J = U(A)
        Type j = m->U(a);
        VMor n = gen.vertical(m->prod(x, j), b, b);
        s.add("fib.sigma-triangle-1", inst2, [=, &s] {
          VMor lhs = fib->v_compose(fib->sigma(x, j, fib->nu(x, j, n.dom)), fib->mu(x, j, Type::tensor(m->F(j), n.dom)));
          return from_comparison(s.veq(lhs, fib->v_id(x, Type::tensor(m->F(j), n.dom))));
        });
        s.add("fib.sigma-triangle-2", inst2, [=, &s] {
          VMor nu = fib->nu(x, j, b);
          VMor lhs = fib->v_compose(nu, fib->pi1_star(x, j, fib->mu(x, j, b)));
          return from_comparison(s.veq(lhs, fib->v_id(m->prod(x, j), b)));
        });
        s.add("fib.sigma-natural", inst2, [=, &s] {
          VMor k = kb;
          VMor lhs = fib->v_compose(fib->sigma(x, j, fib->pi1_star(x, j, k)), fib->mu(x, j, b));
          VMor rhs = fib->v_compose(fib->mu(x, j, b), k);
          return from_comparison(s.veq(lhs, rhs));
        });
        s.add("fib.delta", inst2, [=, &s] {
          VMor rhs = fib->fibre_tensor(fib->contraction_S(x, j), fib->v_id(x, b));
          return from_comparison(s.veq(fib->delta(x, j, b), rhs));
        });
        s.add("fib.mu", inst2, [=, &s] {
          VMor rhs = fib->fibre_tensor(fib->weakening_S(x, j), fib->v_id(x, b));
          return from_comparison(s.veq(fib->mu(x, j, b), rhs));
        });
        for (const auto& k : cat.atoms) {
          std::string inst3 = inst2 + ",K=" + k.str();
          Type kk = m->U(k);
          CMor uc = gen.cmap(m->prod(x, j), kk);
          VMor vv = gen.vertical(m->prod(x, kk), b, b, 2);
          s.add("fib.F-sigma", inst3, [=, &s] {
            SMor su{{x, j}, {x, kk}, m->c_id(x), uc};
            VMor lhs = fib->v_compose(fib->sigma(x, j, fib->reindex(fib->comprehension(su), vv)), fib->mu(x, j, b));
            LSMor fu = fib->F_S(su);
            VMor fuv{x, fu.dom.fibre, fu.cod.fibre, fu.u};
            VMor rhs = fib->v_compose(fib->v_compose(fib->fibre_tensor(fuv, fib->v_id(x, b)), fib->sigma(x, kk, vv)),
                                      fib->mu(x, kk, b));
            return from_comparison(s.veq(lhs, rhs));
          });
        }
      }
    }
  }
}

}  // namespace

std::vector<PendingCase> lnl_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat, const Budget& budget) {
  auto s = make_suite("lnl", m, budget);
  lnl_suite(*s, cat);
  return finish(s);
}

std::vector<PendingCase> fibration_cases(std::shared_ptr<const LnlModel> m, const Catalog& cat,
                                         const Budget& budget) {
  auto s = make_suite("fibration", m, budget);
  fibration_suite(*s, cat);
  return finish(s);
}

}  // namespace dill
