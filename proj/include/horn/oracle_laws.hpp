// oracle_laws.hpp -- the registered law checkers; included by oracle.hpp

#ifndef HORN_ORACLE_LAWS_HPP_
#define HORN_ORACLE_LAWS_HPP_

#ifndef HORN_ORACLE_HPP_
#error "include horn/oracle.hpp instead of this header"
#endif

namespace horn::oracle::detail {

inline Counterexample masks_cx(LawContext& ctx,
                               std::vector<TheoryMask> inputs, TheoryMask lhs,
                               TheoryMask rhs) {
  Counterexample cx;
  for (TheoryMask m : inputs) cx.inputs.push_back(ctx.describe(m));
  cx.lhs = ctx.describe(lhs);
  cx.rhs = ctx.describe(rhs);
  return cx;
}

inline const std::vector<Law>& law_registry() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> out;
    auto add = [&](const char* id, bool expects_cx,
                   std::function<void(LawContext&)> run) {
      out.push_back({id, expects_cx, std::move(run)});
    };

    // --- monoid and near-semiring structure -------------------------------

    add("associativity", false, [](LawContext& ctx) {
      ctx.each_triple([&](TheoryMask p, TheoryMask q, TheoryMask r) {
        TheoryMask lhs = ctx.compose(ctx.compose(p, q), r);
        TheoryMask rhs = ctx.compose(p, ctx.compose(q, r));
        ctx.tally(lhs == rhs,
                  [&] { return masks_cx(ctx, {p, q, r}, lhs, rhs); });
      });
    });

    // What actually holds of associativity at the level of rule sets: the
    // left-grouped product is contained in the right-grouped one, because
    // regrouping to the right lets distinct sub-derivations of the same
    // intermediate atom combine into one body.
    add("semi_associativity", false, [](LawContext& ctx) {
      ctx.each_triple([&](TheoryMask p, TheoryMask q, TheoryMask r) {
        TheoryMask lhs = ctx.compose(ctx.compose(p, q), r);
        TheoryMask rhs = ctx.compose(p, ctx.compose(q, r));
        ctx.tally((lhs & ~rhs) == 0,
                  [&] { return masks_cx(ctx, {p, q, r}, lhs, rhs); });
      });
    });

    // Both groupings induce the same van Emden-Kowalski operator, so they
    // have equal subsumption normal forms.
    add("associativity_up_to_subsumption", false, [](LawContext& ctx) {
      ctx.each_triple([&](TheoryMask p, TheoryMask q, TheoryMask r) {
        TheoryMask lhs = ctx.compose(ctx.compose(p, q), r);
        TheoryMask rhs = ctx.compose(p, ctx.compose(q, r));
        bool holds =
            lhs == rhs ||
            subsumption_normal_form(ctx.theory_of(lhs)) ==
                subsumption_normal_form(ctx.theory_of(rhs));
        ctx.tally(holds, [&] { return masks_cx(ctx, {p, q, r}, lhs, rhs); });
      });
    });

    // With a Krom left factor every body atom selects exactly one rule, so
    // regrouping cannot merge sub-derivations and associativity is exact.
    // A Krom middle or right factor is not enough.
    add("krom_left_associativity", false, [](LawContext& ctx) {
      auto kase = [&](TheoryMask k, TheoryMask q, TheoryMask r) {
        TheoryMask lhs = ctx.compose(ctx.compose(k, q), r);
        TheoryMask rhs = ctx.compose(k, ctx.compose(q, r));
        ctx.tally(lhs == rhs,
                  [&] { return masks_cx(ctx, {k, q, r}, lhs, rhs); });
      };
      if (ctx.exhaustive()) {
        ctx.require_small_exhaustive();
        TheoryMask krom = ctx.uni().krom_mask();
        TheoryMask k = krom;
        while (true) {
          for (TheoryMask q = 0; q < ctx.uni().theory_count(); ++q) {
            for (TheoryMask r = 0; r < ctx.uni().theory_count(); ++r) {
              kase(k, q, r);
            }
          }
          if (k == 0) break;
          k = (k - 1) & krom;
        }
      } else {
        for (std::uint64_t i = 0; i < ctx.sample_count(); ++i) {
          kase(ctx.sample_mask() & ctx.uni().krom_mask(), ctx.sample_mask(),
               ctx.sample_mask());
        }
      }
    });

    add("unit_laws", false, [](LawContext& ctx) {
      TheoryMask one = ctx.uni().unit_rules(ctx.uni().all_atoms());
      ctx.each_theory([&](TheoryMask p) {
        TheoryMask left = ctx.compose(one, p);
        TheoryMask right = ctx.compose(p, one);
        ctx.tally(left == p && right == p,
                  [&] { return masks_cx(ctx, {p}, left, right); });
      });
    });

    add("right_distributivity", false, [](LawContext& ctx) {
      ctx.each_triple([&](TheoryMask p, TheoryMask q, TheoryMask r) {
        TheoryMask lhs = ctx.compose(p | q, r);
        TheoryMask rhs = ctx.compose(p, r) | ctx.compose(q, r);
        ctx.tally(lhs == rhs,
                  [&] { return masks_cx(ctx, {p, q, r}, lhs, rhs); });
      });
    });

    // Not a theorem: composition only distributes from the left for Krom
    // theories.  The violations this finds are the point.
    add("left_distributivity", true, [](LawContext& ctx) {
      ctx.each_triple([&](TheoryMask p, TheoryMask q, TheoryMask r) {
        TheoryMask lhs = ctx.compose(p, q | r);
        TheoryMask rhs = ctx.compose(p, q) | ctx.compose(p, r);
        ctx.tally(lhs == rhs,
                  [&] { return masks_cx(ctx, {p, q, r}, lhs, rhs); });
      });
    });

    add("krom_left_distributivity", false, [](LawContext& ctx) {
      auto kase = [&](TheoryMask k, TheoryMask p, TheoryMask r) {
        TheoryMask lhs = ctx.compose(k, p | r);
        TheoryMask rhs = ctx.compose(k, p) | ctx.compose(k, r);
        ctx.tally(lhs == rhs,
                  [&] { return masks_cx(ctx, {k, p, r}, lhs, rhs); });
      };
      if (ctx.exhaustive()) {
        ctx.require_small_exhaustive();
        TheoryMask krom = ctx.uni().krom_mask();
        TheoryMask k = krom;
        while (true) {
          for (TheoryMask p = 0; p < ctx.uni().theory_count(); ++p) {
            for (TheoryMask r = 0; r < ctx.uni().theory_count(); ++r) {
              kase(k, p, r);
            }
          }
          if (k == 0) break;
          k = (k - 1) & krom;
        }
      } else {
        for (std::uint64_t i = 0; i < ctx.sample_count(); ++i) {
          kase(ctx.sample_mask() & ctx.uni().krom_mask(), ctx.sample_mask(),
               ctx.sample_mask());
        }
      }
    });

    add("monotonicity", false, [](LawContext& ctx) {
      auto kase = [&](TheoryMask small, TheoryMask big, TheoryMask r) {
        TheoryMask lr = ctx.compose(small, r);
        TheoryMask br = ctx.compose(big, r);
        TheoryMask rl = ctx.compose(r, small);
        TheoryMask rb = ctx.compose(r, big);
        ctx.tally((lr & ~br) == 0 && (rl & ~rb) == 0,
                  [&] { return masks_cx(ctx, {small, big, r}, lr, br); });
      };
      if (ctx.exhaustive()) {
        ctx.require_small_exhaustive();
        for (TheoryMask big = 0; big < ctx.uni().theory_count(); ++big) {
          TheoryMask small = big;
          while (true) {
            for (TheoryMask r = 0; r < ctx.uni().theory_count(); ++r) {
              kase(small, big, r);
            }
            if (small == 0) break;
            small = (small - 1) & big;
          }
        }
      } else {
        for (std::uint64_t i = 0; i < ctx.sample_count(); ++i) {
          TheoryMask big = ctx.sample_mask();
          kase(ctx.sample_mask() & big, big, ctx.sample_mask());
        }
      }
    });

    add("facts_preserved", false, [](LawContext& ctx) {
      TheoryMask facts = ctx.uni().facts_mask();
      ctx.each_pair([&](TheoryMask p, TheoryMask r) {
        TheoryMask pr = ctx.compose(p, r);
        ctx.tally(((p & facts) & ~pr) == 0,
                  [&] { return masks_cx(ctx, {p, r}, p & facts, pr); });
      });
    });

    add("head_body_shrink", false, [](LawContext& ctx) {
      ctx.each_pair([&](TheoryMask p, TheoryMask r) {
        TheoryMask pr = ctx.compose(p, r);
        bool heads_ok =
            (ctx.uni().head_atoms(pr) & ~ctx.uni().head_atoms(p)) == 0;
        bool bodies_ok =
            (ctx.uni().body_atoms(pr) & ~ctx.uni().body_atoms(r)) == 0;
        ctx.tally(heads_ok && bodies_ok,
                  [&] { return masks_cx(ctx, {p, r}, pr, p); });
      });
    });

    // --- interpretations ---------------------------------------------------

    add("left_zero", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask facts_i = ctx.uni().interp_rules(i);
        TheoryMask lhs = ctx.compose(facts_i, p);
        ctx.tally(lhs == facts_i, [&] {
          Counterexample cx = masks_cx(ctx, {p}, lhs, facts_i);
          cx.inputs.push_back(ctx.describe_atoms(i));
          return cx;
        });
      });
    });

    add("interpretation_ideal", false, [](LawContext& ctx) {
      TheoryMask facts = ctx.uni().facts_mask();
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask facts_i = ctx.uni().interp_rules(i);
        TheoryMask right = ctx.compose(p, facts_i);
        TheoryMask left = ctx.compose(facts_i, p);
        ctx.tally((right & ~facts) == 0 && left == facts_i,
                  [&] { return masks_cx(ctx, {p, facts_i}, right, left); });
      });
    });

    add("supported_commute", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask facts_i = ctx.uni().interp_rules(i);
        bool commutes = ctx.compose(p, facts_i) == ctx.compose(facts_i, p);
        bool supported = ctx.uni().tp(p, i) == i;
        ctx.tally(commutes == supported, [&] {
          return masks_cx(ctx, {p, facts_i}, ctx.compose(p, facts_i),
                          ctx.compose(facts_i, p));
        });
      });
    });

    add("interpretation_star", false, [](LawContext& ctx) {
      auto kase = [&](AtomMask am) {
        Interpretation interp = ctx.uni().atom_set(am);
        Theory as_theory = to_theory(interp);
        const Alphabet& alphabet = ctx.uni().alphabet();
        bool holds = star(as_theory, alphabet) ==
                         unite(unit(alphabet), as_theory) &&
                     plus(as_theory, alphabet) == as_theory &&
                     omega(as_theory, alphabet) == interp;
        ctx.tally(holds, [&] {
          return Counterexample{{ctx.describe_atoms(am)},
                                inline_theory_str(star(as_theory, alphabet)),
                                inline_theory_str(
                                    unite(unit(alphabet), as_theory))};
        });
      };
      if (ctx.exhaustive()) {
        for (AtomMask i = 0;; ++i) {
          kase(i);
          if (i == ctx.uni().all_atoms()) break;
        }
      } else {
        for (std::uint64_t i = 0; i < ctx.sample_count(); ++i) {
          kase(ctx.sample_atoms());
        }
      }
    });

    // --- the van Emden-Kowalski operator -----------------------------------

    add("tp_is_compose", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        AtomMask direct = ctx.uni().tp(p, i);
        AtomMask via = ctx.uni().fact_atoms(
            ctx.compose(p, ctx.uni().interp_rules(i)));
        ctx.tally(direct == via, [&] {
          return Counterexample{{ctx.describe(p), ctx.describe_atoms(i)},
                                ctx.describe_atoms(direct),
                                ctx.describe_atoms(via)};
        });
      });
    });

    add("t_compose_hom", false, [](LawContext& ctx) {
      ctx.each_pair_interp([&](TheoryMask p, TheoryMask r, AtomMask i) {
        AtomMask lhs = ctx.uni().tp(ctx.compose(p, r), i);
        AtomMask rhs = ctx.uni().tp(p, ctx.uni().tp(r, i));
        ctx.tally(lhs == rhs, [&] {
          return Counterexample{
              {ctx.describe(p), ctx.describe(r), ctx.describe_atoms(i)},
              ctx.describe_atoms(lhs), ctx.describe_atoms(rhs)};
        });
      });
    });

    add("t_union_hom", false, [](LawContext& ctx) {
      ctx.each_pair_interp([&](TheoryMask p, TheoryMask r, AtomMask i) {
        AtomMask lhs = ctx.uni().tp(p | r, i);
        AtomMask rhs = ctx.uni().tp(p, i) | ctx.uni().tp(r, i);
        ctx.tally(lhs == rhs, [&] {
          return Counterexample{
              {ctx.describe(p), ctx.describe(r), ctx.describe_atoms(i)},
              ctx.describe_atoms(lhs), ctx.describe_atoms(rhs)};
        });
      });
    });

    add("lm_omega", false, [](LawContext& ctx) {
      ctx.each_theory([&](TheoryMask p) {
        Theory t = ctx.theory_of(p);
        Interpretation by_iteration = least_model(t, LmStrategy::iterate);
        Interpretation by_omega = least_model(t, LmStrategy::omega);
        ctx.tally(by_iteration == by_omega, [&] {
          return Counterexample{{ctx.describe(p)},
                                "{" + by_iteration.str() + "}",
                                "{" + by_omega.str() + "}"};
        });
      });
    });

    add("fact_separation", false, [](LawContext& ctx) {
      const Alphabet& alphabet = ctx.uni().alphabet();
      ctx.each_theory([&](TheoryMask p) {
        Theory t = ctx.theory_of(p);
        Theory rebuilt = compose(star(t.facts(), alphabet), t.proper());
        ctx.tally(rebuilt == t, [&] {
          return Counterexample{{ctx.describe(p)}, inline_theory_str(rebuilt),
                                inline_theory_str(t)};
        });
      });
    });

    // --- idempotents --------------------------------------------------------

    add("idempotence_characterization", false, [](LawContext& ctx) {
      TheoryMask all_facts = ctx.uni().facts_mask();
      ctx.each_theory([&](TheoryMask p) {
        TheoryMask facts = p & all_facts;
        TheoryMask prop = p & ~all_facts;
        bool direct = ctx.compose(p, p) == p;
        bool facts_absorbed = (ctx.compose(prop, facts) & ~facts) == 0;
        bool proper_stable = (ctx.compose(prop, p) & ~all_facts) == prop;
        ctx.tally(direct == (facts_absorbed && proper_stable),
                  [&] { return masks_cx(ctx, {p}, ctx.compose(p, p), p); });
      });
    });

    // --- reducts and body combinators ---------------------------------------

    add("reduct_left", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask direct = ctx.uni().rules_with_head_in(p, i);
        TheoryMask via = ctx.compose(ctx.uni().unit_rules(i), p);
        ctx.tally(direct == via,
                  [&] { return masks_cx(ctx, {p}, direct, via); });
      });
    });

    add("reduct_right", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask direct = ctx.uni().rules_with_body_in(p, i);
        TheoryMask via = ctx.compose(p, ctx.uni().unit_rules(i));
        ctx.tally(direct == via,
                  [&] { return masks_cx(ctx, {p}, direct, via); });
      });
    });

    add("reduct_restrict", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask direct = ctx.uni().rules_with_head_in(
            ctx.uni().rules_with_body_in(p, i), i);
        TheoryMask one = ctx.uni().unit_rules(i);
        TheoryMask via = ctx.compose(ctx.compose(one, p), one);
        ctx.tally(direct == via,
                  [&] { return masks_cx(ctx, {p}, direct, via); });
      });
    });

    add("unit_intersection", false, [](LawContext& ctx) {
      ctx.each_interp_pair([&](AtomMask i, AtomMask j) {
        TheoryMask lhs =
            ctx.compose(ctx.uni().unit_rules(i), ctx.uni().unit_rules(j));
        TheoryMask rhs = ctx.uni().unit_rules(i & j);
        TheoryMask meet = ctx.uni().unit_rules(i) & ctx.uni().unit_rules(j);
        ctx.tally(lhs == rhs && lhs == meet, [&] {
          Counterexample cx = masks_cx(ctx, {}, lhs, rhs);
          cx.inputs = {ctx.describe_atoms(i), ctx.describe_atoms(j)};
          return cx;
        });
      });
    });

    add("unit_union", false, [](LawContext& ctx) {
      ctx.each_interp_pair([&](AtomMask i, AtomMask j) {
        TheoryMask lhs = ctx.uni().unit_rules(i) | ctx.uni().unit_rules(j);
        TheoryMask rhs = ctx.uni().unit_rules(i | j);
        ctx.tally(lhs == rhs, [&] {
          Counterexample cx = masks_cx(ctx, {}, lhs, rhs);
          cx.inputs = {ctx.describe_atoms(i), ctx.describe_atoms(j)};
          return cx;
        });
      });
    });

    add("compose_simplification", false, [](LawContext& ctx) {
      ctx.each_pair([&](TheoryMask p, TheoryMask r) {
        TheoryMask lhs = ctx.compose(p, r);
        TheoryMask rhs = ctx.compose(
            ctx.uni().rules_with_body_in(p, ctx.uni().head_atoms(r)),
            ctx.uni().rules_with_head_in(r, ctx.uni().body_atoms(p)));
        ctx.tally(lhs == rhs, [&] { return masks_cx(ctx, {p, r}, lhs, rhs); });
      });
    });

    add("ominus_removes_body_atoms", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask combinator = ctx.uni().unit_rules(ctx.uni().all_atoms() & ~i) |
                                ctx.uni().interp_rules(i);
        TheoryMask lhs = ctx.compose(p, combinator);
        TheoryMask rhs = 0;
        for (TheoryMask bits = p; bits != 0; bits &= bits - 1) {
          std::size_t ri = static_cast<std::size_t>(std::countr_zero(bits));
          std::size_t head = static_cast<std::size_t>(
              std::countr_zero(ctx.uni().rule_head(ri)));
          rhs |= ctx.uni().bit(
              ctx.uni().rule_of(head, ctx.uni().rule_body(ri) & ~i));
        }
        ctx.tally(lhs == rhs, [&] { return masks_cx(ctx, {p}, lhs, rhs); });
      });
    });

    add("oplus_adds_body_atoms", false, [](LawContext& ctx) {
      ctx.each_theory_interp([&](TheoryMask p, AtomMask i) {
        TheoryMask combinator = 0;
        for (std::size_t a = 0; a < ctx.uni().atom_count(); ++a) {
          combinator |= ctx.uni().bit(
              ctx.uni().rule_of(a, static_cast<AtomMask>(1u << a) | i));
        }
        TheoryMask lhs = ctx.compose(p, combinator);
        TheoryMask rhs = p & ctx.uni().facts_mask();
        for (TheoryMask bits = p & ~ctx.uni().facts_mask(); bits != 0;
             bits &= bits - 1) {
          std::size_t ri = static_cast<std::size_t>(std::countr_zero(bits));
          std::size_t head = static_cast<std::size_t>(
              std::countr_zero(ctx.uni().rule_head(ri)));
          rhs |= ctx.uni().bit(
              ctx.uni().rule_of(head, ctx.uni().rule_body(ri) | i));
        }
        ctx.tally(lhs == rhs, [&] { return masks_cx(ctx, {p}, lhs, rhs); });
      });
    });

    // --- proper rules -------------------------------------------------------

    add("proper_operator_identities", false, [](LawContext& ctx) {
      TheoryMask facts = ctx.uni().facts_mask();
      TheoryMask one = ctx.uni().unit_rules(ctx.uni().all_atoms());
      ctx.each_pair([&](TheoryMask p, TheoryMask r) {
        TheoryMask pp = p & ~facts;
        bool idempotent = (pp & ~facts) == pp;
        bool unit_fixed = (one & ~facts) == one;
        bool facts_killed = ((p & facts) & ~facts) == 0;
        bool union_compat = ((p | r) & ~facts) == (pp | (r & ~facts));
        bool zero = ctx.compose(pp, 0) == 0;
        ctx.tally(idempotent && unit_fixed && facts_killed && union_compat &&
                      zero,
                  [&] { return masks_cx(ctx, {p, r}, pp, pp); });
      });
    });

    // Not a theorem: the proper operator is compatible with union but not
    // with composition.
    add("proper_compose_compat", true, [](LawContext& ctx) {
      TheoryMask facts = ctx.uni().facts_mask();
      ctx.each_pair([&](TheoryMask p, TheoryMask r) {
        TheoryMask lhs = ctx.compose(p, r) & ~facts;
        TheoryMask rhs = ctx.compose(p & ~facts, r & ~facts);
        ctx.tally(lhs == rhs, [&] { return masks_cx(ctx, {p, r}, lhs, rhs); });
      });
    });

    // --- closures, non-dependence, decomposition ----------------------------

    add("closure_merge", false, [](LawContext& ctx) {
      auto kase = [&](TheoryMask p, AtomMask i, AtomMask j) {
        TheoryMask lhs = (p | ctx.uni().unit_rules(j)) | ctx.uni().unit_rules(i);
        TheoryMask rhs = p | ctx.uni().unit_rules(i | j);
        ctx.tally(lhs == rhs, [&] { return masks_cx(ctx, {p}, lhs, rhs); });
      };
      if (ctx.exhaustive()) {
        ctx.require_small_exhaustive();
        for (TheoryMask p = 0; p < ctx.uni().theory_count(); ++p) {
          for (AtomMask i = 0;; ++i) {
            for (AtomMask j = 0;; ++j) {
              kase(p, i, j);
              if (j == ctx.uni().all_atoms()) break;
            }
            if (i == ctx.uni().all_atoms()) break;
          }
        }
      } else {
        for (std::uint64_t n = 0; n < ctx.sample_count(); ++n) {
          kase(ctx.sample_mask(), ctx.sample_atoms(), ctx.sample_atoms());
        }
      }
    });

    add("non_dependence", false, [](LawContext& ctx) {
      ctx.each_triple([&](TheoryMask p, TheoryMask q, TheoryMask r) {
        if (ctx.uni().body_atoms(p) & ctx.uni().head_atoms(r)) return;
        TheoryMask lhs = ctx.compose(p, q | r);
        TheoryMask rhs = ctx.compose(p, q);
        ctx.tally(lhs == rhs,
                  [&] { return masks_cx(ctx, {p, q, r}, lhs, rhs); });
      });
    });

    add("non_dependent_union", false, [](LawContext& ctx) {
      ctx.each_pair([&](TheoryMask p, TheoryMask r) {
        if (ctx.uni().body_atoms(p) & ctx.uni().head_atoms(r)) return;
        TheoryMask lhs = p | r;
        TheoryMask rhs = ctx.compose(
            p | ctx.uni().unit_rules(ctx.uni().head_atoms(r)),
            r | ctx.uni().unit_rules(ctx.uni().body_atoms(p)));
        ctx.tally(lhs == rhs, [&] { return masks_cx(ctx, {p, r}, lhs, rhs); });
      });
    });

    add("union_decomposition", false, [](LawContext& ctx) {
      const Alphabet& alphabet = ctx.uni().alphabet();
      ctx.each_pair([&](TheoryMask pm, TheoryMask rm) {
        Theory p = ctx.theory_of(pm);
        Theory r = ctx.theory_of(rm);
        Theory product = decompose_union(p, r, alphabet).product();
        Theory expected = unite(p, r);
        ctx.tally(product == expected, [&] {
          return Counterexample{{ctx.describe(pm), ctx.describe(rm)},
                                inline_theory_str(product),
                                inline_theory_str(expected)};
        });
      });
    });

    add("heads_bodies_algebraic", false, [](LawContext& ctx) {
      const Alphabet& alphabet = ctx.uni().alphabet();
      Theory alphabet_facts = to_theory(alphabet);
      ctx.each_theory([&](TheoryMask pm) {
        Theory p = ctx.theory_of(pm);
        bool heads_ok = to_interpretation(compose(p, alphabet_facts)) ==
                        p.head_atoms();
        bool bodies_ok = to_interpretation(compose(reverse(p.proper()),
                                                   alphabet_facts)) ==
                         p.body_atoms();
        ctx.tally(heads_ok && bodies_ok, [&] {
          return Counterexample{{ctx.describe(pm)},
                                "{" + p.head_atoms().str() + "}",
                                "{" + p.body_atoms().str() + "}"};
        });
      });
    });

    // --- permutations -------------------------------------------------------

    add("permutation_group", false, [](LawContext& ctx) {
      const Alphabet& alphabet = ctx.uni().alphabet();
      Theory one = unit(alphabet);
      auto kase = [&](const std::vector<Atom>& targets) {
        std::map<Atom, Atom> mapping;
        const std::vector<Atom>& sources = alphabet.atoms();
        for (std::size_t i = 0; i < sources.size(); ++i) {
          mapping.emplace(sources[i], targets[i]);
        }
        Permutation pi(std::move(mapping));
        Theory forward = permutation_theory(pi);
        Theory backward = reverse(forward);
        bool holds = compose(forward, backward) == one &&
                     compose(backward, forward) == one &&
                     backward == permutation_theory(pi.inverse());
        ctx.tally(holds, [&] {
          return Counterexample{{inline_theory_str(forward)},
                                inline_theory_str(compose(forward, backward)),
                                inline_theory_str(one)};
        });
      };
      if (ctx.exhaustive()) {
        std::vector<Atom> targets = alphabet.atoms();
        do {
          kase(targets);
        } while (std::next_permutation(targets.begin(), targets.end()));
      } else {
        std::vector<Atom> targets = alphabet.atoms();
        for (std::uint64_t i = 0; i < ctx.sample_count(); ++i) {
          std::shuffle(targets.begin(), targets.end(), ctx.rng());
          kase(targets);
        }
      }
    });

    // --- dual-route check of composition itself -----------------------------

    add("compose_agreement", false, [](LawContext& ctx) {
      ctx.each_pair([&](TheoryMask pm, TheoryMask rm) {
        Theory p = ctx.theory_of(pm);
        Theory r = ctx.theory_of(rm);
        Theory optimized = compose(p, r);
        Theory literal = compose_by_subsets(p, r);
        ctx.tally(optimized == literal, [&] {
          return Counterexample{{ctx.describe(pm), ctx.describe(rm)},
                                inline_theory_str(optimized),
                                inline_theory_str(literal)};
        });
      });
    });

    return out;
  }();
  return laws;
}

}  // namespace horn::oracle::detail

#endif  // HORN_ORACLE_LAWS_HPP_
