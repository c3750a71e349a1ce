#include <gtest/gtest.h>

#include "nott/errors.hpp"
#include "nott/literal.hpp"
#include "nott/reduction.hpp"
#include "nott/sampling.hpp"

using namespace nott;

namespace {
const Prime P2(2);
const Prime P3(3);
}  // namespace

TEST(ReduceModP, CleanInputIsUnchanged) {
  const Character chi(P2, {{5, 1}, {15, 2}});
  const ReductionStep s = reduce_mod_p(chi);
  EXPECT_EQ(s.character, chi);
  EXPECT_TRUE(s.witness.u.is_identity());
}

TEST(ReduceModP, KillsUnitsBelowL) {
  const Character chi(P3, {{1, 1}, {2, 1}, {7, 3}});
  const ReductionStep s = reduce_mod_p(chi);
  EXPECT_TRUE(is_stage_one(s.character));
  EXPECT_EQ(P3.reduce(s.character.coeff(2)), 1);
  EXPECT_EQ(s.character.coeff(7), 3);
  EXPECT_TRUE(verify_witness(chi, s.character, s.witness.u));
  // first (and only) step: 1 + 1*c*1 == 0 mod 3
  EXPECT_EQ(s.witness.u.unit().coeff(1), 2);
  EXPECT_THROW(reduce_mod_p(Character(P3, {{1, 3}})), DomainError);
}

TEST(ClearLowPPart, Example) {
  const Character chi(P3, {{1, 1}, {2, 3}, {4, 3}});
  const ReductionStep s = clear_low_p_part(chi);
  EXPECT_EQ(s.character, Character(P3, {{1, 1}, {4, 3}}));
  EXPECT_EQ(format_product(s.witness.u), "t*(1+t^2)^1*(1+t^4)^2");
  EXPECT_TRUE(verify_witness(chi, s.character, s.witness.u));
  EXPECT_THROW(clear_low_p_part(Character(P3, {{1, 1}, {2, 1}, {4, 3}})), DomainError);
}

TEST(Reduce, Examples) {
  const Reduction a = reduce(Character(P3, {{1, 1}, {2, 3}, {4, 3}}));
  EXPECT_EQ(a.form.to_character(), Character(P3, {{1, 1}, {4, 3}}));
  EXPECT_EQ(format_product(a.witness.u), "t*(1+t^2)^1*(1+t^4)^2");

  const Character reduced_5_15(P2, {{5, 1}, {15, 2}});
  const Reduction b = reduce(reduced_5_15);
  EXPECT_EQ(b.form.to_character(), reduced_5_15);
  EXPECT_TRUE(b.witness.u.is_identity());

  const Character c(P2, {{5, 1}, {7, 2}, {15, 2}});
  const Reduction r = reduce(c);
  const Character psi = r.form.to_character();
  EXPECT_EQ(r.form.x_l, 1);
  EXPECT_EQ(psi.coeff(15), 2);
  EXPECT_EQ(psi.coeff(7), 0);
  EXPECT_TRUE(verify_witness(c, psi, r.witness.u));
}

TEST(Witness, CheckReasons) {
  const Character chi(P2, {{5, 1}, {15, 2}});
  EXPECT_EQ(check_witness(chi, chi, NottinghamElt::identity(P2, 15)), WitnessCheck::ok);
  EXPECT_EQ(check_witness(chi, chi, NottinghamElt::identity(P2, 14)), WitnessCheck::incompatible);
  const NottinghamElt u0 = parse_nottingham("t(1+t^3+t^4)", P2, 15);
  const NottinghamElt u1 = parse_nottingham("t(1+t^3+t^4)(1+t^15)", P2, 15);
  EXPECT_EQ(u0.unit().coeff(15), 0);
  EXPECT_EQ(char_eval(chi, u0.unit()), 0);
  EXPECT_EQ(char_eval(chi, u1.unit()), 2);
  EXPECT_EQ(check_witness(chi, char_act(u0, chi), u0), WitnessCheck::ok);
  EXPECT_EQ(check_witness(chi, char_act(u1, chi), u1), WitnessCheck::ok);  // 2 == 0 mod p
  const NottinghamElt bad = parse_nottingham("t(1+t^5)", P2, 15);
  EXPECT_EQ(char_eval(chi, bad.unit()), 1);
  EXPECT_EQ(check_witness(chi, char_act(bad, chi), bad), WitnessCheck::kernel_violation);
  EXPECT_EQ(check_witness(chi, Character(P2, {{5, 1}, {13, 2}, {15, 2}}), u0),
            WitnessCheck::action_mismatch);
  EXPECT_THROW(make_witness(chi, bad), DomainError);
}

TEST(Reduce, SoundnessAndPreservation) {
  Rng rng(29);
  for (int i = 0; i < 1000; ++i) {
    const Prime p(i % 3 == 0 ? 2 : i % 3 == 1 ? 3 : 5);
    const TypeLM type = random_type(p, 15, rng);
    const Character chi = random_character(p, type, rng);
    const Reduction r = reduce(chi);
    const Character psi = r.form.to_character();
    ASSERT_TRUE(is_reduced(psi)) << chi.text();
    ASSERT_TRUE(verify_witness(chi, psi, r.witness.u)) << chi.text();
    EXPECT_EQ(r.form.type, type);
    EXPECT_EQ(p.reduce(psi.coeff(type.l)), p.reduce(chi.coeff(type.l)));
    if (!p.divides(type.m)) EXPECT_EQ(psi.coeff(type.m), chi.coeff(type.m));
  }
}

TEST(Reduce, IdempotentOnReducedForms) {
  for (int p : {2, 3, 5}) {
    const Prime prime(p);
    for (const TypeLM& t : valid_types(prime, 4, 12)) {
      for (const ReducedForm& f : enumerate_reduced_forms(prime, t.l, t.m)) {
        const Reduction r = reduce(f.to_character());
        EXPECT_EQ(r.form, f);
        EXPECT_TRUE(r.witness.u.is_identity());
      }
    }
  }
}

TEST(Reduce, ComposedWitnessConvention) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Prime p(i % 2 ? 2 : 3);
    const TypeLM type = random_type(p, 12, rng);
    const Character chi = random_character(p, type, rng);
    const ReductionStep a = reduce_mod_p(chi);
    const ReductionStep b = clear_low_p_part(a.character);
    EXPECT_TRUE(verify_witness(chi, b.character, nott_compose(b.witness.u, a.witness.u)));
  }
}
