#include <gtest/gtest.h>

#include <set>

#include "nott/character.hpp"
#include "nott/errors.hpp"
#include "nott/literal.hpp"
#include "nott/sampling.hpp"

using namespace nott;

namespace {

const Prime P2(2);
const Prime P3(3);
const Prime P5(5);

Character chi_5_15() { return Character(P2, {{5, 1}, {15, 2}}); }

// Independent count of exact-type characters: choices per index.
std::uint64_t product_count(const Prime& p, int l, int m) {
  std::uint64_t n = 1;
  const std::uint64_t q = static_cast<std::uint64_t>(p.value());
  for (int j = 1; j <= m; ++j) {
    if (j % p.value() == 0) continue;
    if (j < l) n *= q * q;
    else if (j == l) n *= q * (q - 1);
    else if (j == m) n *= q - 1;
    else n *= q;
  }
  return n;
}

}  // namespace

TEST(Character, Construction) {
  EXPECT_THROW(Character(P2, {{4, 1}}), UsageError);
  EXPECT_THROW(Character(P2, {{0, 1}}), UsageError);
  const Character c(P3, {{1, 10}, {2, -1}});
  EXPECT_EQ(c.coeff(1), 1);
  EXPECT_EQ(c.coeff(2), 8);
  EXPECT_EQ(chi_5_15().literal(), "5:1,15:2");
  EXPECT_EQ(chi_5_15().text(), "p=2; 5:1,15:2");
  EXPECT_EQ(Character(P2).literal(), "");
}

TEST(Character, Evaluation) {
  const Character chi = chi_5_15();
  EXPECT_EQ(char_eval(chi, UnitSeries::basis(P2, 5, 15)), 1);
  EXPECT_EQ(char_eval(chi, UnitSeries::basis(P2, 10, 15)), 2);
  // 1+t^5+t^10 = E_5^3 E_15 mod t^16, so the value is 3 + 2.
  EXPECT_EQ(unit_decompose(parse_unit("1+t^5+t^10", P2, 15), 15).entries(),
            (std::vector<std::pair<int, int>>{{5, 3}, {15, 1}}));
  EXPECT_EQ(char_eval(chi, parse_unit("1+t^5+t^10", P2, 15)), 1);
  EXPECT_THROW(char_eval(chi, UnitSeries(P2, 14)), UsageError);
}

TEST(Character, DegenerateEvaluation) {
  // m = lp: E_m = E_l^p.
  const Character chi(P3, {{1, 4}, {2, 3}});
  EXPECT_EQ(char_eval(chi, UnitSeries::basis(P3, 3, 3)), 3);
  const Character psi(P2, {{3, 1}, {5, 2}});
  EXPECT_EQ(char_eval(psi, UnitSeries::basis(P2, 6, 6)), 2);
}

TEST(Character, Action) {
  const Character chi = chi_5_15();
  EXPECT_EQ(char_act(NottinghamElt::identity(P2, 15), chi), chi);
  const Character acted = char_act(parse_nottingham("t(1+t^3+t^4)", P2, 15), chi);
  EXPECT_EQ(acted.coeff(11), 2);
  EXPECT_EQ(acted.coeff(15), chi.coeff(15));
  EXPECT_THROW(char_act(NottinghamElt::identity(P2, 14), chi), UsageError);
}

TEST(Character, ActionMatchesDefinition) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Prime p(i % 3 == 0 ? 2 : i % 3 == 1 ? 3 : 5);
    const TypeLM type = random_type(p, 12, rng);
    const Character chi = random_character(p, type, rng);
    const NottinghamElt u = random_element(p, type.m, rng);
    const Character acted = char_act(u, chi);
    for (int j = 1; j <= type.m; ++j) {
      if (p.divides(j)) continue;
      EXPECT_EQ(acted.coeff(j), char_eval(chi, unit_subst(UnitSeries::basis(p, j, type.m), u)));
    }
  }
}

TEST(Character, BreakSequence) {
  EXPECT_EQ(break_sequence(chi_5_15()), (TypeLM{5, 15}));
  EXPECT_EQ(break_sequence(Character(P3, {{1, 1}})), (TypeLM{1, 3}));
  EXPECT_EQ(break_sequence(Character(P3, {{1, 4}, {2, 3}})), (TypeLM{1, 3}));
  EXPECT_THROW(break_sequence(Character(P3, {{1, 3}})), DomainError);
  EXPECT_THROW(break_sequence(Character(P3)), DomainError);
}

TEST(Character, StandardExpansion) {
  const StandardExpansion a = standard_expansion(Character(P3, {{1, 1}, {2, 3}, {4, 3}}));
  EXPECT_EQ(a.type, (TypeLM{1, 4}));
  EXPECT_EQ(a.x, (std::map<int, int>{{1, 1}}));
  EXPECT_EQ(a.a, (std::map<int, int>{{2, 1}, {4, 1}}));
  const StandardExpansion b = standard_expansion(chi_5_15());
  EXPECT_EQ(b.x, (std::map<int, int>{{5, 1}}));
  EXPECT_EQ(b.a, (std::map<int, int>{{15, 1}}));
  const StandardExpansion c = standard_expansion(Character(P2, {{5, 3}, {15, 2}}));
  EXPECT_EQ(c.x, (std::map<int, int>{{5, 1}}));
  EXPECT_EQ(c.a, (std::map<int, int>{{5, 1}, {15, 1}}));
  EXPECT_THROW(standard_expansion(Character(P3, {{1, 1}, {2, 1}}), TypeLM{1, 4}), DomainError);
}

TEST(Character, ValidateType) {
  EXPECT_TRUE(validate_type(P2, 5, 15));
  EXPECT_FALSE(validate_type(P2, 5, 12));
  EXPECT_TRUE(validate_type(P3, 1, 3));
  EXPECT_FALSE(validate_type(P3, 3, 9));
  EXPECT_FALSE(validate_type(P3, 1, 2));
  EXPECT_TRUE(validate_type(P2, 3, 6));
}

TEST(Character, IsReduced) {
  EXPECT_TRUE(is_reduced(chi_5_15()));
  EXPECT_TRUE(is_reduced(Character(P2, {{5, 1}, {11, 2}, {15, 2}})));
  EXPECT_FALSE(is_reduced(Character(P2, {{5, 1}, {7, 2}, {15, 2}})));
  EXPECT_FALSE(is_reduced(Character(P3, {{1, 1}, {2, 1}, {4, 3}})));
  EXPECT_TRUE(is_reduced(Character(P2, {{3, 3}, {5, 2}})));  // overlap: x_3 + 2 b_3
}

TEST(Character, EnumerationCounts) {
  EXPECT_EQ(enumerate_characters(P2, 5, 15).size(), 512u);
  EXPECT_EQ(enumerate_characters(P3, 2, 7).size(), 972u);
  EXPECT_EQ(product_count(P2, 5, 15), 512u);
  EXPECT_EQ(product_count(P3, 2, 7), 972u);
  for (int p : {2, 3, 5}) {
    const Prime prime(p);
    for (const TypeLM& t : valid_types(prime, 3, p == 5 ? 7 : 9)) {
      EXPECT_EQ(enumerate_characters(prime, t.l, t.m).size(), product_count(prime, t.l, t.m))
          << p << " " << t.l << " " << t.m;
      EXPECT_EQ(character_count(prime, t), product_count(prime, t.l, t.m));
    }
  }
  EXPECT_THROW(enumerate_characters(P2, 5, 12), DomainError);
}

TEST(Character, EnumerationIsExactTypeAndOrdered) {
  const auto all = enumerate_characters(P3, 2, 7);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(break_sequence(all[i]), (TypeLM{2, 7}));
    if (i > 0) EXPECT_LT(all[i - 1], all[i]);
  }
}

TEST(Character, EnumerationClosedUnderAction) {
  Rng rng(17);
  const auto all = enumerate_characters(P3, 1, 4);
  const std::set<Character> set(all.begin(), all.end());
  for (const Character& chi : all) {
    const NottinghamElt u = random_element(P3, 4, rng);
    EXPECT_TRUE(set.count(char_act(u, chi))) << chi.text();
  }
}

TEST(Character, ReducedForms) {
  EXPECT_EQ(enumerate_reduced_forms(P2, 5, 15).size(), 4u);
  EXPECT_EQ(enumerate_reduced_forms(P3, 1, 4).size(), 4u);
  const auto overlap = enumerate_reduced_forms(P2, 3, 6);
  EXPECT_EQ(overlap.size(), 4u);
  std::set<Character> chars;
  for (const ReducedForm& f : overlap) {
    const Character c = f.to_character();
    EXPECT_TRUE(is_reduced(c));
    EXPECT_EQ(ReducedForm::from_character(c), f);
    chars.insert(c);
  }
  EXPECT_EQ(chars.size(), 4u);
  EXPECT_FALSE(ReducedForm::from_character(Character(P2, {{5, 1}, {7, 2}, {15, 2}})).has_value());
}

TEST(Character, ScalarMul) {
  EXPECT_EQ(scalar_mul(1, chi_5_15()), chi_5_15());
  EXPECT_EQ(scalar_mul(3, chi_5_15()), Character(P2, {{5, 3}, {15, 2}}));
  EXPECT_FALSE(scalar_mul(2, chi_5_15()).is_surjective());
}

TEST(Character, ParseLiteral) {
  EXPECT_EQ(parse_character_literal("5:1,15:2", P2), chi_5_15());
  EXPECT_EQ(parse_character_literal(" 5 : 1 , 15 : 2 ", P2), chi_5_15());
  EXPECT_EQ(parse_character_text("p=2; 5:1,15:2"), chi_5_15());
  EXPECT_THROW(parse_character_literal("4:1", P2), ParseError);
  EXPECT_THROW(parse_character_literal("5:4", P2), ParseError);
  EXPECT_THROW(parse_character_literal("5:1,5:1", P2), ParseError);
  EXPECT_THROW(parse_character_literal("5:1,", P2), ParseError);
  EXPECT_THROW(parse_character_literal("5;1", P2), ParseError);
  EXPECT_THROW(parse_character_text("p=4; 1:1"), ParseError);
  try {
    parse_character_literal("5:1,15:9", P2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

TEST(Character, Lemma35Invariants) {
  Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    const Prime p(i % 3 == 0 ? 2 : i % 3 == 1 ? 3 : 5);
    const TypeLM type = random_type(p, 15, rng);
    const Character chi = random_character(p, type, rng);
    const Character acted = char_act(random_element(p, type.m, rng), chi);
    EXPECT_EQ(p.reduce(acted.coeff(type.l)), p.reduce(chi.coeff(type.l)));
    if (!p.divides(type.m)) EXPECT_EQ(acted.coeff(type.m), chi.coeff(type.m));
    EXPECT_EQ(break_sequence(acted), type);
  }
}

TEST(Character, Contravariance) {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const Prime p(i % 2 ? 2 : 3);
    const TypeLM type = random_type(p, 12, rng);
    const Character chi = random_character(p, type, rng);
    const NottinghamElt u = random_element(p, type.m, rng);
    const NottinghamElt v = random_element(p, type.m, rng);
    EXPECT_EQ(char_act(v, char_act(u, chi)), char_act(nott_compose(v, u), chi));
  }
}
