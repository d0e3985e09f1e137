#include <gtest/gtest.h>

#include "fqcalc/field.hpp"

using namespace fqcalc;

TEST(Field, SpecExamples) {
  const auto f2 = FqContext::make(2);
  EXPECT_EQ(f2->add(1, 1), 0);
  const auto f3 = FqContext::make(3);
  EXPECT_EQ(f3->inv(2), 2);
  const auto f4 = FqContext::make(2, 2, std::vector<unsigned>{1, 1, 1});
  const Code u = f4->parse("u");
  EXPECT_EQ(f4->to_string(f4->mul(u, u)), "u+1");
}

TEST(Field, EnumerationOrder) {
  auto names = [](unsigned q) {
    std::vector<std::string> out;
    const auto f = FqContext::make(q);
    for (Code c : f->elements()) out.push_back(f->to_string(c));
    return out;
  };
  EXPECT_EQ(names(2), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(names(3), (std::vector<std::string>{"0", "1", "2"}));
  EXPECT_EQ(names(4), (std::vector<std::string>{"0", "1", "u", "u+1"}));
}

TEST(Field, BuiltinModuliAreIrreducible) {
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const auto f = FqContext::make(q);
    EXPECT_EQ(f->q(), q);
    std::vector<unsigned> m = f->modulus();
    EXPECT_TRUE(is_irreducible_mod_p(m, f->p())) << q;
  }
}

TEST(Field, FallbackModulusForOtherPrimePowers) {
  const auto f = FqContext::make(49);
  EXPECT_EQ(f->p(), 7u);
  EXPECT_EQ(f->gamma(), 2u);
  EXPECT_TRUE(is_irreducible_mod_p(f->modulus(), 7));
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(FqContext::make(6), FieldError);
  EXPECT_THROW(FqContext::make(1), FieldError);
  EXPECT_THROW(FqContext::make(2, 2, std::vector<unsigned>{1, 0, 1}), FieldError);  // (u+1)^2
  EXPECT_THROW(FqContext::make(4)->inv(0), FieldError);
  EXPECT_THROW(FqContext::make(3)->parse("x"), FieldError);
}

// Exhaustive field axioms on every small field.
TEST(Field, AxiomsExhaustive) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = FqContext::make(q);
    const auto els = f->elements();
    for (Code a : els) {
      EXPECT_EQ(f->add(a, f->neg(a)), 0);
      if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1);
      EXPECT_EQ(f->pow(a, q), a);
      for (Code b : els) {
        EXPECT_EQ(f->add(a, b), f->add(b, a));
        EXPECT_EQ(f->mul(a, b), f->mul(b, a));
        // Frobenius is additive.
        EXPECT_EQ(f->pow(f->add(a, b), f->p()), f->add(f->pow(a, f->p()), f->pow(b, f->p())));
        for (Code c : els) EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST(Field, TextRoundTrip) {
  for (unsigned q : {3u, 4u, 9u, 27u}) {
    const auto f = FqContext::make(q);
    for (Code a : f->elements()) EXPECT_EQ(f->parse(f->to_string(a)), a);
  }
  EXPECT_EQ(FqContext::make(5)->parse("-1"), 4);
  EXPECT_EQ(FqContext::make(5)->from_int(-7), 3);
}

TEST(Field, ElementWrapper) {
  const auto f = FqContext::make(4);
  const auto u = FqElement::parse(f, "u");
  EXPECT_EQ((u * u).to_string(), "u+1");
  EXPECT_EQ((u / u).to_string(), "1");
  EXPECT_EQ(u.pow(3).to_string(), "1");
  EXPECT_THROW(u + FqElement::one(FqContext::make(2)), FieldError);
  // Structurally equal contexts mix freely.
  EXPECT_NO_THROW(u + FqElement::one(FqContext::make(4)));
}
