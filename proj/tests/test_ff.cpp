#include <gtest/gtest.h>

#include "amzv/error.hpp"
#include "amzv/ff.hpp"

using namespace amzv::ff;

namespace {

const std::vector<std::pair<int, int>> kFields = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}};

}  // namespace

TEST(Field, PrimeFieldGenerators) {
  EXPECT_EQ(Field::make(2, 1)->generator().code(), 1);
  EXPECT_EQ(Field::make(3, 1)->generator().code(), 2);
}

TEST(Field, F4WithGivenModulus) {
  auto f4 = Field::make(2, 2, std::vector<int>{1, 1, 1});
  const Elem g = f4->generator();
  EXPECT_EQ(g.coords(), (std::vector<int>{0, 1}));
  EXPECT_TRUE((g + g).is_zero());
  EXPECT_EQ(g * g, g + f4->one());
  EXPECT_EQ(g.inv(), g + f4->one());
  EXPECT_EQ(g.pow(3), f4->one());
}

TEST(Field, SmallPrimeArithmetic) {
  auto f3 = Field::make(3, 1);
  const Elem two = f3->from_int(2);
  EXPECT_EQ(two + two, f3->one());
  EXPECT_EQ(two * two, f3->one());
  EXPECT_EQ(two.inv(), two);
  EXPECT_EQ(two.pow(2), f3->one());
  EXPECT_EQ(f3->from_int(-1), two);
}

TEST(Field, AxiomsExhaustive) {
  for (auto [p, k] : kFields) {
    auto f = Field::make(p, k);
    SCOPED_TRACE("q=" + std::to_string(f->q()));
    const auto all = f->elements();
    ASSERT_EQ(static_cast<int>(all.size()), f->q());
    for (Elem a : all) {
      EXPECT_EQ(a + f->zero(), a);
      EXPECT_EQ(a * f->one(), a);
      EXPECT_EQ(a.pow(0), f->one());
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inv(), f->one());
        EXPECT_EQ(f->from_log(a.log()), a);
        EXPECT_EQ(a.pow(f->q() - 1), f->one());
      }
      for (Elem b : all) {
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        for (Elem c : all) {
          EXPECT_EQ((a + b) + c, a + (b + c));
          EXPECT_EQ((a * b) * c, a * (b * c));
          EXPECT_EQ(a * (b + c), a * b + a * c);
        }
      }
    }
  }
}

TEST(Field, GeneratorHasFullOrderAndIsSmallest) {
  for (auto [p, k] : kFields) {
    auto f = Field::make(p, k);
    const auto units = f->units();
    ASSERT_EQ(static_cast<int>(units.size()), f->q() - 1);
    for (int j = 0; j < f->q() - 1; ++j) EXPECT_EQ(units[j], f->generator().pow(j));
    // No smaller nonzero code generates the unit group.
    for (Code c = 1; c < f->generator().code(); ++c) {
      const Elem e = f->from_code(c);
      int order = 1;
      for (Elem x = e; !(x == f->one()); x = x * e) ++order;
      EXPECT_LT(order, f->q() - 1);
    }
  }
}

TEST(Field, Literals) {
  auto f9 = Field::from_q_string("3^2");
  EXPECT_EQ(f9->q(), 9);
  EXPECT_EQ(Field::from_q_string("9")->q(), 9);
  for (Elem e : f9->elements()) EXPECT_EQ(f9->parse(f9->format(e)), e);
  EXPECT_EQ(f9->format(f9->zero()), "0");
  EXPECT_EQ(f9->format(f9->generator()), "g^1");
  EXPECT_EQ(f9->parse("2"), f9->from_int(2));
  EXPECT_THROW(f9->parse("g^8"), amzv::ParseError);
  EXPECT_THROW(f9->parse("3"), amzv::ParseError);
  EXPECT_THROW(f9->parse("banana"), amzv::ParseError);
}

TEST(Field, Rejections) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 7), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 2, std::vector<int>{1, 0, 1}), std::invalid_argument);  // t^2 + 1 = (t + 1)^2
  EXPECT_THROW(Field::from_q_string("6"), std::invalid_argument);
  EXPECT_THROW(Field::make(3, 1)->zero().inv(), std::domain_error);
  EXPECT_THROW(Field::make(3, 1)->zero().log(), std::domain_error);
}

TEST(Field, CustomModulusAndIrreducibility) {
  EXPECT_TRUE(is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible({0, 1, 1}, 2));
  EXPECT_TRUE(is_irreducible({2, 2, 1}, 3));
  auto f8 = Field::make(2, 3, std::vector<int>{1, 0, 1, 1});
  EXPECT_EQ(f8->q(), 8);
  const auto units = f8->units();
  EXPECT_EQ(units.size(), 7u);
}
