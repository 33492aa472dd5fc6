#include <gtest/gtest.h>

#include "sl2tilt/basep.hpp"
#include "sl2tilt/errors.hpp"

using namespace sl2tilt;

namespace {

std::vector<int> digits(std::int64_t a, int p, int n) { return to_digits(a, GroupParams(p, n)).digits; }

}  // namespace

TEST(GroupParams, RejectsNonPrimeAndOverflow) {
  EXPECT_THROW(GroupParams(4, 2), DomainError);
  EXPECT_THROW(GroupParams(1, 2), DomainError);
  EXPECT_THROW(GroupParams(3, 0), DomainError);
  EXPECT_THROW(GroupParams(2, 40), DomainError);
  const GroupParams g(5, 2);
  EXPECT_EQ(g.q(), 25);
  EXPECT_EQ(g.modulus(), 24);
  EXPECT_EQ(g.steps(), 5);
  EXPECT_EQ(g.reduce(-1), 23);
  EXPECT_EQ(g.reduce(25), 1);
}

TEST(Digits, Examples) {
  EXPECT_EQ(digits(6, 3, 2), (std::vector<int>{0, 2}));
  EXPECT_EQ(digits(0, 3, 2), (std::vector<int>{0, 0}));
  EXPECT_EQ(digits(77, 3, 6), (std::vector<int>{2, 1, 2, 2, 0, 0}));
  EXPECT_EQ(format_digits(to_digits(77, GroupParams(3, 6))), "(2,1,2,2,0,0)");
  EXPECT_THROW(to_digits(9, GroupParams(3, 2)), DomainError);
  EXPECT_THROW(to_digits(-1, GroupParams(3, 2)), DomainError);
}

TEST(Digits, RoundTrip) {
  for (auto [p, n] : {std::pair{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    const GroupParams g(p, n);
    for (std::int64_t a = 0; a < g.q(); ++a) EXPECT_EQ(from_digits(to_digits(a, g).digits, g), a);
  }
}

TEST(Layer, Examples) {
  const GroupParams g(3, 2);
  EXPECT_EQ(layer(6, g), 0);
  EXPECT_EQ(layer(0, g), 1);
  EXPECT_EQ(layer(77, GroupParams(3, 6)), 5);
  EXPECT_THROW(layer(8, g), NoLayerError);
}

TEST(Layer, AgreesWithIntervals) {
  for (auto [p, n] : {std::pair{2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
    const GroupParams g(p, n);
    for (std::int64_t a = 0; a < g.steinberg(); ++a) EXPECT_EQ(layer(a, g), layer_by_interval(a, g)) << a;
  }
}

TEST(Partner, Examples) {
  const GroupParams g(3, 2);
  EXPECT_EQ(partner(0, g), 3);
  EXPECT_EQ(partner(6, g), 7);
  EXPECT_EQ(partner(16, GroupParams(5, 2)), 1);
  EXPECT_THROW(partner(8, g), NoLayerError);
  const GroupParams two(2, 4);
  for (std::int64_t a = 0; a < two.steinberg(); ++a) EXPECT_EQ(partner(a, two), a);
}

TEST(Partner, InvolutiveAndLayerPreserving) {
  for (auto [p, n] : {std::pair{3, 3}, {5, 2}, {7, 2}}) {
    const GroupParams g(p, n);
    for (std::int64_t a = 0; a < g.steinberg(); ++a) {
      EXPECT_EQ(partner(partner(a, g), g), a);
      EXPECT_EQ(layer(partner(a, g), g), layer(a, g));
      EXPECT_EQ((partner(a, g) + a) % 2, 1) << "partner changes parity";
    }
  }
}

TEST(Completion, Examples) {
  EXPECT_EQ(completion(4, GroupParams(3, 2)), 7);
  EXPECT_EQ(completion(18, GroupParams(3, 3)), 24);
  EXPECT_EQ(completion(0, GroupParams(2, 2)), 2);
  EXPECT_THROW(completion(8, GroupParams(3, 2)), NoLayerError);
}

TEST(Rim, Detection) {
  const GroupParams g(3, 2);
  EXPECT_TRUE(is_rim(7, g));
  EXPECT_EQ(rim_position(7, g), 0);
  EXPECT_TRUE(is_rim(5, g));
  EXPECT_EQ(rim_position(5, g), 1);
  EXPECT_FALSE(is_rim(4, g));
  EXPECT_FALSE(is_rim(8, g));
  EXPECT_THROW(rim_position(4, g), DomainError);
}

TEST(Digits, FlipAndFill) {
  const GroupParams g(3, 2);
  EXPECT_EQ(flip_digit(7, 0, g), 6);
  EXPECT_EQ(fill_digit(4, 1, g), 7);
  EXPECT_THROW(flip_digit(2, 0, g), DomainError);
}

TEST(Valuation, Examples) {
  const GroupParams g(3, 3);
  EXPECT_EQ(val_p(3, g), 1);
  EXPECT_EQ(val_p(6, g), 1);
  EXPECT_EQ(val_p(9, g), 2);
  EXPECT_EQ(val_p(1, g), 0);
  EXPECT_THROW(val_p(0, g), DomainError);
  EXPECT_THROW(val_p(10, g), DomainError);
}

TEST(FloorCeil, Examples) {
  const GroupParams g(3, 2);
  EXPECT_EQ(floor_at(1, 1, g), 0);
  EXPECT_EQ(ceil_at(1, 1, g), 3);
  EXPECT_EQ(ceil_at(2, 1, g), 3);
  EXPECT_EQ(floor_at(5, 1, GroupParams(5, 2)), 5);
}

TEST(FloorCeil, Brackets) {
  const GroupParams g(3, 4);
  for (std::int64_t m = 1; m <= g.steps(); ++m) {
    for (int s = 0; s < g.n(); ++s) {
      EXPECT_LE(floor_at(m, s, g), m);
      EXPECT_GT(ceil_at(m, s, g), m);
      EXPECT_EQ(floor_at(m, s, g) % g.pow(s), 0);
      EXPECT_EQ(ceil_at(m, s, g) - floor_at(m, s, g), g.pow(s));
    }
  }
}

TEST(KParity, Examples) {
  EXPECT_EQ(k_parity(1, 1, GroupParams(3, 2)), Parity::Even);
  EXPECT_EQ(k_parity(6, 1, GroupParams(3, 3)), Parity::Even);
  for (auto [p, n] : {std::pair{3, 3}, {5, 2}, {7, 3}}) {
    const GroupParams g(p, n);
    for (int s = 0; s < n; ++s) EXPECT_EQ(k_parity(g.steps(), s, g), Parity::Odd);
  }
}
