#include <gtest/gtest.h>

#include <numeric>

#include <nlohmann/json.hpp>

#include "sl2tilt/crosscheck.hpp"
#include "sl2tilt/errors.hpp"
#include "sl2tilt/ffmod.hpp"
#include "sl2tilt/homcount.hpp"

using namespace sl2tilt;
using namespace sl2tilt::ffmod;

namespace {

FieldPtr field(int p, int n) { return FiniteField::create(p, n); }

std::vector<int> unit_weight(std::int64_t k, const GroupParams& g) {
  std::vector<int> w(static_cast<std::size_t>(g.modulus()), 0);
  w[static_cast<std::size_t>(g.reduce(k))] = 1;
  return w;
}

}  // namespace

TEST(Field, Axioms) {
  for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    const auto f = field(p, n);
    for (int a = 0; a < f->q(); ++a) {
      const auto x = static_cast<Elem>(a);
      EXPECT_EQ(f->add(x, f->neg(x)), 0);
      if (a != 0) EXPECT_EQ(f->mul(x, f->inv(x)), 1);
      EXPECT_EQ(f->frob(x, n), x);
    }
    EXPECT_EQ(f->alpha_pow(f->q() - 1), 1);
    for (int e = 1; e < f->q() - 1; ++e) EXPECT_NE(f->alpha_pow(e), 1) << "alpha generates the unit group";
  }
}

TEST(Field, Polynomials) {
  EXPECT_TRUE(FiniteField::is_irreducible(3, {1, 0}));
  EXPECT_TRUE(FiniteField::is_irreducible(3, {2, 1}));
  EXPECT_FALSE(FiniteField::is_irreducible(3, {2, 0}));
  EXPECT_THROW(FiniteField::create(3, 2, {2, 0}), DomainError);
  EXPECT_THROW(FiniteField::create(3, 2, {1}), DomainError);
  EXPECT_THROW(FiniteField::create(2, 11), DomainError);
  EXPECT_EQ(FiniteField::create(3, 2, {2, 1})->polynomial(), (std::vector<int>{2, 1}));
}

TEST(Field, InvertingZeroThrowsOrIsRejected) {
  const auto f = field(3, 2);
  EXPECT_THROW(static_cast<void>(f->inv(0)), DomainError);
}

TEST(Matrix, LinearAlgebra) {
  const auto f = field(5, 1);
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  a(1, 2) = 1;
  EXPECT_EQ(rank(*f, a), 2);
  const Matrix k = nullspace(*f, a);
  ASSERT_EQ(k.cols(), 1);
  EXPECT_TRUE(multiply(*f, a, k).is_zero());
  Matrix b(2, 1);
  b(0, 0) = 3;
  b(1, 0) = 1;
  const Matrix x = solve(*f, a, b);
  EXPECT_EQ(multiply(*f, a, x), b);
  EXPECT_EQ(power(*f, Matrix::identity(3), 7), Matrix::identity(3));
}

TEST(BuildU, Examples) {
  const auto f = field(3, 2);
  EXPECT_EQ(build_U(0, f).t, Matrix::identity(1));
  for (std::int64_t i = 0; i < 8; ++i) {
    for (std::int64_t j = 0; j < 8; ++j) EXPECT_EQ(tensor(build_U(i, f), build_U(j, f)).t, build_U(i + j, f).t);
    EXPECT_EQ(frobenius_twist(build_U(i, f)).t, build_U(3 * i, f).t);
  }
}

TEST(BuildM, Dimensions) {
  for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
    const auto f = field(p, n);
    for (std::int64_t a = 0; a < f->params().q(); ++a) {
      int expected = 1;
      for (int d : to_digits(a, f->params()).digits) expected *= 1 + d;
      const auto m = build_M(a, f);
      EXPECT_EQ(m.dim(), expected);
      EXPECT_TRUE(check_group_relations(m));
    }
  }
  EXPECT_EQ(build_M(4, field(3, 2)).dim(), 4);
}

TEST(BuildM, HeadAndSocle) {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {5, 2}}) {
    const auto f = field(p, n);
    for (std::int64_t b = 0; b < f->params().steinberg(); ++b) {
      const auto m = build_M(b, f);
      EXPECT_EQ(head_weights(m), unit_weight(b, f->params()));
      const auto socle = socle_weights(m);
      EXPECT_EQ(std::accumulate(socle.begin(), socle.end(), 0), 1);
    }
  }
}

TEST(BuildM, SteinbergIsProjective) {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto f = field(p, n);
    EXPECT_TRUE(is_projective(build_M(f->params().steinberg(), f)));
    EXPECT_FALSE(is_projective(build_M(0, f)));
  }
}

TEST(Hom, Examples) {
  const auto f = field(3, 2);
  EXPECT_EQ(hom_dim(build_U(0, f), build_U(0, f)), 1);
  for (std::int64_t j = 1; j < 8; ++j) EXPECT_EQ(hom_dim(build_U(0, f), build_U(j, f)), 0);
  EXPECT_EQ(hom_dim(build_M(4, f), build_M(4, f)), 2);
}

TEST(Hom, BasisElementsAreHomomorphisms) {
  const auto f = field(3, 2);
  const auto x = build_M(4, f);
  const auto y = twist(build_M(7, f), 3);
  for (const Matrix& h : hom_basis(x, y)) {
    EXPECT_EQ(multiply(*f, h, x.t), multiply(*f, y.t, h));
    for (std::size_t k = 0; k < x.u.size(); ++k) EXPECT_EQ(multiply(*f, h, x.u[k]), multiply(*f, y.u[k], h));
  }
}

TEST(Cover, Examples) {
  const auto f = field(3, 2);
  const auto trivial = projective_cover(build_U(0, f));
  EXPECT_EQ(trivial.module.dim(), 9);
  EXPECT_TRUE(is_isomorphic(trivial.module, build_M(8, f)));
  EXPECT_TRUE(is_isomorphic(projective_cover(build_M(4, f)).module, twist(build_M(8, f), 4)));
  const auto f22 = field(2, 2);
  EXPECT_TRUE(is_isomorphic(projective_cover(build_M(3, f22)).module, build_M(3, f22)));
}

TEST(StableHomOracle, Examples) {
  const auto f = field(3, 2);
  EXPECT_EQ(stable_hom_dim_oracle(build_M(0, f), build_M(0, f)), 1);
  EXPECT_EQ(stable_hom_dim_oracle(build_M(8, f), build_M(8, f)), 0);
  EXPECT_EQ(stable_hom_dim_oracle(build_M(4, f), twist(build_M(7, f), 3)), 1);
}

TEST(Heller, Examples) {
  const auto f = field(3, 2);
  const auto omega6 = heller(build_M(6, f));
  EXPECT_TRUE(is_isomorphic(omega6, twist(build_M(7, f), -3)));
  EXPECT_EQ(heller(build_M(0, f)).dim(), 8);
  EXPECT_TRUE(is_isomorphic(heller(omega6), twist(build_M(6, f), -6)));
  EXPECT_THROW(heller(build_M(8, f)), DomainError);
}

TEST(Heller, RimLaw) {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto f = field(p, n);
    const GroupParams& g = f->params();
    for (std::int64_t b = 0; b < g.steinberg(); ++b) {
      if (!is_rim(b, g)) continue;
      const int i = rim_position(b, g);
      EXPECT_TRUE(is_isomorphic(heller(build_M(b, f)), twist(build_M(flip_digit(b, i, g), f), -g.pow(i + 1)))) << b;
    }
  }
}

TEST(Ext1Oracle, Examples) {
  const auto f = field(3, 2);
  EXPECT_EQ(ext1_oracle(build_U(0, f), build_U(0, f)), 0);
  EXPECT_EQ(ext1_oracle(build_M(4, f), twist(heller(build_M(7, f)), 3)), 1);
}

TEST(Oracle, FullGridAgreesWithCounting) {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}}) {
    const auto report = crosscheck::formula_vs_oracle(field(p, n));
    EXPECT_TRUE(report.ok()) << (report.counterexamples.empty() ? "" : report.counterexamples.front());
  }
}

TEST(Oracle, IndependentOfFieldPolynomial) {
  for (const std::vector<int>& poly : {std::vector<int>{1, 0}, std::vector<int>{2, 1}}) {
    const auto f = FiniteField::create(3, 2, poly);
    EXPECT_NO_THROW(convention_self_test(f));
    EXPECT_TRUE(crosscheck::formula_vs_oracle(f).ok());
  }
}

TEST(SesIFill, Examples) {
  EXPECT_TRUE(verify_ses_ifill(4, 1, field(3, 2)));
  EXPECT_TRUE(verify_ses_ifill(0, 0, field(2, 2)));
  EXPECT_THROW(verify_ses_ifill(2, 0, field(3, 2)), DomainError);
}

TEST(SesIFill, AllValidAtThreeSquared) {
  const auto f = field(3, 2);
  const GroupParams& g = f->params();
  for (std::int64_t b = 0; b < g.steinberg(); ++b) {
    for (int i = 0; i < g.n(); ++i) {
      if (to_digits(b, g)[static_cast<std::size_t>(i)] > g.p() - 2) continue;
      EXPECT_TRUE(verify_ses_ifill(b, i, f)) << b << " " << i;
    }
  }
}

TEST(Modules, KernelAndCokernel) {
  const auto f = field(3, 2);
  const auto cover = projective_cover(build_M(4, f));
  const auto k = kernel_module(cover.module, cover.surjection);
  EXPECT_EQ(k.dim(), 5);
  EXPECT_TRUE(check_group_relations(k));
  EXPECT_TRUE(is_isomorphic(k, heller(build_M(4, f))));
}

TEST(Modules, SymbolModules) {
  const auto f = field(3, 2);
  const GroupParams& g = f->params();
  EXPECT_TRUE(is_isomorphic(module_of_symbol(StableSymbol::make(3, 1, 7, g), f), build_M(6, f)));
  EXPECT_EQ(head_weights(module_of_symbol(StableSymbol::make(3, 0, 7, g), f)), unit_weight(10, g));
  EXPECT_THROW(module_of_symbol(StableSymbol::zero(), f), DomainError);
}

TEST(Modules, JsonDump) {
  const auto j = to_json(build_M(4, field(3, 2)));
  EXPECT_EQ(j.at("dim"), 4);
  EXPECT_TRUE(j.contains("t"));
  EXPECT_TRUE(j.contains("u"));
}
