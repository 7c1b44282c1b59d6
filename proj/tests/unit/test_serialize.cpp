#include <gtest/gtest.h>

#include <random>

#include "faulhaber/serialize.hpp"

using namespace faulhaber;
using nlohmann::json;

TEST(Serialize, RationalStrings) {
  EXPECT_EQ(json(Rational::parse("-3/4")).get<std::string>(), "-3/4");
  EXPECT_EQ(json(Rational(5)).get<std::string>(), "5");
  EXPECT_EQ(json("7/21").get<Rational>(), Rational::parse("1/3"));
  EXPECT_THROW(json("x").get<Rational>(), std::invalid_argument);
}

TEST(Serialize, PolyArray) {
  const Poly p{Rational(1), Rational::parse("-1/2"), Rational(0), Rational(3)};
  const json j = p;
  EXPECT_EQ(j.dump(), R"(["1","-1/2","0","3"])");
  EXPECT_EQ(j.get<Poly>(), p);
  EXPECT_EQ(json(Poly()).dump(), "[]");
}

TEST(Serialize, LaurentAndSeriesAndFaulhaber) {
  const LaurentPoly l(-2, {Rational(1), Rational(0), Rational::parse("2/3")});
  const json jl = l;
  EXPECT_EQ(jl.at("min_exp").get<long>(), -2);
  EXPECT_EQ(jl.get<LaurentPoly>(), l);

  const TruncatedSeries s(3, {Rational(1), Rational(-1)});
  EXPECT_EQ(json(s).get<TruncatedSeries>(), s);

  const FaulhaberPoly f{9, {Rational::parse("-3/5"), Rational::parse("12/5"), Rational(-4), Rational::parse("16/5")}};
  const json jf = f;
  EXPECT_EQ(jf.at("n").get<long>(), 9);
  EXPECT_EQ(jf.get<FaulhaberPoly>(), f);
}

TEST(Serialize, RandomRoundTrip) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 999);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c(8);
    for (auto& a : c) a = Rational(BigInt(num(rng)), BigInt(den(rng)));
    const Poly p(c);
    EXPECT_EQ(json::parse(json(p).dump()).get<Poly>(), p);
  }
}
