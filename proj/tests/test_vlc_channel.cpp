#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "uavvlc/vlc_channel.hpp"

namespace {

using namespace uavvlc;

constexpr double kNadirGain = 1.4920775914865188e-6;
constexpr double kSingleLinkRate = 0.06633170177997666;

TEST(LambertOrder, SixtyDegreesIsOne) {
  EXPECT_NEAR(lambert_order(60.0).m, 1.0, 1e-12);
}

TEST(LambertOrder, ThirtyDegrees) {
  EXPECT_NEAR(lambert_order(30.0).m, 4.81884167930642, 1e-12);
}

TEST(LambertOrder, RejectsOutOfRange) {
  EXPECT_THROW(lambert_order(0.0), std::domain_error);
  EXPECT_THROW(lambert_order(90.0), std::domain_error);
  EXPECT_THROW(lambert_order(-5.0), std::domain_error);
}

TEST(Geometry, Distances) {
  EXPECT_DOUBLE_EQ(distance({0, 0, 8}, {0, 0, 0}), 8.0);
  EXPECT_NEAR(distance({0, 0, 8}, {3, 4, 0}), 9.433981132056604, 1e-12);
  const LinkGeometry g = link_geometry({1, 1, 8}, {1, 1, 0});
  EXPECT_DOUBLE_EQ(g.distance, 8.0);
  EXPECT_DOUBLE_EQ(g.cos_incidence, 1.0);
}

TEST(Geometry, CosineIsHeightOverDistance) {
  const LinkGeometry g = link_geometry({0, 0, 8}, {3, 4, 0});
  EXPECT_NEAR(g.cos_incidence, 8.0 / std::sqrt(89.0), 1e-12 * g.cos_incidence);
}

TEST(ConcentratorGain, InsideAndOutsideFov) {
  const VlcParams p;
  EXPECT_NEAR(concentrator_gain(0.0, p), 3.0, 1e-12);
  EXPECT_NEAR(concentrator_gain(45.0, p), 3.0, 1e-12);
  EXPECT_EQ(concentrator_gain(60.0, p), 0.0);
  EXPECT_EQ(concentrator_gain(75.0, p), 0.0);
}

TEST(ChannelGain, NadirValue) {
  EXPECT_NEAR(channel_gain({0, 0, 8}, {0, 0, 0}, VlcParams{}), kNadirGain, 1e-12 * kNadirGain);
}

TEST(ChannelGain, InverseSquareAtNadir) {
  const VlcParams p;
  EXPECT_NEAR(channel_gain({0, 0, 8}, {0, 0, 0}, p) / channel_gain({0, 0, 16}, {0, 0, 0}, p), 4.0,
              1e-12);
}

TEST(ChannelGain, FirstPowerExponent) {
  VlcParams p;
  p.distance_exponent = 1;
  EXPECT_NEAR(channel_gain({0, 0, 8}, {0, 0, 0}, p), kNadirGain * 8.0, 1e-12 * kNadirGain * 8.0);
}

TEST(ChannelGain, OutsideFovIsZero) {
  // 20 m horizontally at 8 m height is about 68 degrees off axis.
  EXPECT_EQ(channel_gain({0, 0, 8}, {20, 0, 0}, VlcParams{}), 0.0);
}

TEST(ChannelGain, RequiresUavAbove) {
  EXPECT_THROW(channel_gain({0, 0, 0}, {0, 0, 0}, VlcParams{}), std::domain_error);
}

TEST(ChannelGain, MatchesOracleAcrossAngles) {
  const VlcParams p;
  for (double x = 0.0; x < 14.0; x += 0.37) {
    const double got = channel_gain({0, 0, 8}, {x, 0.5, 0}, p);
    const double want = oracle::gain(0, 0, 8, x, 0.5, 0);
    EXPECT_NEAR(got, want, 1e-12 * want) << "x=" << x;
  }
}

TEST(ChannelKernel, AgreesWithChannelGain) {
  for (double half : {30.0, 45.0, 60.0}) {
    VlcParams p;
    p.semi_angle_half_power_deg = half;
    const ChannelKernel k(p);
    for (double dx = -10.0; dx < 10.0; dx += 0.73) {
      const double want = channel_gain({dx, 1.0, 8.0}, {0, 0, 0}, p);
      EXPECT_NEAR(k.gain(dx, 1.0, 8.0), want, 1e-13 * want + 1e-300);
    }
  }
}

TEST(TotalReceivedPower, EmptyAndLinear) {
  const VlcParams p;
  EXPECT_EQ(total_received_power({}, {0, 0, 0}, p), 0.0);
  const std::vector<Transmitter> one{{{0, 0, 8}, 1.0}};
  EXPECT_NEAR(total_received_power(one, {0, 0, 0}, p), kNadirGain, 1e-12 * kNadirGain);
  const std::vector<Transmitter> two{{{0, 0, 8}, 1.0}, {{0, 0, 8}, 1.0}};
  EXPECT_DOUBLE_EQ(total_received_power(two, {0, 0, 0}, p),
                   2.0 * total_received_power(one, {0, 0, 0}, p));
}

TEST(TotalReceivedPower, AdjustFactorScales) {
  const VlcParams p;
  const std::vector<Transmitter> half{{{0, 0, 8}, 1.0, 0.5}};
  EXPECT_NEAR(total_received_power(half, {0, 0, 0}, p), 0.5 * kNadirGain, 1e-12 * kNadirGain);
}

TEST(AchievableRate, SingleLink) {
  const std::vector<Transmitter> one{{{0, 0, 8}, 1.0}};
  const double r = achievable_rate(0, one, {0, 0, 0}, VlcParams{});
  EXPECT_NEAR(r, kSingleLinkRate, 1e-12 * kSingleLinkRate);
  const double s = kNadirGain * kNadirGain;
  EXPECT_NEAR(r, oracle::rate(s, 0.0, 1e-11), 1e-12 * r);
}

TEST(AchievableRate, ZeroPowerGivesZero) {
  const std::vector<Transmitter> one{{{0, 0, 8}, 0.0}};
  EXPECT_EQ(achievable_rate(0, one, {0, 0, 0}, VlcParams{}), 0.0);
}

TEST(AchievableRate, InterfererLowersRate) {
  const VlcParams p;
  const std::vector<Transmitter> one{{{0, 0, 8}, 1.0}};
  const std::vector<Transmitter> two{{{0, 0, 8}, 1.0}, {{1, 0, 8}, 1.0}};
  EXPECT_LT(achievable_rate(0, two, {0, 0, 0}, p), achievable_rate(0, one, {0, 0, 0}, p));
}

TEST(AchievableRate, MonotoneInPowers) {
  const VlcParams p;
  std::vector<Transmitter> t{{{0, 0, 8}, 1.0}, {{1, 0, 8}, 1.0}};
  const double base = achievable_rate(0, t, {0, 0, 0}, p);
  t[0].power_w = 1.5;
  EXPECT_GT(achievable_rate(0, t, {0, 0, 0}, p), base);
  t[0].power_w = 1.0;
  t[1].power_w = 1.5;
  EXPECT_LT(achievable_rate(0, t, {0, 0, 0}, p), base);
}

TEST(AchievableRate, UnreachableServingThrows) {
  const std::vector<Transmitter> one{{{30, 0, 8}, 1.0}};
  EXPECT_THROW(achievable_rate(0, one, {0, 0, 0}, VlcParams{}), std::domain_error);
}

TEST(EavesdropperRate, OutOfViewIsZero) {
  const std::vector<Transmitter> t{{{30, 0, 8}, 1.0}, {{0, 30, 8}, 1.0}};
  EXPECT_EQ(eavesdropper_rate(0, t, {0, 0, 0}, VlcParams{}), 0.0);
  EXPECT_EQ(eavesdropper_rate(1, t, {0, 0, 0}, VlcParams{}), 0.0);
}

TEST(EavesdropperRate, NadirMatchesSingleLink) {
  const std::vector<Transmitter> one{{{2, 2, 8}, 1.0}};
  EXPECT_NEAR(eavesdropper_rate(0, one, {2, 2, 0}, VlcParams{}), kSingleLinkRate,
              1e-12 * kSingleLinkRate);
}

TEST(EavesdropperRate, MirroredPairIsSymmetric) {
  const std::vector<Transmitter> t{{{-1.5, 0, 8}, 2.0}, {{1.5, 0, 8}, 2.0}};
  EXPECT_NEAR(eavesdropper_rate(0, t, {0, 0, 0}, VlcParams{}),
              eavesdropper_rate(1, t, {0, 0, 0}, VlcParams{}), 1e-15);
}

TEST(Noise, DecibelConversion) {
  EXPECT_NEAR(noise_from_db(-110.0), 1e-11, 1e-24);
}

TEST(VlcParams, ValidateRejectsBadFields) {
  VlcParams p;
  p.detector_area_m2 = -1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.distance_exponent = 3;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_NO_THROW(VlcParams{}.validate());
}

} // namespace
