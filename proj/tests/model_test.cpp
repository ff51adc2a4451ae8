#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hfsc/generator.hpp"
#include "hfsc/model.hpp"
#include "test_support.hpp"

namespace {

using hfsc::Count;
using hfsc::Instance;
using hfsc::Lay;
using hfsc::ViolationKind;

Instance single_sku(Count demand, Count length = 100, Count bed_length = 720, Count bed_height = 160) {
  Instance inst;
  inst.name = "single";
  inst.bed_length = bed_length;
  inst.bed_height = bed_height;
  inst.lengths = {length};
  inst.demand = {{demand}};
  return inst;
}

bool has_kind(const hfsc::ValidationReport& r, ViolationKind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const auto& v) { return v.kind == kind; });
}

TEST(ValidateInstance, BenchmarkShapeIsValid) {
  const auto [inst, st] = hfsc::generate_case(*hfsc::find_group("G1"), hfsc::GeneratorState{1});
  EXPECT_EQ(inst.figures(), 30U);
  EXPECT_EQ(inst.fabrics(), 5U);
  EXPECT_EQ(inst.bed_length, 720);
  EXPECT_EQ(inst.bed_height, 160);
  EXPECT_TRUE(hfsc::validate_instance(inst).valid());
}

TEST(ValidateInstance, TemplateLongerThanBed) {
  Instance inst = single_sku(1, 721);
  const auto report = hfsc::validate_instance(inst);
  EXPECT_FALSE(report.valid());
  EXPECT_TRUE(has_kind(report, ViolationKind::length));
  // Without demand the long template is harmless.
  inst.demand = {{0}};
  EXPECT_TRUE(hfsc::validate_instance(inst).valid());
}

TEST(ValidateInstance, NegativeDemand) {
  Instance inst;
  inst.bed_length = 720;
  inst.bed_height = 160;
  inst.lengths = {60, 70, 80};
  inst.demand = {{1, 2}, {3, 4}, {5, -1}};
  const auto report = hfsc::validate_instance(inst);
  ASSERT_FALSE(report.valid());
  EXPECT_TRUE(has_kind(report, ViolationKind::shape));
  EXPECT_EQ(report.violations.front().first, 2);
  EXPECT_EQ(report.violations.front().second, 1);
}

TEST(ValidateInstance, RaggedAndMismatchedShapes) {
  Instance inst = single_sku(4);
  inst.demand = {{1, 2}, {3}};
  EXPECT_TRUE(has_kind(hfsc::validate_instance(inst), ViolationKind::shape));
  inst = single_sku(4);
  inst.bed_height = 0;
  EXPECT_FALSE(hfsc::validate_instance(inst).valid());
  inst = single_sku(4);
  inst.lengths = {0};
  EXPECT_FALSE(hfsc::validate_instance(inst).valid());
}

TEST(LayVolume, ProductOfLengthAndHeight) {
  Instance inst;
  inst.bed_length = 720;
  inst.bed_height = 160;
  inst.lengths = {100, 200, 60};
  inst.demand = {{0, 0}, {0, 0}, {0, 0}};
  // 100 + 3 * 200 = 700 long, 150 high
  const Lay lay{{100, 50}, {1, 3, 0}};
  EXPECT_EQ(hfsc::pattern_length(lay, inst.lengths), 700);
  EXPECT_EQ(hfsc::lay_volume(lay, inst), 105000);
  EXPECT_EQ(hfsc::lay_volume(Lay{{100, 50}, {0, 0, 0}}, inst), 0);
  EXPECT_EQ(hfsc::lay_volume(Lay{{80, 80}, {0, 0, 12}}, inst), 115200);
}

TEST(LayVolume, DimensionMismatchThrows) {
  const Instance inst = single_sku(4);
  EXPECT_THROW(hfsc::lay_volume(Lay{{1, 1}, {1}}, inst), hfsc::DimensionError);
}

TEST(UtilizationRate, Fractions) {
  Instance inst = single_sku(0, 60);
  EXPECT_DOUBLE_EQ(hfsc::utilization_rate(Lay{{160}, {12}}, inst), 1.0);
  EXPECT_DOUBLE_EQ(hfsc::utilization_rate(Lay{{160}, {0}}, inst), 0.0);
  EXPECT_DOUBLE_EQ(hfsc::utilization_rate(Lay{{80}, {12}}, inst), 0.5);  // 57600
}

TEST(ValidatePlan, ExactSingleLay) {
  const Instance inst = single_sku(4);
  const auto plan = hfsc::make_plan(inst, {Lay{{4}, {1}}});
  EXPECT_TRUE(hfsc::validate_plan(plan, inst).valid());
  EXPECT_EQ(plan.k, 1U);
}

TEST(ValidatePlan, Overproduction) {
  const Instance inst = single_sku(4);
  const auto report = hfsc::validate_plan(hfsc::make_plan(inst, {Lay{{5}, {1}}}), inst);
  ASSERT_EQ(report.violations.size(), 1U);
  EXPECT_EQ(report.violations[0].kind, ViolationKind::exactness);
  EXPECT_EQ(report.violations[0].observed, 5);
  EXPECT_EQ(report.violations[0].required, 4);
}

TEST(ValidatePlan, LengthAndHeightLimits) {
  Instance inst = single_sku(146, 73);
  // 10 * 73 = 730 > 720
  auto report = hfsc::validate_plan(hfsc::make_plan(inst, {Lay{{14}, {10}}, Lay{{6}, {1}}}), inst);
  EXPECT_TRUE(has_kind(report, ViolationKind::length));
  inst = single_sku(170, 60);
  report = hfsc::validate_plan(hfsc::make_plan(inst, {Lay{{170}, {1}}}), inst);
  EXPECT_TRUE(has_kind(report, ViolationKind::height));
}

TEST(ValidatePlan, DegenerateLaysRejected) {
  const Instance inst = single_sku(4);
  auto report = hfsc::validate_plan(hfsc::make_plan(inst, {Lay{{4}, {1}}, Lay{{0}, {3}}}), inst);
  EXPECT_TRUE(has_kind(report, ViolationKind::shape));
  report = hfsc::validate_plan(hfsc::make_plan(inst, {Lay{{4}, {1}}, Lay{{2}, {0}}}), inst);
  EXPECT_TRUE(has_kind(report, ViolationKind::shape));
  hfsc::CuttingPlan wrong_dims;
  wrong_dims.lays = {Lay{{4, 1}, {1}}};
  wrong_dims.k = 1;
  report = hfsc::validate_plan(wrong_dims, inst);
  EXPECT_TRUE(has_kind(report, ViolationKind::shape));
  wrong_dims.lays = {Lay{{4}, {1}}};
  wrong_dims.k = 2;
  EXPECT_TRUE(has_kind(hfsc::validate_plan(wrong_dims, inst), ViolationKind::shape));
}

TEST(VolumeLowerBound, Ceiling) {
  Instance inst = single_sku(0, 60);
  EXPECT_EQ(hfsc::volume_lower_bound(inst), 0);
  inst.demand = {{3840}};  // 60 * 3840 = 230400
  EXPECT_EQ(hfsc::volume_lower_bound(inst), 2);
  inst.lengths = {1};
  inst.demand = {{115201}};
  EXPECT_EQ(hfsc::volume_lower_bound(inst), 2);
  inst.demand = {{115200}};
  EXPECT_EQ(hfsc::volume_lower_bound(inst), 1);
}

TEST(CoveredDemand, SumsLayProducts) {
  Instance inst;
  inst.bed_length = 100;
  inst.bed_height = 10;
  inst.lengths = {10, 20};
  inst.demand = {{0, 0}, {0, 0}};
  const std::vector<Lay> lays{Lay{{2, 1}, {1, 2}}, Lay{{0, 3}, {4, 0}}, Lay{{5, 0}, {1, 1}}};
  EXPECT_EQ(hfsc::covered_demand(lays, inst), hfsc::testing::production(lays, 2, 2));
  EXPECT_EQ(hfsc::covered_demand({}, inst), (hfsc::Matrix{{0, 0}, {0, 0}}));
  const Lay twice{{3}, {1}};
  const Instance one = single_sku(6);
  EXPECT_EQ(hfsc::covered_demand({twice}, one)[0][0] * 2, hfsc::covered_demand({twice, twice}, one)[0][0]);
}

TEST(ModelProperty, VolumeInvariantUnderPermutation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = hfsc::testing::random_instance(rng);
    const std::size_t g = inst.figures();
    const std::size_t f = inst.fabrics();
    Lay lay;
    for (std::size_t j = 0; j < f; ++j) lay.heights.push_back(std::uniform_int_distribution<Count>(0, 5)(rng));
    for (std::size_t i = 0; i < g; ++i) lay.counts.push_back(std::uniform_int_distribution<Count>(0, 3)(rng));
    const Count volume = hfsc::lay_volume(lay, inst);

    std::vector<std::size_t> perm_g(g), perm_f(f);
    for (std::size_t i = 0; i < g; ++i) perm_g[i] = i;
    for (std::size_t j = 0; j < f; ++j) perm_f[j] = j;
    std::shuffle(perm_g.begin(), perm_g.end(), rng);
    std::shuffle(perm_f.begin(), perm_f.end(), rng);
    Instance p = inst;
    Lay q = lay;
    for (std::size_t i = 0; i < g; ++i) {
      p.lengths[i] = inst.lengths[perm_g[i]];
      q.counts[i] = lay.counts[perm_g[i]];
      for (std::size_t j = 0; j < f; ++j) p.demand[i][j] = inst.demand[perm_g[i]][perm_f[j]];
    }
    for (std::size_t j = 0; j < f; ++j) q.heights[j] = lay.heights[perm_f[j]];
    ASSERT_EQ(hfsc::lay_volume(q, p), volume);
    const double ur = static_cast<double>(volume) / static_cast<double>(inst.bed_length * inst.bed_height);
    if (hfsc::pattern_length(lay, inst.lengths) <= inst.bed_length && lay.total_height() <= inst.bed_height) {
      ASSERT_GE(ur, 0.0);
      ASSERT_LE(ur, 1.0);
    }
  }
}

}  // namespace
