#include "lcsc/report.hpp"

#include <gtest/gtest.h>

using namespace lcsc;

TEST(Catalog, Entries) {
    EXPECT_EQ(catalog_names(), (std::vector<std::string>{"rh3", "d4", "ot21"}));
    EXPECT_EQ(builtin("rh3").structure.theta(), parse_form("e4", 4));
    EXPECT_EQ(builtin("d4").structure.theta(), parse_form("-e4", 4));
    auto ot = builtin("ot21");
    EXPECT_EQ(ot.structure.theta(), parse_form("e1+e2", 6));
    EXPECT_EQ(ot.parameters.at("c1"), 1);
    EXPECT_EQ(ot.parameters.at("c2"), 0);
    EXPECT_EQ(builtin("rh3").structure.triple().source, "catalog");
    EXPECT_EQ(builtin("d4").structure.triple().source, "synthesized");
    for (const auto& name : catalog_names()) EXPECT_TRUE(is_unimodular(builtin(name).structure.algebra())) << name;
}

TEST(Catalog, Errors) {
    EXPECT_THROW(builtin("kt"), UnknownEntry);
    EXPECT_THROW(builtin("rh3", {{"c1", Scalar(1)}}), InvalidParameters);
    EXPECT_THROW(builtin("ot21", {{"c3", Scalar(1)}}), InvalidParameters);
    EXPECT_THROW(builtin("ot21", {}, "sideways"), InvalidParameters);
    EXPECT_THROW(builtin("ot21", {{"c1", Scalar(2)}, {"c2", Scalar(2)}}, "negative"), InvalidParameters);
    EXPECT_NO_THROW(builtin("ot21", {{"c1", Scalar(2)}, {"c2", Scalar(2)}}));
}

TEST(Catalog, NegativeLeeFormVariant) {
    for (auto [c1, c2] : {std::pair<Scalar, Scalar>{1, 0}, {Scalar(1, 2), Scalar(-3)}}) {
        auto e = builtin("ot21", {{"c1", c1}, {"c2", c2}}, "negative");
        EXPECT_EQ(e.structure.theta(), parse_form("-e1-e2", 6));
        EXPECT_FALSE(e.golden.has_value());
    }
}

TEST(Catalog, GoldenTablesSatisfyEuler) {
    for (const auto& name : catalog_names()) {
        auto g = *builtin(name).golden;
        for (const auto& k : g.weights) {
            long chi = 0;
            for (int h = 0; h <= g.dimension; ++h) chi += (h % 2 ? -1 : 1) * static_cast<long>(g.dim(Theory::deRham, h, k));
            EXPECT_EQ(chi, 0) << name << " k=" << k;
        }
    }
}

TEST(Catalog, GoldenSpotValues) {
    auto rh3 = *builtin("rh3").golden;
    EXPECT_EQ(rh3.dim(Theory::deRham, 1, 0), 3u);
    EXPECT_EQ(rh3.dim(Theory::bottChern, 2, -1), 3u);
    EXPECT_EQ(rh3.dim(Theory::aeppli, 3, 2), 1u);
    auto d4 = *builtin("d4").golden;
    for (int k : {-1, 1}) {
        EXPECT_EQ(d4.dim(Theory::deRham, 2, k), 2u);
        EXPECT_EQ(d4.dim(Theory::bottChern, 2, k), 3u);
    }
    for (int k : {-1, 0, 1}) EXPECT_EQ(d4.dim(Theory::deRham, 1, k), 1u);
}

TEST(Catalog, GoldenDiffEmptyForAllEntries) {
    for (const auto& name : catalog_names()) {
        auto e = builtin(name);
        auto table = full_table(e.structure, e.golden->weights, e.golden->theories, name);
        auto diff = golden_diff(table, *e.golden);
        EXPECT_TRUE(diff.empty()) << name << "\n" << format_diff(diff);
        EXPECT_EQ(diff.cells_compared, e.golden->theories.size() * static_cast<std::size_t>(e.golden->dimension + 1) * e.golden->weights.size());
    }
}

TEST(Report, JsonRoundTrip) {
    auto e = builtin("rh3");
    auto golden = *e.golden;
    auto back = golden_from_json(nlohmann::json::parse(to_json(golden).dump()));
    EXPECT_EQ(back.weights, golden.weights);
    EXPECT_EQ(back.cells.size(), golden.cells.size());
    for (const auto& c : golden.cells) {
        const GoldenCell* b = back.find(c.theory, c.h, c.k);
        ASSERT_NE(b, nullptr);
        EXPECT_EQ(b->dim, c.dim);
        ASSERT_TRUE(b->span);
        EXPECT_EQ(*b->span, *c.span);
    }
    auto table = full_table(e.structure, integer_weights(-2, 2));
    EXPECT_TRUE(golden_diff(table, as_golden(table)).empty());
    EXPECT_TRUE(golden_diff(table, back).empty());
}

TEST(Report, JsonErrors) {
    EXPECT_THROW(golden_from_json(nlohmann::json::parse(R"({"weights": [0]})")), ParseError);
    EXPECT_THROW(golden_from_json(nlohmann::json::parse(R"({"dimension": 4, "weights": [0], "theories": ["x"], "cells": []})")), ParseError);
}

TEST(Report, Csv) {
    auto table = full_table(builtin("d4").structure, integer_weights(-1, 1), {Theory::deRham});
    std::string csv = to_csv(table);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "theory,h,k,dim");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 5 * 3);
    EXPECT_NE(csv.find("d,2,-1,2\n"), std::string::npos);
    EXPECT_EQ(csv, to_csv(full_table(builtin("d4").structure, integer_weights(-1, 1), {Theory::deRham})));
}
