// Copyright 2026 The uninorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "uninorm/catalog.hpp"
#include "uninorm/table_io.hpp"

using namespace uninorm;

namespace {

std::vector<Uninorm> catalog_outputs(int n) {
  std::vector<Uninorm> out{catalog::min_tnorm(n), catalog::max_tconorm(n), catalog::lukasiewicz_tnorm(n),
                           catalog::lukasiewicz_tconorm(n), catalog::drastic_tnorm(n), catalog::drastic_tconorm(n)};
  for (Index e = 0; e <= n; ++e) {
    out.push_back(catalog::idem_min(n, e));
    out.push_back(catalog::idem_max(n, e));
  }
  for (Index e = 1; e < n; ++e) {
    out.push_back(catalog::luk_upper(n, e));
    out.push_back(catalog::luk_lower(n, e));
    out.push_back(catalog::umin_of(catalog::drastic_tnorm(e), e, catalog::drastic_tconorm(n - e)));
    out.push_back(catalog::umax_of(catalog::lukasiewicz_tnorm(e), e, catalog::lukasiewicz_tconorm(n - e)));
  }
  return out;
}

}  // namespace

TEST(Chain, RejectsEmptyScale) {
  EXPECT_THROW(ChainScale(0), Error);
  EXPECT_EQ(ChainScale(3).size(), 4);
}

TEST(OpTable, RejectsAsymmetryAndRange) {
  EXPECT_THROW(OpTable(ChainScale(1), {0, 1, 0, 1}), Error);
  EXPECT_THROW(OpTable(ChainScale(1), {0, 0, 0, 2}), Error);
  EXPECT_THROW(OpTable(ChainScale(1), {0, 0, 0}), Error);
  try {
    OpTable(ChainScale(1), {0, 1, 0, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::structural);
  }
}

TEST(Validate, ReportsNeutralityWitness) {
  // min on L_2 claimed with neutral 1: U(1, 2) = 1, not 2.
  const auto r = validate_uninorm(catalog::min_tnorm(2).table(), 1);
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.violations()[0].law, Law::neutrality);
  EXPECT_EQ(r.violations()[0].witness, std::vector<Index>{2});
}

TEST(Validate, ReportsMonotonicityAndAssociativity) {
  // max on L_2 with U(1,1) lowered to 0, so U(0,1) = 1 > U(1,1) = 0.
  const OpTable t = catalog::max_tconorm(2).table().with_cell(1, 1, 0);
  const auto r = validate_uninorm(t, 0, Witnesses::all);
  EXPECT_TRUE(r.has(Law::monotonicity));
  for (const auto& v : r.violations()) {
    if (v.law != Law::monotonicity) continue;
    EXPECT_GT(t(v.witness[0], v.witness[1]), t(v.witness[0] + 1, v.witness[1]));
  }
}

TEST(Validate, StructuralRows) {
  auto r = validate_rows(1, {{0, 1}, {0, 1}}, 1);
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.violations()[0].law, Law::structure);
  r = validate_rows(1, {{0, 0}}, 1);
  EXPECT_FALSE(r.verdict());
  r = validate_rows(1, {{0, 0}, {0, 1}}, 1);
  EXPECT_TRUE(r.verdict());
  EXPECT_FALSE(validate_uninorm(catalog::min_tnorm(1).table(), 5).verdict());
}

TEST(Catalog, EveryOutputIsAUninormOnAllScales) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& u : catalog_outputs(n)) {
      EXPECT_TRUE(validate_uninorm(u.table(), u.neutral()).verdict()) << "n=" << n << " e=" << u.neutral();
      EXPECT_TRUE(oracle::is_uninorm(oracle::from(u), u.neutral()));
    }
  }
}

TEST(Catalog, ClosedForms) {
  const int n = 5;
  const auto luk = catalog::lukasiewicz_tnorm(n);
  const auto drastic = catalog::drastic_tconorm(n);
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) {
      EXPECT_EQ(luk(x, y), std::max(0, x + y - n));
      EXPECT_EQ(drastic(x, y), x == 0 ? y : y == 0 ? x : n);
    }
  }
  const auto upper = catalog::luk_upper(4, 2);
  EXPECT_EQ(upper(3, 3), 4);
  EXPECT_EQ(upper(1, 3), 1);
  EXPECT_EQ(upper(0, 1), 0);
}

TEST(Catalog, MakeRejectsInconsistentSpecs) {
  EXPECT_THROW(make(FamilySpec{Family::min, ChainScale(3), 2, {}, {}}), Error);
  EXPECT_THROW(make(FamilySpec{Family::umin_idempotent, ChainScale(3), 0, {}, {}}), Error);
  EXPECT_THROW(make(FamilySpec{Family::umin_of, ChainScale(3), 1, {}, {}}), Error);
  EXPECT_THROW(make(FamilySpec{Family::umin_of, ChainScale(3), 1, catalog::min_tnorm(2),
                               catalog::max_tconorm(2)}),
               Error);
  EXPECT_NO_THROW(make(FamilySpec{Family::umin_of, ChainScale(3), 1, catalog::min_tnorm(1),
                                  catalog::max_tconorm(2)}));
}

TEST(Catalog, DualityIdentity) {
  for (int n = 2; n <= 6; ++n) {
    for (Index e = 1; e < n; ++e) {
      const auto t = catalog::lukasiewicz_tnorm(e);
      const auto s = catalog::drastic_tconorm(n - e);
      const auto lhs = dual(catalog::umin_of(t, e, s));
      const auto rhs = catalog::umax_of(dual(s), n - e, dual(t));
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(dual(dual(lhs)), lhs);
      EXPECT_EQ(oracle::from(lhs), oracle::dual(oracle::from(catalog::umin_of(t, e, s))));
    }
  }
}

TEST(Uninorm, Predicates) {
  const auto u = catalog::idem_min(4, 2);
  EXPECT_TRUE(is_idempotent(u));
  EXPECT_TRUE(is_locally_internal(u));
  EXPECT_TRUE(is_conjunctive(u));
  EXPECT_FALSE(is_conjunctive(catalog::idem_max(4, 2)));
  EXPECT_FALSE(is_idempotent(catalog::luk_upper(4, 2)));
  EXPECT_THROW(is_conjunctive(catalog::min_tnorm(3)), Error);
  EXPECT_EQ(underlying_tnorm(u), catalog::min_tnorm(2));
  EXPECT_EQ(underlying_tconorm(u), catalog::max_tconorm(2));
  try {
    underlying_tnorm(catalog::max_tconorm(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_restriction);
  }
  EXPECT_EQ(region_of(2, 2, 2), RegionTag::lower_square);
  EXPECT_EQ(region_of(2, 3, 2), RegionTag::upper_square);
  EXPECT_EQ(region_of(1, 3, 2), RegionTag::off_diagonal);
  EXPECT_THROW(restrict_table(catalog::luk_upper(4, 2).table(), 0, 3), Error);
}

TEST(Uninorm, ConstructorRejectsInvalid) {
  try {
    Uninorm(catalog::min_tnorm(2).table(), 1);
    FAIL();
  } catch (const InvalidUninorm& e) {
    EXPECT_EQ(e.code(), Errc::invalid_uninorm);
    EXPECT_TRUE(e.report().has(Law::neutrality));
  }
}

TEST(TableIo, RoundTrip) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& u : catalog_outputs(n)) {
      const std::string text = write_table(u.table(), u.neutral());
      const auto doc = parse_table(text);
      EXPECT_EQ(doc.table, u.table());
      EXPECT_EQ(doc.neutral, u.neutral());
      EXPECT_EQ(write_table(doc.table, doc.neutral), text);
    }
  }
}

TEST(TableIo, CommentsAndWhitespace) {
  const auto doc = parse_table("# header\nscale 1   # trailing\n\nneutral 1\n0  0\n0 1 # row\n");
  EXPECT_EQ(doc.table, catalog::min_tnorm(1).table());
}

namespace {

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    parse_table(text);
    FAIL() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::parse);
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(TableIo, PositionedErrors) {
  expect_parse_error("scale x\n", 1, 7);
  expect_parse_error("scale 1\nneutral 5\n0 0\n0 1\n", 2, 9);
  expect_parse_error("scale 1\nneutral 1\n0 0 0\n0 1\n", 3, 5);
  expect_parse_error("scale 1\nneutral 1\n0 2\n0 1\n", 3, 3);
  expect_parse_error("scale 1\nneutral 1\n0 1\n0 1\n", 4, 1);
  expect_parse_error("scale 1\nneutral 1\n0 0\n0 1\n1 1\n", 5, 1);
  expect_parse_error("neutral 1\n", 1, 1);
}

TEST(FamilySpec, ParsesEveryFamily) {
  EXPECT_EQ(make_from_spec("idemmin(e=2,n=4)"), catalog::idem_min(4, 2));
  EXPECT_EQ(make_from_spec("idemmax(e=1,n=3)"), catalog::idem_max(3, 1));
  EXPECT_EQ(make_from_spec("min(n=3)"), catalog::min_tnorm(3));
  EXPECT_EQ(make_from_spec("max(n=3)"), catalog::max_tconorm(3));
  EXPECT_EQ(make_from_spec("luk-tnorm(n=3)"), catalog::lukasiewicz_tnorm(3));
  EXPECT_EQ(make_from_spec("luk-tconorm(n=3)"), catalog::lukasiewicz_tconorm(3));
  EXPECT_EQ(make_from_spec("drastic-tnorm(n=3)"), catalog::drastic_tnorm(3));
  EXPECT_EQ(make_from_spec("drastic-tconorm(n=3)"), catalog::drastic_tconorm(3));
  EXPECT_EQ(make_from_spec("luk-upper(e=2,n=4)"), catalog::luk_upper(4, 2));
  EXPECT_EQ(make_from_spec("luk-lower(e=2,n=4)"), catalog::luk_lower(4, 2));
  EXPECT_EQ(make_from_spec("umin(T=luk,S=max,e=2,n=4)"),
            catalog::umin_of(catalog::lukasiewicz_tnorm(2), 2, catalog::max_tconorm(2)));
  EXPECT_EQ(make_from_spec("umax-of(n=5, e=2, T=drastic, S=luk)"),
            catalog::umax_of(catalog::drastic_tnorm(2), 2, catalog::lukasiewicz_tconorm(3)));
  EXPECT_EQ(make_from_spec("umin(T=drastic-tnorm(n=2),S=luk,e=2,n=4)"),
            catalog::umin_of(catalog::drastic_tnorm(2), 2, catalog::lukasiewicz_tconorm(2)));
}

namespace {

int spec_error_column(const std::string& text) {
  try {
    parse_family_spec(text);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    return e.column();
  }
  ADD_FAILURE() << "accepted: " << text;
  return -1;
}

}  // namespace

TEST(FamilySpec, RejectsMalformed) {
  EXPECT_EQ(spec_error_column("umin(T=luk,S=max,e=2,n=4"), 25);
  EXPECT_EQ(spec_error_column("bogus(n=2)"), 1);
  EXPECT_EQ(spec_error_column("idemmin(e=2,n=x)"), 15);
  EXPECT_EQ(spec_error_column("idemmin(e=2,q=4)"), 13);
  EXPECT_EQ(spec_error_column("idemmin(e=2,e=3,n=4)"), 13);
  EXPECT_EQ(spec_error_column("luk(n=3)"), 1);
  EXPECT_EQ(spec_error_column("idemmin(e=2,n=4))"), 17);
  EXPECT_EQ(spec_error_column("umin(T=max,S=max,e=2,n=4)"), 8);
  EXPECT_EQ(spec_error_column("umin(T=idemmin(e=1,n=2),S=max,e=2,n=4)"), 8);
  EXPECT_GT(spec_error_column("idemmin(e=9,n=4)"), 0);
  EXPECT_GT(spec_error_column(""), 0);
}
