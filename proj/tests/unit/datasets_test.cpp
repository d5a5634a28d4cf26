#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace mwv;
using testing_support::committee;

namespace {

std::vector<DatasetExample> random_examples(int count, std::uint64_t seed) {
  std::vector<DatasetExample> out;
  for (const auto& s : sample_profiles(DistributionSpec::mixed({}), 12, 5, count, RngSeed{seed})) {
    out.push_back(make_example(s.profile, 2, AxiomSet::all(), s.seed, "mixed"));
  }
  return out;
}

std::string dump(const std::vector<DatasetExample>& examples) {
  std::ostringstream out;
  write_dataset(out, examples);
  return out.str();
}

std::vector<DatasetExample> load(const std::string& text) {
  std::istringstream in(text);
  return read_dataset(in);
}

std::vector<Committee> predictions(const std::string& text, int m, int k) {
  std::istringstream in(text);
  return read_predictions(in, m, k);
}

}  // namespace

TEST(Features, IdentityRankingBlock) {
  auto f = build_features(testing_support::identity_profile(4, 3));
  ASSERT_EQ(f.size(), 27u);
  for (int a = 0; a < 3; ++a) {
    for (int pos = 0; pos < 3; ++pos) EXPECT_EQ(f[18 + static_cast<std::size_t>(a * 3 + pos)], a == pos ? 1.0 : 0.0);
  }
}

TEST(Features, WeakMajorityTie) {
  auto f = build_features(PreferenceProfile(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(f[1], 1.0);
  EXPECT_EQ(f[2], 1.0);
  EXPECT_EQ(f[0], 0.0);
  EXPECT_EQ(f[3], 0.0);
}

TEST(Features, BlockInvariants) {
  for (const auto& s : sample_profiles(DistributionSpec::ic(), 7, 6, 50, RngSeed{1})) {
    auto f = build_features(s.profile);
    const std::size_t m = 6, mm = 36;
    for (std::size_t i = 0; i < m; ++i) {
      double row = 0, col = 0;
      for (std::size_t j = 0; j < m; ++j) {
        row += f[2 * mm + i * m + j];
        col += f[2 * mm + j * m + i];
        if (i == j) {
          EXPECT_EQ(f[i * m + j], 0.0);
          continue;
        }
        EXPECT_NEAR(f[mm + i * m + j] + f[mm + j * m + i], 1.0, 1e-12);
        EXPECT_TRUE(f[i * m + j] == 1.0 || f[j * m + i] == 1.0);
        EXPECT_TRUE(f[i * m + j] == 0.0 || f[i * m + j] == 1.0);
      }
      EXPECT_NEAR(row, 1.0, 1e-12);
      EXPECT_NEAR(col, 1.0, 1e-12);
    }
  }
}

TEST(Examples, IdentityProfileLabel) {
  auto p = testing_support::identity_profile(9, 6);
  auto ex = make_example(p, 3, AxiomSet::all(), RngSeed{21}, "identity");
  auto renamed = rename_alternatives(p, RngSeed{21});
  std::vector<int> expected(6, 0);
  for (int i = 0; i < 3; ++i) expected[static_cast<std::size_t>(renamed.ranking(0)[static_cast<std::size_t>(i)])] = 1;
  EXPECT_EQ(ex.label, expected);
  EXPECT_EQ(ex.min_violations, 0);
}

TEST(Examples, LabelIsTheMinimizer) {
  for (const auto& s : sample_profiles(DistributionSpec::mixed({}), 12, 6, 40, RngSeed{2})) {
    auto all = make_example(s.profile, 3, AxiomSet::all(), s.seed);
    auto root = make_example(s.profile, 3, AxiomSet::root(), s.seed);
    EXPECT_EQ(all.features, root.features);
    EXPECT_EQ(root.axiom_set, "root");
    auto renamed = rename_alternatives(s.profile, s.seed);
    auto best = min_violation_committee(renamed, 3, AxiomSet::all());
    EXPECT_EQ(all.label, k_hot(best.committee, 6));
    EXPECT_EQ(all.min_violations, best.violations);
    EXPECT_EQ(make_example(s.profile, 3, AxiomSet::all(), s.seed), all);
  }
}

TEST(Examples, LabelsHaveKOnes) {
  for (const auto& ex : random_examples(1000, 3)) EXPECT_EQ(std::count(ex.label.begin(), ex.label.end(), 1), 2);
}

TEST(Dataset, RoundTrip) {
  EXPECT_TRUE(load(dump({})).empty());
  auto examples = random_examples(100, 4);
  auto back = load(dump(examples));
  ASSERT_EQ(back.size(), examples.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].label, examples[i].label);
    EXPECT_EQ(back[i].min_violations, examples[i].min_violations);
    ASSERT_EQ(back[i].features.size(), examples[i].features.size());
    for (std::size_t j = 0; j < back[i].features.size(); ++j) EXPECT_NEAR(back[i].features[j], examples[i].features[j], 1e-12);
  }
  EXPECT_EQ(back, examples);
}

TEST(Dataset, TruncatedLineIsAnError) {
  auto text = dump(random_examples(3, 5));
  text.resize(text.size() - 20);
  try {
    load(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Dataset, ValidatesRecords) {
  auto ex = random_examples(2, 6);
  auto bad_label = ex;
  bad_label[1].label.assign(5, 0);
  EXPECT_THROW(load(dump(bad_label)), ParseError);
  auto mixed_k = ex;
  mixed_k[1].k = 3;
  mixed_k[1].label = {1, 1, 1, 0, 0};
  EXPECT_THROW(load(dump(mixed_k)), ParseError);
  auto bad_feature = ex;
  bad_feature[0].features[0] = 1.5;
  EXPECT_THROW(load(dump(bad_feature)), ParseError);
  EXPECT_THROW(load("{\"m\": 5}\n"), ParseError);
}

TEST(Dataset, Deduplicate) {
  auto ex = random_examples(3, 7);
  ex.push_back(ex[0]);
  auto unique = deduplicate(ex);
  EXPECT_EQ(unique.size(), 3u);
  EXPECT_EQ(unique[0], ex[0]);
}

TEST(Predictions, DecodeScores) {
  EXPECT_EQ(predictions("{\"index\":0,\"scores\":[0.9,0.1,0.8]}\n", 3, 2)[0], committee({0, 2}));
  EXPECT_EQ(predictions("{\"index\":0,\"scores\":[0.5,0.5,0.1]}\n", 3, 1)[0], committee({0}));
  EXPECT_EQ(predictions("{\"index\":0,\"committee\":[2,0]}\n", 3, 2)[0], committee({0, 2}));
}

TEST(Predictions, Errors) {
  EXPECT_THROW(predictions("{\"index\":0,\"scores\":[0.9,0.1]}\n", 3, 2), ParseError);
  EXPECT_THROW(predictions("{\"index\":1,\"scores\":[0.9,0.1,0.2]}\n", 3, 2), ParseError);
  EXPECT_THROW(predictions("{\"scores\":[0.9,0.1,0.2]}\n", 3, 2), ParseError);
  EXPECT_THROW(predictions("{\"index\":0,\"committee\":[0,0]}\n", 3, 2), ParseError);
  EXPECT_THROW(predictions("{\"index\":0,\"committee\":[0,3]}\n", 3, 2), ParseError);
  EXPECT_THROW(predictions("{\"index\":0}\n", 3, 2), ParseError);
  EXPECT_THROW(predictions("not json\n", 3, 2), ParseError);
}

TEST(Predictions, WriterRoundTrip) {
  std::vector<std::vector<double>> scores = {{0.1, 0.7, 0.3, 0.9}, {1, 0, 0, 0}};
  std::ostringstream out;
  write_score_predictions(out, scores);
  auto back = predictions(out.str(), 4, 2);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], committee({1, 3}));
  EXPECT_EQ(back[1], committee({0, 1}));
}

TEST(Soc, ParsesCounts) {
  auto p = parse_soc("# FILE NAME: x.soc\n# NUMBER ALTERNATIVES: 3\n2: 1,3,2\n1: 2,1,3\n");
  ASSERT_EQ(p.num_voters(), 3);
  EXPECT_EQ(p.ranking(0), (Ranking{0, 2, 1}));
  EXPECT_EQ(p.ranking(1), (Ranking{0, 2, 1}));
  EXPECT_EQ(p.ranking(2), (Ranking{1, 0, 2}));
}

TEST(Soc, Errors) {
  EXPECT_THROW(parse_soc("1: 1,1,2\n"), ParseError);
  EXPECT_THROW(parse_soc("# NUMBER ALTERNATIVES: 3\n"), ParseError);
  EXPECT_THROW(parse_soc("# NUMBER ALTERNATIVES: 3\n1: 1,2,4\n"), ParseError);
  EXPECT_THROW(parse_soc("1: {1,2},3\n"), ParseError);
  EXPECT_THROW(parse_soc("1 1,2,3\n"), ParseError);
  try {
    parse_soc("# NUMBER ALTERNATIVES: 3\n1: 1,2,3\n1: 3,2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Soc, WriterRoundTrip) {
  for (const auto& s : sample_profiles(DistributionSpec::urn(0.3), 25, 6, 20, RngSeed{8})) {
    auto back = parse_soc(write_soc(s.profile));
    auto sorted = [](std::vector<Ranking> r) {
      std::sort(r.begin(), r.end());
      return r;
    };
    EXPECT_EQ(sorted(back.rankings()), sorted(s.profile.rankings()));
  }
  // Grouped output is order-preserving when every ranking is distinct.
  PreferenceProfile p(3, {{2, 0, 1}, {0, 1, 2}});
  EXPECT_EQ(parse_soc(write_soc(p)).rankings(), p.rankings());
}

TEST(Profiles, JsonRoundTrip) {
  std::vector<ProfileRecord> records;
  for (const auto& s : sample_profiles(DistributionSpec::ic(), 5, 4, 3, RngSeed{9})) records.push_back({s.profile, s.seed.value, "ic"});
  std::ostringstream out;
  write_profiles(out, records);
  std::istringstream in(out.str());
  auto back = read_profile_records(in);
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back[i].profile.rankings(), records[i].profile.rankings());
    EXPECT_EQ(back[i].seed, records[i].seed);
    EXPECT_EQ(back[i].dist, "ic");
  }
  std::istringstream bad("{\"m\":3,\"n\":2,\"rankings\":[[0,1,2]]}\n");
  EXPECT_THROW(read_profiles(bad), ParseError);
  std::istringstream gap("{\"index\":1,\"m\":3,\"rankings\":[[0,1,2]]}\n");
  EXPECT_THROW(read_profiles(gap), ParseError);
}
