#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "octavo/bijection.hpp"
#include "octavo/enumeration.hpp"
#include "octavo/errors.hpp"
#include "octavo/statistics.hpp"
#include "octavo/swaps.hpp"
#include "oracles.hpp"

using namespace octavo;

namespace {

const auto kWorked = SignedPermutation::from_text("3,4,9,-8,-5,-2,1,6,7");
const auto kWorkedImage = SignedPermutation::from_text("3,6,-5,-4,1,2,7,8");

std::vector<SignedPermutation> chessboard_elements(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& w : oracle::group(n))
    if (is_chessboard(w)) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("worked lowering example") {
  CHECK(kWorked.row_of(3) == 9);
  const auto r = lower(kWorked, 3);
  const auto& st = r.trace.stages;
  REQUIRE(st.size() == 5);
  CHECK(st[1].window.to_text() == "3,4,-8,-5,-2,1,6,7");
  CHECK(st[1].right_product);
  CHECK(st[1].word == std::vector<int>{3, 4, 5, 6, 7, 8});
  CHECK(st[2].window.to_text() == "3,4,-6,-5,-1,2,7,8");
  CHECK(st[3].window.to_text() == "3,4,-6,-5,1,2,7,8");
  CHECK(st[3].word == std::vector<int>{0});
  CHECK(r.image == kWorkedImage);
  CHECK(big_l(kWorked) == 15);
  CHECK(big_l(r.image) == 9);
  CHECK(sign(kWorked) == -1);
  CHECK(sign(r.image) == -1);
  CHECK(st.front().big_l == 15);
  CHECK(st.back().big_l == 9);
  CHECK(lower_by_rows(kWorked, 3) == kWorkedImage);
  CHECK(both_implementations_agree(kWorked, 3));
}

TEST_CASE("worked image is finally uncanceled and raises back") {
  const auto rep = classify_finally_uncanceled(kWorkedImage, 2);
  CHECK(rep.overall);
  CHECK(find_swaps(kWorkedImage, 2, SwapFamily::general_plus).empty());
  const auto up = raise(kWorkedImage, 3);
  CHECK(up.image == kWorked);
  CHECK(up.trace.stages.size() == 6);
  CHECK(up.trace.stages.back().window == kWorked);
}

TEST_CASE("stage words reproduce each stage") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& I : all_subsets(n))
      for (int j : valid_lowering_columns(I))
        for (const auto& w : lowering_domain(I, j)) {
          const auto st = lower(w, j).trace.stages;
          for (std::size_t i = 2; i < st.size(); ++i)
            CHECK(left_multiply_word(st[i].word, st[i - 1].window) == st[i].window);
          SignedPermutation y = w;
          for (int g : st[1].word) y = right_multiply(y, g);
          auto window = y.window();
          REQUIRE(window.back() == n);
          window.pop_back();
          CHECK(SignedPermutation(window) == st[1].window);
        }
}

TEST_CASE("lowering is a bijection onto the finally uncanceled class") {
  const std::vector<std::size_t> expected_sizes{6, 22, 114, 690, 5574};
  for (int n = 2; n <= 6; ++n) {
    std::size_t total = 0;
    for (const auto& I : all_subsets(n))
      for (int j : valid_lowering_columns(I)) {
        const auto domain = lowering_domain(I, j);
        const IndexSet J = lowered_index_set(I, j);
        const auto target = raising_domain(J, j - 1);
        std::set<std::vector<int>> images;
        for (const auto& w : domain) {
          const auto v = lower(w, j).image;
          CHECK(v.rank() == n - 1);
          CHECK(sign(v) == sign(w));
          CHECK(big_l(v) == big_l(w) - (n - j));
          CHECK(is_chessboard(v));
          CHECK(oracle::subset(descent_set(v).members(), J.members()));
          CHECK(raise(v, j).image == w);
          images.insert(v.window());
        }
        std::set<std::vector<int>> targets;
        for (const auto& v : target) {
          CHECK(lower(raise(v, j).image, j).image == v);
          targets.insert(v.window());
        }
        CHECK_MESSAGE(images == targets, "n=", n, " I=", I.to_text(), " j=", j);
        CHECK(images.size() == domain.size());
        total += domain.size();
      }
    CHECK(total == expected_sizes[n - 2]);
  }
}

TEST_CASE("generator words agree with moving rows") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& I : all_subsets(n))
      for (int j : valid_lowering_columns(I))
        for (const auto& w : lowering_domain(I, j)) CHECK(lower_by_rows(w, j) == lower(w, j).image);
}

TEST_CASE("rank two cases") {
  // Each valid (I, j) at rank 2 with a nonempty domain.
  int cases = 0;
  for (const auto& I : all_subsets(2))
    for (int j : valid_lowering_columns(I))
      for (const auto& w : lowering_domain(I, j)) {
        ++cases;
        CHECK(both_implementations_agree(w, j));
        CHECK(lower(w, j).image.rank() == 1);
      }
  CHECK(cases == 6);
  CHECK(lower(SignedPermutation{1, 2}, 2).image == SignedPermutation{1});
}

TEST_CASE("local 2x2 differences") {
  // Matrices read column by column: a +-1 in row r of column c is w(c) = +-r.
  for (int e : {1, -1}) {
    CHECK(big_l(SignedPermutation{2 * e, 1}) - big_l(SignedPermutation{e, 2}) == 1);
    CHECK(big_l(SignedPermutation{2 * e, -1}) - big_l(SignedPermutation{e, -2}) == -1);
  }
  CHECK(big_l(SignedPermutation{-2, 1}) - big_l(SignedPermutation{1, 2}) == 2);
  CHECK(big_l(SignedPermutation{-2, -1}) - big_l(SignedPermutation{-1, 2}) == 1);
}

TEST_CASE("moving a pair of ones down past a minus row lowers L by one") {
  for (int n = 3; n <= 6; ++n) {
    int ones = 0, minus = 0;
    for (const auto& w : chessboard_elements(n))
      for (int t = 1; t + 2 <= n; ++t) {
        const int c = w.column_of(t), c1 = w.column_of(t + 1), c2 = w.column_of(t + 2);
        const int s0 = w.sign_in_row(t), s1 = w.sign_in_row(t + 1), s2 = w.sign_in_row(t + 2);
        if (s0 > 0 && s1 > 0 && s2 < 0 && c1 == c + 1) {
          CHECK(big_l(left_multiply(t, left_multiply(t + 1, w))) == big_l(w) - 1);
          // Exchanging rows t, t+1 first moves the minus row down instead.
          CHECK(big_l(left_multiply(t + 1, left_multiply(t, w))) != big_l(w) - 1);
          ++ones;
        }
        if (s0 > 0 && s1 < 0 && s2 < 0 && c2 == c1 + 1) {
          CHECK(big_l(left_multiply(t + 1, left_multiply(t, w))) == big_l(w) - 1);
          ++minus;
        }
      }
    CHECK(ones > 0);
    CHECK(minus > 0);
  }
}

TEST_CASE("after step 3 the minus rows are paired up") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& I : all_subsets(n))
      for (int j : valid_lowering_columns(I))
        for (const auto& w : lowering_domain(I, j)) {
          const auto& w3 = lower(w, j).trace.stages[3];
          const int m = n - 1;
          const auto d = decompose_blocks(w3.window, j - 1);
          for (const auto& b : d.minus_blocks) CHECK_MESSAGE(!b.odd(), w.to_text(), " j=", j);
          for (int t = j; t < m; ++t) {
            if ((m - t) % 2 == 0) continue;
            const auto& v = w3.window;
            if (v.sign_in_column(t) < 0 && v.sign_in_column(t + 1) < 0)
              CHECK(std::abs(v.row_of(t) - v.row_of(t + 1)) == 1);
          }
        }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(lower(identity(3), 2), PreconditionError);
  CHECK_THROWS_AS(lower(SignedPermutation{3, -2, -1}, 2), PreconditionError);
  CHECK_THROWS_AS(raise(SignedPermutation{2, 1}, 2), PreconditionError);
  CHECK_THROWS_AS(raise(identity(2), 5), PreconditionError);
  CHECK(valid_lowering_columns(IndexSet(4, {1, 2})) == std::vector<int>{2, 4});
  CHECK(lowered_index_set(IndexSet(4, {1, 2}), 2).members() == std::vector<int>{1});
  CHECK_THROWS_AS(lowered_index_set(IndexSet(4, {1, 2}), 3), std::invalid_argument);
}
