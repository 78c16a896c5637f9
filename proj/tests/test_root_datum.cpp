#include <doctest.h>

#include "hodge/errors.hpp"
#include "hodge/root_datum.hpp"

using namespace hodge;

namespace {

Weight omega(int rank, int i) {  // 1-based fundamental weight
  Weight w;
  w.fw.assign(rank, 0);
  w.fw[i - 1] = 1;
  return w;
}

GradingElement single_node(int rank, int i) {  // 1-based A^i
  GradingElement e;
  e.bits.assign(rank, 0);
  e.bits[i - 1] = 1;
  return e;
}

std::vector<SimpleType> all_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace

TEST_CASE("admissible ranks") {
  CHECK_THROWS_AS(parse_simple_type("A0"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("B1"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("C2"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("D3"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("E5"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("E9"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("F5"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("G3"), DomainError);
  CHECK_THROWS_AS(parse_simple_type("XQ"), UsageError);
  CHECK(parse_simple_type("A1") == SimpleType{Family::A, 1});
  CHECK(parse_simple_type("E7") == SimpleType{Family::E, 7});
}

TEST_CASE("A2 cartan matrix and positive roots") {
  const RootDatum& d = build_root_datum({Family::A, 2});
  CHECK(d.cartan == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
  CHECK(d.positive_roots.size() == 3);
}

TEST_CASE("root counts match (dim - rank)/2") {
  for (const auto& t : all_types(8)) {
    const RootDatum& d = build_root_datum(t);
    CAPTURE(to_string(t));
    CHECK(static_cast<long long>(d.positive_roots.size()) ==
          (algebra_dimension(t) - t.rank) / 2);
  }
  CHECK(build_root_datum({Family::G, 2}).positive_roots.size() == 6);
  CHECK(build_root_datum({Family::E, 8}).positive_roots.size() == 120);
}

TEST_CASE("inverse cartan is exact") {
  for (const auto& t : all_types(8)) {
    const RootDatum& d = build_root_datum(t);
    int r = d.rank();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rat acc(0);
        for (int k = 0; k < r; ++k) acc += d.inverse_cartan[i][k] * Rat(d.cartan[k][j]);
        CHECK(acc == Rat(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("symmetrizer: short roots get one, symmetrized matrix symmetric") {
  CHECK(build_root_datum({Family::B, 3}).symmetrizer == std::vector<long long>{2, 2, 1});
  CHECK(build_root_datum({Family::C, 3}).symmetrizer == std::vector<long long>{1, 1, 2});
  CHECK(build_root_datum({Family::F, 4}).symmetrizer == std::vector<long long>{2, 2, 1, 1});
  CHECK(build_root_datum({Family::G, 2}).symmetrizer == std::vector<long long>{1, 3});
  CHECK(build_root_datum({Family::E, 6}).symmetrizer == std::vector<long long>(6, 1));
}

TEST_CASE("grading evaluation golden values") {
  for (int r = 3; r <= 8; ++r) {
    const RootDatum& d = build_root_datum({Family::C, r});
    for (int i = 1; i <= r; ++i)
      CHECK(d.eval_on_grading(omega(r, i), single_node(r, r)) == Rat(i, 2));
  }
  const RootDatum& e7 = build_root_datum({Family::E, 7});
  CHECK(e7.eval_on_grading(omega(7, 7), single_node(7, 7)) == Rat(3, 2));

  Weight zero;
  zero.fw.assign(7, 0);
  CHECK(e7.eval_on_grading(zero, single_node(7, 3)) == Rat(0));
}

TEST_CASE("duality involution") {
  const RootDatum& a3 = build_root_datum({Family::A, 3});
  CHECK(a3.dual_weight(omega(3, 1)) == omega(3, 3));
  CHECK(a3.dual_weight(omega(3, 2)) == omega(3, 2));

  const RootDatum& e6 = build_root_datum({Family::E, 6});
  CHECK(e6.dual_weight(omega(6, 1)) == omega(6, 6));
  CHECK(e6.dual_weight(omega(6, 2)) == omega(6, 2));
  CHECK(e6.dual_weight(omega(6, 3)) == omega(6, 5));
  CHECK(e6.dual_weight(omega(6, 4)) == omega(6, 4));

  const RootDatum& c5 = build_root_datum({Family::C, 5});
  Weight w{{1, 0, 2, 0, 3}};
  CHECK(c5.dual_weight(w) == w);

  const RootDatum& d5 = build_root_datum({Family::D, 5});
  CHECK(d5.dual_weight(omega(5, 4)) == omega(5, 5));
  CHECK(d5.dual_weight(omega(5, 1)) == omega(5, 1));

  // involution on a mixed weight
  for (const auto& t : all_types(6)) {
    const RootDatum& d = build_root_datum(t);
    Weight mixed;
    mixed.fw.assign(t.rank, 0);
    for (int i = 0; i < t.rank; ++i) mixed.fw[i] = (i * 7 + 3) % 4;
    CHECK(d.dual_weight(d.dual_weight(mixed)) == mixed);
    CHECK(d.dual_weight(mixed).is_dominant() == mixed.is_dominant());
  }
}

TEST_CASE("parity element evaluation") {
  for (int r = 4; r <= 8; ++r) {
    const RootDatum& d = build_root_datum({Family::D, r});
    CHECK(d.parity_element_eval(omega(r, r), single_node(r, r)) == Rat(r * (r - 2), 2));
  }
  for (int r = 3; r <= 8; ++r) {
    const RootDatum& d = build_root_datum({Family::C, r});
    for (int i = 1; i <= r; ++i) {
      Rat v = d.parity_element_eval(omega(r, i), single_node(r, r));
      CHECK(is_integer(v));
      CHECK(to_integer(v) % 2 == 0);
    }
  }
  const RootDatum& b4 = build_root_datum({Family::B, 4});
  GradingElement all_ones{{1, 1, 1, 1}};
  CHECK(b4.parity_element_eval(omega(4, 2), all_ones) == Rat(0));
}

TEST_CASE("highest root evaluation") {
  for (int r = 1; r <= 8; ++r) {
    const RootDatum& d = build_root_datum({Family::A, r});
    for (int i = 1; i <= r; ++i) CHECK(d.highest_root_eval(single_node(r, i)) == 1);
  }
  CHECK(build_root_datum({Family::E, 7}).highest_root_eval(single_node(7, 7)) == 1);
  CHECK(build_root_datum({Family::G, 2}).highest_root_eval(single_node(2, 2)) == 2);
  CHECK(build_root_datum({Family::G, 2}).highest_root_eval(single_node(2, 1)) == 3);
}

TEST_CASE("highest root coordinates") {
  CHECK(build_root_datum({Family::E, 8}).highest_root ==
        std::vector<long long>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(build_root_datum({Family::F, 4}).highest_root == std::vector<long long>{2, 3, 4, 2});
  CHECK(build_root_datum({Family::G, 2}).highest_root == std::vector<long long>{3, 2});
  CHECK(build_root_datum({Family::C, 4}).highest_root == std::vector<long long>{2, 2, 2, 1});
  CHECK(build_root_datum({Family::B, 4}).highest_root == std::vector<long long>{1, 2, 2, 2});
}

TEST_CASE("coordinate order prefers low-index support") {
  CHECK(omega(4, 1) < omega(4, 2));
  CHECK(omega(4, 2) < omega(4, 4));
  GradingElement a1{{1, 0, 0}}, a3{{0, 0, 1}};
  CHECK(a1 < a3);
}
