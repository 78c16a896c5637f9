#include <doctest.h>

#include "hodge/errors.hpp"
#include "hodge/hodge_structure.hpp"

using namespace hodge;

namespace {

AlgebraFactor factor(const std::string& type, std::vector<int> e, std::vector<long long> mu) {
  AlgebraFactor f;
  f.type = parse_simple_type(type);
  f.e.bits = std::move(e);
  f.mu.fw = std::move(mu);
  return f;
}

HodgeTuple tuple(std::vector<AlgebraFactor> fs, Rat c = Rat(0)) {
  HodgeTuple t;
  t.factors = std::move(fs);
  t.c = c;
  return t;
}

using LL = std::vector<long long>;

}  // namespace

TEST_CASE("reality types") {
  // every module is real on the symplectic Lagrangian grading
  for (int r = 3; r <= 6; ++r) {
    std::vector<int> e(r, 0);
    e[r - 1] = 1;
    std::vector<long long> mu(r, 0);
    mu[(r + 1) / 2] = 1;
    mu[0] = 1;
    CHECK(reality_type(tuple({factor("C" + std::to_string(r), e, mu)})) == Reality::Real);
  }
  CHECK(reality_type(tuple({factor("D6", {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 0})})) ==
        Reality::Quaternionic);
  CHECK(reality_type(tuple({factor("A2", {1, 0}, {1, 0})}, Rat(-2, 3))) == Reality::Complex);
  CHECK(reality_type(tuple({factor("A2", {1, 0}, {1, 0})})) == Reality::Complex);
  CHECK(reality_type(tuple({factor("B2", {0, 1}, {0, 1})})) == Reality::Quaternionic);
  CHECK(reality_type(tuple({factor("A1", {1}, {1}), factor("A1", {1}, {1})})) == Reality::Real);
}

TEST_CASE("hodge numbers of weight-two structures") {
  for (int h = 3; h <= 9; h += 2) {  // so(h+2) with h odd: B series
    int r = (h + 1) / 2;
    std::vector<int> e(r, 0);
    e[0] = 1;
    std::vector<long long> mu(r, 0);
    mu[0] = 1;
    auto d = describe(tuple({factor("B" + std::to_string(r), e, mu)}));
    CHECK(d.level == 2);
    CHECK(d.hodge_numbers == LL{1, h, 1});
    CHECK(d.reality == Reality::Real);
    CHECK(d.horizontal);
    CHECK(d.period_domain);
    CHECK(d.cy_type);
  }
  for (int r = 2; r <= 5; ++r) {  // grassmannian family with h = (2, 2r-2, 2)
    std::vector<int> e(r, 0);
    e[1] = 1;
    std::vector<long long> mu(r, 0);
    mu[0] = 1;
    auto d = describe(tuple({factor("A" + std::to_string(r), e, mu)}, Rat(2, r + 1)));
    CHECK(d.level == 2);
    CHECK(d.hodge_numbers == LL{2, 2 * r - 2, 2});
    CHECK(d.reality == Reality::Complex);
    CHECK(d.horizontal);
    CHECK_FALSE(d.cy_type);
  }
  {
    auto d = describe(tuple({factor("G2", {0, 1}, {1, 0})}));
    CHECK(d.level == 2);
    CHECK(d.hodge_numbers == LL{2, 3, 2});
    CHECK(d.reality == Reality::Real);
    CHECK_FALSE(d.horizontal);
    CHECK(d.contact);
  }
}

TEST_CASE("hodge numbers of weight-three structures") {
  {
    auto d = describe(tuple({factor("C3", {0, 0, 1}, {0, 0, 1})}));
    CHECK(d.level == 3);
    CHECK(d.hodge_numbers == LL{1, 6, 6, 1});
    CHECK(d.reality == Reality::Real);
    CHECK(d.horizontal);
    CHECK(d.cy_type);
  }
  {
    auto d = describe(tuple({factor("A1", {1}, {3})}));
    CHECK(d.hodge_numbers == LL{1, 1, 1, 1});
    CHECK(d.cy_type);
  }
  for (int m = 5; m <= 9; m += 2) {  // so(m) quadric with c = 1/2
    int r = (m - 1) / 2;
    std::vector<int> e(r, 0);
    e[0] = 1;
    std::vector<long long> mu(r, 0);
    mu[0] = 1;
    auto d = describe(tuple({factor("B" + std::to_string(r), e, mu)}, Rat(1, 2)));
    CHECK(d.level == 3);
    CHECK(d.hodge_numbers == LL{1, m - 1, m - 1, 1});
    CHECK(d.reality == Reality::Complex);
    CHECK(d.cy_type);
  }
  {
    auto d = describe(tuple({factor("D6", {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 1})}));
    CHECK(d.hodge_numbers == LL{1, 15, 15, 1});
    CHECK(d.reality == Reality::Real);
    CHECK(d.cy_type);
  }
  {
    auto d = describe(tuple({factor("D5", {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1})}, Rat(1, 4)));
    CHECK(d.hodge_numbers == LL{1, 15, 15, 1});
    CHECK(d.reality == Reality::Complex);
    CHECK(d.cy_type);
  }
  {
    auto d = describe(tuple({factor("E6", {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 1})}, Rat(1, 6)));
    CHECK(d.hodge_numbers == LL{1, 26, 26, 1});
    CHECK(d.cy_type);
  }
  {
    auto d = describe(tuple({factor("E7", {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1})}));
    CHECK(d.hodge_numbers == LL{1, 27, 27, 1});
    CHECK(d.reality == Reality::Real);
    CHECK(d.cy_type);
  }
  {
    auto f = factor("A1", {1}, {1});
    auto d = describe(tuple({f, f, f}));
    CHECK(d.hodge_numbers == LL{1, 3, 3, 1});
    CHECK(d.reality == Reality::Real);
    CHECK(d.cy_type);
    CHECK(d.horizontal);
  }
}

TEST_CASE("semisimple weight-two pairs") {
  {
    auto d = describe(tuple({factor("A1", {1}, {1}), factor("A1", {1}, {1})}));
    CHECK(d.level == 2);
    CHECK(d.hodge_numbers == LL{1, 2, 1});
    CHECK(d.reality == Reality::Real);
    CHECK(d.dim_v == 4);
  }
  {
    auto d = describe(tuple({factor("A1", {1}, {1}), factor("B2", {1, 0}, {0, 1})}));
    CHECK(d.level == 2);
    CHECK(d.hodge_numbers == LL{2, 4, 2});
    CHECK(d.reality == Reality::Real);
    CHECK(d.dim_v == 8);
  }
}

// Two horizontal simple (2,4,2) structures beyond the grassmannian family:
// the adjoint representation of su(2,1), and the center twist of the
// so(2,3) spin structure.  Both satisfy every tuple condition.
TEST_CASE("non-grassmannian horizontal (2,4,2) structures") {
  {
    auto d = describe(tuple({factor("A2", {1, 0}, {1, 1})}));
    CHECK(d.level == 2);
    CHECK(d.hodge_numbers == LL{2, 4, 2});
    CHECK(d.reality == Reality::Real);  // adjoint modules are real
    CHECK(d.horizontal);
    CHECK(d.dim_v == 8);
    CHECK(d.adjoint_grading == LL{2, 4, 2});  // V is the adjoint itself
  }
  {
    auto d = describe(tuple({factor("B2", {1, 0}, {0, 1})}, Rat(1, 2)));
    CHECK(d.level == 2);
    CHECK(d.hodge_numbers == LL{2, 4, 2});
    CHECK(d.reality == Reality::Complex);  // self-dual weight, nonzero center
    CHECK(d.horizontal);
    CHECK(d.dim_v == 8);
    // the same factor with c = 0 is the weight-one structure with h = (2,2)
    auto weight1 = describe(tuple({factor("B2", {1, 0}, {0, 1})}));
    CHECK(weight1.level == 1);
    CHECK(weight1.hodge_numbers == LL{2, 2});
  }
}

TEST_CASE("spinor contact pair of weight two") {
  auto quat = describe(tuple({factor("B2", {0, 1}, {0, 1})}));
  CHECK(quat.hodge_numbers == LL{2, 4, 2});
  CHECK(quat.reality == Reality::Quaternionic);
  CHECK(quat.dim_v == 8);
  auto real = describe(tuple({factor("B3", {0, 1, 0}, {0, 0, 1})}));
  CHECK(real.hodge_numbers == LL{2, 4, 2});
  CHECK(real.reality == Reality::Real);
  CHECK(real.dim_v == 8);
}

TEST_CASE("weight-one structures") {
  for (int r = 3; r <= 6; ++r) {
    std::vector<int> e(r, 0);
    e[r - 1] = 1;
    std::vector<long long> mu(r, 0);
    mu[0] = 1;
    auto d = describe(tuple({factor("C" + std::to_string(r), e, mu)}));
    CHECK(d.level == 1);
    CHECK(d.hodge_numbers == LL{r, r});
    CHECK(d.period_domain);
  }
  auto half_spin = describe(tuple({factor("D4", {1, 0, 0, 0}, {0, 0, 0, 1})}));
  CHECK(half_spin.level == 1);
  CHECK(half_spin.hodge_numbers == LL{8, 8});
  CHECK(half_spin.reality == Reality::Quaternionic);
}

TEST_CASE("adjoint gradings") {
  for (int a = 1; a <= 3; ++a) {
    int r = 5;
    const RootDatum& d = build_root_datum({Family::A, r});
    GradingElement e;
    e.bits.assign(r, 0);
    e.bits[a - 1] = 1;
    auto dims = adjoint_grading(d, e);
    REQUIRE(dims.size() == 3);
    CHECK(dims.front() == a * (r + 1 - a));
  }
  {
    const RootDatum& d = build_root_datum({Family::G, 2});
    auto dims = adjoint_grading(d, GradingElement{{0, 1}});
    CHECK(dims == LL{1, 4, 4, 4, 1});
  }
  for (int r = 3; r <= 6; ++r) {
    const RootDatum& d = build_root_datum({Family::C, r});
    GradingElement e;
    e.bits.assign(r, 0);
    e.bits[0] = 1;
    auto dims = adjoint_grading(d, e);
    CHECK(dims.size() == 5);
    CHECK(dims.front() == 1);
    long long total = 0;
    for (auto x : dims) total += x;
    CHECK(total == algebra_dimension({Family::C, r}));
  }
}

TEST_CASE("horizontal and contact predicates") {
  CHECK(is_horizontal(tuple({factor("E7", {0, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0})})));
  CHECK_FALSE(is_horizontal(tuple({factor("G2", {0, 1}, {1, 0})})));
  CHECK(is_horizontal(tuple({factor("A1", {1}, {1}), factor("A1", {1}, {1})})));

  CHECK(is_contact(tuple({factor("A4", {1, 0, 0, 1}, {1, 0, 0, 0})})));
  CHECK(is_contact(tuple({factor("B3", {0, 1, 0}, {1, 0, 0})})));
  CHECK(is_contact(tuple({factor("D4", {0, 1, 0, 0}, {1, 0, 0, 0})})));
  CHECK_FALSE(is_contact(tuple({factor("A4", {1, 0, 0, 0}, {1, 0, 0, 0})})));
  // horizontal and contact are mutually exclusive
  CHECK_FALSE(is_contact(tuple({factor("E7", {0, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0})})));
}

TEST_CASE("period domain predicate") {
  CHECK(is_period_domain(tuple({factor("C3", {0, 0, 1}, {1, 0, 0})})));
  CHECK(is_period_domain(tuple({factor("D4", {0, 1, 0, 0}, {1, 0, 0, 0})})));
  CHECK(is_period_domain(tuple({factor("B3", {0, 1, 0}, {1, 0, 0})})));
  CHECK(is_period_domain(tuple({factor("A1", {1}, {1})})));
  CHECK_FALSE(is_period_domain(tuple({factor("A2", {1, 0}, {1, 0})}, Rat(-2, 3))));
  CHECK_FALSE(is_period_domain(tuple({factor("D4", {1, 0, 0, 0}, {0, 0, 0, 1})})));
  CHECK_FALSE(is_period_domain(tuple({factor("D5", {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0})})));
}

TEST_CASE("compact dimensions") {
  for (int a = 1; a <= 4; ++a) {
    int b = 5 - a;  // A4 = sl(5)
    std::vector<int> e(4, 0);
    e[a - 1] = 1;
    CHECK(compact_dim(tuple({factor("A4", e, {1, 0, 0, 0})})) == a * a + b * b - 1);
  }
  for (int r = 3; r <= 6; ++r) {
    std::vector<int> e(r, 0);
    e[0] = 1;
    std::vector<long long> mu(r, 0);
    mu[0] = 1;
    long long sp_dim = (r - 1) * (2 * (r - 1) + 1);
    CHECK(compact_dim(tuple({factor("C" + std::to_string(r), e, mu)})) == 3 + sp_dim);
  }
  CHECK(compact_dim(tuple({factor("G2", {0, 1}, {1, 0})})) == 6);
}

TEST_CASE("real form names") {
  auto info = real_form_info(parse_simple_type("A4"), GradingElement{{0, 1, 0, 0}});
  REQUIRE(info.has_value());
  CHECK(info->real_form == "su(2,3)");
  info = real_form_info(parse_simple_type("E7"), GradingElement{{0, 0, 0, 0, 0, 0, 1}});
  REQUIRE(info.has_value());
  CHECK(info->real_form == "EVII");
  info = real_form_info(parse_simple_type("E7"), GradingElement{{1, 0, 0, 0, 0, 0, 0}});
  REQUIRE(info.has_value());
  CHECK(info->real_form == "EVI");
  info = real_form_info(parse_simple_type("G2"), GradingElement{{0, 1}});
  REQUIRE(info.has_value());
  CHECK(info->real_form == "G");
  CHECK_FALSE(real_form_info(parse_simple_type("G2"), GradingElement{{1, 0}}).has_value());
  CHECK_FALSE(real_form_info(parse_simple_type("F4"), GradingElement{{0, 0, 0, 1}}).has_value());
}

TEST_CASE("duality redundancy") {
  std::vector<HodgeTuple> cases = {
      tuple({factor("A3", {1, 0, 0}, {0, 1, 0})}, Rat(1, 2)),
      tuple({factor("E6", {0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0})}, Rat(1, 3)),
      tuple({factor("D5", {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1})}, Rat(1, 4)),
      tuple({factor("A2", {1, 0}, {1, 0})}, Rat(-2, 3)),
  };
  for (const auto& t : cases) {
    HodgeTuple mirror = t;
    for (auto& f : mirror.factors) f.mu = build_root_datum(f.type).dual_weight(f.mu);
    mirror.c = -t.c;
    auto a = describe(t);
    auto b = describe(mirror);
    CAPTURE(to_string(t));
    CHECK(a.hodge_numbers == b.hodge_numbers);
    CHECK(a.level == b.level);
    CHECK(a.reality == b.reality);
  }
}

TEST_CASE("non-normalized center scalars give gapped spectra") {
  // m = -1, m* = 2: level 4 with an empty middle eigenspace
  auto d = describe(tuple({factor("A2", {1, 0}, {1, 0})}, Rat(-5, 3)));
  CHECK(d.level == 4);
  CHECK(d.hodge_numbers == LL{2, 1, 0, 1, 2});
  CHECK(d.reality == Reality::Complex);
  CHECK(d.dim_v == 6);
  CHECK_FALSE(d.cy_type);
  // its duality mirror pins the top at n/2 and has the same numbers
  auto m = describe(tuple({factor("A2", {1, 0}, {0, 1})}, Rat(5, 3)));
  CHECK(m.hodge_numbers == d.hodge_numbers);
}

TEST_CASE("invalid tuples are rejected") {
  CHECK_THROWS_AS(describe(tuple({factor("A1", {1}, {0})})), DomainError);   // trivial factor
  CHECK_THROWS_AS(describe(tuple({factor("A1", {0}, {1})})), DomainError);   // zero grading
  CHECK_THROWS_AS(describe(tuple({factor("A2", {1, 0}, {1, 0})}, Rat(1, 5))), DomainError);
  CHECK_THROWS_AS(describe(tuple({factor("A2", {1, 0}, {-1, 2})})), DomainError);
  CHECK_THROWS_AS(describe(HodgeTuple{}), DomainError);
}
