#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "pmcg/plumbing.hpp"

using namespace pmcg;

TEST_CASE("linear chains") {
  PlumbingGraph c21 = linear_chain(2, 1);
  CHECK(c21.vertex_count() == 1);
  CHECK(c21.weights == std::vector<long long>{-4});
  CHECK(graph_det(c21) == -4);
  CHECK(is_negative_definite(c21));
  for (long long p : {3, 5, 9}) {
    PlumbingGraph c = linear_chain(p, 1);
    CHECK(c.vertex_count() == std::size_t(p - 1));
    CHECK(c.weights.front() == -(p + 2));
    for (std::size_t i = 1; i < c.vertex_count(); ++i) CHECK(c.weights[i] == -2);
  }
}

TEST_CASE("chain determinant is p^2 for coprime pairs up to 40") {
  for (long long p = 2; p <= 40; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(BigInt(abs(graph_det(linear_chain(p, q)))) == BigInt(p) * p);
    }
}

TEST_CASE("gamma and delta graphs") {
  PlumbingGraph g0 = gamma_w(0, 0, 0);
  CHECK(g0.vertex_count() == 4);
  CHECK(g0.weights == std::vector<long long>{-4, -3, -3, -3});
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (int r = 0; r <= 2; ++r) {
        PlumbingGraph g = gamma_w(p, q, r);
        CHECK(g.vertex_count() == std::size_t(p + q + r + 4));
        CHECK(is_negative_definite(g));
        PlumbingGraph d = delta_n(p, q, r);
        CHECK(d.vertex_count() == std::size_t(p + q + r + 4));
        CHECK(is_negative_definite(d));
        // both families bound rational balls: |det| must be a perfect square
        for (const PlumbingGraph* gr : {&g, &d}) {
          BigInt det = abs(graph_det(*gr));
          BigInt root = sqrt(det);
          CHECK(root * root == det);
        }
      }
}

TEST_CASE("fibration homology") {
  Relation lan = lantern();
  FibrationHomology rhs = fibration_homology(lan.rhs);
  CHECK(rhs.b1 == 0);
  CHECK(rhs.b2 == 0);
  REQUIRE(rhs.torsion_det_abs.has_value());
  CHECK(*rhs.torsion_det_abs == 2);
  FibrationHomology lhs = fibration_homology(lan.lhs);
  CHECK(lhs.b2 == 1);  // the -4 sphere
  CHECK(lhs.b1 == 0);
}

TEST_CASE("kernel gram") {
  Relation lan = lantern();
  KernelGram kg = kernel_gram(lan.lhs);
  REQUIRE(kg.basis.size() == 1);
  CHECK(kg.gram(0, 0) == -4);
  for (int p : {3, 5}) {
    KernelGram dk = kernel_gram(daisy(p).lhs);
    CHECK(dk.basis.size() == std::size_t(p - 1));
    CHECK(is_negative_definite(dk.gram));
  }
  Relation w0 = w_family(0, 0, 0);
  KernelGram wk = kernel_gram(w0.lhs);
  CHECK(wk.basis.size() == 4);
  CHECK(abs(determinant(wk.gram)) == abs(graph_det(gamma_w(0, 0, 0))));
  // precondition: curves must be pairwise disjoint
  CHECK_THROWS_AS(kernel_gram(lan.rhs), std::invalid_argument);
}

TEST_CASE("matches_plumbing") {
  for (int p = 2; p <= 6; ++p) {
    MatchReport rep = matches_plumbing(daisy(p).lhs, linear_chain(p, 1));
    CHECK(rep.verdict == MatchVerdict::exact_basis);
  }
  MatchReport w = matches_plumbing(w_family(1, 1, 1).lhs, gamma_w(1, 1, 1));
  CHECK((w.verdict == MatchVerdict::exact_basis ||
         w.verdict == MatchVerdict::invariants_only));
  MatchReport wrong = matches_plumbing(lantern().lhs, linear_chain(3, 1));
  CHECK(wrong.verdict == MatchVerdict::mismatch);
}

TEST_CASE("blowdown invariants") {
  auto [chi, sigma] = blowdown_invariants(56, -36, linear_chain(2, 1));
  CHECK(chi == 55);
  CHECK(sigma == -35);
  auto [chi3, sigma3] = blowdown_invariants(132, -80, linear_chain(4, 1));
  CHECK(chi3 == 129);
  CHECK(sigma3 == -77);
  PlumbingGraph empty;
  auto [c0, s0] = blowdown_invariants(10, -2, empty);
  CHECK(c0 == 10);
  CHECK(s0 == -2);
  // chi + sigma is preserved (the shifts cancel)
  for (auto [c, s] : std::vector<std::array<long long, 2>>{{56, -36}, {132, -80}}) {
    auto [c2, s2] = blowdown_invariants(c, s, linear_chain(3, 1));
    CHECK(c2 + s2 == c + s);
  }
  PlumbingGraph not_definite;
  not_definite.weights = {1};
  CHECK_THROWS_AS(blowdown_invariants(5, 5, not_definite), std::invalid_argument);
}

TEST_CASE("fibration invariants") {
  // genus 2 with the 60-letter word: chi = 4 - 4g + n = 56, type (9, 45)
  FibrationInvariants f = fibration_invariants(2, 60, -36);
  CHECK(f.chi == 56);
  CHECK(f.b2plus == 9);
  CHECK(f.b2minus == 45);
  FibrationInvariants after = fibration_invariants(2, 59, -35);
  CHECK(after.chi == 55);
  CHECK(after.b2plus == 9);
  CHECK(after.b2minus == 44);
}

TEST_CASE("homeomorphism type") {
  HomeoType t = homeo_type(55, -35);
  CHECK(t.b2plus == 9);
  CHECK(t.b2minus == 44);
  CHECK(t.display == "#9 CP2 # 44 CP2bar");
  CHECK(t.assumes_simply_connected_odd);
  HomeoType t2 = homeo_type(4, 0);
  CHECK(t2.b2plus == 1);
  CHECK(t2.b2minus == 1);
  HomeoType t3 = homeo_type(129, -77);
  CHECK(t3.b2plus == 25);
  CHECK(t3.b2minus == 102);
  CHECK_THROWS_AS(homeo_type(5, 0), std::invalid_argument);   // parity
  CHECK_THROWS_AS(homeo_type(4, -10), std::invalid_argument); // negativity
}

TEST_CASE("theta chains") {
  ThetaChainDescriptor t = theta_chain(17, 7);
  CHECK(t.c_sequence == std::vector<long long>{6, 4, 3});
  REQUIRE(t.links.size() == 3);
  CHECK(t.links[0] == std::pair<long long, long long>(-2, -3));
  CHECK(t.links[1] == std::pair<long long, long long>(-2, -2));
  CHECK(t.links[2] == std::pair<long long, long long>(-2, -2));
  ThetaChainDescriptor d = theta_chain(2, 1);
  CHECK(d.degenerate);
  CHECK(d.c_sequence == std::vector<long long>{4});
  CHECK(d.links.empty());
  // single-link case: -(c-2) twists, framing -(c-3)
  ThetaChainDescriptor s = theta_chain(3, 2);
  CHECK_FALSE(s.degenerate);
  REQUIRE(s.links.size() == 1);
  CHECK(s.links[0] == std::pair<long long, long long>(-3, -2));
}

TEST_CASE("rhs torsion squares to the graph determinant for linear families") {
  for (auto [p, q] : std::vector<std::array<long long, 2>>{
           {2, 1}, {3, 1}, {4, 1}, {3, 2}, {5, 2}, {17, 7}}) {
    FibrationHomology fh = fibration_homology(linear_family(p, q).rhs);
    CHECK(fh.b1 == 0);
    CHECK(fh.b2 == 0);
    REQUIRE(fh.torsion_det_abs.has_value());
    CHECK(*fh.torsion_det_abs * *fh.torsion_det_abs ==
          abs(graph_det(linear_chain(p, q))));
    CHECK(*fh.torsion_det_abs == p);
  }
}

TEST_CASE("verified relations pass the homology screen") {
  for (const Relation& rel : {lantern(), daisy(5), w_family(2, 0, 1), n_family(1, 0, 2)})
    CHECK(word_homology_sum(rel.lhs) == word_homology_sum(rel.rhs));
}

TEST_CASE("dot export") {
  std::string dot = to_dot(gamma_w(0, 0, 0));
  CHECK(dot.find("graph plumbing") != std::string::npos);
  CHECK(dot.find("-4") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
