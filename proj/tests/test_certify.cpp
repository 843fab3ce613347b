#include "doctest.h"
#include "fekete/certify.hpp"
#include "fekete/cyclotomic.hpp"
#include "fekete/errors.hpp"
#include "fekete/fekete.hpp"

using namespace fekete;

namespace {

Certificate expect_cert(const CertifyResult& r) {
  REQUIRE(std::holds_alternative<Certificate>(r));
  return std::get<Certificate>(r);
}

VerifyContext ctx_for(const FeketeDecomposition& d) { return {d.f_n, d.g_n}; }

}  // namespace

TEST_CASE("shape predicates") {
  CHECK(shape_is_irreducible({{5, 1}}, 5));
  CHECK_FALSE(shape_is_irreducible({{5, 2}}, 10));
  CHECK(shape_is_linear_times_irreducible({{1, 1}, {7, 1}}, 8));
  CHECK_FALSE(shape_is_linear_times_irreducible({{1, 1}, {1, 1}}, 2));
  CHECK(shape_is_transposition({{2, 1}, {3, 1}, {3, 1}}));
  CHECK(shape_is_transposition({{1, 1}, {1, 1}, {2, 1}}));
  CHECK_FALSE(shape_is_transposition({{2, 1}}));
  CHECK_FALSE(shape_is_transposition({{2, 1}, {2, 1}}));
  CHECK(odd_count_degree({{2, 1}, {4, 1}}) == 2);
  CHECK(odd_count_degree({{2, 2}, {3, 1}, {3, 1}}) == std::nullopt);
  CHECK(odd_count_degree({{1, 2}, {2, 1}}) == 2);
}

TEST_CASE("g irreducibility") {
  const FeketeDecomposition d15 = decompose(15);
  const Certificate c = expect_cert(certify_g_irreducible(d15.g_n));
  CHECK(c.kind == CertKind::GIrreducible);
  REQUIRE(c.witnesses.size() == 1);
  // g_15 = (x + 1)(x^2 + x + 1) mod 2.
  CHECK(c.witnesses[0].prime == 3);
  CHECK(verify_certificate(c, ctx_for(d15)));

  const FeketeDecomposition d21 = decompose(21);
  const Certificate c21 = expect_cert(certify_g_irreducible(d21.g_n));
  CHECK(c21.witnesses[0].prime == 5);

  // Reducible over Q: every reduction has a factor.
  const auto nf = certify_g_irreducible(IntPoly{-2, 0, 0, 0, 1} * IntPoly{1, 1});
  CHECK(std::holds_alternative<NotFound>(nf));
  CHECK_THROWS_AS(certify_g_irreducible(IntPoly{5}), InvalidArgument);
}

TEST_CASE("f irreducibility") {
  const FeketeDecomposition d15 = decompose(15);
  const Certificate g15 = expect_cert(certify_g_irreducible(d15.g_n));
  const Certificate fast = expect_cert(certify_f_irreducible(d15, &g15));
  CHECK(fast.kind == CertKind::FIrreducibleFastPath);
  CHECK(fast.aux.fast_path == "middle");
  CHECK(verify_certificate(fast, ctx_for(d15)));

  const Certificate odd = expect_cert(certify_f_irreducible(d15, &g15, {5000, false}));
  CHECK(odd.kind == CertKind::FIrreducibleOddCount);
  CHECK(odd.witnesses[0].prime == 2);
  CHECK(odd.aux.odd_degree == 2);
  CHECK(verify_certificate(odd, ctx_for(d15)));

  const FeketeDecomposition d21 = decompose(21);
  const Certificate g21 = expect_cert(certify_g_irreducible(d21.g_n));
  const Certificate sign = expect_cert(certify_f_irreducible(d21, &g21));
  CHECK(sign.aux.fast_path == "sign");
  CHECK(*sign.aux.f_at_1 == 6);
  CHECK(*sign.aux.f_at_minus1 == -2);
  CHECK(verify_certificate(sign, ctx_for(d21)));

  CHECK_THROWS_AS(certify_f_irreducible(d15, nullptr), PrerequisiteMissing);
  Certificate bogus = g15;
  bogus.witnesses[0].prime = 3;
  bogus.witnesses[0].shape = {{1, 1}, {2, 1}};
  CHECK_THROWS_AS(certify_f_irreducible(d15, &bogus), PrerequisiteMissing);
}

TEST_CASE("no odd count for h times its reversal") {
  // h = x^2 + x + 3 is not reciprocal, so h * rev(h) is, and each
  // irreducible factor of h mod p pairs with one of rev(h).
  const IntPoly h{3, 1, 1};
  const IntPoly f = h * reversal(h);
  REQUIRE(is_reciprocal(f));
  FeketeDecomposition d;
  d.f_n = f;
  d.g_n = trace_polynomial(f);
  const Certificate gc = expect_cert(certify_g_irreducible(d.g_n));
  CHECK(std::holds_alternative<NotFound>(certify_f_irreducible(d, &gc, {100, true})));
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!is_prime_u32(p) || p == 3) continue;
    const FactorShape s = factor_shape(reduce_mod(f, PrimeField(p)));
    CHECK_MESSAGE(odd_count_degree(s) == std::nullopt, "p=" << p);
  }
}

TEST_CASE("galois g") {
  const FeketeDecomposition d21 = decompose(21);
  const Certificate c = expect_cert(certify_galois_g(d21.g_n));
  CHECK(c.kind == CertKind::GaloisGSymmetric);
  CHECK(*c.aux.triple == std::array<std::uint64_t, 3>{5, 19, 7});
  REQUIRE(c.witnesses.size() == 3);
  CHECK(c.witnesses[0].prime == 5);
  CHECK(c.witnesses[1].prime == 7);
  CHECK(c.witnesses[2].prime == 19);
  CHECK(verify_certificate(c, ctx_for(d21)));

  const FeketeDecomposition d35 = decompose(35);
  const Certificate c35 = expect_cert(certify_galois_g(d35.g_n));
  CHECK(*c35.aux.triple == std::array<std::uint64_t, 3>{29, 47, 31});

  CHECK(*expect_cert(certify_galois_g(decompose(15).g_n)).aux.triple == std::array<std::uint64_t, 3>{3, 2, 2});
  CHECK(std::holds_alternative<NotFound>(certify_galois_g(IntPoly{1, 1, 1})));

  Certificate tampered = c;
  tampered.witnesses[1].prime = 11;
  CHECK_FALSE(verify_certificate(tampered, ctx_for(d21)));
  Certificate reordered = c;
  std::reverse(reordered.witnesses[2].shape.begin(), reordered.witnesses[2].shape.end());
  CHECK(verify_certificate(reordered, ctx_for(d21)));
  Certificate unsorted = c;
  std::swap(unsorted.witnesses[0], unsorted.witnesses[1]);
  CHECK_FALSE(verify_certificate(unsorted, ctx_for(d21)));
}

TEST_CASE("galois f") {
  const FeketeDecomposition d21 = decompose(21);
  const Certificate g21 = expect_cert(certify_galois_g(d21.g_n));
  const Certificate full = expect_cert(certify_galois_f(d21, &g21));
  CHECK(full.kind == CertKind::GaloisFFull);
  CHECK(full.witnesses[0].prime == 227);
  CHECK(verify_certificate(full, ctx_for(d21)));
  CHECK_THROWS_AS(certify_galois_f(d21, &g21, {}, GaloisFCase::Half), CriterionInapplicable);

  const FeketeDecomposition d35 = decompose(35);
  const Certificate g35 = expect_cert(certify_galois_g(d35.g_n));
  const Certificate half = expect_cert(certify_galois_f(d35, &g35));
  CHECK(half.kind == CertKind::GaloisFHalf);
  CHECK(half.witnesses[0].prime == 433);
  CHECK(verify_certificate(half, ctx_for(d35)));
  CHECK_THROWS_AS(certify_galois_f(d35, &g35, {}, GaloisFCase::Full), CriterionInapplicable);

  const Certificate g21_irred = expect_cert(certify_g_irreducible(d21.g_n));
  CHECK_THROWS_AS(certify_galois_f(d21, &g21_irred), PrerequisiteMissing);
  CHECK_THROWS_AS(certify_galois_f(d21, nullptr), PrerequisiteMissing);
  // Certificate for the wrong polynomial.
  CHECK_THROWS_AS(certify_galois_f(d35, &g21), PrerequisiteMissing);
}

TEST_CASE("disc square flag against the full discriminant") {
  for (long n : {15L, 21L, 33L, 35L, 39L, 55L, 57L, 65L, 77L}) {
    const IntPoly f = decompose(n).f_n;
    CHECK_MESSAGE(reciprocal_disc_is_square(f) == is_perfect_square(discriminant(f)), "n=" << n);
  }
}

TEST_CASE("certificates round trip over small semiprimes") {
  for (long n = 15; n <= 300; n += 2) {
    FeketeDecomposition d;
    try {
      d = decompose(n);
    } catch (const NotSemiprime&) {
      continue;
    }
    const auto g_irr = certify_g_irreducible(d.g_n);
    REQUIRE(std::holds_alternative<Certificate>(g_irr));
    const Certificate gc = std::get<Certificate>(g_irr);
    CHECK(verify_certificate(gc, ctx_for(d)));
    CHECK(std::get<Certificate>(certify_g_irreducible(d.g_n)) == gc);

    const auto f_irr = certify_f_irreducible(d, &gc);
    if (auto* c = std::get_if<Certificate>(&f_irr)) {
      CHECK_MESSAGE(verify_certificate(*c, ctx_for(d)), "n=" << n);
      CHECK(certificate_from_json(to_json(*c)) == *c);
    }
    if (n > 150) continue;
    const auto gal = certify_galois_g(d.g_n);
    if (auto* c = std::get_if<Certificate>(&gal)) {
      CHECK_MESSAGE(verify_certificate(*c, ctx_for(d)), "n=" << n);
      CHECK(certificate_from_json(to_json(*c)) == *c);
      const auto gf = certify_galois_f(d, c);
      if (auto* cf = std::get_if<Certificate>(&gf)) {
        CHECK_MESSAGE(verify_certificate(*cf, ctx_for(d)), "n=" << n);
        CHECK(certificate_from_json(to_json(*cf)) == *cf);
        CHECK(to_json(certificate_from_json(to_json(*cf))).dump() == to_json(*cf).dump());
      }
    }
  }
}

TEST_CASE("json forms") {
  CHECK(big_to_json(BigInt(12)).is_number_integer());
  CHECK(big_to_json(BigInt("123456789012345678901234567890")).is_string());
  CHECK(big_from_json(big_to_json(BigInt("-123456789012345678901234567890"))) ==
        BigInt("-123456789012345678901234567890"));
  CHECK(big_from_json(nlohmann::ordered_json(-7)) == -7);
  CHECK_THROWS_AS(big_from_json(nlohmann::ordered_json("12x")), InvalidArgument);
  CHECK_THROWS_AS(big_from_json(nlohmann::ordered_json(1.5)), InvalidArgument);
  CHECK_THROWS_AS(cert_kind_from_string("Nope"), InvalidArgument);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::ordered_json::parse(R"({"kind":"GIrreducible"})")),
                  InvalidArgument);

  const FeketeDecomposition d15 = decompose(15);
  const Certificate c = expect_cert(certify_g_irreducible(d15.g_n));
  const auto j = to_json(c);
  CHECK(j.dump() == R"({"kind":"GIrreducible","witnesses":[{"prime":3,"shape":[[3,1]]}],"aux":{}})");
}
