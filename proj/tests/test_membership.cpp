#include <doctest.h>

#include "salmon/determinantal.hpp"
#include "salmon/geometry.hpp"
#include "salmon/membership.hpp"
#include "salmon/poly_io.hpp"
#include "salmon/rng.hpp"

using namespace salmon;

namespace {

const Dims d334{3, 3, 4};
const Dims d444{4, 4, 4};

Tensor3 pad_to(const Tensor3& t, const Dims& dims) {
    Tensor3 out(dims);
    const Dims s = t.dims();
    for (int i = 1; i <= s.a; ++i)
        for (int j = 1; j <= s.b; ++j)
            for (int k = 1; k <= s.c; ++k) out.at(i, j, k) = t.at(i, j, k);
    return out;
}

// A random invertible basis change in every factor (invertibility checked).
CompressionMaps random_basis_change(const Dims& dims, std::uint64_t seed) {
    for (std::uint64_t bump = 0;; ++bump) {
        CompressionMaps maps = random_compression(dims, dims, seed + bump, 12345);
        if (maps.phiA.det() != 0 && maps.phiB.det() != 0 && maps.phiC.det() != 0) return maps;
    }
}

}  // namespace

TEST_CASE("compress: identity maps leave the tensor unchanged") {
    Tensor3 t = sample_generic(d334, 1);
    CompressionMaps id{RationalMatrix::identity(3), RationalMatrix::identity(3), RationalMatrix::identity(4), 0};
    CHECK(compress(t, id) == t);
}

TEST_CASE("compress: a rank-one tensor stays rank at most one") {
    Tensor3 t = sample_secant(1, d444, 2).tensor;
    Tensor3 c = compress(t, random_compression(d444, d334, 3, 1));
    for (Factor f : {Factor::A, Factor::B, Factor::C}) CHECK(flattening(c, f).exact_rank() <= 1);
}

TEST_CASE("compress: rank-4 compressions keep all M6 polynomials at zero") {
    Tensor3 t = sample_secant(4, Dims{4, 4, 5}, 4).tensor;
    for (int trial = 0; trial < 5; ++trial) {
        Tensor3 c = compress(t, random_compression(Dims{4, 4, 5}, d334, 5, 100 + trial));
        for (const auto& p : EquationCache::m6_at_334().polys) CHECK(evaluate(p, c) == 0);
    }
}

TEST_CASE("compress: shape mismatch is an error") {
    Tensor3 t = sample_generic(d334, 6);
    CHECK_THROWS_AS(static_cast<void>(compress(t, random_compression(d444, d334, 7, 1))), input_error);
}

TEST_CASE("test_family: rank-4 tensors pass all three families") {
    Tensor3 t = sample_secant(4, d444, 8).tensor;
    CHECK(test_family(t, Family::M5, 5, 9).status == FamilyVerdict::Status::Vanishes);
    CHECK(test_family(t, Family::M6, 5, 9).status == FamilyVerdict::Status::Vanishes);
    CHECK(test_family(t, Family::M9, 5, 9).status == FamilyVerdict::Status::Vanishes);
}

TEST_CASE("test_family: generic (3,3,4) tensor fails M6 with a certain witness") {
    Tensor3 t = sample_generic(d334, 10);
    FamilyVerdict v = test_family(t, Family::M6, 5, 11);
    CHECK(v.status == FamilyVerdict::Status::DoesNotVanish);
    CHECK(v.certain);
    REQUIRE(v.witness.has_value());
    // The witness reproduces: evaluating the named polynomial at the named
    // compression gives the recorded nonzero value.
    const auto& w = *v.witness;
    Tensor3 c = compress(t, w.maps);
    const SparsePolynomial& poly = EquationCache::m6_at_334().polys[std::stoul(w.poly_id)];
    CHECK(rat_to_string(evaluate(poly, c)) == w.value);
}

TEST_CASE("test_family: M5 is skipped (vacuously zero) when two factors have dim 3") {
    FamilyVerdict v = test_family(sample_generic(d334, 12), Family::M5, 5, 13);
    CHECK(v.status == FamilyVerdict::Status::Skipped);
    CHECK(!v.note.empty());
}

TEST_CASE("test_family: dims below 3 are rejected") {
    CHECK_THROWS_AS(static_cast<void>(test_family(Tensor3(Dims{2, 3, 4}), Family::M6, 1, 1)), input_error);
}

TEST_CASE("friedland point: rank invariants") {
    Tensor3 p = friedland_point();
    CHECK(p.dims() == d334);
    CHECK(build_psi(p).mat.exact_rank() == 8);
    CHECK(flattening(p, Factor::A).exact_rank() == 3);
    CHECK(flattening(p, Factor::B).exact_rank() == 3);
    CHECK(flattening(p, Factor::C).exact_rank() == 4);
}

TEST_CASE("friedland point: M9 vanishes, M6 does not; the pipeline rejects it via M6") {
    Tensor3 p = friedland_point();
    CHECK(test_family(p, Family::M9, 10, 20).status == FamilyVerdict::Status::Vanishes);

    FamilyVerdict m6 = test_family(p, Family::M6, 10, 20);
    CHECK(m6.status == FamilyVerdict::Status::DoesNotVanish);
    CHECK(m6.certain);

    MembershipReport report = border_rank_le4_test(p, 10, 20);
    CHECK(!report.in_zero_set);
    CHECK(report.conclusion() == "not-in-zero-set");
    CHECK(report.sub444_pass);  // flattening ranks are fine; M6 is the obstruction
    CHECK(report.m5.status == FamilyVerdict::Status::Skipped);
}

TEST_CASE("friedland point embedded at (4,4,4): M5 vanishes under random compressions") {
    Tensor3 p = pad_to(friedland_point(), d444);
    FamilyVerdict v = test_family(p, Family::M5, 5, 21);
    CHECK(v.status == FamilyVerdict::Status::Vanishes);
}

TEST_CASE("border_rank_le4_test: rank-4 samples are in the zero set across dims") {
    for (const Dims& dims : {Dims{3, 3, 3}, d334, Dims{3, 4, 4}, d444}) {
        MembershipReport report = border_rank_le4_test(sample_secant(4, dims, 22).tensor, 4, 23);
        CHECK(report.in_zero_set);
    }
}

TEST_CASE("border_rank_le4_test: generic (4,4,4) tensors are rejected") {
    for (int trial = 0; trial < 3; ++trial) {
        MembershipReport report = border_rank_le4_test(sample_generic(d444, 24 + trial), 4, 25);
        CHECK(!report.in_zero_set);
    }
}

TEST_CASE("border_rank_le4_test: dims below 3 are rejected with the precondition message") {
    CHECK_THROWS_WITH_AS(static_cast<void>(border_rank_le4_test(Tensor3(Dims{2, 3, 4}), 1, 1)),
                         doctest::Contains("a,b,c >= 3"), input_error);
}

TEST_CASE("reports are byte-for-byte deterministic under a fixed seed") {
    Tensor3 t = sample_secant(4, d334, 26).tensor;
    MembershipReport r1 = border_rank_le4_test(t, 5, 27);
    MembershipReport r2 = border_rank_le4_test(t, 5, 27);
    CHECK(report_to_json(r1) == report_to_json(r2));
}

TEST_CASE("conclusions are invariant under invertible changes of basis") {
    Tensor3 in = sample_secant(4, d334, 28).tensor;
    Tensor3 out = friedland_point();
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(border_rank_le4_test(compress(in, random_basis_change(d334, 29 + trial)), 3, 30).in_zero_set);
        CHECK(!border_rank_le4_test(compress(out, random_basis_change(d334, 31 + trial)), 3, 30).in_zero_set);
    }
}

TEST_CASE("numeric mode: tolerance-based verdicts and labeling") {
    Tensor3 t = sample_secant(4, d334, 32).tensor.to_numeric();
    MembershipReport report = border_rank_le4_test(t, 3, 33);
    CHECK(report.mode == "numeric");
    CHECK(report.in_zero_set);
    CHECK(!report.m6.certain);

    Tensor3 g = sample_generic(d334, 34).to_numeric();
    MembershipReport reject = border_rank_le4_test(g, 3, 33);
    CHECK(!reject.in_zero_set);
}
