#include "salmon/membership.hpp"

#include <cmath>

#include "salmon/determinantal.hpp"
#include "salmon/rng.hpp"

namespace salmon {

Tensor3 compress(const Tensor3& t, const CompressionMaps& maps) {
    const Dims s = t.dims();
    if (maps.phiA.rows() != s.a || maps.phiB.rows() != s.b || maps.phiC.rows() != s.c)
        throw input_error("compression map shapes do not match tensor dims " + s.str());
    const Dims target{maps.phiA.cols(), maps.phiB.cols(), maps.phiC.cols()};

    // Contract one factor at a time.
    std::vector<Rat> u(static_cast<std::size_t>(target.a) * s.b * s.c);
    for (int i2 = 0; i2 < target.a; ++i2)
        for (int j = 0; j < s.b; ++j)
            for (int k = 0; k < s.c; ++k) {
                Rat sum = 0;
                for (int i = 0; i < s.a; ++i) {
                    const Rat& m = maps.phiA.at(i, i2);
                    if (m != 0) sum += m * t.at(i + 1, j + 1, k + 1);
                }
                u[(static_cast<std::size_t>(i2) * s.b + j) * s.c + k] = std::move(sum);
            }
    std::vector<Rat> v(static_cast<std::size_t>(target.a) * target.b * s.c);
    for (int i2 = 0; i2 < target.a; ++i2)
        for (int j2 = 0; j2 < target.b; ++j2)
            for (int k = 0; k < s.c; ++k) {
                Rat sum = 0;
                for (int j = 0; j < s.b; ++j) {
                    const Rat& m = maps.phiB.at(j, j2);
                    if (m != 0) sum += m * u[(static_cast<std::size_t>(i2) * s.b + j) * s.c + k];
                }
                v[(static_cast<std::size_t>(i2) * target.b + j2) * s.c + k] = std::move(sum);
            }
    Tensor3 out(target);
    for (int i2 = 0; i2 < target.a; ++i2)
        for (int j2 = 0; j2 < target.b; ++j2)
            for (int k2 = 0; k2 < target.c; ++k2) {
                Rat sum = 0;
                for (int k = 0; k < s.c; ++k) {
                    const Rat& m = maps.phiC.at(k, k2);
                    if (m != 0) sum += m * v[(static_cast<std::size_t>(i2) * target.b + j2) * s.c + k];
                }
                out.at(i2 + 1, j2 + 1, k2 + 1) = std::move(sum);
            }
    return out;
}

CompressionMaps random_compression(const Dims& source, const Dims& target, std::uint64_t seed,
                                   std::uint64_t stream) {
    Rng rng = Rng::derive(seed, stream);
    CompressionMaps maps;
    maps.seed = seed;
    auto fill = [&](int rows, int cols) {
        RationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = Rat(rng.uniform_int(-1000, 1000));
        return m;
    };
    maps.phiA = fill(source.a, target.a);
    maps.phiB = fill(source.b, target.b);
    maps.phiC = fill(source.c, target.c);
    return maps;
}

const char* family_name(Family f) { return f == Family::M5 ? "M5" : (f == Family::M6 ? "M6" : "M9"); }

const ModuleBasis& EquationCache::m6_at_334() {
    static const ModuleBasis basis = make_module_basis("M6", Dims{3, 3, 4});
    return basis;
}

const ModuleBasis& EquationCache::m5_at_444() {
    static const ModuleBasis basis = make_module_basis("M5", Dims{4, 4, 4});
    return basis;
}

namespace {

// Gaussian elimination with partial pivoting and a relative threshold; only
// used in numeric mode.
int numeric_rank(std::vector<std::vector<double>> m, double tol) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    double scale = 0;
    for (const auto& row : m)
        for (double x : row) scale = std::max(scale, std::fabs(x));
    if (scale == 0) return 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        double best = tol * scale;
        for (int r = rank; r < rows; ++r)
            if (std::fabs(m[r][c]) > best) {
                best = std::fabs(m[r][c]);
                p = r;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        for (int r = rank + 1; r < rows; ++r) {
            const double f = m[r][c] / m[rank][c];
            for (int d = c; d < cols; ++d) m[r][d] -= f * m[rank][d];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<double>> psi_numeric(const Tensor3& t) {
    const Dims d = t.dims();
    PsiMatrix psi = build_psi(t);
    std::vector<std::vector<double>> m(3 * d.b, std::vector<double>(3 * d.c));
    for (int r = 0; r < 3 * d.b; ++r)
        for (int c = 0; c < 3 * d.c; ++c) m[r][c] = psi.mat.at(r, c).get_d();
    return m;
}

std::uint64_t trial_stream(Family family, int trial) {
    return 11ULL + 101ULL * static_cast<std::uint64_t>(family) + 7919ULL * static_cast<std::uint64_t>(trial);
}

}  // namespace

FamilyVerdict test_family(const Tensor3& t, Family family, int trials, std::uint64_t seed,
                          double numeric_tol) {
    const Dims s = t.dims();
    if (s.a < 3 || s.b < 3 || s.c < 3)
        throw input_error("family tests require a,b,c >= 3 (got dims " + s.str() + ")");
    if (trials < 1) throw input_error("family tests need at least one trial");

    FamilyVerdict verdict;
    verdict.trials = trials;

    if (family == Family::M5) {
        int big = (s.a >= 4) + (s.b >= 4) + (s.c >= 4);
        if (big <= 1) {
            verdict.status = FamilyVerdict::Status::Skipped;
            verdict.note =
                "M5 is identically zero on tensors spanning at most three dimensions in two factors; "
                "vacuously satisfied at dims " + s.str();
            return verdict;
        }
    }

    const Dims target = family == Family::M5 ? Dims{4, 4, 4} : Dims{3, 3, 4};
    const bool exact = t.exact();
    const ModuleBasis* basis = nullptr;
    if (family == Family::M5) basis = &EquationCache::m5_at_444();
    if (family == Family::M6) basis = &EquationCache::m6_at_334();

    // Numeric tensors are lifted entrywise for the multilinear contraction;
    // the tolerance only enters at evaluation time.
    Tensor3 lifted;
    if (!exact) {
        lifted = Tensor3(s);
        for (int i = 1; i <= s.a; ++i)
            for (int j = 1; j <= s.b; ++j)
                for (int k = 1; k <= s.c; ++k) lifted.at(i, j, k) = Rat(t.atd(i, j, k));
    }

    for (int trial = 0; trial < trials; ++trial) {
        CompressionMaps maps = random_compression(s, target, seed, trial_stream(family, trial));
        Tensor3 compressed = compress(exact ? t : lifted, maps);

        if (family == Family::M9) {
            if (exact) {
                const int rank = build_psi(compressed).mat.exact_rank();
                if (rank > 8) {
                    verdict.status = FamilyVerdict::Status::DoesNotVanish;
                    verdict.certain = true;
                    verdict.witness = {trial, "psi-rank", std::to_string(rank), std::move(maps)};
                    return verdict;
                }
            } else {
                const int rank = numeric_rank(psi_numeric(compressed), numeric_tol);
                if (rank > 8) {
                    verdict.status = FamilyVerdict::Status::DoesNotVanish;
                    verdict.certain = false;
                    verdict.witness = {trial, "psi-rank", std::to_string(rank), std::move(maps)};
                    verdict.note = "numeric mode: verdicts use tolerance, nothing is certain";
                    return verdict;
                }
            }
            continue;
        }

        const Tensor3 compressed_numeric = exact ? Tensor3() : compressed.to_numeric();
        for (std::size_t p = 0; p < basis->polys.size(); ++p) {
            if (exact) {
                const Rat value = evaluate(basis->polys[p], compressed);
                if (value != 0) {
                    verdict.status = FamilyVerdict::Status::DoesNotVanish;
                    verdict.certain = true;
                    verdict.witness = {trial, std::to_string(p), rat_to_string(value), std::move(maps)};
                    return verdict;
                }
            } else {
                const NumericEval ev = evaluate_numeric_scaled(basis->polys[p], compressed_numeric);
                const double value = ev.value;
                if (std::fabs(value) > numeric_tol * std::max(1.0, ev.magnitude)) {
                    verdict.status = FamilyVerdict::Status::DoesNotVanish;
                    verdict.certain = false;
                    verdict.witness = {trial, std::to_string(p), std::to_string(value), std::move(maps)};
                    verdict.note = "numeric mode: verdicts use tolerance, nothing is certain";
                    return verdict;
                }
            }
        }
    }
    verdict.status = FamilyVerdict::Status::Vanishes;
    verdict.certain = false;  // vanishing under random compressions is probabilistic
    if (!exact) verdict.note = "numeric mode: verdicts use tolerance, nothing is certain";
    return verdict;
}

MembershipReport border_rank_le4_test(const Tensor3& t, int trials, std::uint64_t seed, double numeric_tol) {
    const Dims s = t.dims();
    if (s.a < 3 || s.b < 3 || s.c < 3)
        throw input_error("border_rank_le4_test requires a,b,c >= 3 (got dims " + s.str() + ")");

    MembershipReport report;
    report.dims = s;
    report.mode = t.exact() ? "exact" : "numeric";
    report.seed = seed;
    report.trials = trials;

    if (t.exact()) {
        for (Factor f : {Factor::A, Factor::B, Factor::C})
            report.flattening_ranks[factor_index(f)] = flattening(t, f).exact_rank();
    } else {
        Tensor3 lifted(s);
        for (int i = 1; i <= s.a; ++i)
            for (int j = 1; j <= s.b; ++j)
                for (int k = 1; k <= s.c; ++k) lifted.at(i, j, k) = Rat(t.atd(i, j, k));
        for (Factor f : {Factor::A, Factor::B, Factor::C}) {
            RationalMatrix m = flattening(lifted, f);
            std::vector<std::vector<double>> dm(m.rows(), std::vector<double>(m.cols()));
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) dm[r][c] = m.at(r, c).get_d();
            report.flattening_ranks[factor_index(f)] = numeric_rank(dm, numeric_tol);
        }
    }
    // Sub_{4,4,4}: all 5x5 flattening minors vanish, i.e. every rank <= 4.
    report.sub444_pass = report.flattening_ranks[0] <= 4 && report.flattening_ranks[1] <= 4 &&
                         report.flattening_ranks[2] <= 4;

    report.m5 = test_family(t, Family::M5, trials, seed, numeric_tol);
    report.m6 = test_family(t, Family::M6, trials, seed, numeric_tol);
    report.m9 = test_family(t, Family::M9, trials, seed, numeric_tol);

    auto passes = [](const FamilyVerdict& v) { return v.status != FamilyVerdict::Status::DoesNotVanish; };
    report.in_zero_set = report.sub444_pass && passes(report.m5) && passes(report.m6) && passes(report.m9);
    return report;
}

Tensor3 friedland_point() {
    Tensor3 p(Dims{3, 3, 4});
    for (int k = 1; k <= 4; ++k) p.at(1, 1, k) = 1;
    p.at(2, 2, 1) = 1;
    p.at(2, 3, 2) = 1;
    p.at(3, 2, 3) = 1;
    p.at(3, 3, 4) = 1;
    return p;
}

}  // namespace salmon
