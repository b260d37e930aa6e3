#include "salmon/geometry.hpp"

#include "salmon/parallel.hpp"
#include "salmon/rng.hpp"

namespace salmon {

namespace {

std::vector<Rat> random_vector(Rng& rng, int n, long long lo = -100, long long hi = 100) {
    std::vector<Rat> v(n);
    for (int t = 0; t < n; ++t) v[t] = Rat(rng.uniform_int(lo, hi));
    return v;
}

}  // namespace

SecantSample sample_secant(int r, const Dims& dims, std::uint64_t seed) {
    if (r < 1) throw input_error("secant sample needs r >= 1");
    Rng rng = Rng::derive(seed, 1);
    SecantSample s;
    s.dims = dims;
    s.r = r;
    s.seed = seed;
    for (int t = 0; t < r; ++t)
        s.factors.push_back({random_vector(rng, dims.a), random_vector(rng, dims.b), random_vector(rng, dims.c)});
    s.tensor = assemble(dims, s.factors);
    return s;
}

SubspaceSample sample_subspace(const Dims& target, const Dims& dims, std::uint64_t seed) {
    if (target.a > dims.a || target.b > dims.b || target.c > dims.c)
        throw input_error("subspace target " + target.str() + " exceeds ambient dims " + dims.str());
    Rng rng = Rng::derive(seed, 2);
    SubspaceSample s;
    s.dims = dims;
    s.target = target;
    s.seed = seed;
    s.core = Tensor3(target);
    for (int i = 1; i <= target.a; ++i)
        for (int j = 1; j <= target.b; ++j)
            for (int k = 1; k <= target.c; ++k) s.core.at(i, j, k) = Rat(rng.uniform_int(-100, 100));
    for (int f = 0; f < 3; ++f) {
        s.inclusions[f] = RationalMatrix(dims.factor(f), target.factor(f));
        for (int r = 0; r < dims.factor(f); ++r)
            for (int c = 0; c < target.factor(f); ++c) s.inclusions[f].at(r, c) = Rat(rng.uniform_int(-100, 100));
    }
    s.tensor = Tensor3(dims);
    for (int i = 1; i <= dims.a; ++i)
        for (int j = 1; j <= dims.b; ++j)
            for (int k = 1; k <= dims.c; ++k) {
                Rat sum = 0;
                for (int p = 1; p <= target.a; ++p)
                    for (int q = 1; q <= target.b; ++q) {
                        const Rat ab = s.inclusions[0].at(i - 1, p - 1) * s.inclusions[1].at(j - 1, q - 1);
                        if (ab == 0) continue;
                        for (int t = 1; t <= target.c; ++t)
                            sum += ab * s.inclusions[2].at(k - 1, t - 1) * s.core.at(p, q, t);
                    }
                s.tensor.at(i, j, k) = sum;
            }
    return s;
}

Tensor3 sample_generic(const Dims& dims, std::uint64_t seed) {
    Rng rng = Rng::derive(seed, 3);
    Tensor3 t(dims);
    for (int i = 1; i <= dims.a; ++i)
        for (int j = 1; j <= dims.b; ++j)
            for (int k = 1; k <= dims.c; ++k) t.at(i, j, k) = Rat(rng.uniform_int(-100, 100));
    return t;
}

int terracini_dim(int r, const Dims& dims, std::uint64_t seed) {
    if (r < 1) throw input_error("terracini_dim needs r >= 1");
    const SecantSample s = sample_secant(r, dims, seed);
    // Affine Jacobian of (a_1,b_1,c_1,...) -> sum a_i (x) b_i (x) c_i: for
    // each summand, columns da (x) b (x) c, a (x) db (x) c, a (x) b (x) dc.
    const int cols = r * (dims.a + dims.b + dims.c);
    RationalMatrix jac(static_cast<int>(dims.size()), cols);
    int col = 0;
    for (int t = 0; t < r; ++t) {
        const auto& f = s.factors[t];
        for (int p = 1; p <= dims.a; ++p, ++col)
            for (int j = 1; j <= dims.b; ++j)
                for (int k = 1; k <= dims.c; ++k)
                    jac.at(s.tensor.offset(p, j, k), col) = f.b[j - 1] * f.c[k - 1];
        for (int q = 1; q <= dims.b; ++q, ++col)
            for (int i = 1; i <= dims.a; ++i)
                for (int k = 1; k <= dims.c; ++k)
                    jac.at(s.tensor.offset(i, q, k), col) = f.a[i - 1] * f.c[k - 1];
        for (int w = 1; w <= dims.c; ++w, ++col)
            for (int i = 1; i <= dims.a; ++i)
                for (int j = 1; j <= dims.b; ++j)
                    jac.at(s.tensor.offset(i, j, w), col) = f.a[i - 1] * f.b[j - 1];
    }
    return jac.exact_rank() - 1;
}

int subspace_dim(const Dims& target, const Dims& dims) {
    if (target.a > dims.a || target.b > dims.b || target.c > dims.c)
        throw input_error("subspace target " + target.str() + " exceeds ambient dims " + dims.str());
    int d = target.a * target.b * target.c - 1;
    for (int f = 0; f < 3; ++f) d += (dims.factor(f) - target.factor(f)) * target.factor(f);
    return d;
}

int ScanResult::vanishing_count() const {
    int n = 0;
    for (const auto& c : components)
        if (c.vanishing) ++n;
    return n;
}

ScanResult ideal_scan(int degree, const Dims& dims, int sample_count, std::uint64_t seed, int degree_cap) {
    if (sample_count < 1) throw input_error("ideal_scan needs at least one sample");
    if (degree > degree_cap)
        throw input_error("scan degree " + std::to_string(degree) + " exceeds the cost guard " +
                          std::to_string(degree_cap) + "; raise --degree-cap to override");
    ScanResult result;
    result.degree = degree;
    result.dims = dims;
    result.sample_count = sample_count;
    result.seed = seed;

    const auto decomposition = isotypic_decomposition(degree, dims, degree_cap);
    for (const auto& comp : decomposition)
        if (comp.multiplicity > sample_count)
            throw input_error("component " + comp.triple[0].str() + " x " + comp.triple[1].str() + " x " +
                              comp.triple[2].str() + " has multiplicity " + comp.multiplicity.get_str() +
                              " > samples " + std::to_string(sample_count) +
                              "; raise --samples or the kernel verdict would be vacuous");
    std::vector<Tensor3> samples;
    samples.reserve(sample_count);
    for (int t = 0; t < sample_count; ++t)
        samples.push_back(sample_secant(result.secant_rank, dims, seed + 1000003ULL * t).tensor);

    result.components.resize(decomposition.size());
    parallel_for(decomposition.size(), [&](std::size_t at) {
        const IsotypicComponent& comp = decomposition[at];
        ScanComponent out;
        out.triple = comp.triple;
        out.multiplicity = comp.multiplicity;
        out.component_dim = comp.component_dim;

        HwvSpace space = hwv_space_spanning(comp.triple, dims, comp.multiplicity, seed);
        out.hwv_provenance = space.provenance;

        const int m = static_cast<int>(space.polys.size());
        RationalMatrix evals(m, sample_count);
        for (int row = 0; row < m; ++row)
            for (int colt = 0; colt < sample_count; ++colt)
                evals.at(row, colt) = evaluate(space.polys[row], samples[colt]);
        out.kernel_dim = m - evals.exact_rank();
        out.vanishing = out.kernel_dim > 0;
        result.components[at] = std::move(out);
    });
    return result;
}

}  // namespace salmon
