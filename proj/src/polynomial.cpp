#include "salmon/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace salmon {

void SparsePolynomial::finalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return Monomial::compare(x.mono, y.mono) < 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    }
    terms_ = std::move(merged);

    degree_ = 0;
    multidegree_.reset();
    if (terms_.empty()) return;
    for (const auto& t : terms_) degree_ = std::max(degree_, t.mono.degree());
    MultiDegree md = terms_.front().mono.multidegree(dims_);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].mono.multidegree(dims_) != md) return;
    multidegree_ = std::move(md);
}

SparsePolynomial SparsePolynomial::from_terms(Dims dims, std::vector<Term> terms) {
    SparsePolynomial p(dims);
    p.terms_ = std::move(terms);
    p.finalize();
    return p;
}

SparsePolynomial SparsePolynomial::variable(Dims dims, VariableIndex v) {
    return from_terms(dims, {{Monomial::from_variables({v}), Int(1)}});
}

SparsePolynomial SparsePolynomial::constant(Dims dims, Int c) {
    if (c == 0) return SparsePolynomial(dims);
    return from_terms(dims, {{Monomial(), std::move(c)}});
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
    SALMON_CHECK(dims_ == rhs.dims_, "polynomial sum dims mismatch");
    std::vector<Term> terms = terms_;
    terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
    return from_terms(dims_, std::move(terms));
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const { return *this + (-rhs); }

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
    SALMON_CHECK(dims_ == rhs.dims_, "polynomial product dims mismatch");
    std::vector<Term> terms;
    terms.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& x : terms_)
        for (const auto& y : rhs.terms_) {
            auto vars = x.mono.expand();
            auto more = y.mono.expand();
            vars.insert(vars.end(), more.begin(), more.end());
            terms.push_back({Monomial::from_variables(std::move(vars)), x.coeff * y.coeff});
        }
    return from_terms(dims_, std::move(terms));
}

SparsePolynomial SparsePolynomial::scaled(const Int& s) const {
    if (s == 0) return SparsePolynomial(dims_);
    SparsePolynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= s;
    return p;
}

bool SparsePolynomial::equal_up_to_sign(const SparsePolynomial& p, const SparsePolynomial& q) {
    if (p == q) return true;
    if (p.terms_.size() != q.terms_.size() || p.dims_ != q.dims_) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
        if (p.terms_[i].mono != q.terms_[i].mono || p.terms_[i].coeff != -q.terms_[i].coeff) return false;
    return true;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += t.coeff.get_str();
        if (!t.mono.empty()) s += "*" + t.mono.str();
    }
    return s;
}

SparsePolynomial canonicalize(const SparsePolynomial& p) {
    if (p.is_zero()) return p;
    Int content = 0;
    for (const auto& t : p.terms()) {
        content = gcd(content, t.coeff);
        if (content == 1) break;
    }
    SparsePolynomial out = p;
    const bool flip = sgn(out.terms_.front().coeff) < 0;
    for (auto& t : out.terms_) {
        t.coeff /= content;
        if (flip) t.coeff = -t.coeff;
    }
    return out;
}

MultiDegree multidegree_of(const Monomial& m, const Dims& dims) { return m.multidegree(dims); }

namespace {

void check_in_range(const SparsePolynomial& p, const Dims& d) {
    for (const auto& t : p.terms())
        for (const auto& [v, e] : t.mono.entries())
            if (!v.in_range(d))
                throw input_error("variable " + v.str() + " out of range for tensor dims " + d.str());
}

}  // namespace

Rat evaluate(const SparsePolynomial& p, const Tensor3& t) {
    SALMON_CHECK(t.exact(), "exact evaluation requires an exact-mode tensor");
    check_in_range(p, t.dims());
    bool integral = true;
    for (const auto& q : t.exact_entries())
        if (q.get_den() != 1) {
            integral = false;
            break;
        }
    if (integral) {
        // Integer fast path: everything stays in mpz.
        std::vector<Int> val(t.exact_entries().size());
        for (std::size_t i = 0; i < val.size(); ++i) val[i] = t.exact_entries()[i].get_num();
        Int acc = 0, term;
        for (const auto& tm : p.terms()) {
            term = tm.coeff;
            for (const auto& [v, e] : tm.mono.entries()) {
                const Int& x = val[t.offset(v.i, v.j, v.k)];
                for (int r = 0; r < e; ++r) term *= x;
            }
            acc += term;
        }
        return Rat(acc);
    }
    Rat acc = 0, term;
    for (const auto& tm : p.terms()) {
        term = Rat(tm.coeff);
        for (const auto& [v, e] : tm.mono.entries()) {
            const Rat& x = t.at(v.i, v.j, v.k);
            for (int r = 0; r < e; ++r) term *= x;
        }
        acc += term;
    }
    return acc;
}

double evaluate_numeric(const SparsePolynomial& p, const Tensor3& t) {
    return evaluate_numeric_scaled(p, t).value;
}

NumericEval evaluate_numeric_scaled(const SparsePolynomial& p, const Tensor3& t) {
    check_in_range(p, t.dims());
    auto entry = [&](const VariableIndex& v) {
        return t.exact() ? t.at(v.i, v.j, v.k).get_d() : t.atd(v.i, v.j, v.k);
    };
    NumericEval out;
    for (const auto& tm : p.terms()) {
        double term = tm.coeff.get_d();
        for (const auto& [v, e] : tm.mono.entries()) {
            const double x = entry(v);
            for (int r = 0; r < e; ++r) term *= x;
        }
        out.value += term;
        out.magnitude += std::fabs(term);
    }
    return out;
}

SparsePolynomial substitute_indices(const SparsePolynomial& p, Factor f, const std::vector<int>& map) {
    const int dim = p.dims().factor(factor_index(f));
    SALMON_CHECK(static_cast<int>(map.size()) == dim, "index map length must equal the factor dimension");
    std::vector<SparsePolynomial::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        std::vector<VariableIndex> vars = t.mono.expand();
        for (auto& v : vars) {
            const int old = v.index(f);
            const int nv = map[old - 1];
            if (nv < 1 || nv > dim)
                throw input_error(std::string("index map not total: factor ") + factor_name(f) + " index " +
                                  std::to_string(old) + " has no image");
            v = v.with_index(f, nv);
        }
        terms.push_back({Monomial::from_variables(std::move(vars)), t.coeff});
    }
    return SparsePolynomial::from_terms(p.dims(), std::move(terms));
}

SparsePolynomial lowering_operator(const SparsePolynomial& p, Factor f, int from, int to) {
    const int dim = p.dims().factor(factor_index(f));
    if (from == to || from < 1 || from > dim || to < 1 || to > dim)
        throw input_error(std::string("lowering operator needs two distinct indices within factor ") +
                          factor_name(f));
    std::vector<SparsePolynomial::Term> terms;
    for (const auto& t : p.terms()) {
        const auto& entries = t.mono.entries();
        for (std::size_t pos = 0; pos < entries.size(); ++pos) {
            const auto& [v, e] = entries[pos];
            if (v.index(f) != from) continue;
            std::vector<VariableIndex> vars;
            vars.reserve(t.mono.degree());
            for (std::size_t q = 0; q < entries.size(); ++q) {
                int reps = entries[q].second - (q == pos ? 1 : 0);
                for (int r = 0; r < reps; ++r) vars.push_back(entries[q].first);
            }
            vars.push_back(v.with_index(f, to));
            terms.push_back({Monomial::from_variables(std::move(vars)), t.coeff * e});
        }
    }
    return SparsePolynomial::from_terms(p.dims(), std::move(terms));
}

bool is_highest_weight(const SparsePolynomial& p) {
    for (Factor f : {Factor::A, Factor::B, Factor::C}) {
        const int dim = p.dims().factor(factor_index(f));
        for (int to = 1; to < dim; ++to)
            for (int from = to + 1; from <= dim; ++from)
                if (!lowering_operator(p, f, from, to).is_zero()) return false;
    }
    return true;
}

PolyBuilder::PolyBuilder(Dims dims, int degree)
    : dims_(dims), degree_(degree), packed_(packable(dims, degree)) {}

void PolyBuilder::add_packed(PackedMonomial key, long long coeff) {
    SALMON_CHECK(packed_, "add_packed on a non-packed builder");
    fast_[key] += coeff;
}

void PolyBuilder::add(const Monomial& m, const Int& coeff) {
    if (packed_) {
        SALMON_CHECK(m.degree() == degree_, "packed builder requires homogeneous degree");
        fast_big_[pack_monomial(m)] += coeff;
    } else {
        slow_.emplace_back(m, coeff);
    }
}

void PolyBuilder::add_scaled(const SparsePolynomial& p, const Int& scale) {
    for (const auto& t : p.terms()) add(t.mono, t.coeff * scale);
}

void PolyBuilder::merge(const PolyBuilder& other) {
    SALMON_CHECK(packed_ == other.packed_ && degree_ == other.degree_, "merging incompatible builders");
    for (const auto& [k, c] : other.fast_) fast_[k] += c;
    for (const auto& [k, c] : other.fast_big_) fast_big_[k] += c;
    slow_.insert(slow_.end(), other.slow_.begin(), other.slow_.end());
}

SparsePolynomial PolyBuilder::build_raw() const {
    std::vector<SparsePolynomial::Term> terms;
    if (packed_) {
        std::unordered_map<PackedMonomial, Int> sum;
        for (const auto& [k, c] : fast_)
            if (c != 0) sum[k] += Int(static_cast<long>(c));
        for (const auto& [k, c] : fast_big_)
            if (c != 0) sum[k] += c;
        terms.reserve(sum.size());
        for (const auto& [k, c] : sum) {
            if (c == 0) continue;
            terms.push_back({unpack_monomial(k, degree_), c});
        }
    } else {
        terms.reserve(slow_.size());
        for (const auto& [m, c] : slow_) terms.push_back({m, c});
    }
    return SparsePolynomial::from_terms(dims_, std::move(terms));
}

SparsePolynomial PolyBuilder::build_canonical() const { return canonicalize(build_raw()); }

}  // namespace salmon
