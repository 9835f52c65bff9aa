#include "lieb/invariants.hpp"

#include <algorithm>
#include <random>

#include "lieb/errors.hpp"

namespace lieb {

bool lex_less(const JordanType& a, const JordanType& b) {
    std::size_t len = std::max(a.parts.size(), b.parts.size());
    for (std::size_t t = 0; t < len; ++t) {
        std::size_t x = t < a.parts.size() ? a.parts[t] : 0;
        std::size_t y = t < b.parts.size() ? b.parts[t] : 0;
        if (x != y) return x < y;
    }
    return false;
}

std::string to_string(const JordanType& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t.parts[i]);
    }
    out += ")";
    return out;
}

JordanType jordan_type_of(const LieAlgebra& g, const Vec& x) {
    return {jordan_type_from_profile(rank_profile(ad_matrix(g, x)))};
}

namespace {

// Deterministic sample stream: basis vectors, pairwise sums, seeded randoms.
class SampleStream {
public:
    SampleStream(std::size_t n, const SamplingConfig& cfg)
        : n_(n), cfg_(cfg), rng_(cfg.seed) {}

    // Returns false when exhausted.
    bool next(Vec& out) {
        if (i_ <= n_) {
            out = basis_vec(n_, i_++);
            return true;
        }
        if (n_ >= 2 && p_ <= n_ - 1) {
            out = basis_vec(n_, p_);
            out[q_ - 1] = 1;
            if (++q_ > n_) {
                ++p_;
                q_ = p_ + 1;
            }
            return true;
        }
        if (drawn_ < cfg_.samples) {
            ++drawn_;
            out = random_vec();
            return true;
        }
        return false;
    }

    Vec random_vec() {
        Vec v = zero_vec(n_);
        long bound = std::max(0L, cfg_.bound);
        unsigned long span = 2 * static_cast<unsigned long>(bound) + 1;
        for (std::size_t t = 0; t < n_; ++t) {
            long e = static_cast<long>(rng_() % span) - bound;
            v[t] = e;
        }
        return v;
    }

private:
    std::size_t n_;
    SamplingConfig cfg_;
    std::mt19937_64 rng_;
    BasisIndex i_ = 1;          // basis cursor
    BasisIndex p_ = 1, q_ = 2;  // pair-sum cursor, 1-based, p < q
    std::size_t drawn_ = 0;
};

} // namespace

BreadthCertificate breadth(const LieAlgebra& g, const SamplingConfig& cfg) {
    BreadthCertificate cert;
    cert.seed = cfg.seed;
    cert.witness = zero_vec(g.dim());

    SampleStream stream(g.dim(), cfg);
    Vec x;
    while (stream.next(x)) {
        ++cert.samples_tried;
        std::size_t r = rank(ad_matrix(g, x));
        if (r > cert.breadth || cert.samples_tried == 1) {
            cert.breadth = r;
            cert.witness = x;
        }
    }
    return cert;
}

BreadthCertificate breadth_on_ideal(const LieAlgebra& g, const Subspace& ideal,
                                    const SamplingConfig& cfg) {
    if (!is_ideal(g, ideal))
        throw not_an_ideal_error("subspace is not an ideal of " + g.name());

    BreadthCertificate cert;
    cert.seed = cfg.seed;
    cert.witness = zero_vec(g.dim());

    SampleStream stream(g.dim(), cfg);
    Vec x;
    while (stream.next(x)) {
        ++cert.samples_tried;
        std::vector<Vec> cols;
        for (const Vec& b : ideal.basis()) cols.push_back(g.bracket(x, b));
        std::size_t r = rank(Matrix::from_cols(cols, g.dim()));
        if (r > cert.breadth || cert.samples_tried == 1) {
            cert.breadth = r;
            cert.witness = x;
        }
    }
    return cert;
}

CharacteristicSequence characteristic_sequence(const LieAlgebra& g, const SamplingConfig& cfg) {
    const std::size_t n = g.dim();
    Subspace derived = derived_subalgebra(g);
    if (derived.dim() == n)
        throw empty_sample_error("derived subalgebra is the whole algebra; no sample space");

    CharacteristicSequence best;
    bool have = false;

    SampleStream stream(n, cfg);
    Vec x;
    std::size_t redraws = 0;
    const std::size_t max_redraws = 100 * (cfg.samples + 1);
    while (stream.next(x)) {
        // Samples inside C^1 do not qualify; random ones are redrawn.
        while (derived.contains(x) && redraws < max_redraws) {
            ++redraws;
            x = stream.random_vec();
        }
        if (derived.contains(x)) continue;
        JordanType t = jordan_type_of(g, x);
        if (!have || lex_less(best.parts, t)) {
            best = {t, x};
            have = true;
        }
    }
    if (!have) throw empty_sample_error("no sample outside the derived subalgebra");
    return best;
}

std::size_t breadth_from_sequence(const JordanType& t) {
    if (t.parts.empty()) throw empty_sequence_error("empty characteristic sequence");
    std::size_t b = 0;
    for (std::size_t p : t.parts) b += p - 1;
    return b;
}

TheoremReport verify_theorem_b(const LieAlgebra& g, const SamplingConfig& cfg) {
    TheoremReport rep;
    rep.breadth_value = breadth(g, cfg).breadth;
    rep.sequence = characteristic_sequence(g, cfg).parts;
    rep.breadth_from_seq = breadth_from_sequence(rep.sequence);
    rep.formula_match = rep.breadth_value == rep.breadth_from_seq;

    std::size_t z = center(g).dim();
    if (z < g.dim()) {
        rep.bound_checked = true;
        rep.bound = g.dim() - z - 1;
        rep.bound_ok = rep.breadth_value <= rep.bound;
    }
    return rep;
}

std::string to_string(BreadthTwoClass c) {
    switch (c) {
        case BreadthTwoClass::TwoStep22: return "2-step, c=(2,2,1,...,1)";
        case BreadthTwoClass::ThreeStep31: return "3-step, c=(3,1,...,1)";
        case BreadthTwoClass::NotBreadth2: return "breadth != 2";
    }
    return "?";
}

BreadthTwoClass classify_b2(const LieAlgebra& g, const SamplingConfig& cfg) {
    if (breadth(g, cfg).breadth != 2) return BreadthTwoClass::NotBreadth2;

    JordanType seq = characteristic_sequence(g, cfg).parts;
    auto rest_ones = [&](std::size_t from) {
        for (std::size_t t = from; t < seq.parts.size(); ++t)
            if (seq.parts[t] != 1) return false;
        return true;
    };
    if (seq.parts.size() >= 2 && seq.parts[0] == 2 && seq.parts[1] == 2 && rest_ones(2))
        return BreadthTwoClass::TwoStep22;
    if (!seq.parts.empty() && seq.parts[0] == 3 && rest_ones(1))
        return BreadthTwoClass::ThreeStep31;
    throw theorem_violation("breadth 2 with characteristic sequence " + to_string(seq) +
                            " on " + g.name());
}

} // namespace lieb
