#include "lieb/cochain.hpp"

#include <utility>

#include "lieb/errors.hpp"

namespace lieb {

Cochain2::Cochain2(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw dimension_error("dimension must be positive");
}

void Cochain2::check_indices(BasisIndex i, BasisIndex j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_)
        throw dimension_error("basis index out of range");
    if (i == j) throw dimension_error("diagonal pair (i, i) is identically zero");
}

void Cochain2::set(BasisIndex i, BasisIndex j, SparseVec value) {
    check_indices(i, j);
    Rational sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    SparseVec v;
    for (const auto& [k, c] : value) {
        if (k < 1 || k > dim_) throw dimension_error("target index out of range");
        if (c != 0) v[k] = sign * c;
    }
    if (v.empty())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(v);
}

void Cochain2::add_term(BasisIndex i, BasisIndex j, BasisIndex k, const Rational& c) {
    check_indices(i, j);
    if (k < 1 || k > dim_) throw dimension_error("target index out of range");
    if (c == 0) return;
    Rational sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    SparseVec& v = entries_[{i, j}];
    auto it = v.find(k);
    if (it == v.end()) {
        v.emplace(k, sign * c);
    } else {
        it->second += sign * c;
        if (it->second == 0) v.erase(it);
    }
    if (v.empty()) entries_.erase({i, j});
}

SparseVec Cochain2::basis_value(BasisIndex i, BasisIndex j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_)
        throw dimension_error("basis index out of range");
    SparseVec out;
    if (i == j) return out;
    accumulate(out, 1, SparseVec{{i, Rational(1)}}, j);
    return out;
}

void Cochain2::accumulate(SparseVec& acc, const Rational& c, const SparseVec& v,
                          BasisIndex j) const {
    if (c == 0) return;
    for (const auto& [i, x] : v) {
        if (i == j) continue;
        auto it = i < j ? entries_.find({i, j}) : entries_.find({j, i});
        if (it == entries_.end()) continue;
        Rational coef = c * x;
        if (i > j) coef = -coef;
        add_scaled(acc, coef, it->second);
    }
}

Vec Cochain2::apply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw dimension_error("vector length does not match the algebra dimension");
    SparseVec acc;
    for (const auto& [pair, v] : entries_) {
        auto [i, j] = pair;
        Rational coef = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
        add_scaled(acc, coef, v);
    }
    return to_dense(acc, dim_);
}

Cochain2 Cochain2::scaled(const Rational& t) const {
    Cochain2 out(dim_);
    if (t == 0) return out;
    for (const auto& [pair, v] : entries_) {
        SparseVec sv;
        for (const auto& [k, c] : v) sv[k] = t * c;
        out.entries_[pair] = std::move(sv);
    }
    return out;
}

Cochain2 Cochain2::plus(const Cochain2& other) const {
    if (other.dim_ != dim_) throw dimension_error("cochain dimensions differ");
    Cochain2 out = *this;
    for (const auto& [pair, v] : other.entries_) {
        SparseVec& target = out.entries_[pair];
        add_scaled(target, 1, v);
        if (target.empty()) out.entries_.erase(pair);
    }
    return out;
}

MultiMap as_multimap(const Cochain2& c) {
    return {c.dim(), 2, [c](const std::vector<BasisIndex>& t) {
                return c.basis_value(t[0], t[1]);
            }};
}

MultiMap bullet(const Cochain2& a, const Cochain2& b) {
    if (a.dim() != b.dim()) throw dimension_error("cochain dimensions differ");
    return {a.dim(), 3, [a, b](const std::vector<BasisIndex>& t) {
                SparseVec acc;
                a.accumulate(acc, 1, b.basis_value(t[0], t[1]), t[2]);
                a.accumulate(acc, 1, b.basis_value(t[1], t[2]), t[0]);
                a.accumulate(acc, 1, b.basis_value(t[2], t[0]), t[1]);
                return acc;
            }};
}

MultiMap comp1(const MultiMap& a, const Cochain2& b) {
    if (a.dim != b.dim()) throw dimension_error("cochain dimensions differ");
    std::size_t arity = a.arity + 1;
    return {a.dim, arity, [a, b](const std::vector<BasisIndex>& t) {
                SparseVec inner = b.basis_value(t[0], t[1]);
                SparseVec acc;
                std::vector<BasisIndex> rest(t.begin() + 1, t.end());
                for (const auto& [m, c] : inner) {
                    rest[0] = m;
                    add_scaled(acc, c, a.eval(rest));
                }
                return acc;
            }};
}

MultiMap comp1(const Cochain2& a, const Cochain2& b) { return comp1(as_multimap(a), b); }

MultiMap sum(MultiMap a, MultiMap b) {
    if (a.dim != b.dim || a.arity != b.arity)
        throw dimension_error("multimap shapes differ");
    return {a.dim, a.arity,
            [a = std::move(a), b = std::move(b)](const std::vector<BasisIndex>& t) {
                SparseVec acc = a.eval(t);
                add_scaled(acc, 1, b.eval(t));
                return acc;
            }};
}

MultiMap delta_C(const Cochain2& mu0, const Cochain2& phi) {
    return sum(bullet(mu0, phi), bullet(phi, mu0));
}

namespace {

// Left-normed word c1 o1 c2 o1 ... o1 ck evaluated on a basis tuple: the last
// letter consumes (t0, t1), every earlier letter consumes the running value
// and the next tuple slot.
SparseVec eval_word(const std::vector<const Cochain2*>& letters,
                    const std::vector<BasisIndex>& t) {
    SparseVec v = letters.back()->basis_value(t[0], t[1]);
    std::size_t arg = 2;
    for (std::size_t i = letters.size() - 1; i-- > 0;) {
        if (v.empty()) return v;
        SparseVec next;
        letters[i]->accumulate(next, 1, v, t[arg++]);
        v = std::move(next);
    }
    return v;
}

} // namespace

MultiMap degree_component(const Cochain2& mu0, const Cochain2& phi, std::size_t k,
                          std::size_t d) {
    if (mu0.dim() != phi.dim()) throw dimension_error("cochain dimensions differ");
    if (k < 1 || d > k) throw dimension_error("bad word length or degree");

    // All length-k letter patterns with d copies of phi.
    std::vector<std::vector<const Cochain2*>> words;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != d) continue;
        std::vector<const Cochain2*> letters(k);
        for (std::size_t b = 0; b < k; ++b)
            letters[b] = (mask >> b) & 1 ? &phi : &mu0;
        words.push_back(std::move(letters));
    }

    return {mu0.dim(), k + 1,
            [words = std::move(words)](const std::vector<BasisIndex>& t) {
                SparseVec acc;
                for (const auto& w : words) add_scaled(acc, 1, eval_word(w, t));
                return acc;
            }};
}

MultiMap delta_R(const Cochain2& mu0, const Cochain2& phi, std::size_t k) {
    if (k < 2) throw dimension_error("delta_R needs word length >= 2");
    return degree_component(mu0, phi, k, 1);
}

namespace {

void walk_words(const Cochain2& mu0, const Cochain2& phi, const std::vector<BasisIndex>& t,
                std::size_t k, const SparseVec& v, std::size_t used, std::size_t arg,
                std::vector<SparseVec>& out) {
    if (v.empty()) return;
    if (arg == k + 1) {
        add_scaled(out[used], 1, v);
        return;
    }
    SparseVec vm;
    mu0.accumulate(vm, 1, v, t[arg]);
    walk_words(mu0, phi, t, k, vm, used, arg + 1, out);
    SparseVec vp;
    phi.accumulate(vp, 1, v, t[arg]);
    walk_words(mu0, phi, t, k, vp, used + 1, arg + 1, out);
}

} // namespace

std::vector<SparseVec> degree_values(const Cochain2& mu0, const Cochain2& phi, std::size_t k,
                                     const std::vector<BasisIndex>& t) {
    if (mu0.dim() != phi.dim()) throw dimension_error("cochain dimensions differ");
    if (t.size() != k + 1) throw dimension_error("tuple arity must be k + 1");
    std::vector<SparseVec> out(k + 1);
    walk_words(mu0, phi, t, k, mu0.basis_value(t[0], t[1]), 0, 2, out);
    walk_words(mu0, phi, t, k, phi.basis_value(t[0], t[1]), 1, 2, out);
    return out;
}

namespace {

template <typename F>
void for_each_tuple(std::size_t dim, std::size_t arity, F&& f) {
    std::vector<BasisIndex> t(arity, 1);
    while (true) {
        if (!f(t)) return;
        std::size_t pos = arity;
        while (pos > 0) {
            if (t[pos - 1] < dim) {
                ++t[pos - 1];
                break;
            }
            t[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) return;
    }
}

} // namespace

bool is_identically_zero(const MultiMap& m) {
    bool zero = true;
    for_each_tuple(m.dim, m.arity, [&](const std::vector<BasisIndex>& t) {
        if (!m.eval(t).empty()) {
            zero = false;
            return false;
        }
        return true;
    });
    return zero;
}

std::vector<TupleFailure> nonzero_tuples(const MultiMap& m, std::size_t cap, std::size_t& total) {
    std::vector<TupleFailure> out;
    total = 0;
    for_each_tuple(m.dim, m.arity, [&](const std::vector<BasisIndex>& t) {
        SparseVec v = m.eval(t);
        if (!v.empty()) {
            ++total;
            if (out.size() < cap) out.push_back({t, std::move(v)});
        }
        return true;
    });
    return out;
}

} // namespace lieb
