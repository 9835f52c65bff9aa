#include "lieb/rational.hpp"

#include <cctype>

#include "lieb/errors.hpp"

namespace lieb {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };

    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    std::string digits = num;
    if (!digits.empty() && digits.front() == '-') digits.erase(0, 1);
    if (!is_digits(digits) || !is_digits(den))
        throw parse_error("invalid rational literal: \"" + s + "\"");

    Rational q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0)
        throw parse_error("invalid rational literal (zero denominator): \"" + s + "\"");
    q.canonicalize();
    return q;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec basis_vec(std::size_t n, BasisIndex k) {
    Vec v = zero_vec(n);
    v.at(k - 1) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
    Vec out = zero_vec(n);
    for (const auto& [k, c] : v) out.at(k - 1) = c;
    return out;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (std::size_t t = 0; t < v.size(); ++t)
        if (v[t] != 0) out[t + 1] = v[t];
    return out;
}

void add_scaled(SparseVec& acc, const Rational& c, const SparseVec& v) {
    if (c == 0) return;
    for (const auto& [k, x] : v) {
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, c * x);
        } else {
            it->second += c * x;
            if (it->second == 0) acc.erase(it);
        }
    }
}

std::string to_string(const Vec& v) {
    std::string out = "[";
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) out += ", ";
        out += to_string(v[t]);
    }
    out += "]";
    return out;
}

} // namespace lieb
