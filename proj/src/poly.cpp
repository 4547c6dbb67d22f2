#include "stairtab/poly.hpp"

#include <stdexcept>

namespace stairtab {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow in addition");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow in multiplication");
    return out;
}

namespace {

int checked_exp_add(int a, int b) {
    int out;
    if (__builtin_add_overflow(a, b, &out) || out < 0)
        throw std::overflow_error("exponent overflow");
    return out;
}

long long checked_pow(long long base, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

}  // namespace

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int num_vars, long long c) {
    MultiPoly p(num_vars);
    p.add_term(ExponentKey{std::vector<int>(num_vars, 0), 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::monomial(int num_vars, ExponentKey e, long long c) {
    MultiPoly p(num_vars);
    p.add_term(std::move(e), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int i) {
    if (i < 1 || i > num_vars)
        throw std::invalid_argument("MultiPoly::variable: index outside [1, num_vars]");
    std::vector<int> x(num_vars, 0);
    x[i - 1] = 1;
    return monomial(num_vars, ExponentKey{std::move(x), 0, 0}, 1);
}

long long MultiPoly::coefficient(const ExponentKey& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(ExponentKey e, long long c) {
    if (static_cast<int>(e.x.size()) != num_vars_)
        throw std::invalid_argument("MultiPoly::add_term: exponent width does not match");
    if (e.t < 0 || e.r < 0)
        throw std::invalid_argument("MultiPoly::add_term: negative t/r exponent");
    for (int v : e.x)
        if (v < 0) throw std::invalid_argument("MultiPoly::add_term: negative x exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.num_vars_ != num_vars_)
        throw std::invalid_argument("MultiPoly: mixed variable counts in addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_)
        throw std::invalid_argument("MultiPoly: mixed variable counts in multiplication");
    MultiPoly out(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExponentKey e = ea;
            for (int i = 0; i < a.num_vars_; ++i) e.x[i] = checked_exp_add(e.x[i], eb.x[i]);
            e.t = checked_exp_add(e.t, eb.t);
            e.r = checked_exp_add(e.r, eb.r);
            out.add_term(std::move(e), checked_mul(ca, cb));
        }
    return out;
}

MultiPoly MultiPoly::scaled(long long c) const {
    MultiPoly out(num_vars_);
    for (const auto& [e, coeff] : terms_) out.add_term(e, checked_mul(coeff, c));
    return out;
}

MultiPoly MultiPoly::swapped_tr() const {
    MultiPoly out(num_vars_);
    for (const auto& [e, c] : terms_) out.add_term(ExponentKey{e.x, e.r, e.t}, c);
    return out;
}

MultiPoly MultiPoly::at_t_r_one() const {
    MultiPoly out(num_vars_);
    for (const auto& [e, c] : terms_) out.add_term(ExponentKey{e.x, 0, 0}, c);
    return out;
}

MultiPoly MultiPoly::with_x_swapped(int i, int j) const {
    if (i < 1 || i > num_vars_ || j < 1 || j > num_vars_)
        throw std::invalid_argument("MultiPoly::with_x_swapped: index outside [1, num_vars]");
    MultiPoly out(num_vars_);
    for (const auto& [e, c] : terms_) {
        ExponentKey k = e;
        std::swap(k.x[i - 1], k.x[j - 1]);
        out.add_term(std::move(k), c);
    }
    return out;
}

MultiPoly MultiPoly::substituted(int new_num_vars, std::span<const VarSub> subs) const {
    if (static_cast<int>(subs.size()) != num_vars_)
        throw std::invalid_argument("MultiPoly::substituted: one image per variable required");
    for (const VarSub& s : subs)
        if (static_cast<int>(s.x.size()) != new_num_vars)
            throw std::invalid_argument("MultiPoly::substituted: image width does not match");
    MultiPoly out(new_num_vars);
    for (const auto& [e, c] : terms_) {
        long long coeff = c;
        ExponentKey k{std::vector<int>(new_num_vars, 0), e.t, e.r};
        for (int i = 0; i < num_vars_; ++i) {
            int power = e.x[i];
            if (power == 0) continue;
            coeff = checked_mul(coeff, checked_pow(subs[i].coeff, power));
            for (int j = 0; j < new_num_vars; ++j)
                k.x[j] = checked_exp_add(k.x[j], power * subs[i].x[j]);
            k.t = checked_exp_add(k.t, power * subs[i].t);
            k.r = checked_exp_add(k.r, power * subs[i].r);
        }
        out.add_term(std::move(k), coeff);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c);
        for (int i = 0; i < num_vars_; ++i)
            if (e.x[i]) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(e.x[i]);
        if (e.t) s += "*t^" + std::to_string(e.t);
        if (e.r) s += "*r^" + std::to_string(e.r);
    }
    return s;
}

}  // namespace stairtab
