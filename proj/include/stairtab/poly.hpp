#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace stairtab {

/// Exponents of one monomial: a length-m vector for x_1..x_m plus the
/// t and r exponents. Map order compares x first, so the greatest key
/// of a term map carries the lexicographically largest x-exponent.
struct ExponentKey {
    std::vector<int> x;
    int t = 0;
    int r = 0;
    auto operator<=>(const ExponentKey&) const = default;
};

/// Overflow-checked 64-bit arithmetic; wrapping is never silent.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Sparse integer polynomial in x_1..x_m, t, r. The variable count m is
/// fixed per value and mixed-m arithmetic is rejected; no zero
/// coefficients are stored.
class MultiPoly {
  public:
    explicit MultiPoly(int num_vars = 0);

    static MultiPoly constant(int num_vars, long long c);
    static MultiPoly monomial(int num_vars, ExponentKey e, long long c);
    static MultiPoly variable(int num_vars, int i);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExponentKey, long long>& terms() const { return terms_; }
    long long coefficient(const ExponentKey& e) const;

    /// Accumulates c into the coefficient of e (checked).
    void add_term(ExponentKey e, long long c);

    MultiPoly& operator+=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    MultiPoly operator-() const;
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a += -b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(long long c) const;

    bool operator==(const MultiPoly&) const = default;

    /// Exchanges the t and r exponents.
    MultiPoly swapped_tr() const;
    /// Sets t = r = 1, folding the t/r exponents away.
    MultiPoly at_t_r_one() const;
    /// Exchanges the exponents of x_i and x_j (1-indexed).
    MultiPoly with_x_swapped(int i, int j) const;

    /// Monomial image of one source x variable.
    struct VarSub {
        long long coeff = 1;
        std::vector<int> x;  // exponents in the target variables
        int t = 0;
        int r = 0;
    };
    /// Substitutes a monomial for every x variable; t and r exponents
    /// pass through and accumulate. May change the variable count.
    MultiPoly substituted(int new_num_vars, std::span<const VarSub> subs) const;

    std::string to_string() const;

  private:
    int num_vars_;
    std::map<ExponentKey, long long> terms_;
};

}  // namespace stairtab
