#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace xi {

enum class AlgebraKind {
    sl_R, sl_C, sl_H, gl_R,
    so_pq, so_C, so_star,
    sp_R, sp_C, sp_pq,
    su_pq,
    abelian,
    e6_split, e6_m14, e6_m26, e6_C,
    e7_split, e7_m25, e7_C,
    f4_m20,
};

/// A simple (or one-dimensional abelian) real Lie algebra with parameters.
/// Conventions: sl/gl/sp(n,F): a = n; so/su/sp(p,q): (a, b) = (p, q), with
/// compact forms stored as p = 0; so(n,C): a = n; so*(2n): a = 2n.
struct SimpleAlgebraName {
    AlgebraKind kind = AlgebraKind::abelian;
    int a = 0;
    int b = 0;

    friend bool operator==(const SimpleAlgebraName&, const SimpleAlgebraName&) = default;
};

struct AlgebraName {
    std::vector<SimpleAlgebraName> summands;  // direct sum; empty = zero algebra

    bool is_simple() const { return summands.size() == 1; }
    const SimpleAlgebraName& simple() const;
    std::string to_string() const;
    /// Isomorphism-class normal form: p <= q, compact forms folded, one-dimensional
    /// summands written R, zero summands dropped, summands sorted.
    AlgebraName canonical() const;
    friend bool operator==(const AlgebraName&, const AlgebraName&) = default;
};

std::string to_string(const SimpleAlgebraName& s);

/// Accepts the grammar listed by algebra_grammar(); summands are joined by '+'.
AlgebraName parse_algebra_name(std::string_view text);
std::string algebra_grammar();

/// Real dimension.
long real_dimension(const SimpleAlgebraName& s);
long real_dimension(const AlgebraName& n);

}  // namespace xi
